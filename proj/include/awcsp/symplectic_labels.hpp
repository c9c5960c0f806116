#pragma once

// Label sets for the unipotent 2-block of Sp_2n(q):
//   scU(n)   maps m : j -> m(j) with sum j*m(j) = 2n and m(j) even for odd j,
//            each counted 2^{k_m} times, k_m = #{even j : m(j) != 0};
//   scU1(n)  the members of scU(n) with every m(j) even;
//   scT(m)   triples (l1, l2, kappa), kappa a 2-core, |l1|+|l2|+|kappa| = m;
//   scT'(m)  tuples (l1, l2, l3, k1, k2), k1 and k2 2-cores,
//            |l1| + 2(|l2|+|l3|) + |k1| + |k2| = m;
//   scT'1(m) the members of scT'(m) with l2 == l3 and k1 == k2.
//
// The enum_* functions return the documented lexicographic order; the
// for_each_* visitors walk generation order and are meant for counting.

#include <algorithm>
#include <climits>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "partition.hpp"

namespace awcsp {

/// Sparse multiplicity function: (j, m(j)) with m(j) > 0, ascending in j.
using Multiplicities = std::vector<std::pair<int, int>>;

namespace detail {

/// Lexicographic comparison of the dense sequences m(1), m(2), ...
inline std::strong_ordering compare_dense(const Multiplicities& a, const Multiplicities& b) {
    std::size_t i = 0, k = 0;
    while (i < a.size() || k < b.size()) {
        const int ja = i < a.size() ? a[i].first : INT_MAX;
        const int jb = k < b.size() ? b[k].first : INT_MAX;
        if (ja == jb) {
            if (auto c = a[i].second <=> b[k].second; c != 0)
                return c;
            ++i;
            ++k;
        } else {
            // the side with the smaller support point is nonzero there
            return ja < jb ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    return std::strong_ordering::equal;
}

}  // namespace detail

struct ScUElement {
    int n = 0;
    Multiplicities mult;
    int copy_index = 1;

    [[nodiscard]] int m(int j) const {
        for (const auto& [part, count] : mult)
            if (part == j)
                return count;
        return 0;
    }

    /// Number of even j in the support.
    [[nodiscard]] int k() const {
        return static_cast<int>(std::count_if(mult.begin(), mult.end(),
                                              [](const auto& jm) { return jm.first % 2 == 0; }));
    }

    [[nodiscard]] int copies() const { return 1 << k(); }

    [[nodiscard]] bool all_even() const {
        return std::all_of(mult.begin(), mult.end(), [](const auto& jm) { return jm.second % 2 == 0; });
    }

    /// Throws std::invalid_argument on any broken invariant.
    void validate() const {
        long total = 0;
        int prev = 0;
        for (const auto& [j, count] : mult) {
            if (j <= prev || count <= 0)
                throw std::invalid_argument("scU multiplicities must be positive with ascending support");
            if (j % 2 == 1 && count % 2 == 1)
                throw std::invalid_argument("scU: odd part " + std::to_string(j) + " has odd multiplicity");
            total += static_cast<long>(j) * count;
            prev = j;
        }
        if (total != 2L * n)
            throw std::invalid_argument("scU: sum j*m(j) must equal 2n");
        if (copy_index < 1 || copy_index > copies())
            throw std::invalid_argument("scU: copy index out of range");
    }

    friend bool operator==(const ScUElement&, const ScUElement&) = default;
    friend std::strong_ordering operator<=>(const ScUElement& a, const ScUElement& b) {
        if (auto c = a.n <=> b.n; c != 0)
            return c;
        if (auto c = detail::compare_dense(a.mult, b.mult); c != 0)
            return c;
        return a.copy_index <=> b.copy_index;
    }

    [[nodiscard]] std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < mult.size(); ++i)
            s += (i ? "," : "") + std::to_string(mult[i].first) + "->" + std::to_string(mult[i].second);
        return s + "}#" + std::to_string(copy_index);
    }
};

struct ScTElement {
    int m = 0;
    Partition lambda1, lambda2, kappa;

    void validate() const {
        if (!is_e_core(kappa, 2))
            throw std::invalid_argument("scT: kappa must be a 2-core");
        if (lambda1.size() + lambda2.size() + kappa.size() != m)
            throw std::invalid_argument("scT: sizes must add up to m");
    }

    friend bool operator==(const ScTElement&, const ScTElement&) = default;
    friend std::strong_ordering operator<=>(const ScTElement&, const ScTElement&) = default;

    [[nodiscard]] std::string to_string() const {
        return "(" + lambda1.to_string() + "," + lambda2.to_string() + "," + kappa.to_string() + ")";
    }
};

inline std::ostream& operator<<(std::ostream& os, const ScUElement& x) { return os << x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const ScTElement& x) { return os << x.to_string(); }

struct ScTPrimeElement {
    int m = 0;
    Partition lambda1, lambda2, lambda3, kappa1, kappa2;

    void validate() const {
        if (!is_e_core(kappa1, 2) || !is_e_core(kappa2, 2))
            throw std::invalid_argument("scT': kappa1 and kappa2 must be 2-cores");
        if (lambda1.size() + 2 * (lambda2.size() + lambda3.size()) + kappa1.size() + kappa2.size() != m)
            throw std::invalid_argument("scT': weighted sizes must add up to m");
    }

    [[nodiscard]] bool in_fixed_subset() const { return lambda2 == lambda3 && kappa1 == kappa2; }

    friend bool operator==(const ScTPrimeElement&, const ScTPrimeElement&) = default;
    friend std::strong_ordering operator<=>(const ScTPrimeElement&, const ScTPrimeElement&) = default;
};

namespace detail {

inline void check_nonnegative(int n, const char* what) {
    if (n < 0)
        throw std::invalid_argument(std::string(what) + " must be non-negative");
}

inline bool is_triangular(int n) {
    for (int k = 0; k * (k + 1) / 2 <= n; ++k)
        if (k * (k + 1) / 2 == n)
            return true;
    return false;
}

/// partitions_of(0..n), cached per call.
inline std::vector<std::vector<Partition>> partition_table(int n) {
    std::vector<std::vector<Partition>> table;
    for (int k = 0; k <= n; ++k)
        table.push_back(partitions_of(k));
    return table;
}

template <class Visitor>
void for_each_multiplicity(int n, bool even_only, Visitor&& visit) {
    Multiplicities mult;
    std::function<void(int, int)> rec = [&](int j, int remaining) {
        if (remaining == 0) {
            visit(mult);
            return;
        }
        if (j > remaining)
            return;
        const int step = (even_only || j % 2 == 1) ? 2 : 1;
        rec(j + 1, remaining);
        for (int count = step; count * j <= remaining; count += step) {
            mult.emplace_back(j, count);
            rec(j + 1, remaining - count * j);
            mult.pop_back();
        }
    };
    rec(1, 2 * n);
}

}  // namespace detail

/// Visits scU(n) in the documented order: lexicographic on (m(1), m(2), ...),
/// then copy index ascending.
template <class Visitor>
void for_each_scU(int n, Visitor&& visit) {
    detail::check_nonnegative(n, "n");
    detail::for_each_multiplicity(n, false, [&](const Multiplicities& mult) {
        ScUElement x{n, mult, 1};
        const int copies = x.copies();
        for (int c = 1; c <= copies; ++c) {
            x.copy_index = c;
            visit(x);
        }
    });
}

template <class Visitor>
void for_each_scU1(int n, Visitor&& visit) {
    detail::check_nonnegative(n, "n");
    detail::for_each_multiplicity(n, true, [&](const Multiplicities& mult) {
        ScUElement x{n, mult, 1};
        const int copies = x.copies();
        for (int c = 1; c <= copies; ++c) {
            x.copy_index = c;
            visit(x);
        }
    });
}

inline std::vector<ScUElement> enum_scU(int n) {
    std::vector<ScUElement> out;
    for_each_scU(n, [&](const ScUElement& x) { out.push_back(x); });
    return out;
}

inline std::vector<ScUElement> enum_scU1(int n) {
    std::vector<ScUElement> out;
    for_each_scU1(n, [&](const ScUElement& x) { out.push_back(x); });
    return out;
}

template <class Visitor>
void for_each_scT(int m, Visitor&& visit) {
    detail::check_nonnegative(m, "m");
    const auto table = detail::partition_table(m);
    for (int a = 0; a <= m; ++a)
        for (int b = 0; a + b <= m; ++b) {
            const auto cores = two_cores_of(m - a - b);
            if (cores.empty())
                continue;
            for (const auto& l1 : table[static_cast<std::size_t>(a)])
                for (const auto& l2 : table[static_cast<std::size_t>(b)])
                    visit(ScTElement{m, l1, l2, cores.front()});
        }
}

template <class Visitor>
void for_each_scT_prime(int m, Visitor&& visit) {
    detail::check_nonnegative(m, "m");
    const auto table = detail::partition_table(m);
    for (int k1 = 0; k1 <= m; ++k1) {
        if (!detail::is_triangular(k1))
            continue;
        for (int k2 = 0; k1 + k2 <= m; ++k2) {
            if (!detail::is_triangular(k2))
                continue;
            const int rest = m - k1 - k2;
            for (int b = 0; 2 * b <= rest; ++b)
                for (int c = 0; 2 * (b + c) <= rest; ++c) {
                    const int a = rest - 2 * (b + c);
                    for (const auto& l1 : table[static_cast<std::size_t>(a)])
                        for (const auto& l2 : table[static_cast<std::size_t>(b)])
                            for (const auto& l3 : table[static_cast<std::size_t>(c)])
                                visit(ScTPrimeElement{m, l1, l2, l3, two_cores_of(k1).front(),
                                                      two_cores_of(k2).front()});
                }
        }
    }
}

template <class Visitor>
void for_each_scT1_prime(int m, Visitor&& visit) {
    detail::check_nonnegative(m, "m");
    const auto table = detail::partition_table(m);
    for (int k = 0; 2 * k <= m; ++k) {
        if (!detail::is_triangular(k))
            continue;
        const Partition kappa = two_cores_of(k).front();
        for (int b = 0; 2 * k + 4 * b <= m; ++b)
            for (const auto& l1 : table[static_cast<std::size_t>(m - 2 * k - 4 * b)])
                for (const auto& l : table[static_cast<std::size_t>(b)])
                    visit(ScTPrimeElement{m, l1, l, l, kappa, kappa});
    }
}

namespace detail {
template <class T, class Gen>
std::vector<T> sorted_collect(Gen&& gen) {
    std::vector<T> out;
    gen([&](const T& x) { out.push_back(x); });
    std::sort(out.begin(), out.end());
    return out;
}
}  // namespace detail

/// Lexicographic on (lambda1, lambda2, kappa), partitions compared by parts.
inline std::vector<ScTElement> enum_scT(int m) {
    return detail::sorted_collect<ScTElement>([m](auto&& v) { for_each_scT(m, v); });
}

inline std::vector<ScTPrimeElement> enum_scT_prime(int m) {
    return detail::sorted_collect<ScTPrimeElement>([m](auto&& v) { for_each_scT_prime(m, v); });
}

inline std::vector<ScTPrimeElement> enum_scT1_prime(int m) {
    return detail::sorted_collect<ScTPrimeElement>([m](auto&& v) { for_each_scT1_prime(m, v); });
}

/// lambda2 is replaced by its 2-core (kappa1) and 2-quotient (lambda2, lambda3).
inline ScTPrimeElement t_to_tprime(const ScTElement& x) {
    const CoreQuotient cq = e_quotient(x.lambda2, 2);
    return {x.m, x.lambda1, cq.quotient[0], cq.quotient[1], cq.core, x.kappa};
}

inline ScTElement tprime_to_t(const ScTPrimeElement& y) {
    const Partition l2 = from_core_and_quotient({y.kappa1, {y.lambda2, y.lambda3}}, 2);
    return {y.m, y.lambda1, l2, y.kappa2};
}

/// (l1, l2, l3, k1, k2) -> (l1, l3, l2, k2, k1) in scT' coordinates.
inline ScTElement dagger(const ScTElement& x) {
    const ScTPrimeElement y = t_to_tprime(x);
    return tprime_to_t({y.m, y.lambda1, y.lambda3, y.lambda2, y.kappa2, y.kappa1});
}

/// Identity on scU1; otherwise swaps copy i with copy ((i-1) xor 2^{k-1}) + 1.
inline ScUElement delta_on_scU(const ScUElement& x) {
    if (x.all_even())
        return x;
    ScUElement y = x;
    y.copy_index = ((x.copy_index - 1) ^ (1 << (x.k() - 1))) + 1;
    return y;
}

inline ScTElement delta_on_scT(const ScTElement& x) { return dagger(x); }

struct SymplecticClass {
    Partition lambda;
    int a = 0;      // number of distinct even parts
    int delta = 0;  // 1 iff some even part has odd multiplicity

    friend bool operator==(const SymplecticClass&, const SymplecticClass&) = default;
};

/// Multiplicity function of a partition: part sizes become the support.
inline Multiplicities multiplicities_of(const Partition& p) {
    std::map<int, int> counts;
    for (int part : p.parts())
        ++counts[part];
    return {counts.begin(), counts.end()};
}

inline Partition partition_from_multiplicities(const Multiplicities& mult) {
    std::vector<int> parts;
    for (auto it = mult.rbegin(); it != mult.rend(); ++it)
        parts.insert(parts.end(), static_cast<std::size_t>(it->second), it->first);
    return Partition(std::move(parts));
}

/// Partitions of two_n whose odd parts have even multiplicity, with a(lambda)
/// and delta_lambda; ascending lexicographic order.
inline std::vector<SymplecticClass> symplectic_partitions(int two_n) {
    if (two_n < 0 || two_n % 2 != 0)
        throw std::invalid_argument("symplectic_partitions expects a non-negative even integer");
    std::vector<SymplecticClass> out;
    for (const auto& p : partitions_of(two_n)) {
        SymplecticClass c{p, 0, 0};
        bool ok = true;
        for (const auto& [part, count] : multiplicities_of(p)) {
            if (part % 2 == 1 && count % 2 == 1)
                ok = false;
            if (part % 2 == 0) {
                ++c.a;
                if (count % 2 == 1)
                    c.delta = 1;
            }
        }
        if (ok)
            out.push_back(std::move(c));
    }
    return out;
}

}  // namespace awcsp
