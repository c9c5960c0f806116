#pragma once

// Integer partitions, e-cores and e-quotients via James' abacus, and 2-core
// towers.
//
// Abacus convention: a partition p with at most t parts is encoded by the
// beta-set {p_i + t - i : 1 <= i <= t}, where t is the least multiple of 2e
// that is >= the number of parts. Runner r holds the beta-numbers congruent
// to r mod e; the bead at beta-number b sits at level b / e. Component r of
// the quotient is the partition whose beta-set is the set of levels on
// runner r. The core is obtained by sliding every bead as far up its runner
// as it will go.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace awcsp {

class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument unless parts are positive and weakly
    /// decreasing.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Drops trailing zeros, then validates.
    static Partition from_padded(std::vector<int> parts) {
        while (!parts.empty() && parts.back() == 0)
            parts.pop_back();
        return Partition(std::move(parts));
    }

    [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
    [[nodiscard]] int size() const noexcept { return size_; }
    [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }

    /// Part i (0-based), or 0 beyond the last part.
    [[nodiscard]] int operator[](std::size_t i) const noexcept {
        return i < parts_.size() ? parts_[i] : 0;
    }

    /// Lexicographic on the parts sequence; the empty partition is smallest.
    friend bool operator==(const Partition& a, const Partition& b) noexcept {
        return a.parts_ == b.parts_;
    }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
        return a.parts_ <=> b.parts_;
    }

    [[nodiscard]] Partition conjugate() const {
        std::vector<int> out;
        for (int j = 1; !parts_.empty() && j <= parts_.front(); ++j)
            out.push_back(static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                                         [j](int x) { return x >= j; })));
        return Partition(std::move(out));
    }

    [[nodiscard]] std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

struct CoreQuotient {
    Partition core;
    std::vector<Partition> quotient;

    friend bool operator==(const CoreQuotient&, const CoreQuotient&) = default;
};

namespace detail {

inline void check_e(int e) {
    if (e < 1)
        throw std::invalid_argument("e must be a positive integer");
}

inline int abacus_beads(int length, int e) {
    const int m = 2 * e;
    return ((length + m - 1) / m) * m;
}

/// Beta-set with t entries, in decreasing order.
inline std::vector<int> beta_set(const Partition& p, int t) {
    std::vector<int> beta(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i)
        beta[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)] + t - 1 - i;
    return beta;
}

/// Inverse of beta_set. Accepts the numbers in any order.
inline Partition from_beta_set(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int t = static_cast<int>(beta.size());
    std::vector<int> parts(beta.size());
    for (int i = 0; i < t; ++i) {
        parts[static_cast<std::size_t>(i)] = beta[static_cast<std::size_t>(i)] - (t - 1 - i);
        if (parts[static_cast<std::size_t>(i)] < 0)
            throw std::invalid_argument("beta-set has repeated entries");
    }
    return Partition::from_padded(std::move(parts));
}

}  // namespace detail

/// Removes e-rim-hooks until none is left. Total on valid input; e == 1
/// always gives the empty partition.
inline Partition e_core(const Partition& p, int e) {
    detail::check_e(e);
    const int t = detail::abacus_beads(p.length(), e);
    std::vector<int> per_runner(static_cast<std::size_t>(e), 0);
    for (int b : detail::beta_set(p, t))
        ++per_runner[static_cast<std::size_t>(b % e)];
    std::vector<int> beta;
    beta.reserve(static_cast<std::size_t>(t));
    for (int r = 0; r < e; ++r)
        for (int level = 0; level < per_runner[static_cast<std::size_t>(r)]; ++level)
            beta.push_back(r + e * level);
    return detail::from_beta_set(std::move(beta));
}

inline bool is_e_core(const Partition& p, int e) { return e_core(p, e) == p; }

/// Core and quotient under the fixed abacus convention described above.
inline CoreQuotient e_quotient(const Partition& p, int e) {
    detail::check_e(e);
    const int t = detail::abacus_beads(p.length(), e);
    std::vector<std::vector<int>> levels(static_cast<std::size_t>(e));
    for (int b : detail::beta_set(p, t))
        levels[static_cast<std::size_t>(b % e)].push_back(b / e);
    CoreQuotient out;
    std::vector<int> core_beta;
    for (int r = 0; r < e; ++r) {
        auto& lv = levels[static_cast<std::size_t>(r)];
        out.quotient.push_back(detail::from_beta_set(lv));
        for (int level = 0; level < static_cast<int>(lv.size()); ++level)
            core_beta.push_back(r + e * level);
    }
    out.core = detail::from_beta_set(std::move(core_beta));
    return out;
}

/// Inverse of e_quotient. Throws std::invalid_argument if the core is not an
/// e-core or the quotient does not have exactly e components.
inline Partition from_core_and_quotient(const CoreQuotient& cq, int e) {
    detail::check_e(e);
    if (static_cast<int>(cq.quotient.size()) != e)
        throw std::invalid_argument("quotient must have exactly e components");
    if (!is_e_core(cq.core, e))
        throw std::invalid_argument("core " + cq.core.to_string() + " is not an e-core");
    int longest = 0;
    for (const auto& q : cq.quotient)
        longest = std::max(longest, q.length());
    // Each extra multiple of e beads adds one bead per runner, so this many
    // leaves every runner with at least `longest` beads.
    const int t = detail::abacus_beads(cq.core.length() + e * longest, e);
    std::vector<int> per_runner(static_cast<std::size_t>(e), 0);
    for (int b : detail::beta_set(cq.core, t))
        ++per_runner[static_cast<std::size_t>(b % e)];
    std::vector<int> beta;
    beta.reserve(static_cast<std::size_t>(t));
    for (int r = 0; r < e; ++r) {
        const int beads = per_runner[static_cast<std::size_t>(r)];
        for (int lv : detail::beta_set(cq.quotient[static_cast<std::size_t>(r)], beads))
            beta.push_back(r + e * lv);
    }
    return detail::from_beta_set(std::move(beta));
}

/// Levels d = 0..D of 2-cores; level d holds 2^d entries. Levels past the
/// stored depth are implicitly empty, and the stored depth is minimal, so the
/// empty tower has no stored levels.
class TwoCoreTower {
public:
    TwoCoreTower() = default;

    /// Validates level widths and that every entry is a 2-core, then trims
    /// trailing all-empty levels.
    explicit TwoCoreTower(std::vector<std::vector<Partition>> levels) : levels_(std::move(levels)) {
        for (std::size_t d = 0; d < levels_.size(); ++d) {
            if (levels_[d].size() != (std::size_t{1} << d))
                throw std::invalid_argument("tower level " + std::to_string(d) + " must hold 2^" +
                                            std::to_string(d) + " entries");
            for (const auto& c : levels_[d])
                if (!is_e_core(c, 2))
                    throw std::invalid_argument("tower entry " + c.to_string() + " is not a 2-core");
        }
        trim();
    }

    [[nodiscard]] const std::vector<std::vector<Partition>>& levels() const noexcept { return levels_; }
    [[nodiscard]] int depth() const noexcept { return static_cast<int>(levels_.size()); }

    /// Level d, materialising empty entries beyond the stored depth.
    [[nodiscard]] std::vector<Partition> level(int d) const {
        if (d < depth())
            return levels_[static_cast<std::size_t>(d)];
        return std::vector<Partition>(std::size_t{1} << d);
    }

    [[nodiscard]] int weight() const noexcept {
        int w = 0;
        for (std::size_t d = 0; d < levels_.size(); ++d)
            for (const auto& c : levels_[d])
                w += (1 << d) * c.size();
        return w;
    }

    friend bool operator==(const TwoCoreTower&, const TwoCoreTower&) = default;
    friend auto operator<=>(const TwoCoreTower& a, const TwoCoreTower& b) {
        return a.levels_ <=> b.levels_;
    }

private:
    void trim() {
        while (!levels_.empty() && std::all_of(levels_.back().begin(), levels_.back().end(),
                                               [](const Partition& c) { return c.empty(); }))
            levels_.pop_back();
    }

    std::vector<std::vector<Partition>> levels_;
};

/// Level 0 is the 2-core; level d >= 1 is the concatenation of level d-1 of
/// the towers of the first and second 2-quotient components.
inline TwoCoreTower two_core_tower(const Partition& p) {
    if (p.empty())
        return {};
    const CoreQuotient cq = e_quotient(p, 2);
    const TwoCoreTower left = two_core_tower(cq.quotient[0]);
    const TwoCoreTower right = two_core_tower(cq.quotient[1]);
    const int depth = 1 + std::max(left.depth(), right.depth());
    std::vector<std::vector<Partition>> levels;
    levels.push_back({cq.core});
    for (int d = 1; d < depth; ++d) {
        auto lv = left.level(d - 1);
        auto rv = right.level(d - 1);
        lv.insert(lv.end(), rv.begin(), rv.end());
        levels.push_back(std::move(lv));
    }
    return TwoCoreTower(std::move(levels));
}

/// Left (first) and right (second) subtowers hanging below level 0.
inline std::pair<TwoCoreTower, TwoCoreTower> split_tower(const TwoCoreTower& t) {
    std::vector<std::vector<Partition>> left, right;
    for (int d = 1; d < t.depth(); ++d) {
        const auto& lv = t.levels()[static_cast<std::size_t>(d)];
        const auto half = static_cast<std::ptrdiff_t>(lv.size() / 2);
        left.emplace_back(lv.begin(), lv.begin() + half);
        right.emplace_back(lv.begin() + half, lv.end());
    }
    return {TwoCoreTower(std::move(left)), TwoCoreTower(std::move(right))};
}

inline Partition tower_to_partition(const TwoCoreTower& t) {
    if (t.depth() == 0)
        return {};
    auto [left, right] = split_tower(t);
    CoreQuotient cq{t.levels()[0][0], {tower_to_partition(left), tower_to_partition(right)}};
    return from_core_and_quotient(cq, 2);
}

/// Visits every partition of n (in reverse lexicographic order).
template <class Visitor>
void for_each_partition(int n, Visitor&& visit) {
    if (n < 0)
        throw std::invalid_argument("cannot partition a negative number");
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            visit(Partition(parts));
            return;
        }
        for (int k = std::min(remaining, max_part); k >= 1; --k) {
            parts.push_back(k);
            rec(remaining - k, k);
            parts.pop_back();
        }
    };
    rec(n, n);
}

/// All partitions of n in ascending lexicographic order.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    std::reverse(out.begin(), out.end());
    return out;
}

/// The staircase (k, k-1, ..., 1); these are exactly the 2-cores.
inline Partition staircase(int k) {
    std::vector<int> parts;
    for (int i = k; i >= 1; --i)
        parts.push_back(i);
    return Partition(std::move(parts));
}

/// 2-cores of size exactly n; empty unless n is triangular.
inline std::vector<Partition> two_cores_of(int n) {
    for (int k = 0; k * (k + 1) / 2 <= n; ++k)
        if (k * (k + 1) / 2 == n)
            return {staircase(k)};
    return {};
}

}  // namespace awcsp
