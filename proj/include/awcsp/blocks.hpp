#pragma once

// 2-blocks of Sp_2n(q), q odd, and their Brauer-character and weight labels.
//
// A block is labelled by the multiplicity function Gamma -> m_Gamma(s) of a
// semisimple 2'-element s of SO_2n+1(q), i.e. a function on elementary
// divisors with odd root order (x+1 never occurs) satisfying
// sum d_Gamma * m_Gamma = 2n+1. Semisimple classes are identified with these
// functions. Then w_{x-1} = (m_{x-1} - 1) / 2 and w_Gamma = m_Gamma for
// Gamma in F1 u F2, and
//   Brauer labels: scU(w_{x-1}) x prod_Gamma P(m_Gamma)
//   weight labels: scT(w_{x-1}) x prod_Gamma P(w_Gamma).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "ffpoly.hpp"
#include "partition.hpp"
#include "qseries.hpp"
#include "symplectic_labels.hpp"

namespace awcsp {

struct BlockLabel {
    FieldContext ctx;
    int n = 0;
    /// Sorted by divisor; the first entry is always x-1.
    std::vector<std::pair<ElementaryDivisor, int>> mult;

    [[nodiscard]] int m_symplectic() const { return mult.front().second; }
    [[nodiscard]] int w_symplectic() const { return (m_symplectic() - 1) / 2; }

    /// Number of F1/F2 divisors; gl(i) is the i-th of them.
    [[nodiscard]] std::size_t gl_count() const { return mult.size() - 1; }
    [[nodiscard]] const std::pair<ElementaryDivisor, int>& gl(std::size_t i) const { return mult.at(i + 1); }

    [[nodiscard]] bool is_principal() const { return mult.size() == 1; }

    void validate() const {
        if (n < 0)
            throw std::invalid_argument("block: n must be non-negative");
        if (mult.empty() || mult.front().first.cls != DivisorClass::XMinus1)
            throw std::invalid_argument("block: x-1 must occur");
        if (mult.front().second % 2 != 1)
            throw std::invalid_argument("block: m_{x-1} must be odd");
        long total = 0;
        for (std::size_t i = 0; i < mult.size(); ++i) {
            const auto& [d, m] = mult[i];
            if (m < 1)
                throw std::invalid_argument("block: multiplicities must be positive");
            if (d.poly.q() != ctx.q)
                throw std::invalid_argument("block: divisor over the wrong field");
            if (d.cls == DivisorClass::XPlus1 || !has_odd_order_roots(d))
                throw std::invalid_argument("block: divisor " + d.to_string() + " has roots of even order");
            if (i > 0 && (d.cls == DivisorClass::XMinus1 || !(mult[i - 1].first < d)))
                throw std::invalid_argument("block: divisors must be distinct and sorted");
            total += static_cast<long>(d.degree) * m;
        }
        if (total != 2L * n + 1)
            throw std::invalid_argument("block: sum of d*m must equal 2n+1");
    }

    friend bool operator==(const BlockLabel& a, const BlockLabel& b) {
        return a.ctx == b.ctx && a.n == b.n && a.mult == b.mult;
    }

    /// Larger m_{x-1} first, so the principal block leads; then by the
    /// remaining (divisor, multiplicity) sequence.
    friend std::strong_ordering operator<=>(const BlockLabel& a, const BlockLabel& b) {
        if (auto c = a.ctx.q <=> b.ctx.q; c != 0)
            return c;
        if (auto c = a.n <=> b.n; c != 0)
            return c;
        if (auto c = b.m_symplectic() <=> a.m_symplectic(); c != 0)
            return c;
        return std::lexicographical_compare_three_way(a.mult.begin() + 1, a.mult.end(), b.mult.begin() + 1,
                                                      b.mult.end());
    }

    [[nodiscard]] std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < mult.size(); ++i)
            s += (i ? ", " : "") + mult[i].first.to_string() + " -> " + std::to_string(mult[i].second);
        return s + "}";
    }
};

/// Builds and validates a block label; the divisor list may be unsorted.
inline BlockLabel make_block(const FieldContext& ctx, int n, std::vector<std::pair<ElementaryDivisor, int>> mult) {
    std::sort(mult.begin(), mult.end());
    BlockLabel b{ctx, n, std::move(mult)};
    b.validate();
    return b;
}

inline BlockLabel principal_block(const FieldContext& ctx, int n) {
    return make_block(ctx, n, {{classify(FqPoly::x_minus_one(ctx.q), ctx), 2 * n + 1}});
}

/// All block labels of Sp_2n(q), principal block first.
inline std::vector<BlockLabel> enum_blocks(int n, std::uint32_t q, const Caps& caps = {}) {
    if (n < 1)
        throw std::invalid_argument("n must be at least 1");
    const FieldContext ctx = FieldContext::make(q);
    caps.check(n <= caps.max_block_n, "n = " + std::to_string(n));
    caps.check(q <= caps.max_block_q, "q = " + std::to_string(q));
    std::vector<ElementaryDivisor> gl;
    for (auto& d : odd_order_divisors(ctx, 2 * n, caps))
        if (d.is_gl_type())
            gl.push_back(std::move(d));
    const ElementaryDivisor x_minus_one = classify(FqPoly::x_minus_one(q), ctx);

    std::vector<BlockLabel> out;
    std::vector<std::pair<ElementaryDivisor, int>> chosen;
    // gl is sorted by degree, so the scan can stop at the first divisor that
    // no longer fits; recursion depth is bounded by the number of chosen keys
    std::function<void(std::size_t, int)> rec = [&](std::size_t start, int budget) {
        std::vector<std::pair<ElementaryDivisor, int>> mult{{x_minus_one, budget + 1}};
        mult.insert(mult.end(), chosen.begin(), chosen.end());
        out.push_back(make_block(ctx, n, std::move(mult)));
        for (std::size_t i = start; i < gl.size() && gl[i].degree <= budget; ++i)
            for (int m = 1; m * gl[i].degree <= budget; ++m) {
                chosen.emplace_back(gl[i], m);
                rec(i + 1, budget - m * gl[i].degree);
                chosen.pop_back();
            }
    };
    rec(0, 2 * n);
    std::sort(out.begin(), out.end());
    return out;
}

struct GLFactor {
    ElementaryDivisor divisor;
    int rank = 0;            // m_Gamma
    int q_exponent = 0;      // delta_Gamma
    int sign = 0;            // eps_Gamma; -1 means a unitary group

    friend bool operator==(const GLFactor&, const GLFactor&) = default;
};

/// C_{G*}(s)* = Sp_{m_{x-1}-1}(q) x prod GL_{m_Gamma}(eps_Gamma q^{delta_Gamma}).
struct CentralizerShape {
    FieldContext ctx;
    int symplectic_dim = 0;
    std::vector<GLFactor> gl;

    friend bool operator==(const CentralizerShape&, const CentralizerShape&) = default;

    [[nodiscard]] std::string to_string() const {
        const std::string q = std::to_string(ctx.q);
        std::string s = "Sp_" + std::to_string(symplectic_dim) + "(" + q + ")";
        for (const auto& f : gl) {
            s += " x ";
            s += f.sign < 0 ? "GU_" : "GL_";
            s += std::to_string(f.rank) + "(" + q + (f.q_exponent > 1 ? "^" + std::to_string(f.q_exponent) : "") + ")";
        }
        return s;
    }
};

inline CentralizerShape centralizer_shape(const BlockLabel& b) {
    CentralizerShape shape{b.ctx, b.m_symplectic() - 1, {}};
    for (std::size_t i = 0; i < b.gl_count(); ++i) {
        const auto& [d, m] = b.gl(i);
        shape.gl.push_back({d, m, d.reduced_degree, d.sign});
    }
    return shape;
}

struct BrauerLabel {
    BlockLabel block;
    ScUElement symplectic;
    std::vector<Partition> gl;  // gl[i] is a partition of m for block.gl(i)

    void validate() const {
        symplectic.validate();
        if (symplectic.n != block.w_symplectic())
            throw std::invalid_argument("Brauer label: scU part has the wrong size");
        if (gl.size() != block.gl_count())
            throw std::invalid_argument("Brauer label: wrong number of GL parts");
        for (std::size_t i = 0; i < gl.size(); ++i)
            if (gl[i].size() != block.gl(i).second)
                throw std::invalid_argument("Brauer label: GL part has the wrong size");
    }

    friend bool operator==(const BrauerLabel&, const BrauerLabel&) = default;
    friend std::strong_ordering operator<=>(const BrauerLabel& a, const BrauerLabel& b) {
        if (auto c = a.block <=> b.block; c != 0)
            return c;
        if (auto c = a.symplectic <=> b.symplectic; c != 0)
            return c;
        return a.gl <=> b.gl;
    }

    [[nodiscard]] std::string to_string() const {
        std::string s = symplectic.to_string();
        for (const auto& p : gl)
            s += " " + p.to_string();
        return s;
    }
};

struct WeightLabel {
    BlockLabel block;
    ScTElement symplectic;
    std::vector<Partition> gl;  // gl[i] is a partition of w for block.gl(i)

    void validate() const {
        symplectic.validate();
        if (symplectic.m != block.w_symplectic())
            throw std::invalid_argument("weight label: scT part has the wrong size");
        if (gl.size() != block.gl_count())
            throw std::invalid_argument("weight label: wrong number of GL parts");
        for (std::size_t i = 0; i < gl.size(); ++i)
            if (gl[i].size() != block.gl(i).second)
                throw std::invalid_argument("weight label: GL part has the wrong size");
    }

    friend bool operator==(const WeightLabel&, const WeightLabel&) = default;
    friend std::strong_ordering operator<=>(const WeightLabel& a, const WeightLabel& b) {
        if (auto c = a.block <=> b.block; c != 0)
            return c;
        if (auto c = a.symplectic <=> b.symplectic; c != 0)
            return c;
        return a.gl <=> b.gl;
    }

    [[nodiscard]] std::string to_string() const {
        std::string s = symplectic.to_string();
        for (const auto& p : gl)
            s += " " + p.to_string();
        return s;
    }
};

inline std::ostream& operator<<(std::ostream& os, const BlockLabel& b) { return os << b.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const BrauerLabel& x) {
    return os << x.block.to_string() << " " << x.to_string();
}
inline std::ostream& operator<<(std::ostream& os, const WeightLabel& x) {
    return os << x.block.to_string() << " " << x.to_string();
}

namespace detail {

/// Cartesian product of partitions_of(sizes[i]) in lexicographic order.
inline std::vector<std::vector<Partition>> multipartitions(const std::vector<int>& sizes) {
    std::vector<std::vector<Partition>> out{{}};
    for (int s : sizes) {
        std::vector<std::vector<Partition>> next;
        const auto parts = partitions_of(s);
        for (const auto& prefix : out)
            for (const auto& p : parts) {
                next.push_back(prefix);
                next.back().push_back(p);
            }
        out = std::move(next);
    }
    return out;
}

inline std::vector<int> gl_sizes(const BlockLabel& b) {
    std::vector<int> sizes;
    for (std::size_t i = 0; i < b.gl_count(); ++i)
        sizes.push_back(b.gl(i).second);
    return sizes;
}

inline BigInt partition_count(int n) {
    const auto N = static_cast<std::size_t>(n);
    return product_form({{1, -1, -1}}, N)[N];
}

}  // namespace detail

/// scU(w_{x-1}) x prod P(m_Gamma), lexicographic.
inline std::vector<BrauerLabel> enum_brauer_labels(const BlockLabel& b) {
    std::vector<BrauerLabel> out;
    const auto gl = detail::multipartitions(detail::gl_sizes(b));
    for (const auto& u : enum_scU(b.w_symplectic()))
        for (const auto& parts : gl)
            out.push_back({b, u, parts});
    return out;
}

/// scT(w_{x-1}) x prod P(w_Gamma), lexicographic.
inline std::vector<WeightLabel> enum_weight_labels(const BlockLabel& b) {
    std::vector<WeightLabel> out;
    const auto gl = detail::multipartitions(detail::gl_sizes(b));
    for (const auto& t : enum_scT(b.w_symplectic()))
        for (const auto& parts : gl)
            out.push_back({b, t, parts});
    return out;
}

/// |enum_brauer_labels(b)| from generating functions, without enumerating.
inline BigInt brauer_label_count(const BlockLabel& b) {
    const auto w = static_cast<std::size_t>(b.w_symplectic());
    BigInt count = gf_counts(LabelSet::scU, w)[w];
    for (std::size_t i = 0; i < b.gl_count(); ++i)
        count *= detail::partition_count(b.gl(i).second);
    return count;
}

inline BigInt weight_label_count(const BlockLabel& b) {
    const auto w = static_cast<std::size_t>(b.w_symplectic());
    BigInt count = gf_counts(LabelSet::scT, w)[w];
    for (std::size_t i = 0; i < b.gl_count(); ++i)
        count *= detail::partition_count(b.gl(i).second);
    return count;
}

// ---------------------------------------------------------------------------
// Automorphism actions

inline BlockLabel act_field(const BlockLabel& b, long k) {
    std::vector<std::pair<ElementaryDivisor, int>> mult;
    for (const auto& [d, m] : b.mult)
        mult.emplace_back(frobenius_twist(d, k, b.ctx), m);
    return make_block(b.ctx, b.n, std::move(mult));
}

namespace detail {

/// Twists the block and carries each GL part along with its divisor.
inline std::pair<BlockLabel, std::vector<Partition>> twist_gl(const BlockLabel& b, const std::vector<Partition>& gl,
                                                              long k) {
    std::vector<std::pair<ElementaryDivisor, Partition>> keyed;
    for (std::size_t i = 0; i < gl.size(); ++i)
        keyed.emplace_back(frobenius_twist(b.gl(i).first, k, b.ctx), gl[i]);
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<Partition> parts;
    for (auto& [d, p] : keyed)
        parts.push_back(std::move(p));
    return {act_field(b, k), std::move(parts)};
}

}  // namespace detail

inline BrauerLabel act_field(const BrauerLabel& x, long k) {
    auto [block, gl] = detail::twist_gl(x.block, x.gl, k);
    return {std::move(block), x.symplectic, std::move(gl)};
}

inline WeightLabel act_field(const WeightLabel& x, long k) {
    auto [block, gl] = detail::twist_gl(x.block, x.gl, k);
    return {std::move(block), x.symplectic, std::move(gl)};
}

inline BrauerLabel act_delta(const BrauerLabel& x) { return {x.block, delta_on_scU(x.symplectic), x.gl}; }

inline WeightLabel act_delta(const WeightLabel& x) { return {x.block, dagger(x.symplectic), x.gl}; }

/// Smallest t in 1..e with act_field(b, t) == b.
inline long field_stabilizer_step(const BlockLabel& b) {
    for (long t = 1; t < b.ctx.e; ++t)
        if (act_field(b, t) == b)
            return t;
    return b.ctx.e;
}

// ---------------------------------------------------------------------------
// Weight assignments: 2-core towers per divisor

struct WeightAssignment {
    TwoCoreTower family1;  // delta-fixed family of x-1
    TwoCoreTower family2;  // family of x-1 permuted by delta
    Partition extra;       // the third d = 0 slot of x-1
    std::vector<TwoCoreTower> gl;

    friend bool operator==(const WeightAssignment&, const WeightAssignment&) = default;

    [[nodiscard]] int symplectic_weight() const { return family1.weight() + family2.weight() + extra.size(); }
};

inline WeightAssignment expand_weight(const WeightLabel& w) {
    WeightAssignment a{two_core_tower(w.symplectic.lambda1), two_core_tower(w.symplectic.lambda2), w.symplectic.kappa,
                       {}};
    for (const auto& p : w.gl)
        a.gl.push_back(two_core_tower(p));
    return a;
}

/// Inverse of expand_weight. Throws std::invalid_argument if the weights do
/// not match the block.
inline WeightLabel contract_assignment(const BlockLabel& b, const WeightAssignment& a) {
    if (!is_e_core(a.extra, 2))
        throw std::invalid_argument("assignment: extra slot must hold a 2-core");
    if (a.symplectic_weight() != b.w_symplectic())
        throw std::invalid_argument("assignment: x-1 weights do not add up to w_{x-1}");
    if (a.gl.size() != b.gl_count())
        throw std::invalid_argument("assignment: wrong number of GL towers");
    WeightLabel w{b,
                  {b.w_symplectic(), tower_to_partition(a.family1), tower_to_partition(a.family2), a.extra},
                  {}};
    for (std::size_t i = 0; i < a.gl.size(); ++i) {
        if (a.gl[i].weight() != b.gl(i).second)
            throw std::invalid_argument("assignment: GL tower weight does not match w_Gamma");
        w.gl.push_back(tower_to_partition(a.gl[i]));
    }
    return w;
}

/// Family 1 fixed; family 2 at level d >= 1 permuted by j <-> j + 2^{d-1};
/// family 2 level 0 swapped with the extra slot; GL towers fixed.
inline WeightAssignment delta_on_assignment(const WeightAssignment& a) {
    std::vector<std::vector<Partition>> levels;
    levels.push_back({a.extra});
    for (int d = 1; d < a.family2.depth(); ++d) {
        auto lv = a.family2.level(d);
        std::rotate(lv.begin(), lv.begin() + static_cast<std::ptrdiff_t>(lv.size() / 2), lv.end());
        levels.push_back(std::move(lv));
    }
    return {a.family1, TwoCoreTower(std::move(levels)), a.family2.level(0).front(), a.gl};
}

struct CharacterCount {
    std::uint64_t fixed = 0;
    std::uint64_t swapped_pairs = 0;

    [[nodiscard]] std::uint64_t total() const { return fixed + 2 * swapped_pairs; }
    friend bool operator==(const CharacterCount&, const CharacterCount&) = default;
};

/// delta-fixed characters and delta-swapped pairs among the 2^d-indexed
/// character slots at level d.
inline CharacterCount weight_character_count(DivisorClass cls, int d) {
    if (d < 0 || d > 62)
        throw std::invalid_argument("level d out of range");
    const std::uint64_t pow = std::uint64_t{1} << d;
    switch (cls) {
        case DivisorClass::F1:
        case DivisorClass::F2: return {pow, 0};
        case DivisorClass::XMinus1: return d == 0 ? CharacterCount{1, 1} : CharacterCount{pow, pow / 2};
        case DivisorClass::XPlus1: break;
    }
    throw std::invalid_argument("x+1 does not occur in 2-weights of 2'-blocks");
}

// ---------------------------------------------------------------------------
// Jordan decomposition at label level

/// Label of the unipotent 2-block of C_{G*}(s)*: an scU element for the
/// symplectic factor and one partition per GL/GU factor.
struct UnipotentBrauerLabel {
    CentralizerShape shape;
    ScUElement symplectic;
    std::vector<Partition> gl;

    friend bool operator==(const UnipotentBrauerLabel&, const UnipotentBrauerLabel&) = default;
};

struct UnipotentWeightLabel {
    CentralizerShape shape;
    ScTElement symplectic;
    std::vector<Partition> gl;

    friend bool operator==(const UnipotentWeightLabel&, const UnipotentWeightLabel&) = default;
};

namespace detail {

inline void check_shape(const BlockLabel& b, const CentralizerShape& shape, const std::vector<Partition>& gl) {
    if (!(centralizer_shape(b) == shape))
        throw std::invalid_argument("centraliser shape does not belong to this block");
    if (gl.size() != shape.gl.size())
        throw std::invalid_argument("wrong number of GL parts");
    for (std::size_t i = 0; i < gl.size(); ++i)
        if (gl[i].size() != shape.gl[i].rank)
            throw std::invalid_argument("GL part has the wrong size");
}

inline CentralizerShape twist_shape(const CentralizerShape& s, long k) {
    CentralizerShape out{s.ctx, s.symplectic_dim, {}};
    for (const auto& f : s.gl)
        out.gl.push_back({frobenius_twist(f.divisor, k, s.ctx), f.rank, f.q_exponent, f.sign});
    std::sort(out.gl.begin(), out.gl.end(), [](const GLFactor& x, const GLFactor& y) { return x.divisor < y.divisor; });
    return out;
}

template <class Label>
Label twist_unipotent(const Label& u, long k) {
    std::vector<std::pair<ElementaryDivisor, Partition>> keyed;
    for (std::size_t i = 0; i < u.gl.size(); ++i)
        keyed.emplace_back(frobenius_twist(u.shape.gl[i].divisor, k, u.shape.ctx), u.gl[i]);
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    Label out{twist_shape(u.shape, k), u.symplectic, {}};
    for (auto& [d, p] : keyed)
        out.gl.push_back(std::move(p));
    return out;
}

}  // namespace detail

inline BrauerLabel jordan_brauer(const BlockLabel& b, const UnipotentBrauerLabel& u) {
    detail::check_shape(b, u.shape, u.gl);
    BrauerLabel x{b, u.symplectic, u.gl};
    x.validate();
    return x;
}

inline WeightLabel jordan_weights(const BlockLabel& b, const UnipotentWeightLabel& u) {
    detail::check_shape(b, u.shape, u.gl);
    WeightLabel x{b, u.symplectic, u.gl};
    x.validate();
    return x;
}

inline UnipotentBrauerLabel unipotent_side(const BrauerLabel& x) { return {centralizer_shape(x.block), x.symplectic, x.gl}; }
inline UnipotentWeightLabel unipotent_side(const WeightLabel& x) { return {centralizer_shape(x.block), x.symplectic, x.gl}; }

inline UnipotentBrauerLabel act_delta(const UnipotentBrauerLabel& u) { return {u.shape, delta_on_scU(u.symplectic), u.gl}; }
inline UnipotentWeightLabel act_delta(const UnipotentWeightLabel& u) { return {u.shape, dagger(u.symplectic), u.gl}; }
inline UnipotentBrauerLabel act_field(const UnipotentBrauerLabel& u, long k) { return detail::twist_unipotent(u, k); }
inline UnipotentWeightLabel act_field(const UnipotentWeightLabel& u, long k) { return detail::twist_unipotent(u, k); }

}  // namespace awcsp
