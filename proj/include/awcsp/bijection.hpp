#pragma once

// An explicit block-preserving bijection Omega from Brauer labels to weight
// labels, equivariant for the diagonal automorphism and field automorphisms.
//
// Omega(b, u, gl) = (b, phi_w(u), gl) where phi_w : scU(w) -> scT(w) is a
// fixed delta-equivariant matching. Field automorphisms act only through the
// block and the GL parts, identically on both sides, so any such Omega is
// automatically field-equivariant; verify_equivariance checks it anyway.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "blocks.hpp"
#include "errors.hpp"
#include "orbits.hpp"
#include "symplectic_labels.hpp"

namespace awcsp {

/// phi_w as a sorted map.
using SymplecticMatching = std::map<ScUElement, ScTElement>;

namespace detail {

/// delta-fixed elements in order, and lex-minimal representatives of the
/// 2-element orbits in order.
template <class T, class Delta>
std::pair<std::vector<T>, std::vector<T>> split_by_delta(const std::vector<T>& sorted, Delta delta) {
    std::vector<T> fixed, reps;
    for (const auto& x : sorted) {
        const T y = delta(x);
        if (y == x)
            fixed.push_back(x);
        else if (x < y)
            reps.push_back(x);
    }
    return {std::move(fixed), std::move(reps)};
}

}  // namespace detail

/// Fixed points are matched in order; each 2-element orbit {u, delta u} is
/// matched to the orbit of equal rank by lex-minimal representative, with
/// delta u forced onto dagger(t). Throws structural_error if the fixed-point
/// or orbit counts disagree.
inline SymplecticMatching match_symplectic(int w) {
    const auto [u_fixed, u_reps] = detail::split_by_delta(enum_scU(w), delta_on_scU);
    const auto [t_fixed, t_reps] = detail::split_by_delta(enum_scT(w), dagger);
    if (u_fixed.size() != t_fixed.size())
        throw structural_error("delta-fixed counts differ at w = " + std::to_string(w) + ": " +
                               std::to_string(u_fixed.size()) + " vs " + std::to_string(t_fixed.size()));
    if (u_reps.size() != t_reps.size())
        throw structural_error("delta-orbit counts differ at w = " + std::to_string(w));
    SymplecticMatching phi;
    for (std::size_t i = 0; i < u_fixed.size(); ++i)
        phi.emplace(u_fixed[i], t_fixed[i]);
    for (std::size_t i = 0; i < u_reps.size(); ++i) {
        phi.emplace(u_reps[i], t_reps[i]);
        phi.emplace(delta_on_scU(u_reps[i]), dagger(t_reps[i]));
    }
    return phi;
}

/// match_symplectic(w), computed once per w.
inline std::shared_ptr<const SymplecticMatching> cached_matching(int w) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const SymplecticMatching>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[w];
    if (!slot)
        slot = std::make_shared<const SymplecticMatching>(match_symplectic(w));
    return slot;
}

/// Omega on a single label, for any block.
inline WeightLabel omega(const BrauerLabel& x) {
    const auto phi = cached_matching(x.block.w_symplectic());
    return {x.block, phi->at(x.symplectic), x.gl};
}

struct OrbitMatch {
    std::vector<std::size_t> brauer;  // indices into OrbitPairing::brauer
    std::vector<std::size_t> weight;  // indices into OrbitPairing::weight
};

/// Omega on one block together with the orbits of <delta, field stabiliser>.
struct OrbitPairing {
    BlockLabel block;
    long field_step = 1;  // the block is fixed by twists that are multiples of this
    std::vector<BrauerLabel> brauer;
    std::vector<WeightLabel> weight;
    std::vector<std::size_t> image;  // weight[image[i]] = Omega(brauer[i])
    std::vector<OrbitMatch> orbits;

    [[nodiscard]] const WeightLabel& apply(std::size_t i) const { return weight.at(image.at(i)); }
};

inline OrbitPairing build_bijection(const BlockLabel& b) {
    OrbitPairing p{b, field_stabilizer_step(b), enum_brauer_labels(b), enum_weight_labels(b), {}, {}};
    if (p.brauer.size() != p.weight.size())
        throw structural_error("label counts differ for block " + b.to_string());

    std::map<WeightLabel, std::size_t> weight_index;
    for (std::size_t j = 0; j < p.weight.size(); ++j)
        weight_index.emplace(p.weight[j], j);
    for (const auto& x : p.brauer)
        p.image.push_back(weight_index.at(omega(x)));

    const long t = p.field_step;
    auto brauer_orbits = orbit_indices(
        p.brauer, [](const BrauerLabel& x) { return act_delta(x); },
        [t](const BrauerLabel& x) { return act_field(x, t); });
    for (auto& orbit : brauer_orbits) {
        OrbitMatch m{orbit, {}};
        for (std::size_t i : orbit)
            m.weight.push_back(p.image[i]);
        std::sort(m.weight.begin(), m.weight.end());
        p.orbits.push_back(std::move(m));
    }
    return p;
}

struct EquivarianceFailure {
    std::string check;
    std::string witness;
};

struct EquivarianceReport {
    std::size_t checked = 0;
    std::vector<EquivarianceFailure> failures;

    [[nodiscard]] bool ok() const { return failures.empty(); }
};

namespace detail {

inline std::string describe(const BrauerLabel& x) { return x.block.to_string() + " " + x.to_string(); }
inline std::string describe(const WeightLabel& x) { return x.block.to_string() + " " + x.to_string(); }

template <class T>
std::map<T, std::size_t> index_of(const std::vector<T>& xs) {
    std::map<T, std::size_t> idx;
    for (std::size_t i = 0; i < xs.size(); ++i)
        idx.emplace(xs[i], i);
    return idx;
}

}  // namespace detail

/// Exhaustive checks of the stored pairing:
///   bijection     image is a permutation and blocks are preserved
///   delta         Omega(delta x) = delta Omega(x)
///   field         Omega(sigma^k x) = sigma^k Omega(x) for k = 1..e-1, where
///                 Omega on a twisted block is rebuilt from scratch
///   implication   x^delta = x^sigma implies x^delta = x (both sides)
///   orbits        matched orbits have equal size, each side is covered once,
///                 and the weight-side sets are orbits there
inline EquivarianceReport verify_equivariance(const OrbitPairing& p) {
    EquivarianceReport r;
    auto fail = [&](std::string check, std::string witness) {
        r.failures.push_back({std::move(check), std::move(witness)});
    };
    auto check = [&](bool ok, const char* name, const auto& witness) {
        ++r.checked;
        if (!ok)
            fail(name, detail::describe(witness));
    };

    const auto brauer_idx = detail::index_of(p.brauer);

    // bijection
    ++r.checked;
    if (p.image.size() != p.brauer.size() || p.brauer.size() != p.weight.size()) {
        fail("bijection", "sizes " + std::to_string(p.brauer.size()) + " / " + std::to_string(p.weight.size()));
        return r;
    }
    std::vector<bool> hit(p.weight.size(), false);
    for (std::size_t i = 0; i < p.image.size(); ++i) {
        const bool in_range = p.image[i] < p.weight.size();
        check(in_range && !hit[p.image[i]], "bijection", p.brauer[i]);
        if (!in_range)
            return r;
        hit[p.image[i]] = true;
        check(p.brauer[i].block == p.block && p.apply(i).block == p.block, "block preserved", p.brauer[i]);
    }

    // delta
    for (std::size_t i = 0; i < p.brauer.size(); ++i) {
        const auto it = brauer_idx.find(act_delta(p.brauer[i]));
        if (it == brauer_idx.end()) {
            check(false, "delta closure", p.brauer[i]);
            continue;
        }
        check(p.apply(it->second) == act_delta(p.apply(i)), "delta", p.brauer[i]);
    }

    // field
    for (long k = 1; k < p.block.ctx.e; ++k) {
        const BlockLabel twisted = act_field(p.block, k);
        if (twisted == p.block) {
            for (std::size_t i = 0; i < p.brauer.size(); ++i) {
                const auto it = brauer_idx.find(act_field(p.brauer[i], k));
                if (it == brauer_idx.end()) {
                    check(false, "field closure", p.brauer[i]);
                    continue;
                }
                check(p.apply(it->second) == act_field(p.apply(i), k), "field", p.brauer[i]);
            }
        } else {
            const OrbitPairing other = build_bijection(twisted);
            const auto other_idx = detail::index_of(other.brauer);
            for (std::size_t i = 0; i < p.brauer.size(); ++i) {
                const auto it = other_idx.find(act_field(p.brauer[i], k));
                if (it == other_idx.end()) {
                    check(false, "field closure", p.brauer[i]);
                    continue;
                }
                check(other.apply(it->second) == act_field(p.apply(i), k), "field", p.brauer[i]);
            }
        }
    }

    // implication, over every field automorphism including the identity
    for (long k = 0; k < p.block.ctx.e; ++k) {
        for (const auto& x : p.brauer) {
            const auto d = act_delta(x);
            check(!(d == act_field(x, k)) || d == x, "implication", x);
        }
        for (const auto& y : p.weight) {
            const auto d = act_delta(y);
            check(!(d == act_field(y, k)) || d == y, "implication", y);
        }
    }

    // orbits
    std::vector<int> seen_b(p.brauer.size(), 0), seen_w(p.weight.size(), 0);
    for (const auto& m : p.orbits) {
        ++r.checked;
        if (m.brauer.size() != m.weight.size() || m.brauer.empty())
            fail("orbit sizes", m.brauer.empty() ? "empty orbit" : detail::describe(p.brauer.at(m.brauer.front())));
        for (std::size_t i : m.brauer)
            ++seen_b.at(i);
        for (std::size_t j : m.weight)
            ++seen_w.at(j);
    }
    ++r.checked;
    if (!std::all_of(seen_b.begin(), seen_b.end(), [](int c) { return c == 1; }) ||
        !std::all_of(seen_w.begin(), seen_w.end(), [](int c) { return c == 1; }))
        fail("orbit coverage", p.block.to_string());

    // the matched weight sets must be genuine orbits of the weight-side group
    const long t = p.field_step;
    std::set<std::vector<std::size_t>> weight_orbits;
    for (auto& o : orbit_indices(
             p.weight, [](const WeightLabel& y) { return act_delta(y); },
             [t](const WeightLabel& y) { return act_field(y, t); }))
        weight_orbits.insert(std::move(o));
    for (const auto& m : p.orbits) {
        ++r.checked;
        if (!weight_orbits.count(m.weight))
            fail("orbit images", m.weight.empty() ? "empty orbit" : detail::describe(p.weight.at(m.weight.front())));
    }
    return r;
}

}  // namespace awcsp
