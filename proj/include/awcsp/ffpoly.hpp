#pragma once

// Elementary divisors over F_q (q odd): the star involution, the classes
// x-1, x+1, F1 (self-star irreducibles) and F2 (products D*D^star of
// star-swapped pairs), their numerical invariants, root orders and the
// Frobenius twist.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "fq_poly.hpp"
#include "number_theory.hpp"

namespace awcsp {

/// q = p^e together with 2^{a+1} || q^2 - 1 and the sign eps with 2^a | q - eps.
struct FieldContext {
    std::uint32_t p = 0;
    int e = 0;
    std::uint32_t q = 0;
    int a = 0;
    int eps = 0;

    static FieldContext make(std::uint32_t q) {
        const auto& F = FqPoly::field_of(q);  // validates q
        FieldContext ctx{F.p(), F.degree(), q, 0, 0};
        const std::uint64_t qq = static_cast<std::uint64_t>(q) * q - 1;
        ctx.a = nt::two_adic_valuation(qq) - 1;
        ctx.eps = (q % 4 == 1) ? 1 : -1;
        return ctx;
    }

    friend bool operator==(const FieldContext&, const FieldContext&) = default;
};

enum class DivisorClass { XMinus1, XPlus1, F1, F2 };

inline std::string to_string(DivisorClass c) {
    switch (c) {
        case DivisorClass::XMinus1: return "x-1";
        case DivisorClass::XPlus1: return "x+1";
        case DivisorClass::F1: return "F1";
        case DivisorClass::F2: return "F2";
    }
    return "?";
}

struct ElementaryDivisor {
    DivisorClass cls = DivisorClass::XMinus1;
    FqPoly poly;    // Gamma
    FqPoly factor;  // the irreducible factor; for F2 the smaller of the pair
    int degree = 0;
    int reduced_degree = 0;
    int sign = 0;
    int alpha = 0;               // 2-adic valuation of reduced_degree
    int odd_reduced_degree = 0;  // reduced_degree / 2^alpha
    std::uint64_t root_order = 0;

    [[nodiscard]] bool is_gl_type() const { return cls == DivisorClass::F1 || cls == DivisorClass::F2; }

    friend bool operator==(const ElementaryDivisor& a, const ElementaryDivisor& b) {
        return a.cls == b.cls && a.poly == b.poly;
    }

    /// x-1 first, then x+1, then by polynomial.
    friend std::strong_ordering operator<=>(const ElementaryDivisor& a, const ElementaryDivisor& b) {
        auto rank = [](DivisorClass c) {
            return c == DivisorClass::XMinus1 ? 0 : c == DivisorClass::XPlus1 ? 1 : 2;
        };
        if (auto c = rank(a.cls) <=> rank(b.cls); c != 0)
            return c;
        return a.poly <=> b.poly;
    }

    [[nodiscard]] std::string to_string() const { return poly.to_string(); }
};

/// Monic reversal: the polynomial whose roots are the inverses.
inline FqPoly star(const FqPoly& d) {
    const auto& F = d.field();
    if (d.constant_term() == 0)
        throw std::invalid_argument("star is undefined for polynomials divisible by x");
    Coeffs rev(d.coeffs().rbegin(), d.coeffs().rend());
    return {d.q(), poly::monic(F, rev)};
}

/// Multiplicative order of x in F_q[x]/(d) for irreducible d != x.
inline std::uint64_t root_order(const FqPoly& d) {
    ExtensionField ext(d.field(), d.coeffs());
    return ext.order({0, 1});
}

namespace detail {

inline ElementaryDivisor make_divisor(DivisorClass cls, const FqPoly& factor, const FieldContext& ctx,
                                      std::uint64_t order) {
    ElementaryDivisor div;
    div.cls = cls;
    div.factor = factor;
    div.root_order = order;
    switch (cls) {
        case DivisorClass::XMinus1:
        case DivisorClass::XPlus1:
            div.poly = factor;
            div.degree = 1;
            div.reduced_degree = 1;
            div.sign = ctx.eps;
            break;
        case DivisorClass::F1:
            div.poly = factor;
            div.degree = factor.degree();
            div.reduced_degree = div.degree / 2;
            div.sign = -1;
            break;
        case DivisorClass::F2: {
            const FqPoly other = star(factor);
            div.factor = std::min(factor, other);
            div.poly = factor * other;
            div.degree = div.poly.degree();
            div.reduced_degree = div.degree / 2;
            div.sign = 1;
            break;
        }
    }
    div.alpha = nt::two_adic_valuation(static_cast<std::uint64_t>(div.reduced_degree));
    div.odd_reduced_degree = div.reduced_degree >> div.alpha;
    return div;
}

inline std::uint64_t checked_q_power(std::uint32_t q, int k) {
    const auto n = nt::checked_pow(q, static_cast<unsigned>(k));
    if (!n || *n > (std::uint64_t{1} << 62))
        throw cap_error("q^" + std::to_string(k) + " is too large for 64-bit arithmetic");
    return *n;
}

/// If g is D * D^star for an irreducible D != D^star, returns D.
inline std::optional<FqPoly> split_star_pair(const FqPoly& g) {
    const auto& F = g.field();
    const int n = g.degree();
    if (n < 2 || n % 2 != 0 || g.constant_term() == 0 || star(g) != g)
        return std::nullopt;
    const int k = n / 2;
    const Coeffs& f = g.coeffs();
    if (poly::degree(poly::gcd(F, f, poly::derivative(F, f))) != 0)
        return std::nullopt;  // not squarefree
    const Coeffs x{0, 1};
    // every irreducible factor has degree dividing k ...
    if (!poly::sub(F, poly::x_pow_q_iter(F, k, f), poly::mod(F, x, f)).empty())
        return std::nullopt;
    // ... and none has a proper divisor of k as its degree
    for (const auto& [r, e] : nt::factorize(static_cast<std::uint64_t>(k))) {
        const Coeffs h = poly::sub(F, poly::x_pow_q_iter(F, k / static_cast<int>(r), f), poly::mod(F, x, f));
        if (poly::degree(poly::gcd(F, h, f)) != 0)
            return std::nullopt;
    }
    // exactly two factors of degree k; split them by Cantor-Zassenhaus
    const std::uint64_t half = (checked_q_power(F.q(), k) - 1) / 2;
    for (std::uint64_t seed = 0;; ++seed) {
        Coeffs a{0, 1};
        for (std::uint64_t s = seed, i = 0; s; s /= F.q(), ++i) {
            if (a.size() <= i)
                a.resize(i + 1, 0);
            a[i] = F.add(a[i], static_cast<Fq>(s % F.q()));
        }
        poly::trim(a);
        const Coeffs b = poly::sub(F, poly::powmod(F, a, half, f), Coeffs{1});
        const Coeffs d = poly::gcd(F, b, f);
        if (poly::degree(d) == k) {
            FqPoly delta(F.q(), d);
            if (star(delta) == delta)
                return std::nullopt;
            return delta;
        }
        if (seed > 10'000)
            throw std::logic_error("failed to split a star pair");
    }
}

}  // namespace detail

/// Classifies an irreducible polynomial, or a product D * D^star of a
/// star-swapped pair. An irreducible D with D != D^star yields the F2
/// divisor D * D^star, so both members of a pair classify identically.
inline ElementaryDivisor classify(const FqPoly& d, const FieldContext& ctx) {
    if (d.q() != ctx.q)
        throw std::invalid_argument("polynomial and context use different fields");
    if (d == FqPoly::linear(ctx.q, 0))
        throw std::invalid_argument("x is not an elementary divisor");
    if (d.degree() < 1)
        throw std::invalid_argument("constant polynomials are not elementary divisors");
    if (d == FqPoly::x_minus_one(ctx.q))
        return detail::make_divisor(DivisorClass::XMinus1, d, ctx, 1);
    if (d == FqPoly::x_plus_one(ctx.q))
        return detail::make_divisor(DivisorClass::XPlus1, d, ctx, 2);
    const auto& F = d.field();
    if (poly::is_irreducible(F, d.coeffs())) {
        const auto order = root_order(d);
        return detail::make_divisor(star(d) == d ? DivisorClass::F1 : DivisorClass::F2, d, ctx, order);
    }
    if (auto delta = detail::split_star_pair(d))
        return detail::make_divisor(DivisorClass::F2, *delta, ctx, root_order(*delta));
    throw std::invalid_argument("reducible polynomial " + d.to_string() + " is not an F2 pair product");
}

inline bool has_odd_order_roots(const ElementaryDivisor& d) { return d.root_order % 2 == 1; }

/// Raises every root to its p^k-th power, which on coefficients is the field
/// automorphism a -> a^(p^k). The twist has order dividing e = log_p q.
inline ElementaryDivisor frobenius_twist(const ElementaryDivisor& d, long k, const FieldContext& ctx) {
    const auto& F = d.factor.field();
    const FqPoly twisted(d.factor.q(), poly::frobenius(F, d.factor.coeffs(), k));
    return detail::make_divisor(d.cls, twisted, ctx, d.root_order);
}

/// All monic irreducibles of degree 1..max_degree except x, ordered by
/// degree and then by coefficients from x^{d-1} down to the constant term.
/// Uses a sieve over all q^d monic polynomials of each degree.
inline std::vector<FqPoly> enumerate_irreducibles(std::uint32_t q, int max_degree, const Caps& caps = {}) {
    if (max_degree < 1)
        throw std::invalid_argument("max_degree must be at least 1");
    const auto& F = FqPoly::field_of(q);
    caps.check(q <= caps.max_q, "q = " + std::to_string(q));
    caps.check(max_degree <= caps.max_poly_degree, "degree " + std::to_string(max_degree));
    const auto total = nt::checked_pow(q, static_cast<unsigned>(max_degree));
    caps.check(total && *total <= caps.max_sieve_size, "sieve size q^" + std::to_string(max_degree));
    if (!total)
        throw cap_error("sieve size overflows");

    std::vector<std::vector<Coeffs>> irr(static_cast<std::size_t>(max_degree) + 1);
    for (int d = 1; d <= max_degree; ++d) {
        const std::uint64_t count = *nt::checked_pow(q, static_cast<unsigned>(d));
        std::vector<bool> reducible(count, false);
        for (int i = 1; 2 * i <= d; ++i) {
            const int j = d - i;
            const std::uint64_t gcount = *nt::checked_pow(q, static_cast<unsigned>(j));
            Coeffs g(static_cast<std::size_t>(j) + 1, 0);
            g.back() = 1;
            for (std::uint64_t gi = 0; gi < gcount; ++gi) {
                for (const auto& f : irr[static_cast<std::size_t>(i)]) {
                    const Coeffs prod = poly::mul(F, f, g);
                    std::uint64_t index = 0;
                    for (int c = d - 1; c >= 0; --c)
                        index = index * q + prod[static_cast<std::size_t>(c)];
                    reducible[index] = true;
                }
                // next g (odometer over the low coefficients)
                for (int c = 0; c < j; ++c) {
                    if (++g[static_cast<std::size_t>(c)] < q)
                        break;
                    g[static_cast<std::size_t>(c)] = 0;
                }
            }
        }
        for (std::uint64_t index = 0; index < count; ++index) {
            if (reducible[index])
                continue;
            Coeffs c(static_cast<std::size_t>(d) + 1, 0);
            c.back() = 1;
            std::uint64_t v = index;
            for (int t = 0; t < d; ++t) {
                c[static_cast<std::size_t>(t)] = static_cast<Fq>(v % q);
                v /= q;
            }
            irr[static_cast<std::size_t>(d)].push_back(std::move(c));
        }
    }
    std::vector<FqPoly> out;
    for (int d = 1; d <= max_degree; ++d)
        for (const auto& c : irr[static_cast<std::size_t>(d)])
            if (!(d == 1 && c[0] == 0))
                out.emplace_back(q, c);
    return out;
}

/// Number of monic irreducibles of degree d (necklace formula).
inline std::uint64_t irreducible_count(std::uint64_t q, int d) {
    auto mobius = [](std::uint64_t n) {
        int mu = 1;
        for (const auto& [p, e] : nt::factorize(n)) {
            if (e > 1)
                return 0;
            mu = -mu;
        }
        return mu;
    };
    std::int64_t sum = 0;
    for (std::uint64_t k : nt::divisors(static_cast<std::uint64_t>(d)))
        sum += mobius(static_cast<std::uint64_t>(d) / k) * static_cast<std::int64_t>(*nt::checked_pow(q, static_cast<unsigned>(k)));
    return static_cast<std::uint64_t>(sum) / static_cast<std::uint64_t>(d);
}

/// Every classified divisor of degree <= max_degree built from
/// enumerate_irreducibles; F2 pairs appear once.
inline std::vector<ElementaryDivisor> enumerate_divisors(const FieldContext& ctx, int max_degree,
                                                         const Caps& caps = {}) {
    std::vector<ElementaryDivisor> out;
    for (const auto& d : enumerate_irreducibles(ctx.q, max_degree, caps)) {
        const FqPoly other = star(d);
        if (other < d)
            continue;  // the pair was handled at the smaller member
        if (other != d && 2 * d.degree() > max_degree)
            continue;
        out.push_back(classify(d, ctx));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Divisors of degree <= max_degree whose roots have odd multiplicative
/// order, x-1 included. Built from roots of unity in F_{q^k}: for every odd
/// r > 1 with ord_r(q) = k, the Frobenius orbits of primitive r-th roots
/// give the irreducible factors of the r-th cyclotomic polynomial.
inline std::vector<ElementaryDivisor> odd_order_divisors(const FieldContext& ctx, int max_degree,
                                                         const Caps& caps = {}) {
    caps.check(ctx.q <= caps.max_q, "q = " + std::to_string(ctx.q));
    caps.check(max_degree <= caps.max_poly_degree, "degree " + std::to_string(max_degree));
    const auto& F = FqPoly::field_of(ctx.q);
    std::vector<ElementaryDivisor> out{classify(FqPoly::x_minus_one(ctx.q), ctx)};
    for (int k = 1; k <= max_degree; ++k) {
        const bool f1_fits = k % 2 == 0;  // self-star factors of degree k
        const bool f2_fits = 2 * k <= max_degree;
        if (!f1_fits && !f2_fits)
            continue;
        const std::uint64_t group = detail::checked_q_power(ctx.q, k) - 1;
        caps.check(group < caps.max_sieve_size,
                   "q^k = " + std::to_string(ctx.q) + "^" + std::to_string(k) + " (root-of-unity search)");
        std::uint64_t odd = group >> nt::two_adic_valuation(group);
        std::vector<std::uint64_t> orders;
        for (std::uint64_t r : nt::divisors(odd)) {
            if (r == 1 || nt::multiplicative_order(ctx.q, r) != static_cast<std::uint64_t>(k))
                continue;
            const bool self_star = k % 2 == 0 && nt::powmod(ctx.q, static_cast<std::uint64_t>(k / 2), r) == r - 1;
            if ((self_star && f1_fits) || (!self_star && f2_fits))
                orders.push_back(r);
        }
        if (orders.empty())
            continue;

        // F_{q^k} from the first irreducible of degree k, and a generator
        std::optional<ExtensionField> ext;
        for (std::uint64_t index = 0; !ext; ++index) {
            Coeffs c(static_cast<std::size_t>(k) + 1, 0);
            c.back() = 1;
            for (std::uint64_t v = index, t = 0; t < static_cast<std::uint64_t>(k); ++t, v /= ctx.q)
                c[t] = static_cast<Fq>(v % ctx.q);
            if (c[0] != 0 && poly::is_irreducible(F, c))
                ext.emplace(F, c);
        }
        Coeffs generator;
        for (std::uint64_t index = 1;; ++index) {
            Coeffs c;
            for (std::uint64_t v = index; v; v /= ctx.q)
                c.push_back(static_cast<Fq>(v % ctx.q));
            if (static_cast<int>(c.size()) > k)
                throw std::logic_error("no generator of the multiplicative group found");
            if (ext->order(c) == group) {
                generator = c;
                break;
            }
        }

        for (std::uint64_t r : orders) {
            const Coeffs beta = ext->pow(generator, group / r);
            std::vector<bool> seen(r, false);
            for (std::uint64_t i = 1; i < r; ++i) {
                if (seen[i] || std::gcd(i, r) != 1)
                    continue;
                for (std::uint64_t j = i, t = 0; t < static_cast<std::uint64_t>(k); ++t, j = nt::mulmod(j, ctx.q, r)) {
                    seen[j] = true;
                    seen[r - j] = true;  // the star partner's orbit
                }
                const FqPoly delta = ext->minimal_polynomial(ext->pow(beta, i));
                const bool self_star = star(delta) == delta;
                out.push_back(detail::make_divisor(self_star ? DivisorClass::F1 : DivisorClass::F2, delta, ctx, r));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace awcsp
