#pragma once

// Dense polynomials over F_q (coefficients little-endian) and the monic
// polynomial value type FqPoly.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "galois_field.hpp"
#include "number_theory.hpp"

namespace awcsp {

using Coeffs = std::vector<Fq>;

namespace poly {

inline void trim(Coeffs& a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

/// Degree, with -1 for the zero polynomial.
inline int degree(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }

inline Coeffs add(const FiniteField& F, const Coeffs& a, const Coeffs& b) {
    Coeffs r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
}

inline Coeffs sub(const FiniteField& F, const Coeffs& a, const Coeffs& b) {
    Coeffs r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
}

inline Coeffs mul(const FiniteField& F, const Coeffs& a, const Coeffs& b) {
    if (a.empty() || b.empty())
        return {};
    Coeffs r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    trim(r);
    return r;
}

inline Coeffs scale(const FiniteField& F, const Coeffs& a, Fq c) {
    Coeffs r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = F.mul(a[i], c);
    trim(r);
    return r;
}

inline Coeffs monic(const FiniteField& F, const Coeffs& a) {
    if (a.empty())
        return a;
    return scale(F, a, F.inv(a.back()));
}

/// (quotient, remainder).
inline std::pair<Coeffs, Coeffs> divmod(const FiniteField& F, Coeffs a, const Coeffs& b) {
    if (b.empty())
        throw std::domain_error("polynomial division by zero");
    trim(a);
    const int db = degree(b);
    if (degree(a) < db)
        return {{}, a};
    const Fq lead_inv = F.inv(b.back());
    Coeffs q(static_cast<std::size_t>(degree(a) - db + 1), 0);
    for (int i = degree(a); i >= db; --i) {
        const Fq c = F.mul(a[static_cast<std::size_t>(i)], lead_inv);
        q[static_cast<std::size_t>(i - db)] = c;
        if (c == 0)
            continue;
        for (int j = 0; j <= db; ++j) {
            auto& slot = a[static_cast<std::size_t>(i - db + j)];
            slot = F.sub(slot, F.mul(c, b[static_cast<std::size_t>(j)]));
        }
    }
    a.resize(static_cast<std::size_t>(db));
    trim(a);
    trim(q);
    return {q, a};
}

inline Coeffs mod(const FiniteField& F, const Coeffs& a, const Coeffs& m) { return divmod(F, a, m).second; }

inline Coeffs mulmod(const FiniteField& F, const Coeffs& a, const Coeffs& b, const Coeffs& m) {
    return mod(F, mul(F, a, b), m);
}

inline Coeffs powmod(const FiniteField& F, Coeffs base, std::uint64_t exp, const Coeffs& m) {
    Coeffs result = mod(F, Coeffs{1}, m);
    base = mod(F, base, m);
    while (exp) {
        if (exp & 1)
            result = mulmod(F, result, base, m);
        base = mulmod(F, base, base, m);
        exp >>= 1;
    }
    return result;
}

/// Monic gcd.
inline Coeffs gcd(const FiniteField& F, Coeffs a, Coeffs b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Coeffs r = mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(F, a);
}

inline Coeffs derivative(const FiniteField& F, const Coeffs& a) {
    Coeffs r;
    for (std::size_t i = 1; i < a.size(); ++i)
        r.push_back(F.mul(F.from_int(static_cast<long>(i)), a[i]));
    trim(r);
    return r;
}

/// x^(q^k) mod m, by k successive q-th powers.
inline Coeffs x_pow_q_iter(const FiniteField& F, int k, const Coeffs& m) {
    Coeffs r = mod(F, Coeffs{0, 1}, m);
    for (int i = 0; i < k; ++i)
        r = powmod(F, r, F.q(), m);
    return r;
}

/// Rabin's test.
inline bool is_irreducible(const FiniteField& F, const Coeffs& f) {
    const int n = degree(f);
    if (n < 1)
        return false;
    if (n == 1)
        return true;
    const Coeffs x{0, 1};
    if (sub(F, x_pow_q_iter(F, n, f), mod(F, x, f)) != Coeffs{})
        return false;
    for (const auto& [r, e] : nt::factorize(static_cast<std::uint64_t>(n))) {
        const Coeffs h = sub(F, x_pow_q_iter(F, n / static_cast<int>(r), f), mod(F, x, f));
        if (degree(gcd(F, h, f)) != 0)
            return false;
    }
    return true;
}

/// Applies a -> a^(p^k) to every coefficient.
inline Coeffs frobenius(const FiniteField& F, const Coeffs& a, long k) {
    Coeffs r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = F.frobenius(a[i], k);
    return r;
}

}  // namespace poly

/// Monic polynomial over F_q; value semantics. Coefficients are stored
/// little-endian and include the leading 1.
class FqPoly {
public:
    FqPoly() = default;

    FqPoly(std::uint32_t q, Coeffs coeffs) : q_(q), coeffs_(std::move(coeffs)) {
        poly::trim(coeffs_);
        if (coeffs_.empty() || coeffs_.back() != 1)
            throw std::invalid_argument("FqPoly must be monic");
        for (Fq c : coeffs_)
            if (c >= q)
                throw std::invalid_argument("FqPoly coefficient out of range");
    }

    /// x + c for c in F_q.
    static FqPoly linear(std::uint32_t q, Fq c) { return {q, {c, 1}}; }
    static FqPoly x_minus_one(std::uint32_t q) { return {q, {field_of(q).neg(1), 1}}; }
    static FqPoly x_plus_one(std::uint32_t q) { return {q, {1, 1}}; }

    [[nodiscard]] std::uint32_t q() const noexcept { return q_; }
    [[nodiscard]] const Coeffs& coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] Fq constant_term() const { return coeffs_.front(); }
    [[nodiscard]] const FiniteField& field() const { return field_of(q_); }

    /// Degree first, then coefficients from x^{d-1} down to the constant term.
    friend std::strong_ordering operator<=>(const FqPoly& a, const FqPoly& b) {
        if (auto c = a.q_ <=> b.q_; c != 0)
            return c;
        if (auto c = a.coeffs_.size() <=> b.coeffs_.size(); c != 0)
            return c;
        return std::lexicographical_compare_three_way(a.coeffs_.rbegin(), a.coeffs_.rend(),
                                                      b.coeffs_.rbegin(), b.coeffs_.rend());
    }
    friend bool operator==(const FqPoly&, const FqPoly&) = default;

    /// Human-readable form; F_q elements print as their packed integer.
    [[nodiscard]] std::string to_string() const {
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            const Fq c = coeffs_[static_cast<std::size_t>(i)];
            if (c == 0)
                continue;
            if (!s.empty())
                s += "+";
            if (c != 1 || i == 0)
                s += std::to_string(c);
            if (i >= 1)
                s += (c != 1 ? "*" : std::string()) + "x" + (i > 1 ? "^" + std::to_string(i) : "");
        }
        return s;
    }

    static const FiniteField& field_of(std::uint32_t q) {
        // FiniteField::get keeps instances alive for the process lifetime
        return *FiniteField::get(q);
    }

private:
    std::uint32_t q_ = 0;
    Coeffs coeffs_;
};

inline FqPoly operator*(const FqPoly& a, const FqPoly& b) {
    if (a.q() != b.q())
        throw std::invalid_argument("polynomials over different fields");
    return {a.q(), poly::mul(a.field(), a.coeffs(), b.coeffs())};
}

/// F_{q^k} realised as F_q[x]/(f) for a monic irreducible f of degree k.
class ExtensionField {
public:
    ExtensionField(const FiniteField& base, Coeffs modulus) : F_(&base), f_(std::move(modulus)) {
        if (!poly::is_irreducible(base, f_))
            throw std::invalid_argument("extension modulus must be irreducible");
    }

    [[nodiscard]] int degree() const { return poly::degree(f_); }
    [[nodiscard]] const FiniteField& base() const { return *F_; }
    [[nodiscard]] const Coeffs& modulus() const { return f_; }

    /// q^k - 1. Throws std::invalid_argument beyond 2^62.
    [[nodiscard]] std::uint64_t group_order() const {
        const auto n = nt::checked_pow(F_->q(), static_cast<unsigned>(degree()));
        if (!n || *n > (std::uint64_t{1} << 62))
            throw std::invalid_argument("extension field too large for 64-bit arithmetic");
        return *n - 1;
    }

    [[nodiscard]] Coeffs mul(const Coeffs& a, const Coeffs& b) const { return poly::mulmod(*F_, a, b, f_); }
    [[nodiscard]] Coeffs pow(const Coeffs& a, std::uint64_t e) const { return poly::powmod(*F_, a, e, f_); }
    [[nodiscard]] Coeffs frobenius(const Coeffs& a) const { return pow(a, F_->q()); }

    /// Multiplicative order of a nonzero element.
    [[nodiscard]] std::uint64_t order(const Coeffs& a) const {
        std::uint64_t ord = group_order();
        for (const auto& [p, e] : nt::factorize(ord))
            for (int i = 0; i < e && ord % p == 0 && pow(a, ord / p) == Coeffs{1}; ++i)
                ord /= p;
        return ord;
    }

    /// Minimal polynomial over F_q: product of (X - a^{q^j}) over the
    /// distinct conjugates.
    [[nodiscard]] FqPoly minimal_polynomial(const Coeffs& a) const {
        std::vector<Coeffs> conj{poly::mod(*F_, a, f_)};
        for (;;) {
            Coeffs next = frobenius(conj.back());
            if (next == conj.front())
                break;
            conj.push_back(std::move(next));
        }
        // polynomial in X with coefficients in the extension, little-endian
        std::vector<Coeffs> prod{Coeffs{1}};
        for (const auto& root : conj) {
            std::vector<Coeffs> next(prod.size() + 1);
            for (std::size_t i = 0; i < prod.size(); ++i) {
                next[i + 1] = poly::add(*F_, next[i + 1], prod[i]);
                next[i] = poly::sub(*F_, next[i], mul(prod[i], root));
            }
            prod = std::move(next);
        }
        Coeffs out;
        for (const auto& c : prod) {
            if (poly::degree(c) > 0)
                throw std::logic_error("minimal polynomial has coefficients outside F_q");
            out.push_back(c.empty() ? 0 : c[0]);
        }
        return {F_->q(), out};
    }

private:
    const FiniteField* F_;
    Coeffs f_;
};

}  // namespace awcsp
