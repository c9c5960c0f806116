#pragma once

// The finite field F_q, q = p^e odd. An element is an integer in [0, q) whose
// base-p digits are the coefficients (constant term first) of a polynomial in
// y reduced modulo a fixed monic irreducible g(y) of degree e over F_p; g is
// the smallest such polynomial in the packed order. For e = 1 the element is
// simply the residue mod p.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "number_theory.hpp"

namespace awcsp {

using Fq = std::uint32_t;

class FiniteField {
public:
    explicit FiniteField(std::uint32_t q) : q_(q) {
        const auto pe = nt::prime_power(q);
        if (!pe || pe->first == 2)
            throw std::invalid_argument("q = " + std::to_string(q) + " is not an odd prime power");
        p_ = static_cast<std::uint32_t>(pe->first);
        e_ = pe->second;
        modulus_ = find_modulus();
        build_tables();
    }

    /// Shared instance per q.
    static std::shared_ptr<const FiniteField> get(std::uint32_t q) {
        static std::mutex mu;
        static std::map<std::uint32_t, std::shared_ptr<const FiniteField>> cache;
        std::lock_guard lock(mu);
        auto& slot = cache[q];
        if (!slot)
            slot = std::make_shared<const FiniteField>(q);
        return slot;
    }

    [[nodiscard]] std::uint32_t q() const noexcept { return q_; }
    [[nodiscard]] std::uint32_t p() const noexcept { return p_; }
    [[nodiscard]] int degree() const noexcept { return e_; }

    [[nodiscard]] Fq add(Fq a, Fq b) const { return add_[a * q_ + b]; }
    [[nodiscard]] Fq sub(Fq a, Fq b) const { return add_[a * q_ + neg_[b]]; }
    [[nodiscard]] Fq neg(Fq a) const { return neg_[a]; }
    [[nodiscard]] Fq mul(Fq a, Fq b) const { return mul_[a * q_ + b]; }

    [[nodiscard]] Fq inv(Fq a) const {
        if (a == 0)
            throw std::domain_error("inverse of zero in F_q");
        return inv_[a];
    }

    [[nodiscard]] Fq pow(Fq a, std::uint64_t exp) const {
        Fq r = 1;
        while (exp) {
            if (exp & 1)
                r = mul(r, a);
            a = mul(a, a);
            exp >>= 1;
        }
        return r;
    }

    /// a^(p^k), k taken modulo e (negative k allowed).
    [[nodiscard]] Fq frobenius(Fq a, long k) const {
        long steps = k % e_;
        if (steps < 0)
            steps += e_;
        for (long i = 0; i < steps; ++i)
            a = pow(a, p_);
        return a;
    }

    /// Image of an integer in the prime subfield.
    [[nodiscard]] Fq from_int(long v) const {
        long r = v % static_cast<long>(p_);
        if (r < 0)
            r += p_;
        return static_cast<Fq>(r);
    }

private:
    using Digits = std::vector<std::uint32_t>;

    [[nodiscard]] Digits digits(std::uint32_t v, int len) const {
        Digits d(static_cast<std::size_t>(len));
        for (int i = 0; i < len; ++i) {
            d[static_cast<std::size_t>(i)] = v % p_;
            v /= p_;
        }
        return d;
    }

    [[nodiscard]] std::uint32_t pack(const Digits& d) const {
        std::uint32_t v = 0;
        for (auto it = d.rbegin(); it != d.rend(); ++it)
            v = v * p_ + *it;
        return v;
    }

    /// Remainder of a (little-endian digits over F_p) modulo monic m.
    [[nodiscard]] Digits reduce(Digits a, const Digits& m) const {
        const std::size_t dm = m.size() - 1;
        for (std::size_t i = a.size(); i-- > dm;) {
            const std::uint32_t c = a[i];
            if (c == 0)
                continue;
            for (std::size_t j = 0; j <= dm; ++j)
                a[i - dm + j] = (a[i - dm + j] + (p_ - c) * m[j]) % p_;
        }
        a.resize(dm);
        return a;
    }

    [[nodiscard]] Digits find_modulus() const {
        if (e_ == 1)
            return {0, 1};
        std::uint32_t count = 1;
        for (int i = 0; i < e_; ++i)
            count *= p_;
        for (std::uint32_t low = 0; low < count; ++low) {
            Digits cand = digits(low, e_);
            cand.push_back(1);
            if (prime_field_irreducible(cand))
                return cand;
        }
        throw std::logic_error("no irreducible modulus found");
    }

    /// Trial division by every monic polynomial of degree 1..deg/2.
    [[nodiscard]] bool prime_field_irreducible(const Digits& f) const {
        const int deg = static_cast<int>(f.size()) - 1;
        for (int d = 1; 2 * d <= deg; ++d) {
            std::uint32_t count = 1;
            for (int i = 0; i < d; ++i)
                count *= p_;
            for (std::uint32_t low = 0; low < count; ++low) {
                Digits div = digits(low, d);
                div.push_back(1);
                const Digits r = reduce(f, div);
                bool zero = true;
                for (auto c : r)
                    zero = zero && c == 0;
                if (zero)
                    return false;
            }
        }
        return true;
    }

    void build_tables() {
        const std::size_t n = static_cast<std::size_t>(q_) * q_;
        add_.resize(n);
        mul_.resize(n);
        neg_.resize(q_);
        inv_.assign(q_, 0);
        for (std::uint32_t a = 0; a < q_; ++a) {
            const Digits da = digits(a, e_);
            Digits na(da.size());
            for (std::size_t i = 0; i < da.size(); ++i)
                na[i] = (p_ - da[i]) % p_;
            neg_[a] = pack(na);
            for (std::uint32_t b = 0; b < q_; ++b) {
                const Digits db = digits(b, e_);
                Digits sum(da.size());
                for (std::size_t i = 0; i < da.size(); ++i)
                    sum[i] = (da[i] + db[i]) % p_;
                add_[a * q_ + b] = pack(sum);
                Digits prod(2 * da.size() - 1, 0);
                for (std::size_t i = 0; i < da.size(); ++i)
                    for (std::size_t j = 0; j < db.size(); ++j)
                        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
                mul_[a * q_ + b] = pack(reduce(std::move(prod), modulus_));
            }
        }
        for (std::uint32_t a = 1; a < q_; ++a)
            for (std::uint32_t b = 1; b < q_; ++b)
                if (mul_[a * q_ + b] == 1) {
                    inv_[a] = b;
                    break;
                }
    }

    std::uint32_t q_ = 0, p_ = 0;
    int e_ = 1;
    Digits modulus_;
    std::vector<Fq> add_, mul_, neg_, inv_;
};

}  // namespace awcsp
