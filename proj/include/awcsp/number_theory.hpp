#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace awcsp::nt {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 powmod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1)
            result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

/// base^exp, or nullopt on 64-bit overflow.
inline std::optional<u64> checked_pow(u64 base, unsigned exp) {
    u128 r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        r *= base;
        if (r > static_cast<u128>(UINT64_MAX))
            return std::nullopt;
    }
    return static_cast<u64>(r);
}

/// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime(u64 n) {
    if (n < 2)
        return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0)
            return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

namespace detail {

inline u64 pollard_rho(u64 n) {
    if (n % 2 == 0)
        return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n)
            return d;
    }
}

inline void factor_into(u64 n, std::map<u64, int>& out) {
    if (n == 1)
        return;
    for (u64 p = 2; p < 1000 && p * p <= n; ++p) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n == 1)
        return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    const u64 d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace detail

/// Prime factorisation as (prime, exponent), ascending.
inline std::vector<std::pair<u64, int>> factorize(u64 n) {
    if (n == 0)
        throw std::invalid_argument("cannot factor 0");
    std::map<u64, int> f;
    detail::factor_into(n, f);
    return {f.begin(), f.end()};
}

/// All positive divisors, ascending.
inline std::vector<u64> divisors(u64 n) {
    std::vector<u64> out{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t existing = out.size();
        u64 pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < existing; ++j)
                out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Multiplicative order of a modulo r (gcd(a, r) must be 1).
inline u64 multiplicative_order(u64 a, u64 r) {
    if (r == 1)
        return 1;
    if (std::gcd(a, r) != 1)
        throw std::invalid_argument("multiplicative_order: arguments not coprime");
    // order divides the Carmichael function, which divides phi(r)
    u64 phi = r;
    for (const auto& [p, e] : factorize(r))
        phi = phi / p * (p - 1);
    u64 ord = phi;
    for (const auto& [p, e] : factorize(phi))
        for (int i = 0; i < e && ord % p == 0 && powmod(a, ord / p, r) == 1; ++i)
            ord /= p;
    return ord;
}

/// Exponent of the exact power of 2 dividing n > 0.
inline int two_adic_valuation(u64 n) {
    if (n == 0)
        throw std::invalid_argument("2-adic valuation of 0");
    int v = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++v;
    }
    return v;
}

/// (p, e) with q = p^e, or nullopt if q is not a prime power.
inline std::optional<std::pair<u64, int>> prime_power(u64 q) {
    if (q < 2)
        return std::nullopt;
    const auto f = factorize(q);
    if (f.size() != 1)
        return std::nullopt;
    return f.front();
}

}  // namespace awcsp::nt
