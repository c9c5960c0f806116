#pragma once

// Exact truncated power series in one variable t with arbitrary-precision
// integer coefficients.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace awcsp {

using BigInt = boost::multiprecision::cpp_int;

class TruncatedSeries {
public:
    /// The zero series with coefficients c_0..c_N.
    explicit TruncatedSeries(std::size_t truncation) : coeffs_(truncation + 1) {}

    TruncatedSeries(std::size_t truncation, const std::vector<BigInt>& leading)
        : coeffs_(truncation + 1) {
        std::copy_n(leading.begin(), std::min(leading.size(), coeffs_.size()), coeffs_.begin());
    }

    static TruncatedSeries one(std::size_t truncation) {
        TruncatedSeries s(truncation);
        s.coeffs_[0] = 1;
        return s;
    }

    [[nodiscard]] std::size_t truncation() const noexcept { return coeffs_.size() - 1; }
    [[nodiscard]] const BigInt& operator[](std::size_t i) const { return coeffs_.at(i); }
    [[nodiscard]] BigInt& operator[](std::size_t i) { return coeffs_.at(i); }
    [[nodiscard]] const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

    /// Multiplies in place by (1 + sign * t^j).
    void mul_binomial(std::size_t j, int sign) {
        if (j == 0)
            throw std::invalid_argument("binomial factor needs a positive exponent");
        for (std::size_t i = truncation(); i >= j; --i)
            coeffs_[i] += sign * coeffs_[i - j];
    }

    /// Divides in place by (1 + sign * t^j), expanding the inverse as a
    /// geometric series.
    void div_binomial(std::size_t j, int sign) {
        if (j == 0)
            throw std::invalid_argument("binomial factor needs a positive exponent");
        for (std::size_t i = j; i <= truncation(); ++i)
            coeffs_[i] -= sign * coeffs_[i - j];
    }

    /// t -> t^k.
    [[nodiscard]] TruncatedSeries substitute_power(std::size_t k, std::size_t truncation) const {
        if (k == 0)
            throw std::invalid_argument("substitution exponent must be positive");
        TruncatedSeries out(truncation);
        for (std::size_t i = 0; i <= this->truncation() && i * k <= truncation; ++i)
            out.coeffs_[i * k] = coeffs_[i];
        return out;
    }

    [[nodiscard]] TruncatedSeries truncated(std::size_t n) const {
        return TruncatedSeries(std::min(n, truncation()), coeffs_);
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<BigInt> coeffs_;
};

/// Cauchy product truncated at the smaller truncation.
inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.truncation(), b.truncation());
    TruncatedSeries out(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; i + j <= n; ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

/// Index of the first differing coefficient up to the common truncation.
inline std::optional<std::size_t> first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.truncation(), b.truncation());
    for (std::size_t i = 0; i <= n; ++i)
        if (a[i] != b[i])
            return i;
    return std::nullopt;
}

/// One factor family prod_{k>=1} (1 + sign * t^{scale*k})^power.
struct ProductFactor {
    std::int64_t scale = 1;
    int sign = -1;
    int power = 1;
};

inline TruncatedSeries product_form(const std::vector<ProductFactor>& factors, std::size_t truncation) {
    TruncatedSeries s = TruncatedSeries::one(truncation);
    for (const auto& f : factors) {
        if (f.scale <= 0)
            throw std::invalid_argument("product factor exponent pattern must be positive");
        if (f.sign != 1 && f.sign != -1)
            throw std::invalid_argument("product factor sign must be +1 or -1");
        const auto step = static_cast<std::size_t>(f.scale);
        for (std::size_t j = step; j <= truncation; j += step)
            for (int m = 0; m < (f.power < 0 ? -f.power : f.power); ++m) {
                if (f.power > 0)
                    s.mul_binomial(j, f.sign);
                else
                    s.div_binomial(j, f.sign);
            }
    }
    return s;
}

/// Indicator series of {exponent(k) : k >= 0}. The rule must be strictly
/// increasing.
inline TruncatedSeries theta_series(const std::function<std::int64_t(std::int64_t)>& exponent,
                                    std::size_t truncation) {
    TruncatedSeries s(truncation);
    std::int64_t prev = -1;
    for (std::int64_t k = 0;; ++k) {
        const std::int64_t e = exponent(k);
        if (e <= prev)
            throw std::invalid_argument("theta exponent rule must be strictly increasing");
        if (e < 0)
            throw std::invalid_argument("theta exponents must be non-negative");
        if (static_cast<std::size_t>(e) > truncation)
            break;
        s[static_cast<std::size_t>(e)] = 1;
        prev = e;
    }
    return s;
}

inline std::int64_t triangular(std::int64_t k) { return k * (k + 1) / 2; }
inline std::int64_t pronic(std::int64_t k) { return k * (k + 1); }

struct IdentityCheck {
    std::string name;
    std::size_t truncation = 0;
    std::optional<std::size_t> first_mismatch;

    [[nodiscard]] bool passed() const noexcept { return !first_mismatch; }
};

/// sum t^{k(k+1)/2} == prod (1+t^k)(1-t^{2k}).
inline IdentityCheck jacobi_triangular(std::size_t n) {
    const auto lhs = theta_series(triangular, n);
    const auto rhs = product_form({{1, +1, 1}, {2, -1, 1}}, n);
    return {"jacobi_triangular", n, first_mismatch(lhs, rhs)};
}

/// sum t^{k(k+1)} == prod (1+t^{2k})(1-t^{4k}).
inline IdentityCheck jacobi_doubled(std::size_t n) {
    const auto lhs = theta_series(pronic, n);
    const auto rhs = product_form({{2, +1, 1}, {4, -1, 1}}, n);
    return {"jacobi_doubled", n, first_mismatch(lhs, rhs)};
}

inline bool check_jacobi_triangular(std::size_t n) { return jacobi_triangular(n).passed(); }
inline bool check_jacobi_doubled(std::size_t n) { return jacobi_doubled(n).passed(); }

enum class LabelSet { scU, scT, scU1, scT1prime };

inline std::string to_string(LabelSet which) {
    switch (which) {
        case LabelSet::scU: return "scU";
        case LabelSet::scT: return "scT";
        case LabelSet::scU1: return "scU1";
        case LabelSet::scT1prime: return "scT1prime";
    }
    return "?";
}

/// Generating function whose t^n coefficient counts the named label set.
inline TruncatedSeries gf_counts(LabelSet which, std::size_t n) {
    switch (which) {
        case LabelSet::scU:
            return product_form({{1, +1, 2}, {1, -1, -1}}, n);
        case LabelSet::scT:
            return series_mul(product_form({{1, -1, -2}}, n), theta_series(triangular, n));
        case LabelSet::scU1:
            return product_form({{1, -1, -1}, {2, +1, 1}}, n);
        case LabelSet::scT1prime:
            return series_mul(product_form({{1, -1, -1}, {4, -1, -1}}, n), theta_series(pronic, n));
    }
    throw std::invalid_argument("unknown label set");
}

/// Coefficientwise comparison of two generating functions up to t^n.
inline IdentityCheck gf_identity(LabelSet lhs, LabelSet rhs, std::size_t n) {
    return {to_string(lhs) + "=" + to_string(rhs), n, first_mismatch(gf_counts(lhs, n), gf_counts(rhs, n))};
}

}  // namespace awcsp
