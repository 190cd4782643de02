#pragma once

#include "loopcalc/bigint.hpp"

#include <initializer_list>
#include <vector>

namespace loopcalc {

/// Power series with exact integer coefficients, truncated above degree `cap`.
///
/// Binary operations require equal caps and throw ErrorKind::Usage otherwise;
/// nothing here silently widens or narrows a series.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int cap);
    TruncatedSeries(int cap, std::vector<BigInt> coeffs);
    TruncatedSeries(int cap, std::initializer_list<long long> coeffs);

    static TruncatedSeries one(int cap);
    static TruncatedSeries monomial(int degree, int cap, const BigInt& coeff = 1);

    int cap() const noexcept { return cap_; }
    const BigInt& operator[](int degree) const { return coeffs_.at(static_cast<std::size_t>(degree)); }
    BigInt& operator[](int degree) { return coeffs_.at(static_cast<std::size_t>(degree)); }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;
    /// Lowest degree with a nonzero coefficient, or -1 for the zero series.
    int valuation() const;

    /// Same coefficients, cut (or zero-padded) to a new cap.
    TruncatedSeries with_cap(int cap) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    int cap_;
    std::vector<BigInt> coeffs_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const TruncatedSeries& a, const BigInt& factor);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }

/// Two-sided inverse up to cap. The constant term must be +1 or -1.
TruncatedSeries invert(const TruncatedSeries& a);

/// Multiplies by t (shift up one degree); the top coefficient falls off.
TruncatedSeries suspend(const TruncatedSeries& a);
/// Divides by t. Requires a zero constant term; the new top coefficient is 0.
TruncatedSeries desuspend(const TruncatedSeries& a);

/// (1 + t^d)^e expanded binomially; e may be arbitrarily large.
TruncatedSeries binomial_power(int d, const BigInt& e, int cap);
/// (1 - t^d)^(-e) = sum_k C(e+k-1, k) t^(dk).
TruncatedSeries inverse_binomial_power(int d, const BigInt& e, int cap);

/// Poincare series of the free tensor algebra on generators with series g: 1/(1-g).
TruncatedSeries tensor_algebra_series(const TruncatedSeries& g);

/// Poincare series of H_*(Omega S^m): one class in each degree divisible by m-1.
TruncatedSeries loop_sphere_series(int m, int cap);

/// Rank series of the two-generator algebra with |u| = d1, |v| = d2 and
/// monomial basis u^i v^j, i.e. 1/((1-t^d1)(1-t^d2)).
TruncatedSeries polynomial_two_var_series(int d1, int d2, int cap);

} // namespace loopcalc
