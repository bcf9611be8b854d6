#pragma once

#include <vector>

#include <despoly/polynomial.hpp>
#include <despoly/qz_polynomial.hpp>

namespace despoly {

/// Gaussian binomial coefficient as a polynomial in q.
///
/// Boundary conventions:
///   * k == 0 and n >= -1  ->  1
///   * k < 0, or n < k     ->  0  (this covers 0 <= n < k and n <= -1 with
///                                 k >= 1; also n < -1 with k == 0 gives 0)
/// For 0 <= k <= n the value is computed as the product of (1 - q^i) for
/// i in (n-k, n], divided exactly by each (1 - q^i) for i in [1, k]; every
/// intermediate quotient is again a polynomial, and a nonzero remainder
/// anywhere raises InexactDivision.
IntPolynomial q_binomial(long long n, long long k);

/// [n]_q = 1 + q + ... + q^(n-1); zero for n <= 0.
IntPolynomial q_integer(long long n);

/// The t-Pochhammer product over (1 - t q^(i*q_step)) for i = 0..n-1, as a
/// polynomial in t and q (z-degree 0).  n >= 0; q_step >= 1.
QZPolynomial q_pochhammer_t(int n, int q_step);

/// Numerator extraction for a rational function with denominator
/// (1-t)^pole_order: given series values f(0), f(1), ... the coefficient of
/// t^i in the numerator is sum_j (-1)^j C(pole_order, j) f(i-j).
///
/// All supplied values beyond degree_cap act as guard positions: the
/// numerator coefficients there must vanish, otherwise GuardCheckFailed is
/// thrown (wrong series or wrong pole order).  At least one guard value is
/// required.
IntPolynomial truncated_series_numerator(const std::vector<BigInt>& f_values, int pole_order,
                                         int degree_cap);

/// Same extraction pattern for series with (q, z)-polynomial values and an
/// arbitrary polynomial denominator with constant term 1.
QZPolynomial truncated_series_numerator_qz(const std::vector<QZCoeff>& f_values,
                                           const QZPolynomial& denominator, int degree_cap);

/// Inverse of truncated_series_numerator: the first `count` series values of
/// numerator / (1-t)^pole_order.
std::vector<BigInt> expand_rational_series(const IntPolynomial& numerator, int pole_order,
                                           int count);

/// First `count` t-series coefficients of numerator / denominator where the
/// denominator has constant t-coefficient 1.
std::vector<QZCoeff> expand_rational_series_qz(const QZPolynomial& numerator,
                                               const QZPolynomial& denominator, int count);

}  // namespace despoly
