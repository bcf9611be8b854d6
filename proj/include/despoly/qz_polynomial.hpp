#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <despoly/numbers.hpp>
#include <despoly/polynomial.hpp>

namespace despoly {

/// Sparse bivariate polynomial in (q, z): exponent pair -> nonzero integer
/// coefficient.  Entries with zero coefficients are never stored.
using QZExponents = std::pair<int, int>;  // (q exponent, z exponent)
using QZCoeff = std::map<QZExponents, BigInt>;

void qz_add_inplace(QZCoeff& a, const QZCoeff& b);
void qz_sub_inplace(QZCoeff& a, const QZCoeff& b);
QZCoeff qz_mul(const QZCoeff& a, const QZCoeff& b);
/// Lift a polynomial in q to a (q, z) coefficient with z-degree 0.
QZCoeff qz_from_qpoly(const IntPolynomial& p);

/// Polynomial in t whose coefficients are sparse (q, z) polynomials with
/// arbitrary-precision integer entries.  Canonical form: trailing
/// t-coefficient nonzero (empty vector = zero polynomial).  Immutable after
/// construction.
class QZPolynomial {
 public:
  QZPolynomial() = default;
  explicit QZPolynomial(std::vector<QZCoeff> t_coeffs) : tc_(std::move(t_coeffs)) { normalize(); }

  static QZPolynomial from_int_poly(const IntPolynomial& p);
  static QZPolynomial term(int t_exp, int q_exp, int z_exp, BigInt coeff);

  bool is_zero() const { return tc_.empty(); }
  int degree() const { return static_cast<int>(tc_.size()) - 1; }
  const QZCoeff& coeff(int i) const;
  const std::vector<QZCoeff>& t_coeffs() const { return tc_; }

  friend bool operator==(const QZPolynomial&, const QZPolynomial&) = default;

 private:
  std::vector<QZCoeff> tc_;
  void normalize();
};

QZPolynomial operator+(const QZPolynomial& p, const QZPolynomial& r);
QZPolynomial operator-(const QZPolynomial& p, const QZPolynomial& r);
QZPolynomial operator*(const QZPolynomial& p, const QZPolynomial& r);

/// Substitute a rational value for q (z stays symbolic) or for z (q stays
/// symbolic).  Throws NonIntegerCoefficient if the result leaves Z.
QZPolynomial substitute_q(const QZPolynomial& p, const BigRat& q_val);
QZPolynomial substitute_z(const QZPolynomial& p, const BigRat& z_val);

/// Substitute both variables; the result is a polynomial in t alone.
/// Throws NonIntegerCoefficient on a fractional resulting coefficient.
IntPolynomial specialize(const QZPolynomial& p, const BigRat& q_val, const BigRat& z_val);

/// Replace q^(step*j) by q^j.  Throws std::invalid_argument if any stored
/// q-exponent is not a multiple of step.
QZPolynomial undilate_q(const QZPolynomial& p, int step);

/// Flattened term list (t_exp, q_exp, z_exp, coeff) in lexicographic order.
std::vector<std::tuple<int, int, int, BigInt>> term_list(const QZPolynomial& p);

struct QZDifference {
  int t_exp, q_exp, z_exp;
  BigInt lhs, rhs;
};
std::optional<QZDifference> first_difference(const QZPolynomial& a, const QZPolynomial& b);

std::string to_string(const QZPolynomial& p);

}  // namespace despoly
