#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <despoly/numbers.hpp>

namespace despoly {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, indexed by exponent.  Canonical form: the zero polynomial
/// is the empty coefficient vector; otherwise the trailing coefficient is
/// nonzero.  Values are immutable after construction and safe to share
/// across threads.
///
/// The same representation serves polynomials in t and in q; the variable
/// name only matters for printing.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial monomial(int degree, BigInt coeff = 1);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& leading() const;
  BigInt coeff(int i) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
  void normalize();
};

/// Polynomials in q share the representation; the alias marks intent at use
/// sites (q-binomials, q-integers).
using QPolynomial = IntPolynomial;

IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& r);
IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& r);
IntPolynomial operator-(const IntPolynomial& p);
IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& r);
IntPolynomial operator*(const BigInt& c, const IntPolynomial& p);

IntPolynomial derivative(const IntPolynomial& p);
IntPolynomial poly_pow(const IntPolynomial& p, int e);

BigInt eval(const IntPolynomial& p, const BigInt& x);
BigRat eval(const IntPolynomial& p, const BigRat& x);

/// Multiply by t^k (k >= 0).
IntPolynomial shifted(const IntPolynomial& p, int k);

/// Substitute t -> t^step (step >= 1).
IntPolynomial dilate(const IntPolynomial& p, int step);
/// Inverse of dilate; throws std::invalid_argument if some exponent with a
/// nonzero coefficient is not a multiple of step.
IntPolynomial undilate(const IntPolynomial& p, int step);

/// Exact quotient p / d over the integers.  Throws InexactDivision if d does
/// not divide p in Z[t].
IntPolynomial divexact(const IntPolynomial& p, const IntPolynomial& d);

/// Pseudo-remainder: returns (r, s) where r = c * (f mod g) for some
/// positive rational multiple when s = +1, negative when s = -1; i.e. the
/// true remainder of f by g equals (s * r) up to a positive scale factor.
/// All coefficients stay integral.
std::pair<IntPolynomial, int> pseudo_rem(const IntPolynomial& f, const IntPolynomial& g);

/// GCD of the absolute values of the coefficients (0 for the zero
/// polynomial).  Always nonnegative.
BigInt content(const IntPolynomial& p);
/// p divided by its content; sign of the leading coefficient is preserved.
IntPolynomial primitive_part(const IntPolynomial& p);

/// Primitive gcd with positive leading coefficient (primitive
/// pseudo-remainder sequence).  gcd(0, 0) = 0.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Number of trailing zero coefficients, i.e. the multiplicity of the root
/// t = 0.  Requires a nonzero polynomial.
int trailing_zero_count(const IntPolynomial& p);

/// Lowest degree at which the two polynomials differ, with both values.
struct CoeffDifference {
  int degree;
  BigInt lhs, rhs;
};
std::optional<CoeffDifference> first_difference(const IntPolynomial& a, const IntPolynomial& b);

/// Human-readable rendering, e.g. "1 + 31t + 55t^2 + 9t^3".
std::string to_string(const IntPolynomial& p, const std::string& var = "t");

}  // namespace despoly
