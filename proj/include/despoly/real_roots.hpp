#pragma once

#include <utility>
#include <vector>

#include <despoly/polynomial.hpp>

namespace despoly {

/// Sturm sequence of p: starts with p and p', each further entry is the
/// negated remainder of the two before it, kept in integer coefficients by
/// positive rescaling only (content is stripped at every step).
std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p);

/// Sign variations of the chain evaluated at a rational point (zero values
/// skipped).
int sign_variations_at(const std::vector<IntPolynomial>& chain, const BigRat& x);
int sign_variations_at_neg_inf(const std::vector<IntPolynomial>& chain);
int sign_variations_at_pos_inf(const std::vector<IntPolynomial>& chain);

/// Number of distinct real roots of a squarefree polynomial in (lo, hi].
/// Requires lo < hi and p nonzero at both endpoints; throws
/// std::invalid_argument otherwise, or when p is not squarefree.
int count_real_roots(const IntPolynomial& p, const BigRat& lo, const BigRat& hi);

/// Squarefree decomposition (Yun): primitive pairwise-coprime factors with
/// multiplicities whose product reproduces the input up to a constant.
std::vector<std::pair<IntPolynomial, int>> squarefree_factors(const IntPolynomial& p);

/// 1 + max |c_i| / |c_lead|; every complex root has absolute value below
/// this bound.
BigRat cauchy_root_bound(const IntPolynomial& p);

struct SquarefreeFactorCount {
  IntPolynomial factor;
  int multiplicity;
  int chain_length;
  int variations_lo, variations_hi;
  int distinct_real_roots;
};

/// Everything needed to audit a real-rootedness verdict: the t-power split
/// off, the squarefree factors with their Sturm data, and the counting
/// interval (lo, hi].  The verdict is positive exactly when the
/// multiplicity-weighted real-root total plus the t-power reaches the
/// degree.
struct SturmCertificate {
  IntPolynomial polynomial;
  int power_of_t = 0;
  std::vector<SquarefreeFactorCount> factors;
  BigRat bound;            // root magnitude bound B for the t-free part
  BigRat interval_lo, interval_hi;
  bool real_rooted = false;
};

/// Decide whether all complex roots of p are real, by exact Sturm counting
/// over an interval covering every real root.  When all coefficients are
/// nonnegative the interval upper end is 0 (no positive roots exist);
/// otherwise it is B + 1.  Throws std::invalid_argument on the zero
/// polynomial.
SturmCertificate is_real_rooted(const IntPolynomial& p);

/// Coefficient-sequence classes: PF1 is "nonnegative coefficients", PF is
/// the real-rooted members of PF1.  PF is contained in PF1.
enum class PFClass { none, pf1, pf };
PFClass pf_classify(const IntPolynomial& p);

/// c_i^2 >= c_{i-1} c_{i+1} for all interior i, and the nonzero
/// coefficients occupy a contiguous block of exponents.  Requires
/// nonnegative coefficients (std::invalid_argument otherwise).
bool is_log_concave(const IntPolynomial& p);

/// Coefficients weakly rise then weakly fall.  Requires nonnegative
/// coefficients.
bool is_unimodal(const IntPolynomial& p);

/// One step of the derivative lift ((a*n - b) t + b) F + a t (1 - t) F':
/// if F is the numerator of sum f(k) t^k over (1-t)^n, the result is the
/// numerator of sum f(k) (a k + b) t^k over (1-t)^(n+1).  Computed over the
/// rationals; throws NonIntegerCoefficient if the result leaves Z[t], and
/// std::invalid_argument when a <= 0.
IntPolynomial brenti_step(const IntPolynomial& f, const BigRat& a, const BigRat& b, int n);

}  // namespace despoly
