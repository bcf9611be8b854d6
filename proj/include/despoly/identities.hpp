#pragma once

#include <optional>
#include <string>
#include <vector>

#include <despoly/polynomial.hpp>
#include <despoly/q_series.hpp>
#include <despoly/qz_polynomial.hpp>
#include <despoly/words.hpp>

namespace despoly {

/// Guardrails for brute-force enumeration.  max_total bounds the multiset
/// size, max_product bounds the number of inversion sequences.
struct Caps {
  long long max_total = 10;
  long long max_product = 10'000'000;
};

// -- Single-route computations ----------------------------------------------

/// Sum of t^des over (signed) rearrangements of the multiset.
IntPolynomial descent_poly_bruteforce(const MultiplicityVector& m, bool signed_words,
                                      const Caps& caps = {});

/// Sum of t^des q^fmaj z^neg over signed rearrangements.
QZPolynomial qz_descent_poly_bruteforce(const MultiplicityVector& m, const Caps& caps = {});

/// Sum of t^des q^maj over plain (unsigned) rearrangements.
QZPolynomial major_index_poly_bruteforce(const MultiplicityVector& m, const Caps& caps = {});

/// Sum of t^asc over all inversion sequences bounded by s.
IntPolynomial ascent_poly_bruteforce(const SSequence& s, const Caps& caps = {});

/// Ascent polynomial of the (1,4,3,8,...,2n-1,4n) inversion sequences via
/// the coefficient recurrence
///   next[i] = (2i^2+3i+1) cur[i] + (2i(4n-2i+3)+2n+1) cur[i-1]
///           + (2n+2-i)(4n-2i+5) cur[i-2]
/// starting from 1 + 3t at size one.
IntPolynomial ascent_poly_recurrence(int n);

/// Descent polynomial of signed rearrangements of {1,1,2,2,...,n,n}; the
/// two-copies-at-a-time insertion argument yields the same coefficient
/// recurrence and base case as the ascent route.
IntPolynomial descent_poly_recurrence(int n);

/// Same polynomial extracted from the series identity
///   numerator / (1-t)^(2n+1) = sum_k ((k+1)(2k+1))^n t^k.
IntPolynomial ascent_poly_ehrhart(int n);

/// Numerator of sum_k prod_r C(m_r+k, m_r)_q t^k against the t-Pochhammer
/// (t; q)_{m+1}: equals the (des, maj) enumerator of unsigned
/// rearrangements (MacMahon).
QZPolynomial macmahon_poly_gf(const MultiplicityVector& m, const Caps& caps = {});

/// Numerator of the signed factorial generating function against
/// (t; q^2)_{m+1}: the k-th series value is
///   prod_r sum_i (zq)^i C(m_r-i+k, m_r-i)_{q^2} C(i+k-1, i)_{q^2},
/// and the result equals the trivariate (des, fmaj, neg) enumerator.
QZPolynomial qz_descent_poly_gf(const MultiplicityVector& m, const Caps& caps = {});

/// Signed descent polynomial extracted from the integer series
///   numerator / (1-t)^(m+1) = sum_k prod_r C(2k+m_r, m_r) t^k.
IntPolynomial signed_descent_poly_gf(const MultiplicityVector& m, const Caps& caps = {});

/// Signed descent polynomial built by repeated derivative-lift steps, one
/// per letter copy, starting from the constant 1.
IntPolynomial descent_poly_brenti_chain(const MultiplicityVector& m);

// -- Verification reports -----------------------------------------------------

struct RoutePolynomial {
  std::string route;
  IntPolynomial poly;
};

struct RouteMismatch {
  std::string route_a, route_b;
  CoeffDifference diff;
};

/// Several independent routes to one polynomial, compared pairwise against
/// the first; disagreement is reported with the first differing coefficient.
struct MultiRouteReport {
  std::string identity;
  int n = 0;
  std::vector<RoutePolynomial> routes;
  bool all_equal = false;
  std::vector<RouteMismatch> mismatches;
};

/// Five routes to the signed descent polynomial of {1,1,...,n,n}:
/// brute-force descents, brute-force ascents, both recurrences, and series
/// extraction.
MultiRouteReport verify_equidistribution(int n, const Caps& caps = {});

/// Unsigned analogue: brute-force descents of {1,1,...,n,n} against
/// brute-force ascents over the (1,1,3,2,...,2n-1,n) bounds.
MultiRouteReport verify_unsigned_equidistribution(int n, const Caps& caps = {});

/// Series extraction with its guard columns, against the recurrence and
/// (when within caps) the brute-force ascent route.
MultiRouteReport verify_series_extraction(int n, const Caps& caps = {});

struct TrivariateGfReport {
  std::vector<int> m;
  QZPolynomial gf, brute;
  bool trivariate_equal = false;
  std::optional<QZDifference> mismatch;
  bool z0_matches_unsigned = false;   // z=0, q^2 -> q reproduces the MacMahon numerator
  bool q1z1_matches_descent = false;  // q=z=1 reproduces the signed descent polynomial
  bool ok() const { return trivariate_equal && z0_matches_unsigned && q1z1_matches_descent; }
};
TrivariateGfReport verify_trivariate_gf(const MultiplicityVector& m, const Caps& caps = {});

struct MajorIndexGfReport {
  std::vector<int> m;
  QZPolynomial gf, brute;
  bool equal = false;
  std::optional<QZDifference> mismatch;
};
MajorIndexGfReport verify_major_index_gf(const MultiplicityVector& m, const Caps& caps = {});

struct SignedGfReport {
  std::vector<int> m;
  IntPolynomial gf, brute;
  bool equal = false;
  std::optional<CoeffDifference> mismatch;
};
SignedGfReport verify_signed_gf(const MultiplicityVector& m, const Caps& caps = {});

/// For the n-distinct-letters multiset at z = 1, re-expand the numerator
/// against (t; q^2)_len and compare each series value with [2k+1]_q^n.
/// The identity balances with len = n + 1; the report also records the
/// outcome for len = 2n + 1, which fails in general (first failing k kept).
struct ChowGesselReport {
  int n = 0;
  int k_checked = 0;
  bool matches_len_n_plus_1 = false;
  bool matches_len_2n_plus_1 = false;
  std::optional<int> first_failing_k_2n_plus_1;
};
ChowGesselReport chow_gessel_check(int n, int k_max = 5);

/// All multiplicity vectors with the given total, in descending
/// lexicographic order, entries sorted descending (one representative per
/// permutation class).
std::vector<std::vector<int>> canonical_multiplicity_vectors(int total);

}  // namespace despoly
