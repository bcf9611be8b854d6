#include <despoly/identities.hpp>

#include <sstream>
#include <stdexcept>

#include <despoly/errors.hpp>
#include <despoly/real_roots.hpp>

namespace despoly {

namespace {

constexpr int kGuard = 3;  // extra checked series positions past the cap

void check_total_cap(const MultiplicityVector& m, const Caps& caps, const char* who) {
  if (m.total() > caps.max_total) {
    std::ostringstream os;
    os << who << ": multiset size " << m.total() << " exceeds cap " << caps.max_total;
    throw CapExceeded(os.str());
  }
}

void check_product_cap(const SSequence& s, const Caps& caps, const char* who) {
  BigInt p = inversion_seq_count(s);
  if (p > caps.max_product) {
    std::ostringstream os;
    os << who << ": sequence count " << p << " exceeds cap " << caps.max_product;
    throw CapExceeded(os.str());
  }
}

// One recurrence step: from the coefficients at size n to size n+1.
std::vector<BigInt> doubled_multiset_step(const std::vector<BigInt>& cur, long long n) {
  auto at = [&](long long j) -> const BigInt& {
    static const BigInt zero = 0;
    return (j >= 0 && j < static_cast<long long>(cur.size())) ? cur[j] : zero;
  };
  std::vector<BigInt> next(2 * n + 2);
  for (long long i = 0; i <= 2 * n + 1; ++i) {
    next[i] = BigInt(2 * i * i + 3 * i + 1) * at(i) +
              BigInt(2 * i * (4 * n - 2 * i + 3) + 2 * n + 1) * at(i - 1) +
              BigInt((2 * n + 2 - i) * (4 * n - 2 * i + 5)) * at(i - 2);
  }
  return next;
}

IntPolynomial doubled_multiset_recurrence(int n, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
  std::vector<BigInt> cur = {1, 3};
  for (int size = 1; size < n; ++size) cur = doubled_multiset_step(cur, size);
  return IntPolynomial(std::move(cur));
}

MultiplicityVector doubled_multiset(int n) {
  return MultiplicityVector(std::vector<int>(n, 2));
}

MultiRouteReport compare_routes(std::string identity, int n, std::vector<RoutePolynomial> routes) {
  MultiRouteReport rep;
  rep.identity = std::move(identity);
  rep.n = n;
  rep.routes = std::move(routes);
  rep.all_equal = true;
  for (size_t i = 1; i < rep.routes.size(); ++i) {
    if (auto d = first_difference(rep.routes[0].poly, rep.routes[i].poly)) {
      rep.all_equal = false;
      rep.mismatches.push_back({rep.routes[0].route, rep.routes[i].route, *d});
    }
  }
  return rep;
}

}  // namespace

IntPolynomial descent_poly_bruteforce(const MultiplicityVector& m, bool signed_words,
                                      const Caps& caps) {
  check_total_cap(m, caps, "descent_poly_bruteforce");
  std::vector<BigInt> counts(m.total() + 1);
  auto tally = [&](const SignedWord& w) { ++counts[des(w)]; };
  if (signed_words) {
    for_each_signed_multiperm(m, tally);
  } else {
    for_each_multiset_perm(m, tally);
  }
  return IntPolynomial(std::move(counts));
}

QZPolynomial qz_descent_poly_bruteforce(const MultiplicityVector& m, const Caps& caps) {
  check_total_cap(m, caps, "qz_descent_poly_bruteforce");
  std::vector<QZCoeff> tc(m.total() + 1);
  for_each_signed_multiperm(m, [&](const SignedWord& w) {
    ++tc[des(w)][QZExponents{static_cast<int>(fmaj(w)), neg_count(w)}];
  });
  return QZPolynomial(std::move(tc));
}

QZPolynomial major_index_poly_bruteforce(const MultiplicityVector& m, const Caps& caps) {
  check_total_cap(m, caps, "major_index_poly_bruteforce");
  std::vector<QZCoeff> tc(m.total() + 1);
  for_each_multiset_perm(m, [&](const SignedWord& w) {
    ++tc[des(w)][QZExponents{static_cast<int>(maj(w)), 0}];
  });
  return QZPolynomial(std::move(tc));
}

IntPolynomial ascent_poly_bruteforce(const SSequence& s, const Caps& caps) {
  check_product_cap(s, caps, "ascent_poly_bruteforce");
  std::vector<BigInt> counts(s.size() + 1);
  for_each_inversion_seq(s, [&](const InversionSequence& e) { ++counts[asc(e, s)]; });
  return IntPolynomial(std::move(counts));
}

IntPolynomial ascent_poly_recurrence(int n) {
  return doubled_multiset_recurrence(n, "ascent_poly_recurrence");
}

IntPolynomial descent_poly_recurrence(int n) {
  return doubled_multiset_recurrence(n, "descent_poly_recurrence");
}

IntPolynomial ascent_poly_ehrhart(int n) {
  if (n < 1) throw std::invalid_argument("ascent_poly_ehrhart: n must be >= 1");
  const int cap = 2 * n - 1;
  std::vector<BigInt> f(cap + 1 + kGuard);
  for (int k = 0; k < static_cast<int>(f.size()); ++k)
    f[k] = int_pow(BigInt(k + 1) * BigInt(2 * k + 1), n);
  return truncated_series_numerator(f, 2 * n + 1, cap);
}

QZPolynomial macmahon_poly_gf(const MultiplicityVector& m, const Caps& caps) {
  check_total_cap(m, caps, "macmahon_poly_gf");
  const int cap = m.total();
  std::vector<QZCoeff> f(cap + 1 + kGuard);
  for (int k = 0; k < static_cast<int>(f.size()); ++k) {
    IntPolynomial prod{1};
    for (int c : m.counts()) prod = prod * q_binomial(c + k, c);
    f[k] = qz_from_qpoly(prod);
  }
  return truncated_series_numerator_qz(f, q_pochhammer_t(m.total() + 1, 1), cap);
}

QZPolynomial qz_descent_poly_gf(const MultiplicityVector& m, const Caps& caps) {
  check_total_cap(m, caps, "qz_descent_poly_gf");
  const int cap = m.total();
  std::vector<QZCoeff> f(cap + 1 + kGuard);
  for (int k = 0; k < static_cast<int>(f.size()); ++k) {
    QZCoeff prod{{QZExponents{0, 0}, BigInt(1)}};
    for (int c : m.counts()) {
      QZCoeff letter_sum;
      for (int i = 0; i <= c; ++i) {
        IntPolynomial base = dilate(q_binomial(c - i + k, c - i) * q_binomial(i + k - 1, i), 2);
        // multiply by (zq)^i: shift every q-exponent by i, set z-exponent i
        for (int j = 0; j <= base.degree(); ++j)
          if (base.coeff(j) != 0) letter_sum[QZExponents{j + i, i}] += base.coeff(j);
      }
      prod = qz_mul(prod, letter_sum);
    }
    f[k] = std::move(prod);
  }
  return truncated_series_numerator_qz(f, q_pochhammer_t(m.total() + 1, 2), cap);
}

IntPolynomial signed_descent_poly_gf(const MultiplicityVector& m, const Caps& caps) {
  check_total_cap(m, caps, "signed_descent_poly_gf");
  const int cap = m.total();
  std::vector<BigInt> f(cap + 1 + kGuard);
  for (int k = 0; k < static_cast<int>(f.size()); ++k) {
    BigInt prod = 1;
    for (int c : m.counts()) prod *= binomial(2LL * k + c, c);
    f[k] = std::move(prod);
  }
  return truncated_series_numerator(f, m.total() + 1, cap);
}

IntPolynomial descent_poly_brenti_chain(const MultiplicityVector& m) {
  IntPolynomial f{1};
  int total = 0;
  for (int c : m.counts()) {
    for (int v = 0; v < c; ++v) {
      ++total;
      // adding one more copy of a letter multiplies the k-th series value
      // by (2k + v + 1) / (v + 1)
      f = brenti_step(f, BigRat(2, v + 1), 1, total);
    }
  }
  return f;
}

MultiRouteReport verify_equidistribution(int n, const Caps& caps) {
  std::vector<RoutePolynomial> routes;
  routes.push_back({"descent-brute", descent_poly_bruteforce(doubled_multiset(n), true, caps)});
  routes.push_back({"ascent-brute", ascent_poly_bruteforce(sv_signed_s(n), caps)});
  routes.push_back({"ascent-recurrence", ascent_poly_recurrence(n)});
  routes.push_back({"descent-recurrence", descent_poly_recurrence(n)});
  routes.push_back({"series-extraction", ascent_poly_ehrhart(n)});
  return compare_routes("equidistribution", n, std::move(routes));
}

MultiRouteReport verify_unsigned_equidistribution(int n, const Caps& caps) {
  std::vector<RoutePolynomial> routes;
  routes.push_back({"descent-brute", descent_poly_bruteforce(doubled_multiset(n), false, caps)});
  routes.push_back({"ascent-brute", ascent_poly_bruteforce(sv_unsigned_s(n), caps)});
  return compare_routes("unsigned-equidistribution", n, std::move(routes));
}

MultiRouteReport verify_series_extraction(int n, const Caps& caps) {
  std::vector<RoutePolynomial> routes;
  routes.push_back({"series-extraction", ascent_poly_ehrhart(n)});
  routes.push_back({"ascent-recurrence", ascent_poly_recurrence(n)});
  if (inversion_seq_count(sv_signed_s(n)) <= caps.max_product)
    routes.push_back({"ascent-brute", ascent_poly_bruteforce(sv_signed_s(n), caps)});
  return compare_routes("ehrhart", n, std::move(routes));
}

TrivariateGfReport verify_trivariate_gf(const MultiplicityVector& m, const Caps& caps) {
  TrivariateGfReport rep;
  rep.m = m.counts();
  rep.gf = qz_descent_poly_gf(m, caps);
  rep.brute = qz_descent_poly_bruteforce(m, caps);
  rep.mismatch = first_difference(rep.gf, rep.brute);
  rep.trivariate_equal = !rep.mismatch.has_value();
  // At z = 0 only all-positive words remain and fmaj doubles maj, so the
  // numerator is the unsigned one with q squared.
  rep.z0_matches_unsigned =
      undilate_q(substitute_z(rep.gf, 0), 2) == macmahon_poly_gf(m, caps);
  rep.q1z1_matches_descent =
      specialize(rep.gf, 1, 1) == descent_poly_bruteforce(m, true, caps);
  return rep;
}

MajorIndexGfReport verify_major_index_gf(const MultiplicityVector& m, const Caps& caps) {
  MajorIndexGfReport rep;
  rep.m = m.counts();
  rep.gf = macmahon_poly_gf(m, caps);
  rep.brute = major_index_poly_bruteforce(m, caps);
  rep.mismatch = first_difference(rep.gf, rep.brute);
  rep.equal = !rep.mismatch.has_value();
  return rep;
}

SignedGfReport verify_signed_gf(const MultiplicityVector& m, const Caps& caps) {
  SignedGfReport rep;
  rep.m = m.counts();
  rep.gf = signed_descent_poly_gf(m, caps);
  rep.brute = descent_poly_bruteforce(m, true, caps);
  rep.mismatch = first_difference(rep.gf, rep.brute);
  rep.equal = !rep.mismatch.has_value();
  return rep;
}

ChowGesselReport chow_gessel_check(int n, int k_max) {
  if (n < 1) throw std::invalid_argument("chow_gessel_check: n must be >= 1");
  ChowGesselReport rep;
  rep.n = n;
  rep.k_checked = k_max;
  MultiplicityVector ones(std::vector<int>(n, 1));
  Caps caps;
  caps.max_total = std::max<long long>(caps.max_total, n);
  QZPolynomial numerator = substitute_z(qz_descent_poly_gf(ones, caps), 1);

  auto matches = [&](int len, std::optional<int>* first_fail) {
    auto series = expand_rational_series_qz(numerator, q_pochhammer_t(len, 2), k_max + 1);
    for (int k = 0; k <= k_max; ++k) {
      if (series[k] != qz_from_qpoly(poly_pow(q_integer(2 * k + 1), n))) {
        if (first_fail) *first_fail = k;
        return false;
      }
    }
    return true;
  };
  rep.matches_len_n_plus_1 = matches(n + 1, nullptr);
  rep.matches_len_2n_plus_1 = matches(2 * n + 1, &rep.first_failing_k_2n_plus_1);
  return rep;
}

std::vector<std::vector<int>> canonical_multiplicity_vectors(int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // descending-lexicographic partition enumeration
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  if (total >= 1) rec(rec, total, total);
  return out;
}

}  // namespace despoly
