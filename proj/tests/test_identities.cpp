#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <despoly/errors.hpp>
#include <despoly/identities.hpp>

using namespace despoly;

namespace {

std::vector<std::vector<int>> compositions_up_to(int bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem) -> void {
    if (!cur.empty()) out.push_back(cur);
    for (int part = 1; part <= rem; ++part) {
      cur.push_back(part);
      self(self, rem - part);
      cur.pop_back();
    }
  };
  rec(rec, bound);
  return out;
}

const IntPolynomial kQuartic{1, 31, 55, 9};

}  // namespace

TEST_CASE("signed descent polynomials by brute force") {
  CHECK(descent_poly_bruteforce(MultiplicityVector({2}), true) == IntPolynomial{1, 3});
  CHECK(descent_poly_bruteforce(MultiplicityVector({2, 2}), true) == kQuartic);
  CHECK(descent_poly_bruteforce(MultiplicityVector({1, 1}), true) == IntPolynomial{1, 6, 1});
}

TEST_CASE("coefficient sum equals the number of signed words") {
  for (const auto& c : compositions_up_to(6)) {
    MultiplicityVector m(c);
    CHECK(eval(descent_poly_bruteforce(m, true), BigInt(1)) == signed_multiperm_count(m));
    CHECK(descent_poly_bruteforce(m, true).degree() <= m.total());
  }
}

TEST_CASE("trivariate enumerator by brute force") {
  QZPolynomial p = qz_descent_poly_bruteforce(MultiplicityVector({1}));
  CHECK(p == QZPolynomial::term(0, 0, 0, 1) + QZPolynomial::term(1, 1, 1, 1));
  CHECK(substitute_z(p, 0) == QZPolynomial::term(0, 0, 0, 1));
  CHECK(specialize(qz_descent_poly_bruteforce(MultiplicityVector({2})), 1, 1) ==
        IntPolynomial{1, 3});
}

TEST_CASE("ascent polynomials by brute force") {
  CHECK(ascent_poly_bruteforce(SSequence({1, 4})) == IntPolynomial{1, 3});
  CHECK(ascent_poly_bruteforce(SSequence({1, 4, 3, 8})) == kQuartic);
  CHECK(ascent_poly_bruteforce(SSequence({1, 1})) == IntPolynomial{1});
}

TEST_CASE("recurrence route") {
  CHECK(ascent_poly_recurrence(1) == IntPolynomial{1, 3});
  CHECK(ascent_poly_recurrence(2) == kQuartic);
  CHECK(descent_poly_recurrence(1) == IntPolynomial{1, 3});
  CHECK(descent_poly_recurrence(2) == kQuartic);
  // one hand-checked step: the t-coefficient at size 2 is 6*3 + 13*1
  CHECK(ascent_poly_recurrence(2).coeff(1) == 6 * 3 + 13);
  CHECK_THROWS_AS(ascent_poly_recurrence(0), std::invalid_argument);
}

TEST_CASE("series extraction route") {
  CHECK(ascent_poly_ehrhart(1) == IntPolynomial{1, 3});
  CHECK(ascent_poly_ehrhart(2) == kQuartic);
  CHECK(ascent_poly_ehrhart(3) == ascent_poly_recurrence(3));
}

TEST_CASE("recurrence equals brute force at size 3") {
  CHECK(descent_poly_recurrence(3) ==
        descent_poly_bruteforce(MultiplicityVector({2, 2, 2}), true));
}

TEST_CASE("doubled-multiset polynomials have degree 2n-1") {
  for (int n = 1; n <= 3; ++n) CHECK(descent_poly_recurrence(n).degree() == 2 * n - 1);
}

TEST_CASE("major-index generating function") {
  CHECK(macmahon_poly_gf(MultiplicityVector({2})) == QZPolynomial::term(0, 0, 0, 1));
  CHECK(macmahon_poly_gf(MultiplicityVector({1, 1})) ==
        QZPolynomial::term(0, 0, 0, 1) + QZPolynomial::term(1, 1, 0, 1));
  CHECK(specialize(macmahon_poly_gf(MultiplicityVector({2, 2})), 1, 1) == IntPolynomial{1, 4, 1});
}

TEST_CASE("trivariate generating function small cases") {
  CHECK(qz_descent_poly_gf(MultiplicityVector({1})) ==
        QZPolynomial::term(0, 0, 0, 1) + QZPolynomial::term(1, 1, 1, 1));
  CHECK(specialize(qz_descent_poly_gf(MultiplicityVector({2})), 1, 1) == IntPolynomial{1, 3});
}

TEST_CASE("signed descent polynomial via integer series extraction") {
  CHECK(signed_descent_poly_gf(MultiplicityVector({2, 2})) == kQuartic);
  CHECK(signed_descent_poly_gf(MultiplicityVector({1, 1})) == IntPolynomial{1, 6, 1});
  CHECK(signed_descent_poly_gf(MultiplicityVector({1})) == IntPolynomial{1, 1});
}

TEST_CASE("trivariate report: all three comparisons hold up to total 4") {
  for (const auto& c : compositions_up_to(4)) {
    auto rep = verify_trivariate_gf(MultiplicityVector(c));
    CHECK(rep.trivariate_equal);
    CHECK(rep.z0_matches_unsigned);
    CHECK(rep.q1z1_matches_descent);
    CHECK(!rep.mismatch.has_value());
  }
}

TEST_CASE("major-index report holds up to total 4") {
  for (const auto& c : compositions_up_to(4)) {
    auto rep = verify_major_index_gf(MultiplicityVector(c));
    CHECK(rep.equal);
  }
}

TEST_CASE("signed gf report holds up to total 5") {
  for (const auto& c : compositions_up_to(5)) {
    auto rep = verify_signed_gf(MultiplicityVector(c));
    CHECK(rep.equal);
  }
}

TEST_CASE("five-route equidistribution") {
  for (int n = 1; n <= 2; ++n) {
    auto rep = verify_equidistribution(n);
    CHECK(rep.routes.size() == 5);
    CHECK(rep.all_equal);
    CHECK(rep.mismatches.empty());
    CHECK(rep.routes[0].poly == (n == 1 ? IntPolynomial{1, 3} : kQuartic));
  }
}

TEST_CASE("unsigned equidistribution") {
  for (int n = 1; n <= 3; ++n) CHECK(verify_unsigned_equidistribution(n).all_equal);
}

TEST_CASE("series extraction report") {
  auto rep = verify_series_extraction(3);
  CHECK(rep.all_equal);
  CHECK(rep.routes.size() == 3);
}

TEST_CASE("distinct-letters specialization balances with length n+1, not 2n+1") {
  for (int n = 1; n <= 3; ++n) {
    auto rep = chow_gessel_check(n);
    CHECK(rep.matches_len_n_plus_1);
    CHECK(!rep.matches_len_2n_plus_1);
  }
  CHECK(chow_gessel_check(1).first_failing_k_2n_plus_1.has_value());
}

TEST_CASE("derivative-lift chain reproduces brute force up to total 5") {
  for (const auto& c : compositions_up_to(5)) {
    MultiplicityVector m(c);
    CHECK(descent_poly_brenti_chain(m) == descent_poly_bruteforce(m, true));
  }
}

TEST_CASE("enumeration caps are enforced") {
  Caps tight{3, 10};
  CHECK_THROWS_AS(descent_poly_bruteforce(MultiplicityVector({2, 2}), true, tight), CapExceeded);
  CHECK_THROWS_AS(qz_descent_poly_bruteforce(MultiplicityVector({2, 2}), tight), CapExceeded);
  CHECK_THROWS_AS(ascent_poly_bruteforce(SSequence({1, 4, 3}), tight), CapExceeded);
  CHECK_THROWS_AS(signed_descent_poly_gf(MultiplicityVector({2, 2}), tight), CapExceeded);
  CHECK_NOTHROW(descent_poly_bruteforce(MultiplicityVector({2, 1}), true, tight));
}

TEST_CASE("canonical multiplicity vectors are the descending partitions") {
  auto p4 = canonical_multiplicity_vectors(4);
  CHECK(p4 == std::vector<std::vector<int>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  int count = 0;
  for (int total = 1; total <= 4; ++total)
    count += static_cast<int>(canonical_multiplicity_vectors(total).size());
  CHECK(count == 11);
}
