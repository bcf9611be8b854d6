#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <despoly/errors.hpp>
#include <despoly/identities.hpp>
#include <despoly/real_roots.hpp>

using namespace despoly;

namespace {

std::mt19937_64 rng(424242);

// Random product of integer linear factors (a t + b), a >= 1: real-rooted by
// construction, with repeated factors allowed.
IntPolynomial random_linear_product(int max_factors) {
  std::uniform_int_distribution<int> nf(1, max_factors), a(1, 5), b(-9, 9);
  IntPolynomial p{1};
  int n = nf(rng);
  for (int i = 0; i < n; ++i) p = p * IntPolynomial{b(rng), a(rng)};
  return p;
}

// Random quadratic with no real roots (negative discriminant), verified.
IntPolynomial random_complex_quadratic() {
  std::uniform_int_distribution<int> a(1, 5), b(-6, 6), c(1, 9);
  for (;;) {
    int qa = a(rng), qb = b(rng), qc = c(rng);
    if (qb * qb - 4 * qa * qc < 0) return IntPolynomial{qc, qb, qa};
  }
}

}  // namespace

TEST_CASE("sturm chain shapes") {
  auto chain = sturm_chain(IntPolynomial{-1, 0, 1});  // t^2 - 1
  CHECK(chain.size() == 3);
  CHECK(chain.back().degree() == 0);
  CHECK(chain.back().leading() > 0);

  auto linear = sturm_chain(IntPolynomial{0, 1});  // t
  CHECK(linear.size() == 2);
  CHECK(linear[0] == IntPolynomial{0, 1});
  CHECK(linear[1] == IntPolynomial{1});

  CHECK_THROWS_AS(sturm_chain(IntPolynomial{}), std::invalid_argument);
}

TEST_CASE("sign variation difference counts the roots of a cubic") {
  IntPolynomial p{1, 31, 55, 9};
  // Independent bracketing oracle: the sign of p alternates along
  // -6 < -3 < -1/2 < 0, giving three real roots for a cubic.
  CHECK(sign_of(eval(p, BigRat(-6))) == -1);
  CHECK(sign_of(eval(p, BigRat(-3))) == 1);
  CHECK(sign_of(eval(p, BigRat(-1, 2))) == -1);
  CHECK(sign_of(eval(p, BigRat(0))) == 1);

  auto chain = sturm_chain(p);
  CHECK(sign_variations_at_neg_inf(chain) - sign_variations_at_pos_inf(chain) == 3);
}

TEST_CASE("count_real_roots on intervals") {
  CHECK(count_real_roots(IntPolynomial{-1, 0, 1}, BigRat(-2), BigRat(2)) == 2);
  CHECK(count_real_roots(IntPolynomial{1, 0, 1}, BigRat(-10), BigRat(10)) == 0);

  IntPolynomial p{1, 31, 55, 9};
  BigRat bound = cauchy_root_bound(p);
  CHECK(count_real_roots(p, -bound - 1, BigRat(0)) == 3);

  CHECK_THROWS_AS(count_real_roots(IntPolynomial{1, 2, 1}, BigRat(-3), BigRat(3)),
                  std::invalid_argument);  // (t+1)^2 is not squarefree
  CHECK_THROWS_AS(count_real_roots(IntPolynomial{-1, 0, 1}, BigRat(1), BigRat(2)),
                  std::invalid_argument);  // endpoint is a root
}

TEST_CASE("squarefree decomposition") {
  // (t+1)^2 (t-3) = -3 - 5t - t^2 + t^3
  IntPolynomial p = IntPolynomial{1, 1} * IntPolynomial{1, 1} * IntPolynomial{-3, 1};
  auto factors = squarefree_factors(p);
  REQUIRE(factors.size() == 2);
  CHECK(factors[0].first == IntPolynomial{-3, 1});
  CHECK(factors[0].second == 1);
  CHECK(factors[1].first == IntPolynomial{1, 1});
  CHECK(factors[1].second == 2);

  auto single = squarefree_factors(IntPolynomial{-1, 0, 1});
  REQUIRE(single.size() == 1);
  CHECK(single[0].second == 1);
}

TEST_CASE("squarefree factorization reassembles the input") {
  for (int i = 0; i < 50; ++i) {
    IntPolynomial p = random_linear_product(4) * random_linear_product(3);
    IntPolynomial prod{1};
    for (const auto& [f, mult] : squarefree_factors(p)) prod = prod * poly_pow(f, mult);
    CHECK(content(p) * primitive_part(prod) == (p.leading() > 0 ? p : -p));
  }
}

TEST_CASE("real-rootedness certificates") {
  CHECK(is_real_rooted(IntPolynomial{1, 3}).real_rooted);
  CHECK(!is_real_rooted(IntPolynomial{1, 0, 1}).real_rooted);

  auto cert = is_real_rooted(IntPolynomial{1, 31, 55, 9});
  CHECK(cert.real_rooted);
  REQUIRE(cert.factors.size() == 1);
  CHECK(cert.factors[0].distinct_real_roots == 3);
  CHECK(cert.interval_hi == 0);  // nonnegative coefficients: no positive roots

  // repeated factors: (t+1)^2 (t-3) is real-rooted with a double root
  auto rep = is_real_rooted(IntPolynomial{1, 1} * IntPolynomial{1, 1} * IntPolynomial{-3, 1});
  CHECK(rep.real_rooted);

  // t^3 alone: the root at 0 carries the whole degree
  auto cube = is_real_rooted(IntPolynomial{0, 0, 0, 1});
  CHECK(cube.real_rooted);
  CHECK(cube.power_of_t == 3);

  // t (t^2 + 1) is not real-rooted despite the zero root
  CHECK(!is_real_rooted(IntPolynomial{0, 1, 0, 1}).real_rooted);

  // constants have no roots to miss
  CHECK(is_real_rooted(IntPolynomial{5}).real_rooted);

  CHECK_THROWS_AS(is_real_rooted(IntPolynomial{}), std::invalid_argument);
}

TEST_CASE("random real-rooted products are certified") {
  for (int i = 0; i < 60; ++i) {
    auto cert = is_real_rooted(random_linear_product(8));
    CHECK(cert.real_rooted);
  }
}

TEST_CASE("a complex quadratic factor blocks the certificate") {
  for (int i = 0; i < 30; ++i) {
    IntPolynomial p = random_complex_quadratic() * random_linear_product(6);
    CHECK(!is_real_rooted(p).real_rooted);
  }
}

TEST_CASE("log-concavity") {
  CHECK(is_log_concave(IntPolynomial{1, 31, 55, 9}));
  CHECK(is_log_concave(IntPolynomial{1, 1, 1}));
  CHECK(!is_log_concave(IntPolynomial{1, 0, 1}));  // gapped support
  CHECK_THROWS_AS(is_log_concave(IntPolynomial{1, -1}), std::invalid_argument);
}

TEST_CASE("unimodality") {
  CHECK(is_unimodal(IntPolynomial{1, 31, 55, 9}));
  CHECK(is_unimodal(IntPolynomial{1, 3}));
  CHECK(!is_unimodal(IntPolynomial{2, 1, 2}));
  CHECK_THROWS_AS(is_unimodal(IntPolynomial{1, -1}), std::invalid_argument);
}

TEST_CASE("real-rooted nonnegative polynomials are log-concave and unimodal") {
  for (int i = 0; i < 60; ++i) {
    std::uniform_int_distribution<int> nf(1, 6), b(0, 9);
    IntPolynomial p{1};
    int n = nf(rng);
    for (int j = 0; j < n; ++j) p = p * IntPolynomial{b(rng), 1};
    REQUIRE(is_real_rooted(p).real_rooted);
    CHECK(is_log_concave(p));
    CHECK(is_unimodal(p));
  }
}

TEST_CASE("derivative-lift step") {
  CHECK(brenti_step(IntPolynomial{1, 1}, 1, 1, 2) == IntPolynomial{1, 3});
  CHECK(brenti_step(IntPolynomial{1}, 1, 1, 1) == IntPolynomial{1});
  // lifting the two-distinct-letters polynomial by one more distinct letter
  // multiplies the series values by 2k+1, i.e. a = 2, b = 1
  CHECK(brenti_step(IntPolynomial{1, 6, 1}, 2, 1, 3) == IntPolynomial{1, 23, 23, 1});
  CHECK(brenti_step(IntPolynomial{1, 23, 23, 1}, 2, 1, 4) ==
        descent_poly_bruteforce(MultiplicityVector({1, 1, 1, 1}), true));

  CHECK_THROWS_AS(brenti_step(IntPolynomial{1, 1}, BigRat(1, 3), 1, 1), NonIntegerCoefficient);
  CHECK_THROWS_AS(brenti_step(IntPolynomial{1, 1}, 0, 1, 2), std::invalid_argument);
}

TEST_CASE("every intermediate of the derivative-lift chain is real-rooted") {
  for (const auto& counts : canonical_multiplicity_vectors(5)) {
    IntPolynomial f{1};
    int total = 0;
    for (int c : counts)
      for (int v = 0; v < c; ++v) {
        ++total;
        f = brenti_step(f, BigRat(2, v + 1), 1, total);
        auto cert = is_real_rooted(f);
        CHECK(cert.real_rooted);
      }
    CHECK(f == descent_poly_bruteforce(MultiplicityVector(counts), true));
  }
}

TEST_CASE("signed descent polynomials up to total 6 are certified") {
  for (int total = 1; total <= 6; ++total)
    for (const auto& counts : canonical_multiplicity_vectors(total)) {
      IntPolynomial p = descent_poly_bruteforce(MultiplicityVector(counts), true);
      CHECK(is_real_rooted(p).real_rooted);
      CHECK(is_log_concave(p));
      CHECK(is_unimodal(p));
    }
}

TEST_CASE("unsigned descent polynomials up to total 8 are real-rooted") {
  for (int total = 1; total <= 8; ++total)
    for (const auto& counts : canonical_multiplicity_vectors(total)) {
      IntPolynomial u = descent_poly_bruteforce(MultiplicityVector(counts), false);
      CHECK(is_real_rooted(u).real_rooted);
    }
}

TEST_CASE("coefficient-sequence classes") {
  CHECK(pf_classify(IntPolynomial{1, 31, 55, 9}) == PFClass::pf);
  CHECK(pf_classify(IntPolynomial{1, 0, 1}) == PFClass::pf1);  // nonnegative, complex roots
  CHECK(pf_classify(IntPolynomial{-1, 1}) == PFClass::none);
}
