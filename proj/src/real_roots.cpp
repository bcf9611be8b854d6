#include <despoly/real_roots.hpp>

#include <stdexcept>

#include <despoly/errors.hpp>

namespace despoly {

namespace {

// Divide by the (positive) content, keeping the sign of the polynomial.
IntPolynomial strip_content(const IntPolynomial& p) { return primitive_part(p); }

int sign_at_inf(const IntPolynomial& p, bool positive_side) {
  if (p.is_zero()) return 0;
  int s = sign_of(p.leading());
  if (!positive_side && p.degree() % 2 == 1) s = -s;
  return s;
}

int count_variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("sturm_chain: zero polynomial");
  std::vector<IntPolynomial> chain;
  chain.push_back(strip_content(p));
  if (chain[0].degree() == 0) return chain;
  chain.push_back(strip_content(derivative(chain[0])));
  while (chain.back().degree() >= 1) {
    auto [r, s] = pseudo_rem(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    if (s < 0) r = -r;  // undo any negative net scaling of the remainder
    chain.push_back(-strip_content(r));
  }
  return chain;
}

int sign_variations_at(const std::vector<IntPolynomial>& chain, const BigRat& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) signs.push_back(sign_of(eval(p, x)));
  return count_variations(signs);
}

int sign_variations_at_neg_inf(const std::vector<IntPolynomial>& chain) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) signs.push_back(sign_at_inf(p, false));
  return count_variations(signs);
}

int sign_variations_at_pos_inf(const std::vector<IntPolynomial>& chain) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) signs.push_back(sign_at_inf(p, true));
  return count_variations(signs);
}

int count_real_roots(const IntPolynomial& p, const BigRat& lo, const BigRat& hi) {
  if (p.is_zero()) throw std::invalid_argument("count_real_roots: zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("count_real_roots: lo must be < hi");
  if (poly_gcd(p, derivative(p)).degree() > 0)
    throw std::invalid_argument("count_real_roots: polynomial is not squarefree");
  if (eval(p, lo) == 0 || eval(p, hi) == 0)
    throw std::invalid_argument("count_real_roots: endpoint is a root");
  auto chain = sturm_chain(p);
  return sign_variations_at(chain, lo) - sign_variations_at(chain, hi);
}

std::vector<std::pair<IntPolynomial, int>> squarefree_factors(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_factors: zero polynomial");
  IntPolynomial work = primitive_part(p);
  if (work.leading() < 0) work = -work;
  std::vector<std::pair<IntPolynomial, int>> out;
  if (work.degree() == 0) return out;
  IntPolynomial g = poly_gcd(work, derivative(work));
  if (g.degree() == 0) {
    out.emplace_back(std::move(work), 1);
    return out;
  }
  IntPolynomial b = divexact(work, g);
  IntPolynomial c = divexact(derivative(work), g);
  IntPolynomial d = c - derivative(b);
  int i = 1;
  while (b.degree() > 0) {
    IntPolynomial a = poly_gcd(b, d);
    if (a.is_zero()) a = IntPolynomial{1};
    if (a.degree() > 0) out.emplace_back(a, i);
    b = divexact(b, a);
    c = d.is_zero() ? IntPolynomial{} : divexact(d, a);
    d = c - derivative(b);
    ++i;
  }
  return out;
}

BigRat cauchy_root_bound(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("cauchy_root_bound: zero polynomial");
  BigInt lead = boost::multiprecision::abs(p.leading());
  BigInt top = 0;
  for (int i = 0; i < p.degree(); ++i) {
    BigInt a = boost::multiprecision::abs(p.coeff(i));
    if (a > top) top = a;
  }
  return BigRat(1) + BigRat(top, lead);
}

SturmCertificate is_real_rooted(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("is_real_rooted: zero polynomial");
  SturmCertificate cert;
  cert.polynomial = p;
  cert.power_of_t = trailing_zero_count(p);

  // Peel off the t^k factor, strip content, and make the lead positive.
  std::vector<BigInt> rest(p.coeffs().begin() + cert.power_of_t, p.coeffs().end());
  IntPolynomial core = primitive_part(IntPolynomial(std::move(rest)));
  if (core.leading() < 0) core = -core;

  cert.bound = cauchy_root_bound(core);
  bool nonneg = true;
  for (const auto& c : core.coeffs())
    if (c < 0) nonneg = false;
  cert.interval_lo = -(cert.bound + 1);
  cert.interval_hi = nonneg ? BigRat(0) : cert.bound + 1;

  int counted = 0;
  for (auto& [factor, mult] : squarefree_factors(core)) {
    auto chain = sturm_chain(factor);
    SquarefreeFactorCount fc;
    fc.multiplicity = mult;
    fc.chain_length = static_cast<int>(chain.size());
    fc.variations_lo = sign_variations_at(chain, cert.interval_lo);
    fc.variations_hi = sign_variations_at(chain, cert.interval_hi);
    fc.distinct_real_roots = fc.variations_lo - fc.variations_hi;
    counted += fc.multiplicity * fc.distinct_real_roots;
    fc.factor = std::move(factor);
    cert.factors.push_back(std::move(fc));
  }
  cert.real_rooted = (counted + cert.power_of_t == p.degree());
  return cert;
}

PFClass pf_classify(const IntPolynomial& p) {
  if (p.is_zero()) return PFClass::pf1;
  for (const auto& c : p.coeffs())
    if (c < 0) return PFClass::none;
  return is_real_rooted(p).real_rooted ? PFClass::pf : PFClass::pf1;
}

namespace {

void require_nonnegative(const IntPolynomial& p, const char* who) {
  for (const auto& c : p.coeffs())
    if (c < 0) throw std::invalid_argument(std::string(who) + ": negative coefficient");
}

}  // namespace

bool is_log_concave(const IntPolynomial& p) {
  require_nonnegative(p, "is_log_concave");
  if (p.is_zero()) return true;
  int lo = trailing_zero_count(p);
  for (int i = lo; i <= p.degree(); ++i)
    if (p.coeff(i) == 0) return false;  // gap in the support
  for (int i = 1; i < p.degree(); ++i)
    if (p.coeff(i) * p.coeff(i) < p.coeff(i - 1) * p.coeff(i + 1)) return false;
  return true;
}

bool is_unimodal(const IntPolynomial& p) {
  require_nonnegative(p, "is_unimodal");
  if (p.is_zero()) return true;
  int i = 0;
  while (i < p.degree() && p.coeff(i) <= p.coeff(i + 1)) ++i;
  while (i < p.degree() && p.coeff(i) >= p.coeff(i + 1)) ++i;
  return i == p.degree();
}

IntPolynomial brenti_step(const IntPolynomial& f, const BigRat& a, const BigRat& b, int n) {
  if (!(a > 0)) throw std::invalid_argument("brenti_step: a must be positive");
  // coefficientwise: out_i = (b + a i) f_i + (a n - b - a (i - 1)) f_{i-1}
  std::vector<BigInt> out(f.is_zero() ? 0 : f.coeffs().size() + 1);
  for (int i = 0; i < static_cast<int>(out.size()); ++i) {
    BigRat v = (b + a * i) * BigRat(f.coeff(i)) +
               (a * n - b - a * (i - 1)) * BigRat(f.coeff(i - 1));
    if (!is_integer(v)) throw NonIntegerCoefficient("brenti_step: fractional coefficient");
    out[i] = numerator(v);
  }
  return IntPolynomial(std::move(out));
}

}  // namespace despoly
