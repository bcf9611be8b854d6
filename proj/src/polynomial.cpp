#include <despoly/polynomial.hpp>

#include <sstream>
#include <stdexcept>

#include <despoly/errors.hpp>

namespace despoly {

BigInt int_pow(const BigInt& base, int exp) {
  if (exp < 0) throw std::invalid_argument("int_pow: negative exponent");
  return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

BigRat rat_pow(const BigRat& base, int exp) {
  if (exp < 0) throw std::invalid_argument("rat_pow: negative exponent");
  BigRat r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

BigInt binomial(long long n, long long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step
  }
  return r;
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::monomial(int degree, BigInt coeff) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  if (coeff == 0) return {};
  std::vector<BigInt> c(degree + 1);
  c[degree] = std::move(coeff);
  return IntPolynomial(std::move(c));
}

const BigInt& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw std::invalid_argument("leading: zero polynomial");
  return coeffs_.back();
}

BigInt IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& r) {
  std::vector<BigInt> out(std::max(p.coeffs().size(), r.coeffs().size()));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < p.coeffs().size()) out[i] += p.coeffs()[i];
    if (i < r.coeffs().size()) out[i] += r.coeffs()[i];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& p) {
  std::vector<BigInt> out(p.coeffs().size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = -p.coeffs()[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& r) { return p + (-r); }

IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& r) {
  if (p.is_zero() || r.is_zero()) return {};
  std::vector<BigInt> out(p.coeffs().size() + r.coeffs().size() - 1);
  for (size_t i = 0; i < p.coeffs().size(); ++i)
    for (size_t j = 0; j < r.coeffs().size(); ++j) out[i + j] += p.coeffs()[i] * r.coeffs()[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const BigInt& c, const IntPolynomial& p) {
  std::vector<BigInt> out(p.coeffs().size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = c * p.coeffs()[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial derivative(const IntPolynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<BigInt> out(p.coeffs().size() - 1);
  for (size_t i = 1; i < p.coeffs().size(); ++i) out[i - 1] = BigInt(i) * p.coeffs()[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial poly_pow(const IntPolynomial& p, int e) {
  if (e < 0) throw std::invalid_argument("poly_pow: negative exponent");
  IntPolynomial r{1};
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

BigInt eval(const IntPolynomial& p, const BigInt& x) {
  BigInt acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigRat eval(const IntPolynomial& p, const BigRat& x) {
  BigRat acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + BigRat(*it);
  return acc;
}

IntPolynomial shifted(const IntPolynomial& p, int k) {
  if (k < 0) throw std::invalid_argument("shifted: negative shift");
  if (p.is_zero()) return {};
  std::vector<BigInt> out(p.coeffs().size() + k);
  for (size_t i = 0; i < p.coeffs().size(); ++i) out[i + k] = p.coeffs()[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial dilate(const IntPolynomial& p, int step) {
  if (step < 1) throw std::invalid_argument("dilate: step must be >= 1");
  if (p.is_zero()) return {};
  std::vector<BigInt> out(static_cast<size_t>(p.degree()) * step + 1);
  for (size_t i = 0; i < p.coeffs().size(); ++i) out[i * step] = p.coeffs()[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial undilate(const IntPolynomial& p, int step) {
  if (step < 1) throw std::invalid_argument("undilate: step must be >= 1");
  if (p.is_zero()) return {};
  std::vector<BigInt> out(p.degree() / step + 1);
  for (size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p.coeffs()[i] == 0) continue;
    if (i % step != 0) throw std::invalid_argument("undilate: exponent not a multiple of step");
    out[i / step] = p.coeffs()[i];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial divexact(const IntPolynomial& p, const IntPolynomial& d) {
  if (d.is_zero()) throw std::invalid_argument("divexact: division by zero polynomial");
  if (p.is_zero()) return {};
  if (p.degree() < d.degree()) throw InexactDivision("divexact: degree too small");
  std::vector<BigInt> rem = p.coeffs();
  std::vector<BigInt> quot(p.degree() - d.degree() + 1);
  const auto& dc = d.coeffs();
  int rdeg = p.degree();
  while (rdeg >= d.degree()) {
    if (rem[rdeg] != 0) {
      if (rem[rdeg] % d.leading() != 0)
        throw InexactDivision("divexact: leading coefficient not divisible");
      BigInt c = rem[rdeg] / d.leading();
      int k = rdeg - d.degree();
      quot[k] = c;
      for (size_t j = 0; j < dc.size(); ++j) rem[k + j] -= c * dc[j];
    }
    --rdeg;
  }
  for (int i = 0; i < d.degree(); ++i)
    if (rem[i] != 0) throw InexactDivision("divexact: nonzero remainder");
  return IntPolynomial(std::move(quot));
}

std::pair<IntPolynomial, int> pseudo_rem(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) throw std::invalid_argument("pseudo_rem: division by zero polynomial");
  IntPolynomial r = f;
  const BigInt& lead = g.leading();
  long long muls = 0;
  while (!r.is_zero() && r.degree() >= g.degree()) {
    int k = r.degree() - g.degree();
    r = lead * r - r.leading() * shifted(g, k);
    ++muls;
  }
  int s = (lead < 0 && (muls % 2) == 1) ? -1 : 1;
  return {std::move(r), s};
}

BigInt content(const IntPolynomial& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) g = boost::multiprecision::gcd(g, c);
  return boost::multiprecision::abs(g);
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return {};
  BigInt c = content(p);
  std::vector<BigInt> out(p.coeffs().size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = p.coeffs()[i] / c;
  return IntPolynomial(std::move(out));
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  auto positive = [](IntPolynomial p) { return p.is_zero() || p.leading() > 0 ? p : -p; };
  IntPolynomial x = primitive_part(a), y = primitive_part(b);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_rem(x, y).first;
    x = std::move(y);
    y = primitive_part(r);
  }
  return positive(std::move(x));
}

int trailing_zero_count(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("trailing_zero_count: zero polynomial");
  int k = 0;
  while (p.coeffs()[k] == 0) ++k;
  return k;
}

std::optional<CoeffDifference> first_difference(const IntPolynomial& a, const IntPolynomial& b) {
  int top = std::max(a.degree(), b.degree());
  for (int i = 0; i <= top; ++i)
    if (a.coeff(i) != b.coeff(i)) return CoeffDifference{i, a.coeff(i), b.coeff(i)};
  return std::nullopt;
}

std::string to_string(const IntPolynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    const BigInt& c = p.coeffs()[i];
    if (c == 0) continue;
    BigInt a = boost::multiprecision::abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || i == 0) os << a.str();
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace despoly
