#include <despoly/qz_polynomial.hpp>

#include <sstream>
#include <stdexcept>

#include <despoly/errors.hpp>

namespace despoly {

void qz_add_inplace(QZCoeff& a, const QZCoeff& b) {
  for (const auto& [e, c] : b) {
    auto it = a.find(e);
    if (it == a.end()) {
      a.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) a.erase(it);
    }
  }
}

void qz_sub_inplace(QZCoeff& a, const QZCoeff& b) {
  for (const auto& [e, c] : b) {
    auto it = a.find(e);
    if (it == a.end()) {
      a.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second == 0) a.erase(it);
    }
  }
}

QZCoeff qz_mul(const QZCoeff& a, const QZCoeff& b) {
  QZCoeff out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      QZExponents e{ea.first + eb.first, ea.second + eb.second};
      auto it = out.find(e);
      if (it == out.end()) {
        out.emplace(e, ca * cb);
      } else {
        it->second += ca * cb;
        if (it->second == 0) out.erase(it);
      }
    }
  return out;
}

QZCoeff qz_from_qpoly(const IntPolynomial& p) {
  QZCoeff out;
  for (int j = 0; j <= p.degree(); ++j)
    if (p.coeff(j) != 0) out.emplace(QZExponents{j, 0}, p.coeff(j));
  return out;
}

void QZPolynomial::normalize() {
  while (!tc_.empty() && tc_.back().empty()) tc_.pop_back();
}

QZPolynomial QZPolynomial::from_int_poly(const IntPolynomial& p) {
  std::vector<QZCoeff> tc(p.coeffs().size());
  for (int i = 0; i <= p.degree(); ++i)
    if (p.coeff(i) != 0) tc[i].emplace(QZExponents{0, 0}, p.coeff(i));
  return QZPolynomial(std::move(tc));
}

QZPolynomial QZPolynomial::term(int t_exp, int q_exp, int z_exp, BigInt coeff) {
  if (t_exp < 0 || q_exp < 0 || z_exp < 0) throw std::invalid_argument("term: negative exponent");
  if (coeff == 0) return {};
  std::vector<QZCoeff> tc(t_exp + 1);
  tc[t_exp].emplace(QZExponents{q_exp, z_exp}, std::move(coeff));
  return QZPolynomial(std::move(tc));
}

const QZCoeff& QZPolynomial::coeff(int i) const {
  static const QZCoeff empty;
  if (i < 0 || i >= static_cast<int>(tc_.size())) return empty;
  return tc_[i];
}

QZPolynomial operator+(const QZPolynomial& p, const QZPolynomial& r) {
  std::vector<QZCoeff> out(std::max(p.t_coeffs().size(), r.t_coeffs().size()));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < p.t_coeffs().size()) out[i] = p.t_coeffs()[i];
    if (i < r.t_coeffs().size()) qz_add_inplace(out[i], r.t_coeffs()[i]);
  }
  return QZPolynomial(std::move(out));
}

QZPolynomial operator-(const QZPolynomial& p, const QZPolynomial& r) {
  std::vector<QZCoeff> out(std::max(p.t_coeffs().size(), r.t_coeffs().size()));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < p.t_coeffs().size()) out[i] = p.t_coeffs()[i];
    if (i < r.t_coeffs().size()) qz_sub_inplace(out[i], r.t_coeffs()[i]);
  }
  return QZPolynomial(std::move(out));
}

QZPolynomial operator*(const QZPolynomial& p, const QZPolynomial& r) {
  if (p.is_zero() || r.is_zero()) return {};
  std::vector<QZCoeff> out(p.t_coeffs().size() + r.t_coeffs().size() - 1);
  for (size_t i = 0; i < p.t_coeffs().size(); ++i)
    for (size_t j = 0; j < r.t_coeffs().size(); ++j)
      qz_add_inplace(out[i + j], qz_mul(p.t_coeffs()[i], r.t_coeffs()[j]));
  return QZPolynomial(std::move(out));
}

namespace {

// Substitute one variable by a rational; which == 0 substitutes q, 1
// substitutes z.  Requires the collapsed coefficients to be integers.
QZPolynomial substitute_one(const QZPolynomial& p, const BigRat& val, int which) {
  std::vector<QZCoeff> out(p.t_coeffs().size());
  for (size_t i = 0; i < p.t_coeffs().size(); ++i) {
    std::map<int, BigRat> acc;  // remaining exponent -> rational coefficient
    for (const auto& [e, c] : p.t_coeffs()[i]) {
      int subst_exp = which == 0 ? e.first : e.second;
      int keep_exp = which == 0 ? e.second : e.first;
      acc[keep_exp] += BigRat(c) * rat_pow(val, subst_exp);
    }
    for (const auto& [exp, c] : acc) {
      if (c == 0) continue;
      if (!is_integer(c)) throw NonIntegerCoefficient("substitute: fractional coefficient");
      QZExponents e = which == 0 ? QZExponents{0, exp} : QZExponents{exp, 0};
      out[i].emplace(e, numerator(c));
    }
  }
  return QZPolynomial(std::move(out));
}

}  // namespace

QZPolynomial substitute_q(const QZPolynomial& p, const BigRat& q_val) {
  return substitute_one(p, q_val, 0);
}

QZPolynomial substitute_z(const QZPolynomial& p, const BigRat& z_val) {
  return substitute_one(p, z_val, 1);
}

IntPolynomial specialize(const QZPolynomial& p, const BigRat& q_val, const BigRat& z_val) {
  std::vector<BigInt> out(p.t_coeffs().size());
  for (size_t i = 0; i < p.t_coeffs().size(); ++i) {
    BigRat acc = 0;
    for (const auto& [e, c] : p.t_coeffs()[i])
      acc += BigRat(c) * rat_pow(q_val, e.first) * rat_pow(z_val, e.second);
    if (!is_integer(acc)) throw NonIntegerCoefficient("specialize: fractional coefficient");
    out[i] = numerator(acc);
  }
  return IntPolynomial(std::move(out));
}

QZPolynomial undilate_q(const QZPolynomial& p, int step) {
  if (step < 1) throw std::invalid_argument("undilate_q: step must be >= 1");
  std::vector<QZCoeff> out(p.t_coeffs().size());
  for (size_t i = 0; i < p.t_coeffs().size(); ++i)
    for (const auto& [e, c] : p.t_coeffs()[i]) {
      if (e.first % step != 0)
        throw std::invalid_argument("undilate_q: q-exponent not a multiple of step");
      out[i].emplace(QZExponents{e.first / step, e.second}, c);
    }
  return QZPolynomial(std::move(out));
}

std::vector<std::tuple<int, int, int, BigInt>> term_list(const QZPolynomial& p) {
  std::vector<std::tuple<int, int, int, BigInt>> out;
  for (int i = 0; i <= p.degree(); ++i)
    for (const auto& [e, c] : p.coeff(i)) out.emplace_back(i, e.first, e.second, c);
  return out;
}

std::optional<QZDifference> first_difference(const QZPolynomial& a, const QZPolynomial& b) {
  int top = std::max(a.degree(), b.degree());
  for (int i = 0; i <= top; ++i) {
    const QZCoeff& ca = a.coeff(i);
    const QZCoeff& cb = b.coeff(i);
    auto ia = ca.begin();
    auto ib = cb.begin();
    while (ia != ca.end() || ib != cb.end()) {
      if (ib == cb.end() || (ia != ca.end() && ia->first < ib->first)) {
        return QZDifference{i, ia->first.first, ia->first.second, ia->second, 0};
      }
      if (ia == ca.end() || ib->first < ia->first) {
        return QZDifference{i, ib->first.first, ib->first.second, 0, ib->second};
      }
      if (ia->second != ib->second) {
        return QZDifference{i, ia->first.first, ia->first.second, ia->second, ib->second};
      }
      ++ia;
      ++ib;
    }
  }
  return std::nullopt;
}

std::string to_string(const QZPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, q, z, c] : term_list(p)) {
    BigInt a = boost::multiprecision::abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool bare = (t == 0 && q == 0 && z == 0);
    if (a != 1 || bare) os << a.str();
    auto var = [&](const char* name, int e) {
      if (e == 0) return;
      os << name;
      if (e >= 2) os << "^" << e;
    };
    var("t", t);
    var("q", q);
    var("z", z);
  }
  return os.str();
}

}  // namespace despoly
