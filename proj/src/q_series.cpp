#include <despoly/q_series.hpp>

#include <sstream>
#include <stdexcept>

#include <despoly/errors.hpp>

namespace despoly {

namespace {

// 1 - q^i
IntPolynomial one_minus_q_pow(long long i) {
  std::vector<BigInt> c(i + 1);
  c[0] = 1;
  c[i] = -1;
  return IntPolynomial(std::move(c));
}

}  // namespace

IntPolynomial q_binomial(long long n, long long k) {
  if (k == 0) return n >= -1 ? IntPolynomial{1} : IntPolynomial{};
  if (k < 0 || n < k) return {};
  IntPolynomial num{1};
  for (long long i = n - k + 1; i <= n; ++i) num = num * one_minus_q_pow(i);
  for (long long i = 1; i <= k; ++i) num = divexact(num, one_minus_q_pow(i));
  return num;
}

IntPolynomial q_integer(long long n) {
  if (n <= 0) return {};
  return IntPolynomial(std::vector<BigInt>(n, 1));
}

QZPolynomial q_pochhammer_t(int n, int q_step) {
  if (n < 0) throw std::invalid_argument("q_pochhammer_t: n must be >= 0");
  if (q_step < 1) throw std::invalid_argument("q_pochhammer_t: q_step must be >= 1");
  QZPolynomial out = QZPolynomial::from_int_poly(IntPolynomial{1});
  for (int i = 0; i < n; ++i) {
    std::vector<QZCoeff> factor(2);
    factor[0].emplace(QZExponents{0, 0}, 1);
    factor[1].emplace(QZExponents{i * q_step, 0}, -1);
    out = out * QZPolynomial(std::move(factor));
  }
  return out;
}

IntPolynomial truncated_series_numerator(const std::vector<BigInt>& f_values, int pole_order,
                                         int degree_cap) {
  if (pole_order < 1) throw std::invalid_argument("truncated_series_numerator: pole_order < 1");
  if (degree_cap < 0) throw std::invalid_argument("truncated_series_numerator: negative cap");
  if (static_cast<int>(f_values.size()) < degree_cap + 2)
    throw std::invalid_argument("truncated_series_numerator: need at least one guard value");
  const int top = static_cast<int>(f_values.size()) - 1;
  std::vector<BigInt> c(degree_cap + 1);
  for (int i = 0; i <= top; ++i) {
    BigInt v = 0;
    for (int j = 0; j <= std::min<int>(i, pole_order); ++j) {
      BigInt term = binomial(pole_order, j) * f_values[i - j];
      v += (j % 2 == 0) ? term : -term;
    }
    if (i <= degree_cap) {
      c[i] = std::move(v);
    } else if (v != 0) {
      std::ostringstream os;
      os << "truncated_series_numerator: guard coefficient at degree " << i << " is " << v
         << " (expected 0)";
      throw GuardCheckFailed(os.str());
    }
  }
  return IntPolynomial(std::move(c));
}

QZPolynomial truncated_series_numerator_qz(const std::vector<QZCoeff>& f_values,
                                           const QZPolynomial& denominator, int degree_cap) {
  if (degree_cap < 0) throw std::invalid_argument("truncated_series_numerator_qz: negative cap");
  if (static_cast<int>(f_values.size()) < degree_cap + 2)
    throw std::invalid_argument("truncated_series_numerator_qz: need at least one guard value");
  const int top = static_cast<int>(f_values.size()) - 1;
  std::vector<QZCoeff> c(degree_cap + 1);
  for (int i = 0; i <= top; ++i) {
    QZCoeff v;
    for (int j = 0; j <= std::min(i, denominator.degree()); ++j)
      qz_add_inplace(v, qz_mul(denominator.coeff(j), f_values[i - j]));
    if (i <= degree_cap) {
      c[i] = std::move(v);
    } else if (!v.empty()) {
      std::ostringstream os;
      os << "truncated_series_numerator_qz: guard coefficient at degree " << i << " is nonzero";
      throw GuardCheckFailed(os.str());
    }
  }
  return QZPolynomial(std::move(c));
}

std::vector<BigInt> expand_rational_series(const IntPolynomial& numerator, int pole_order,
                                           int count) {
  if (pole_order < 0) throw std::invalid_argument("expand_rational_series: negative pole order");
  std::vector<BigInt> out(count);
  for (int k = 0; k < count; ++k) {
    BigInt v = 0;
    for (int i = 0; i <= std::min(k, numerator.degree()); ++i)
      v += numerator.coeff(i) * binomial(pole_order - 1 + k - i, pole_order - 1);
    out[k] = std::move(v);
  }
  return out;
}

std::vector<QZCoeff> expand_rational_series_qz(const QZPolynomial& numerator,
                                               const QZPolynomial& denominator, int count) {
  QZCoeff one{{QZExponents{0, 0}, BigInt(1)}};
  if (denominator.coeff(0) != one)
    throw std::invalid_argument("expand_rational_series_qz: denominator constant term must be 1");
  std::vector<QZCoeff> out(count);
  for (int k = 0; k < count; ++k) {
    QZCoeff v = numerator.coeff(k);
    for (int j = 1; j <= std::min(k, denominator.degree()); ++j)
      qz_sub_inplace(v, qz_mul(denominator.coeff(j), out[k - j]));
    out[k] = std::move(v);
  }
  return out;
}

}  // namespace despoly
