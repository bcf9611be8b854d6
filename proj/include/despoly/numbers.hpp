#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace despoly {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline int sign_of(const BigInt& v) { return v.sign(); }
inline int sign_of(const BigRat& v) { return v.sign(); }

inline bool is_integer(const BigRat& v) { return denominator(v) == 1; }

BigInt int_pow(const BigInt& base, int exp);
BigRat rat_pow(const BigRat& base, int exp);

/// Binomial coefficient C(n, k) for n >= 0; zero when k < 0 or k > n.
BigInt binomial(long long n, long long k);

}  // namespace despoly
