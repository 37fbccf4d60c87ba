#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wreathfock {

// Exact arithmetic scalars. All downstream modules assume these never
// round: cpp_rational keeps numerator/denominator reduced with the
// denominator positive.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    return Rational(num, den);
}

BigInt factorial(unsigned n);
BigInt int_pow(const BigInt& base, unsigned exp);
Rational rat_pow(const Rational& base, int exp);

// Canonical text form: "p" when the value is integral, "p/q" otherwise.
std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

}  // namespace wreathfock
