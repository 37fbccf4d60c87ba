#include "wreathfock/rational.hpp"

namespace wreathfock {

BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

BigInt int_pow(const BigInt& base, unsigned exp) {
    BigInt acc = 1, b = base;
    while (exp) {
        if (exp & 1u) acc *= b;
        b *= b;
        exp >>= 1u;
    }
    return acc;
}

Rational rat_pow(const Rational& base, int exp) {
    if (exp == 0) return Rational(1);
    if (exp < 0) {
        if (base == 0) throw std::domain_error("rat_pow: zero to negative power");
        return 1 / rat_pow(base, -exp);
    }
    Rational acc = 1, b = base;
    unsigned e = static_cast<unsigned>(exp);
    while (e) {
        if (e & 1u) acc *= b;
        b *= b;
        e >>= 1u;
    }
    return acc;
}

std::string rational_to_string(const Rational& q) {
    BigInt num = numerator(q), den = denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rational_from_string: empty string");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("rational_from_string: cannot parse '" + s + "'");
    }
}

}  // namespace wreathfock
