#pragma once

#include "wreathfock/rational.hpp"

#include <string>
#include <vector>

namespace wreathfock {

// Element of the r-th cyclotomic field Q(zeta_r), stored reduced modulo the
// r-th cyclotomic polynomial Phi_r, so its coefficient vector always has
// length phi(r). Order 1 is plain Q (zeta = 1). Reduction modulo Phi_r
// rather than x^r - 1 matters: identities like 1 + zeta^2 = 0 at r = 4 must
// hold as exact equalities of coefficient vectors.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}
    explicit Cyclotomic(const Rational& q) : order_(1), coeffs_(1, q) {}
    Cyclotomic(int num) : order_(1), coeffs_(1, Rational(num)) {}

    // Reduces an arbitrary polynomial in zeta_r modulo Phi_r.
    Cyclotomic(unsigned order, std::vector<Rational> poly);

    static Cyclotomic zeta(unsigned order, unsigned power = 1);

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    // Throws if the value has a nonzero zeta-part.
    Rational to_rational() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    Cyclotomic inverse() const;
    // Field automorphism zeta -> zeta^(r-1), i.e. complex conjugation.
    Cyclotomic conj() const;

    // Canonical string, e.g. "1/2+3*z5^2" (zeta_r printed as "z{r}").
    std::string to_string() const;

private:
    // Rebases to a common order for mixed-order arithmetic; only promotion
    // from order 1 (rational) is supported, anything else throws.
    static void align(Cyclotomic& a, Cyclotomic& b);
    void demote_if_rational();

    unsigned order_;
    std::vector<Rational> coeffs_;  // coefficients of 1, zeta, ..., zeta^(phi(r)-1)
};

unsigned euler_phi(unsigned r);

// Integer coefficient vector of Phi_r, lowest degree first.
const std::vector<BigInt>& cyclotomic_polynomial(unsigned r);

}  // namespace wreathfock
