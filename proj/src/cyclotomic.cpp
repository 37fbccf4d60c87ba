#include "wreathfock/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace wreathfock {

unsigned euler_phi(unsigned r) {
    if (r == 0) throw std::invalid_argument("euler_phi: r must be positive");
    unsigned result = r, n = r;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Exact division of integer polynomials, used to peel Phi_d factors off
// x^r - 1. Remainder is asserted zero.
std::vector<BigInt> poly_divide_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    std::vector<BigInt> quot(num.size() - den.size() + 1, BigInt(0));
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        BigInt c = num[k + den.size() - 1] / den.back();
        quot[k] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw std::logic_error("poly_divide_exact: nonzero remainder");
    return quot;
}

std::vector<BigInt> compute_phi_poly(unsigned r, const std::map<unsigned, std::vector<BigInt>>& lower) {
    // x^r - 1 divided by the product of Phi_d over proper divisors d of r.
    std::vector<BigInt> num(r + 1, BigInt(0));
    num[0] = -1;
    num[r] = 1;
    for (unsigned d = 1; d < r; ++d) {
        if (r % d != 0) continue;
        num = poly_divide_exact(std::move(num), lower.at(d));
    }
    return num;
}

}  // namespace

const std::vector<BigInt>& cyclotomic_polynomial(unsigned r) {
    static std::mutex mu;
    static std::map<unsigned, std::vector<BigInt>> table;
    std::lock_guard<std::mutex> lock(mu);
    for (unsigned d = 1; d <= r; ++d) {
        if (table.count(d)) continue;
        if (d == 1) {
            table[1] = {BigInt(-1), BigInt(1)};  // x - 1
        } else {
            table[d] = compute_phi_poly(d, table);
        }
    }
    return table.at(r);
}

Cyclotomic::Cyclotomic(unsigned order, std::vector<Rational> poly) : order_(order) {
    if (order == 0) throw std::invalid_argument("Cyclotomic: order must be positive");
    const auto& phi_poly = cyclotomic_polynomial(order);
    const std::size_t deg = phi_poly.size() - 1;  // = euler_phi(order)
    // Long division by Phi_r (monic), top down.
    for (std::size_t k = poly.size(); k-- > deg;) {
        Rational c = poly[k];
        if (c == 0) continue;
        for (std::size_t j = 0; j < phi_poly.size(); ++j)
            poly[k - deg + j] -= c * Rational(phi_poly[j]);
    }
    poly.resize(deg, Rational(0));
    coeffs_ = std::move(poly);
    demote_if_rational();
}

Cyclotomic Cyclotomic::zeta(unsigned order, unsigned power) {
    std::vector<Rational> poly(power % std::max(order, 1u) + 1, Rational(0));
    poly.back() = 1;
    return Cyclotomic(order, std::move(poly));
}

bool Cyclotomic::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool Cyclotomic::is_rational() const {
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return false;
    return true;
}

Rational Cyclotomic::to_rational() const {
    if (!is_rational()) throw std::domain_error("Cyclotomic::to_rational: value has a zeta part");
    return coeffs_[0];
}

void Cyclotomic::demote_if_rational() {
    if (order_ > 1 && is_rational()) {
        Rational c = coeffs_[0];
        order_ = 1;
        coeffs_.assign(1, c);
    }
}

void Cyclotomic::align(Cyclotomic& a, Cyclotomic& b) {
    if (a.order_ == b.order_) return;
    if (a.order_ == 1) {
        Rational c = a.coeffs_[0];
        a.order_ = b.order_;
        a.coeffs_.assign(euler_phi(b.order_), Rational(0));
        a.coeffs_[0] = c;
    } else if (b.order_ == 1) {
        align(b, a);
    } else {
        throw std::invalid_argument("Cyclotomic: order mismatch (" + std::to_string(a.order_) +
                                    " vs " + std::to_string(b.order_) + ")");
    }
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    Cyclotomic rhs = o;
    align(*this, rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    demote_if_rational();
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    Cyclotomic rhs = o;
    align(*this, rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    demote_if_rational();
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    Cyclotomic rhs = o;
    align(*this, rhs);
    if (order_ == 1) {
        coeffs_[0] *= rhs.coeffs_[0];
        return *this;
    }
    std::vector<Rational> prod(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    *this = Cyclotomic(order_, std::move(prod));
    return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic x = a, y = b;
    if (x.order_ != y.order_) {
        if (x.order_ != 1 && y.order_ != 1) return false;
        Cyclotomic::align(x, y);
    }
    return x.coeffs_ == y.coeffs_;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic::inverse: zero");
    if (order_ == 1) return Cyclotomic(Rational(1) / coeffs_[0]);

    // Extended Euclid in Q[x] against Phi_r: since Phi_r is irreducible,
    // gcd(this, Phi_r) = 1 and the Bezout coefficient of `this` is 1/this.
    std::vector<Rational> r0;
    for (const auto& c : cyclotomic_polynomial(order_)) r0.push_back(Rational(c));
    std::vector<Rational> r1 = coeffs_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};  // coefficients of `this`

    auto is_zero_poly = [](const std::vector<Rational>& p) {
        return std::all_of(p.begin(), p.end(), [](const Rational& c) { return c == 0; });
    };
    while (true) {
        // r0 = q*r1 + rem
        std::vector<Rational> rem = r0;
        std::vector<Rational> q(rem.size() > r1.size() ? rem.size() - r1.size() + 1 : 1, Rational(0));
        while (rem.size() >= r1.size() && !is_zero_poly(rem)) {
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
            if (rem.size() < r1.size()) break;
            Rational c = rem.back() / r1.back();
            std::size_t shift = rem.size() - r1.size();
            q[shift] += c;
            for (std::size_t j = 0; j < r1.size(); ++j) rem[shift + j] -= c * r1[j];
        }
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        // s_next = s0 - q*s1
        std::vector<Rational> s_next(std::max(s0.size(), q.size() + s1.size() - 1), Rational(0));
        for (std::size_t k = 0; k < s0.size(); ++k) s_next[k] = s0[k];
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) s_next[i + j] -= q[i] * s1[j];
        }
        if (rem.empty()) {
            // r1 is the gcd, a nonzero constant multiple of 1.
            Rational lead = r1[0];
            std::vector<Rational> result = s1;
            for (auto& c : result) c /= lead;
            return Cyclotomic(order_, std::move(result));
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s_next);
    }
}

Cyclotomic Cyclotomic::conj() const {
    if (order_ == 1) return *this;
    // zeta^k -> zeta^(k(r-1) mod r)
    std::vector<Rational> image(order_, Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        image[(k * (order_ - 1)) % order_] += coeffs_[k];
    return Cyclotomic(order_, std::move(image));
}

std::string Cyclotomic::to_string() const {
    if (order_ == 1 || is_rational()) return rational_to_string(coeffs_[0]);
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (k == 0) {
            os << rational_to_string(coeffs_[0]);
        } else {
            os << rational_to_string(coeffs_[k]) << "*z" << order_ << "^" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace wreathfock
