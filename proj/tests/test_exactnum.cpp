#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wreathfock/cyclotomic.hpp"
#include "wreathfock/rational.hpp"
#include "wreathfock/series.hpp"
#include "test_util.hpp"

#include <vector>

using namespace wreathfock;

namespace {

// Independent reduction oracle: multiply the coefficient vectors as plain
// polynomials, then long-divide by Phi_r computed from scratch here
// (product formula over primitive roots is unavailable exactly, so divide
// x^r - 1 by the compositum of smaller-degree factors found by trial
// division against x^d - 1).
std::vector<Rational> oracle_reduce(unsigned r, std::vector<Rational> poly) {
    // Build Phi_r by dividing x^r-1 by gcd-style removal of x^d-1 factors.
    auto divide = [](std::vector<Rational> num, const std::vector<Rational>& den) {
        std::vector<Rational> quot(num.size() - den.size() + 1, Rational(0));
        for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
            Rational c = num[static_cast<std::size_t>(k) + den.size() - 1] / den.back();
            quot[static_cast<std::size_t>(k)] = c;
            for (std::size_t j = 0; j < den.size(); ++j)
                num[static_cast<std::size_t>(k) + j] -= c * den[j];
        }
        return std::pair(quot, num);
    };
    std::vector<std::vector<Rational>> phis(r + 1);
    for (unsigned d = 1; d <= r; ++d) {
        std::vector<Rational> xd(d + 1, Rational(0));
        xd[0] = -1;
        xd[d] = 1;
        for (unsigned e = 1; e < d; ++e) {
            if (d % e) continue;
            xd = divide(xd, phis[e]).first;
        }
        phis[d] = xd;
    }
    const auto& phi = phis[r];
    if (poly.size() < phi.size()) poly.resize(phi.size(), Rational(0));
    auto rem = divide(poly, phi).second;
    rem.resize(phi.size() - 1, Rational(0));
    return rem;
}

Cyclotomic from_poly(unsigned r, std::vector<Rational> poly) {
    return Cyclotomic(r, std::move(poly));
}

}  // namespace

TEST_CASE("cyclotomic multiplication, frozen examples") {
    // r=4: zeta^2 = -1
    Cyclotomic z4 = Cyclotomic::zeta(4);
    CHECK(z4 * z4 == Cyclotomic(-1));

    // r=3: zeta * zeta^2 = 1
    Cyclotomic z3 = Cyclotomic::zeta(3);
    CHECK(z3 * Cyclotomic::zeta(3, 2) == Cyclotomic(1));

    // r=5: (1+zeta)(1+zeta^4) = 2 + zeta + zeta^4
    Cyclotomic a = Cyclotomic(1) + Cyclotomic::zeta(5);
    Cyclotomic b = Cyclotomic(1) + Cyclotomic::zeta(5, 4);
    Cyclotomic expected = Cyclotomic(2) + Cyclotomic::zeta(5) + Cyclotomic::zeta(5, 4);
    CHECK(a * b == expected);
}

TEST_CASE("cyclotomic multiplication agrees with polynomial-division oracle") {
    testutil::Rng rng(11);
    for (unsigned r = 2; r <= 8; ++r) {
        for (int trial = 0; trial < 20; ++trial) {
            Cyclotomic a = rng.cyclotomic(r);
            Cyclotomic b = rng.cyclotomic(r);
            std::vector<Rational> pa = a.coeffs(), pb = b.coeffs();
            pa.resize(euler_phi(r), Rational(0));
            pb.resize(euler_phi(r), Rational(0));
            std::vector<Rational> prod(pa.size() + pb.size() - 1, Rational(0));
            for (std::size_t i = 0; i < pa.size(); ++i)
                for (std::size_t j = 0; j < pb.size(); ++j) prod[i + j] += pa[i] * pb[j];
            Cyclotomic got = a * b;
            // align handles possible demotion of got to order 1
            CHECK(got == from_poly(r, oracle_reduce(r, prod)));
        }
    }
}

TEST_CASE("zeta^r = 1 and Phi_r(zeta) = 0 after reduction, r <= 8") {
    for (unsigned r = 1; r <= 8; ++r) {
        Cyclotomic z = Cyclotomic::zeta(r);
        Cyclotomic p = Cyclotomic(1);
        for (unsigned k = 0; k < r; ++k) p *= z;
        CHECK(p == Cyclotomic(1));
        const auto& phi = cyclotomic_polynomial(r);
        Cyclotomic acc = Cyclotomic(0);
        Cyclotomic zk = Cyclotomic(1);
        for (std::size_t k = 0; k < phi.size(); ++k) {
            acc += zk.is_zero() ? Cyclotomic(0) : Cyclotomic(Rational(phi[k])) * zk;
            zk *= z;
        }
        CHECK(acc.is_zero());
    }
}

TEST_CASE("cyclotomic field axioms on randomized triples") {
    testutil::Rng rng(23);
    for (unsigned r : {2u, 3u, 4u, 5u, 6u, 7u, 8u}) {
        for (int trial = 0; trial < 12; ++trial) {
            Cyclotomic a = rng.cyclotomic(r), b = rng.cyclotomic(r), c = rng.cyclotomic(r);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(1));
        }
    }
}

TEST_CASE("conjugation") {
    CHECK(Cyclotomic(Rational(7, 3)).conj() == Cyclotomic(Rational(7, 3)));
    CHECK(Cyclotomic::zeta(4).conj() == -Cyclotomic::zeta(4));
    CHECK((Cyclotomic(1) + Cyclotomic::zeta(3)).conj() == Cyclotomic(1) + Cyclotomic::zeta(3, 2));

    // involutive ring automorphism
    testutil::Rng rng(5);
    for (unsigned r : {3u, 4u, 5u, 8u}) {
        for (int trial = 0; trial < 10; ++trial) {
            Cyclotomic a = rng.cyclotomic(r), b = rng.cyclotomic(r);
            CHECK(a.conj().conj() == a);
            CHECK((a * b).conj() == a.conj() * b.conj());
            CHECK((a + b).conj() == a.conj() + b.conj());
        }
    }
}

TEST_CASE("cyclotomic order mismatch is rejected") {
    Cyclotomic a = Cyclotomic::zeta(3), b = Cyclotomic::zeta(4);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK(a * Cyclotomic(Rational(2)) == Cyclotomic::zeta(3) + Cyclotomic::zeta(3));
}

TEST_CASE("series inversion, frozen examples") {
    // f = z -> z^{-1}
    auto z = RatSeries::monomial("z", 1, 1, 10);
    auto zi = z.inverse();
    CHECK(zi.coeff(-1) == 1);
    CHECK(zi.coeff(0) == 0);

    // 1/sigma(z) = z^{-1} - z/24 + 7 z^3/5760 - ...
    auto sigma = RatSeries::sigma("z", 1, 12);
    auto si = sigma.inverse();
    CHECK(si.coeff(-1) == 1);
    CHECK(si.coeff(0) == 0);
    CHECK(si.coeff(1) == Rational(-1, 24));
    CHECK(si.coeff(2) == 0);
    CHECK(si.coeff(3) == Rational(7, 5760));
    CHECK((si * sigma).coeff(0) == 1);
    CHECK((si * sigma).coeff(5) == 0);

    // 1/(1 - e^{-z}) = z^{-1} + 1/2 + z/12 - ...
    auto f = RatSeries::monomial("z", 1, 0, 12) - RatSeries::exp_linear("z", -1, 12);
    auto fi = f.inverse();
    CHECK(fi.coeff(-1) == 1);
    CHECK(fi.coeff(0) == Rational(1, 2));
    CHECK(fi.coeff(1) == Rational(1, 12));
}

TEST_CASE("series inversion multiplies back to 1 for random invertible series") {
    testutil::Rng rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        int val = rng.int_in(-2, 2);
        RatSeries f("z", val, val + 9);
        for (int e = val; e <= f.trunc(); ++e) f.set_coeff(e, rng.rational());
        if (!f.valuation()) continue;
        auto g = f.inverse();
        auto prod = f * g;
        for (int e = prod.min_exp(); e <= prod.trunc(); ++e)
            CHECK(prod.coeff(e) == (e == 0 ? Rational(1) : Rational(0)));
    }
}

TEST_CASE("series inversion rejects the zero series") {
    CHECK_THROWS_AS(RatSeries::zero("z", 6).inverse(), std::domain_error);
}

TEST_CASE("series exponential") {
    auto zero = RatSeries::zero("z", 8);
    CHECK(zero.exp().coeff(0) == 1);
    CHECK(zero.exp().coeff(3) == 0);

    auto z = RatSeries::monomial("z", 1, 1, 8);
    auto ez = z.exp();
    for (int k = 0; k <= 8; ++k) CHECK(ez.coeff(k) == Rational(1) / factorial(static_cast<unsigned>(k)));

    // exp(z + z^2) = 1 + z + 3/2 z^2 + ... (multiply-out oracle to order 2)
    auto f = z + RatSeries::monomial("z", 1, 2, 8);
    auto ef = f.exp();
    CHECK(ef.coeff(0) == 1);
    CHECK(ef.coeff(1) == 1);
    CHECK(ef.coeff(2) == Rational(3, 2));

    CHECK_THROWS_AS(RatSeries::monomial("z", 1, 0, 5).exp(), std::domain_error);
    CHECK_THROWS_AS(RatSeries::monomial("z", 1, -1, 5).exp(), std::domain_error);
}

TEST_CASE("exp_linear multiplies like exponents add") {
    auto a = RatSeries::exp_linear("z", Rational(3, 2), 9);
    auto b = RatSeries::exp_linear("z", Rational(-1, 2), 9);
    CHECK(a * b == RatSeries::exp_linear("z", 1, 9));
}

TEST_CASE("series over cyclotomic scalars") {
    using CycSeries = LaurentSeries<Cyclotomic>;
    auto z4 = Cyclotomic::zeta(4);
    auto f = CycSeries::monomial("q", z4, 1, 6);
    auto g = f * f;
    CHECK(g.coeff(2) == Cyclotomic(-1));
}

TEST_CASE("truncation window propagation") {
    // knowing sigma to order 12 gives its inverse only to order 10
    auto sigma = RatSeries::sigma("z", 1, 12);
    CHECK(sigma.inverse().trunc() == 10);
    CHECK_THROWS_AS(sigma.inverse().coeff(11), std::domain_error);
}

TEST_CASE("multiseries arithmetic and exp") {
    std::vector<std::string> vars{"x", "y"};
    auto x = RatMultiSeries::exp_linear_var(vars, 0, 1, 6);
    auto y = RatMultiSeries::exp_linear_var(vars, 1, 1, 6);
    // e^x e^y == e^{x+y}
    RatMultiSeries lin(vars, 6);
    lin.add_term({1, 0}, 1);
    lin.add_term({0, 1}, 1);
    CHECK(x * y == lin.exp());

    // derivative of e^{x+y} w.r.t. x is itself (to reduced order)
    auto e = lin.exp();
    CHECK(e.derivative(0) == e.truncated(5));

    // variable scaling multiplies coefficients by powers
    auto sx = e.scaled_var(0, 2);
    CHECK(sx.coeff({2, 1}) == Rational(4, 2));  // 2^2 * (1/2!) * (1/1!)

    CHECK_THROWS_AS(RatMultiSeries::constant(vars, 1, 4).exp(), std::domain_error);
}
