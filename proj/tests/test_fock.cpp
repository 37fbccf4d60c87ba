#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wreathfock/characters.hpp"
#include "wreathfock/fock.hpp"
#include "test_util.hpp"

using namespace wreathfock;

namespace {

FockVector<Rational> random_vector(testutil::Rng& rng, unsigned r, int n) {
    FockVector<Rational> v(r);
    for (const auto& mp : enumerate_multipartitions(n, r)) v.add_term(mp, rng.rational());
    if (v.is_zero()) v.add_term(enumerate_multipartitions(n, r).front(), 1);
    return v;
}

std::vector<H1Vector> generator_directions(unsigned r) {
    std::vector<H1Vector> dirs;
    for (unsigned i = 0; i < r; ++i) dirs.push_back(H1Vector::diamond(r, i));
    for (unsigned i = 1; i < r; ++i) dirs.push_back(H1Vector::sigma_class(r, i));
    return dirs;
}

}  // namespace

TEST_CASE("H1 lattice identities") {
    for (unsigned r : {2u, 3u, 4u}) {
        // rt = sum of diamonds, t = rt/r, <t,t> = 1/r
        H1Vector sum = H1Vector::zero(r);
        for (unsigned i = 0; i < r; ++i) sum += H1Vector::diamond(r, i);
        CHECK(H1Vector::rt(r) == sum);
        CHECK(inner(H1Vector::t(r), H1Vector::t(r)) == Rational(1, static_cast<long>(r)));
        // <t, Sigma_i> = 0 and Cartan pairings
        for (unsigned i = 1; i < r; ++i) {
            CHECK(inner(H1Vector::t(r), H1Vector::sigma_class(r, i)) == 0);
            for (unsigned j = 1; j < r; ++j) {
                Rational expect = 0;
                if (i == j) expect = 2;
                else if (i + 1 == j || j + 1 == i) expect = -1;
                CHECK(inner(H1Vector::sigma_class(r, i), H1Vector::sigma_class(r, j)) == expect);
            }
        }
    }
}

TEST_CASE("creation operators, frozen examples") {
    // p_{-1}(diamond_i)|0> = [(1) in color i]
    for (unsigned r : {1u, 2u, 3u}) {
        for (unsigned i = 0; i < r; ++i) {
            auto v = heis_apply(-1, H1Vector::diamond(r, i), FockVector<Rational>::vacuum(r));
            FockVector<Rational> expect =
                FockVector<Rational>::basis(r, add_part(MultiPartition::empty(r), i, 1));
            CHECK(v == expect);
        }
    }
    // p_{-2}(diamond_0)|0> = [(2)] - [(1,1)] at r=1
    auto v = heis_apply(-2, H1Vector::diamond(1, 0), FockVector<Rational>::vacuum(1));
    FockVector<Rational> expect(1);
    expect.add_term(MultiPartition(1, {Partition({2})}), 1);
    expect.add_term(MultiPartition(1, {Partition({1, 1})}), -1);
    CHECK(v == expect);
    // [p_1(d0), p_{-1}(d0)] |0> = |0>
    auto vac = FockVector<Rational>::vacuum(1);
    auto d0 = H1Vector::diamond(1, 0);
    CHECK(heis_apply(1, d0, heis_apply(-1, d0, vac)) == vac);
    CHECK_THROWS_AS(heis_apply(0, d0, vac), std::invalid_argument);
}

TEST_CASE("Heisenberg commutation relations on basis vectors") {
    for (unsigned r : {1u, 2u}) {
        auto dirs = generator_directions(r);
        for (int n = 0; n <= 4; ++n) {
            for (const auto& lambda : enumerate_multipartitions(n, r)) {
                auto v = FockVector<Rational>::basis(r, lambda);
                for (int m : {1, 2}) {
                    for (int k : {1, 2}) {
                        for (const auto& alpha : dirs) {
                            for (const auto& beta : dirs) {
                                // [p_m(alpha), p_{-k}(beta)] = m delta_{mk} <alpha,beta>
                                auto ab = heis_apply(m, alpha, heis_apply(-k, beta, v));
                                auto ba = heis_apply(-k, beta, heis_apply(m, alpha, v));
                                auto expect =
                                    v.scaled_rational(m == k ? Rational(m) * inner(alpha, beta) : Rational(0));
                                CHECK(ab - ba == expect);
                                // same-sign generators commute
                                auto cc = heis_apply(-m, alpha, heis_apply(-k, beta, v));
                                auto dd = heis_apply(-k, beta, heis_apply(-m, alpha, v));
                                CHECK(cc == dd);
                            }
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("charge operators") {
    unsigned r = 3;
    auto vac = FockVector<Rational>::vacuum(r);
    // charge 0: p_0(alpha) = 0
    CHECK(heis_zero(H1Vector::rt(r), vac).is_zero());
    // shifted vacuum picks up <alpha, p>
    Charge dk(r, {0, 1, 0});
    auto shifted = shift(dk, vac);
    CHECK(heis_zero(H1Vector::diamond(r, 1), shifted) == shifted);
    CHECK(heis_zero(H1Vector::diamond(r, 0), shifted).is_zero());
    Charge p(r, {2, -1, 3});
    CHECK(heis_zero(H1Vector::rt(r), shift(p, vac)) == shift(p, vac).scaled_rational(4));
    // S_alpha S_beta = S_{alpha+beta}
    CHECK(shift(dk, shift(p, vac)) == shift(p + dk, vac));
    CHECK(shift(Charge(r), vac) == vac);
}

TEST_CASE("star product is diagonal with eigenvalue r^n h(lambda)") {
    // different classes annihilate
    FockVector<Rational> a = FockVector<Rational>::basis(1, MultiPartition(1, {Partition({2})}));
    FockVector<Rational> b = FockVector<Rational>::basis(1, MultiPartition(1, {Partition({1, 1})}));
    CHECK(star(a, b).is_zero());
    // r=1, lambda=(1): eigenvalue 1
    FockVector<Rational> c = FockVector<Rational>::basis(1, MultiPartition(1, {Partition({1})}));
    CHECK(star(c, c) == c);
    // r=2, lambda=((2), empty): eigenvalue 2^2 * 2 = 8
    FockVector<Rational> d =
        FockVector<Rational>::basis(2, MultiPartition(2, {Partition({2}), Partition()}));
    CHECK(star(d, d) == d.scaled_rational(8));
}

TEST_CASE("pairing is orthonormal on [lambda] and factorizes over colors") {
    for (const auto& lambda : enumerate_multipartitions(3, 2)) {
        for (const auto& mu : enumerate_multipartitions(3, 2)) {
            auto vl = FockVector<Rational>::basis(2, lambda);
            auto vm = FockVector<Rational>::basis(2, mu);
            CHECK(fock_pairing(vl, vm) == Rational(lambda == mu ? 1 : 0));
            // <p_{-lambda}, p_{-mu}> = delta prod_i z_{lambda^i}
            Rational expect = 0;
            if (lambda == mu) {
                expect = 1;
                for (unsigned i = 0; i < 2; ++i) expect *= Rational(lambda.component(i).z_order());
            }
            CHECK(fock_pairing(p_basis(2, lambda), p_basis(2, mu)) == expect);
        }
    }
    // sectors with different charges pair to zero
    auto vac = FockVector<Rational>::vacuum(2);
    CHECK(fock_pairing(shift(Charge(2, {1, 0}), vac), vac) == 0);
}

TEST_CASE("phi sends the distinguished bases to their class-side counterparts") {
    for (unsigned r : {1u, 2u, 3u}) {
        for (int n = 0; n <= 3; ++n) {
            for (const auto& lambda : enumerate_multipartitions(n, r)) {
                // phi([lambda]) = s_lambda by definition; the content is the
                // monomial bases below.
                CHECK(phi(p_basis(r, lambda)) == aR_basis(r, lambda));
                CHECK(phi(pprime_basis(r, lambda)) == a_basis(r, lambda));
                CHECK(phi(qT_basis(r, lambda)) == b_basis(r, lambda));
            }
        }
    }
}

TEST_CASE("phi is an isometry and intertwines the Heisenberg actions") {
    testutil::Rng rng(77);
    // one norm-4 input to pin the larger tables
    {
        auto v = random_vector(rng, 2, 4);
        CHECK(phi(heis_apply(-1, H1Vector::diamond(2, 1), v)) ==
              heis_class_create_gamma(1, 1, phi(v)));
    }
    for (unsigned r : {1u, 2u, 3u}) {
        for (int n = 0; n <= 3; ++n) {
            auto u = random_vector(rng, r, n);
            auto v = random_vector(rng, r, n);
            CHECK(class_inner(phi(u), phi(v)) == Cyclotomic(fock_pairing(u, v)));
            for (int m : {1, 2}) {
                for (unsigned i = 0; i < r; ++i) {
                    // creation
                    CHECK(phi(heis_apply(-m, H1Vector::diamond(r, i), v)) ==
                          heis_class_create_gamma(m, i, phi(v)));
                    // annihilation (compare as zero when the strip removal empties out,
                    // since phi on the empty vector has no degree label)
                    if (n >= m) {
                        auto lowered = heis_apply(m, H1Vector::diamond(r, i), v);
                        auto class_side = heis_class_annihilate_gamma(m, i, phi(v));
                        if (lowered.is_zero())
                            CHECK(class_side.is_zero());
                        else
                            CHECK(phi(lowered) == class_side);
                    }
                }
            }
        }
    }
}

TEST_CASE("phi is a ring isomorphism onto the convolution algebra") {
    for (auto [r, n] : {std::pair{1u, 2}, {2u, 2}}) {
        for (const auto& lambda : enumerate_multipartitions(n, r)) {
            for (const auto& mu : enumerate_multipartitions(n, r)) {
                auto u = FockVector<Rational>::basis(r, lambda);
                auto v = FockVector<Rational>::basis(r, mu);
                auto prod = star(u, v);
                if (prod.is_zero())
                    CHECK(convolve_fast(phi(u), phi(v)).is_zero());
                else
                    CHECK(phi(prod) == convolve_fast(phi(u), phi(v)));
            }
        }
    }
}

TEST_CASE("phi_inverse round trips") {
    testutil::Rng rng(17);
    for (unsigned r : {1u, 2u}) {
        auto v = random_vector(rng, r, 3);
        CHECK(to_rational(phi_inverse(phi(v))) == v);
    }
    // nonzero charge is rejected
    auto shifted = shift(Charge(2, {1, 0}), FockVector<Rational>::vacuum(2));
    CHECK_THROWS_AS(phi(shifted), std::invalid_argument);
}

TEST_CASE("p-prime pairing pattern from the c-basis commutators") {
    // <p'_lambda, p'_mu> = delta_{lambda^i = mu^{(r-i) mod r}} r^{l(lambda)} prod_i z_{lambda^i}
    unsigned r = 3;
    for (const auto& lambda : enumerate_multipartitions(2, r)) {
        for (const auto& mu : enumerate_multipartitions(2, r)) {
            bool match = true;
            for (unsigned i = 0; i < r; ++i)
                if (lambda.component(i) != mu.component((r - i) % r)) match = false;
            Cyclotomic expect(0);
            if (match) {
                Rational scale(int_pow(BigInt(r), static_cast<unsigned>(lambda.length())));
                for (unsigned i = 0; i < r; ++i) scale *= Rational(lambda.component(i).z_order());
                expect = Cyclotomic(scale);
            }
            CHECK(fock_pairing(pprime_basis(r, lambda), pprime_basis(r, mu)) == expect);
        }
    }
}

TEST_CASE("qT image sits in the expected filtration degree") {
    for (unsigned r : {2u, 3u}) {
        for (int n = 0; n <= 3; ++n) {
            for (const auto& lambda : enumerate_multipartitions(n, r)) {
                ClassFunction image = phi(qT_basis(r, lambda));
                int top = 0;
                for (const auto& [mp, c] : image.values) top = std::max(top, mp.degree());
                CHECK(top == lambda.degree());  // cohomological degree 2*top
            }
        }
    }
}

TEST_CASE("half vertex operators") {
    unsigned r = 2;
    std::vector<std::string> vars{"t1", "t2", "t3"};
    std::map<int, std::size_t> t_index{{1, 0}, {2, 1}, {3, 2}};
    auto vac = FockVector<Rational>::vacuum(r);
    auto gm = half_vertex(-1, 0, vars, t_index, vac, 3);

    // coefficient of t_1 is p_{-1}(diamond_0)|0>
    auto p1 = heis_apply(-1, H1Vector::diamond(r, 0), vac);
    for (const auto& [mp, c] : p1.terms()) {
        const auto* series = gm.find_term(mp);
        REQUIRE(series != nullptr);
        CHECK(series->coeff({1, 0, 0}) == c);
    }

    // expansion is sum over color-0 partitions of (t_mu / z_mu) p_{-mu}
    for (const Partition& mu : partitions_of(3)) {
        if (mu.length() > 3) continue;
        MultiPartition colored(2, {mu, Partition()});
        auto pmu = p_basis(r, colored);
        std::vector<int> exps{mu.multiplicity(1), mu.multiplicity(2), mu.multiplicity(3)};
        for (const auto& [mp, c] : pmu.terms()) {
            const auto* series = gm.find_term(mp);
            REQUIRE(series != nullptr);
            CHECK(series->coeff(exps) == c / Rational(mu.z_order()));
        }
    }

    // adjointness: <Gamma_+(t) u, v> = <u, Gamma_-(t) v>
    testutil::Rng rng(3);
    for (int trial = 0; trial < 3; ++trial) {
        auto u = random_vector(rng, r, 3);
        auto v = random_vector(rng, r, 1);
        auto left = half_vertex(1, 0, vars, t_index, u, 3);
        auto right = half_vertex(-1, 0, vars, t_index, v, 3);
        // pair against the plain lifts
        RatMultiSeries lhs(vars, 3), rhs(vars, 3);
        for (const auto& [mp, c] : left.terms()) {
            Rational vc = v.coeff(mp);
            if (vc != 0) lhs += c.scaled(vc);
        }
        for (const auto& [mp, c] : right.terms()) {
            Rational uc = u.coeff(mp);
            if (uc != 0) rhs += c.scaled(uc);
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("vertex operator V_0 and the JM composite") {
    // V_0 fixes the vacuum
    for (unsigned r : {1u, 2u}) {
        auto vac = FockVector<Rational>::vacuum(r);
        auto v0 = vertex_v0(0, vac, 6);
        for (const auto& [mp, c] : v0.terms()) {
            if (mp == MultiPartition::empty(r)) {
                CHECK(c.coeff(0) == 1);
                for (int k = 1; k <= 6; ++k) CHECK(c.coeff(k) == 0);
            } else {
                CHECK(c.is_zero());
            }
        }
    }

    // the composite is diagonal on [lambda] with the jm_spectrum eigenvalue
    for (unsigned r : {1u, 2u}) {
        for (int n = 0; n <= 2; ++n) {
            for (unsigned color = 0; color < r; ++color) {
                auto spectrum = jm_spectrum(r, n, color, 4);
                for (const auto& lambda : enumerate_multipartitions(n, r)) {
                    auto v = FockVector<Rational>::basis(r, lambda);
                    auto image = jm_vertex_composite(color, v, 4);
                    for (const auto& [mp, c] : image.terms()) {
                        if (mp == lambda)
                            CHECK(c == spectrum.at(lambda));
                        else
                            CHECK(c.is_zero());
                    }
                }
            }
        }
    }
}
