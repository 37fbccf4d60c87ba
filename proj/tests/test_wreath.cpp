#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wreathfock/wreath.hpp"
#include "test_util.hpp"

using namespace wreathfock;

namespace {

WreathElement random_element(testutil::Rng& rng, const WreathGroup& G) {
    return G.element(static_cast<std::size_t>(rng.next() % G.size()));
}

}  // namespace

TEST_CASE("group axioms") {
    testutil::Rng rng(7);
    for (unsigned r : {1u, 2u, 3u}) {
        for (int n : {1, 2, 3}) {
            WreathGroup G(r, n);
            CHECK(G.size() == static_cast<std::size_t>(
                                  (int_pow(BigInt(r), static_cast<unsigned>(n)) *
                                   factorial(static_cast<unsigned>(n)))
                                      .convert_to<long>()));
            WreathElement e = wreath_identity(r, n);
            for (int trial = 0; trial < 20; ++trial) {
                WreathElement a = random_element(rng, G);
                WreathElement b = random_element(rng, G);
                WreathElement c = random_element(rng, G);
                CHECK(wreath_mul(wreath_mul(a, b), c) == wreath_mul(a, wreath_mul(b, c)));
                CHECK(wreath_mul(a, e) == a);
                CHECK(wreath_mul(e, a) == a);
                CHECK(wreath_mul(a, wreath_inv(a)) == e);
            }
        }
    }
}

TEST_CASE("element types, frozen examples") {
    // identity of Gamma_3 at r=2
    CHECK(element_type(wreath_identity(2, 3)) ==
          MultiPartition(2, {Partition({1, 1, 1}), Partition()}));

    // ((a,1), (1 2)) has a single 2-cycle with cycle-product a
    WreathElement x{2, {1, 0}, {1, 0}};
    CHECK(element_type(x) == MultiPartition(2, {Partition(), Partition({2})}));

    // ((a,a), id) has two 1-cycles each of color a
    WreathElement y{2, {1, 1}, {0, 1}};
    CHECK(element_type(y) == MultiPartition(2, {Partition(), Partition({1, 1})}));
}

TEST_CASE("type is conjugation invariant") {
    testutil::Rng rng(13);
    for (unsigned r : {1u, 2u, 3u}) {
        for (int n : {2, 3, 4}) {
            WreathGroup G(r, n);
            for (int trial = 0; trial < 40; ++trial) {
                WreathElement x = random_element(rng, G);
                WreathElement h = random_element(rng, G);
                WreathElement conj = wreath_mul(wreath_mul(h, x), wreath_inv(h));
                CHECK(element_type(conj) == element_type(x));
            }
        }
    }
}

TEST_CASE("class sizes match |G|/Z_lambda") {
    for (unsigned r : {1u, 2u, 3u}) {
        for (int n : {1, 2, 3}) {
            WreathGroup G(r, n);
            BigInt group = BigInt(G.size());
            for (std::size_t k = 0; k < G.classes().size(); ++k) {
                BigInt z = G.classes()[k].centralizer_order();
                CHECK(G.class_size(k) * z == group);
            }
        }
    }
}

TEST_CASE("brute-force centralizer count certifies Z_lambda at r=2") {
    WreathGroup G(2, 2);
    MultiPartition target(2, {Partition({1}), Partition({1})});
    std::size_t rep = G.representative(G.class_index(target));
    long count = 0;
    for (std::size_t h = 0; h < G.size(); ++h)
        if (G.mul(h, rep) == G.mul(rep, h)) ++count;
    CHECK(BigInt(count) == target.centralizer_order());
    CHECK(count == 4);
}

TEST_CASE("convolution identity, commutativity, associativity") {
    testutil::Rng rng(31);
    for (auto [r, n] : {std::pair{1u, 3}, {2u, 2}, {3u, 2}}) {
        WreathGroup G(r, n);
        ClassFunction delta = indicator_class_function(
            r, n, element_type(wreath_identity(r, n)));
        auto random_cf = [&] {
            ClassFunction f{r, n, {}};
            for (const auto& mp : G.classes()) f.set(mp, rng.cyclotomic(std::max(r, 2u)));
            return f;
        };
        for (int trial = 0; trial < 4; ++trial) {
            ClassFunction f = random_cf(), g = random_cf(), h = random_cf();
            CHECK(convolve_bruteforce(G, delta, f) == f);
            CHECK(convolve_bruteforce(G, f, g) == convolve_bruteforce(G, g, f));
            CHECK(convolve_bruteforce(G, convolve_bruteforce(G, f, g), h) ==
                  convolve_bruteforce(G, f, convolve_bruteforce(G, g, h)));
        }
    }
}

TEST_CASE("trivial character is idempotent up to |G|") {
    for (auto [r, n] : {std::pair{1u, 3}, {2u, 2}}) {
        WreathGroup G(r, n);
        ClassFunction triv{r, n, {}};
        for (const auto& mp : G.classes()) triv.set(mp, Cyclotomic(1));
        ClassFunction conv = convolve_bruteforce(G, triv, triv);
        CHECK(conv == triv.scaled(Cyclotomic(Rational(static_cast<long>(G.size())))));
    }
}

TEST_CASE("evaluate") {
    ClassFunction zero{2, 2, {}};
    WreathElement x{2, {1, 0}, {1, 0}};
    CHECK(evaluate(zero, x).is_zero());
    ClassFunction f = indicator_class_function(2, 2, element_type(x));
    CHECK(evaluate(f, x) == Cyclotomic(1));
}

TEST_CASE("JM elements commute") {
    for (unsigned r : {1u, 2u}) {
        for (int n : {2, 3, 4}) {
            WreathGroup G(r, n);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    auto mi = jm_element(G, i), mj = jm_element(G, j);
                    CHECK(group_algebra_mul(G, mi, mj) == group_algebra_mul(G, mj, mi));
                }
        }
    }
}

TEST_CASE("JM class functions, frozen examples") {
    // n = 1: M_1 = 0, so Xi_1^m(alpha) = 0 for m >= 1
    {
        WreathGroup G(2, 1);
        std::vector<Cyclotomic> alpha{Cyclotomic(1), Cyclotomic(1)};
        for (int m = 1; m <= 3; ++m) CHECK(jm_class_function(G, m, alpha).is_zero());
    }
    // r=1, n=2, m=0, alpha trivial: value 2 on type (1,1), 0 on type (2)
    {
        WreathGroup G(1, 2);
        std::vector<Cyclotomic> alpha{Cyclotomic(1)};
        ClassFunction xi = jm_class_function(G, 0, alpha);
        CHECK(xi.value(MultiPartition(1, {Partition({1, 1})})) == Cyclotomic(2));
        CHECK(xi.value(MultiPartition(1, {Partition({2})})).is_zero());
    }
    // r=1, n=2, m=1, alpha trivial: supported on the transposition class
    {
        WreathGroup G(1, 2);
        std::vector<Cyclotomic> alpha{Cyclotomic(1)};
        ClassFunction xi = jm_class_function(G, 1, alpha);
        CHECK(xi.value(MultiPartition(1, {Partition({1, 1})})).is_zero());
        CHECK(xi.value(MultiPartition(1, {Partition({2})})) == Cyclotomic(1));
    }
}

TEST_CASE("degree subadditivity over the whole group") {
    for (int n : {2, 3}) {
        WreathGroup G(2, n);
        std::vector<int> deg(G.size());
        for (std::size_t e = 0; e < G.size(); ++e)
            deg[e] = G.classes()[G.type_index(e)].degree();
        for (std::size_t x = 0; x < G.size(); ++x)
            for (std::size_t y = 0; y < G.size(); ++y)
                CHECK(deg[G.mul(x, y)] <= deg[x] + deg[y]);
    }
}

TEST_CASE("size guard") {
    CHECK_THROWS_AS(WreathGroup(3, 12), guard_error);
    CHECK_THROWS_AS(WreathGroup(2, 9), guard_error);
}
