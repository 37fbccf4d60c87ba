#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wreathfock/partition.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace wreathfock;

namespace {

// Cell-by-cell hook recomputation: arm + leg + 1 counted directly.
BigInt hook_oracle(const Partition& p) {
    BigInt h = 1;
    for (int j = 0; j < p.length(); ++j) {
        for (int k = 0; k < p.part(j); ++k) {
            int arm = p.part(j) - k - 1;
            int leg = 0;
            for (int j2 = j + 1; j2 < p.length(); ++j2)
                if (p.part(j2) > k) ++leg;
            h *= arm + leg + 1;
        }
    }
    return h;
}

std::multiset<int> contents_oracle(const Partition& p) {
    std::multiset<int> cs;
    for (int j = 0; j < p.length(); ++j)
        for (int k = 0; k < p.part(j); ++k) cs.insert(k - j);
    return cs;
}

}  // namespace

TEST_CASE("hook products") {
    CHECK(Partition().hook_product() == 1);
    CHECK(Partition({2, 1}).hook_product() == 3);
    CHECK(Partition({2}).hook_product() == 2);
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : partitions_of(n)) CHECK(p.hook_product() == hook_oracle(p));
}

TEST_CASE("contents") {
    CHECK(Partition().contents().empty());
    CHECK(Partition({1}).contents() == std::vector<int>{0});
    {
        auto cs = Partition({2, 1}).contents();
        std::multiset<int> got(cs.begin(), cs.end());
        CHECK(got == std::multiset<int>{-1, 0, 1});
    }
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : partitions_of(n)) {
            auto cs = p.contents();
            CHECK(std::multiset<int>(cs.begin(), cs.end()) == contents_oracle(p));
            CHECK(cs.size() == static_cast<std::size_t>(p.size()));
        }
}

TEST_CASE("partition enumeration order is canonical and duplicate-free") {
    auto ps = partitions_of(3);
    REQUIRE(ps.size() == 3);
    CHECK(ps[0] == Partition({3}));
    CHECK(ps[1] == Partition({2, 1}));
    CHECK(ps[2] == Partition({1, 1, 1}));
    for (int n = 0; n <= 9; ++n) {
        auto all = partitions_of(n);
        CHECK(std::is_sorted(all.begin(), all.end()));
        CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    }
}

TEST_CASE("multipartition enumeration counts match the eta generating function") {
    CHECK(enumerate_multipartitions(0, 3).size() == 1);
    CHECK(enumerate_multipartitions(2, 2).size() == 5);
    CHECK(enumerate_multipartitions(3, 2).size() == 10);
    for (unsigned r = 1; r <= 4; ++r)
        for (int n = 0; n <= 8; ++n) {
            auto all = enumerate_multipartitions(n, r);
            CHECK(BigInt(all.size()) == colored_partition_count(n, r));
            CHECK(std::is_sorted(all.begin(), all.end()));
            CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
            for (const auto& mp : all) CHECK(mp.norm() == n);
        }
}

TEST_CASE("centralizer orders") {
    CHECK(MultiPartition::empty(3).centralizer_order() == 1);
    CHECK(MultiPartition(1, {Partition({1, 1, 1})}).centralizer_order() == 6);
    CHECK(MultiPartition(2, {Partition({1}), Partition({1})}).centralizer_order() == 4);
    // class sizes partition the group: sum |G|/Z_lambda = |G| = r^n n!
    for (unsigned r = 1; r <= 3; ++r)
        for (int n = 0; n <= 4; ++n) {
            BigInt group = int_pow(BigInt(r), static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(n));
            BigInt total = 0;
            for (const auto& mp : enumerate_multipartitions(n, r)) {
                BigInt z = mp.centralizer_order();
                CHECK(group % z == 0);
                total += group / z;
            }
            CHECK(total == group);
        }
}

TEST_CASE("degree and modified type") {
    // identity class has degree 0
    CHECK(MultiPartition(2, {Partition({1, 1, 1}), Partition()}).degree() == 0);
    CHECK(MultiPartition(2, {Partition({2, 1}), Partition({1})}).degree() == 2);
    CHECK(MultiPartition(2, {Partition(), Partition({1})}).degree() == 1);

    auto mod = MultiPartition(2, {Partition({2, 1}), Partition({1})}).modified_type();
    CHECK(mod == MultiPartition(2, {Partition({1}), Partition({1})}));

    for (unsigned r = 1; r <= 3; ++r)
        for (int n = 0; n <= 5; ++n)
            for (const auto& mp : enumerate_multipartitions(n, r)) {
                CHECK(mp.degree() >= 0);
                bool is_identity_type = mp.component(0).size() == n &&
                                        mp.component(0).length() == n;
                CHECK((mp.degree() == 0) == is_identity_type);
                CHECK(mp.modified_type().norm() == mp.degree());
            }
}

TEST_CASE("border strips") {
    // p_2 on the empty shape: s_(2) - s_(1,1)
    auto moves = add_border_strips(Partition(), 2);
    REQUIRE(moves.size() == 2);
    std::map<std::string, int> got;
    for (const auto& m : moves) got[m.shape.to_string()] = m.sign;
    CHECK(got["(2)"] == 1);
    CHECK(got["(1,1)"] == -1);

    // p_3 on (1): s_(4) - s_(2,2) + s_(1,1,1,1)
    got.clear();
    for (const auto& m : add_border_strips(Partition({1}), 3)) got[m.shape.to_string()] = m.sign;
    REQUIRE(got.size() == 3);
    CHECK(got["(4)"] == 1);
    CHECK(got["(2,2)"] == -1);
    CHECK(got["(1,1,1,1)"] == 1);

    // add/remove are inverse, with matching signs
    for (int n = 0; n <= 6; ++n)
        for (const auto& p : partitions_of(n))
            for (int size = 1; size <= 4; ++size) {
                for (const auto& m : add_border_strips(p, size)) {
                    auto back = remove_border_strips(m.shape, size);
                    bool found = false;
                    for (const auto& b : back)
                        if (b.shape == p) {
                            found = true;
                            CHECK(b.sign == m.sign);
                        }
                    CHECK(found);
                }
            }
}

TEST_CASE("invalid partitions are rejected") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({0}), std::invalid_argument);
    CHECK_THROWS_AS(MultiPartition(2, {Partition()}), std::invalid_argument);
}
