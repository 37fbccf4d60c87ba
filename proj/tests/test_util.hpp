#pragma once

#include "wreathfock/cyclotomic.hpp"
#include "wreathfock/rational.hpp"

#include <cstdint>
#include <vector>

namespace wreathfock::testutil {

// Deterministic generator so property tests are reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next() {
        state_ ^= state_ << 13;
        state_ ^= state_ >> 7;
        state_ ^= state_ << 17;
        return state_;
    }

    int int_in(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational rational(int num_range = 9, int den_range = 5) {
        int num = int_in(-num_range, num_range);
        int den = int_in(1, den_range);
        return Rational(num, den);
    }

    Cyclotomic cyclotomic(unsigned order) {
        std::vector<Rational> poly(euler_phi(order));
        for (auto& c : poly) c = rational(5, 3);
        return Cyclotomic(order, std::move(poly));
    }

private:
    std::uint64_t state_;
};

}  // namespace wreathfock::testutil
