#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "starlock/matrix.hpp"
#include "starlock/ratio.hpp"

namespace starlock {

// Deterministic seeded source of small rational values. mt19937_64 has a
// fixed algorithm, so sequences are reproducible across platforms; raw
// outputs are reduced by modulo instead of going through distributions
// (which the standard leaves unspecified).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    long next_int(long lo, long hi);  // inclusive range

    // Nonzero rational with |num| <= height, 1 <= den <= height.
    Ratio next_nonzero_ratio(long height = 5);
    Ratio next_ratio(long height = 5);  // may be zero

    std::vector<Ratio> next_vector(int n, long height = 5);
    RatMatrix next_invertible(int n, long height = 3);

private:
    std::mt19937_64 gen_;
};

}  // namespace starlock
