#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "hedgenash/game.hpp"

namespace hedgenash {

// Reproducible game families.
//
//   rps                cyclic game on odd n: 0.5 on the diagonal, each pure
//                      strategy beats the (n-1)/2 strategies before it
//   random_uniform     i.i.d. entries in [0, 1]
//   doubly_symmetric   (M + M^T)/2 rescaled to [0, 1]; equals its transpose
//   symmetric_zero_sum 0.5 + (M - M^T)/2; self-play payoff is 0.5 for every
//                      strategy, so the average payoff drops out of the
//                      approximation error
//   coordination       identity matrix
enum class Family { rps, random_uniform, doubly_symmetric, symmetric_zero_sum, coordination };

Family family_from_string(std::string_view name);
const char* to_string(Family family);

struct GeneratorSpec {
    Family family;
    int n;
    std::uint64_t seed = 0;
};

// Deterministic: identical specs produce bit-identical games on every
// platform (see Rng for the pinned random source).
SymmetricGame generate(const GeneratorSpec& spec);

}  // namespace hedgenash
