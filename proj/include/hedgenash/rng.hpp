#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "hedgenash/game.hpp"

namespace hedgenash {

// Deterministic random source shared by the generators and the sampling
// harness. The engine is std::mt19937_64, whose output sequence is fixed by
// the C++ standard, and doubles are produced by an explicit 53-bit mapping
// rather than std::uniform_real_distribution, so streams are bit-identical
// across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1]; safe to feed into log().
    double uniform01_open() { return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

// Uniform (Dirichlet(1,...,1)) sample from the simplex interior.
inline MixedStrategy random_interior_strategy(int n, Rng& rng) {
    std::vector<double> w(static_cast<size_t>(n));
    double sum = 0.0;
    for (double& v : w) {
        v = -std::log(rng.uniform01_open());
        sum += v;
    }
    for (double& v : w) v /= sum;
    return MixedStrategy(std::move(w));
}

}  // namespace hedgenash
