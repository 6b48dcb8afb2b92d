#pragma once

#include <string>
#include <vector>

#include "hedgenash/game.hpp"

namespace hedgenash {

struct OracleEquilibrium {
    MixedStrategy strategy;
    double residual;            // approximation error, <= 1e-9 by construction
    std::vector<int> support;   // ascending indices
};

struct EquilibriumSet {
    std::vector<OracleEquilibrium> equilibria;
    std::string game_label;
    int skipped_singular = 0;   // candidate supports whose system was singular
};

// Exact ground truth for small games: for every nonempty support T solves
//   (CX)_i = v for i in T,  sum_{i in T} X_i = 1,  X_j = 0 off T,
// accepts solutions with X >= -1e-12 (clamped) whose off-support payoffs
// satisfy (CX)_j <= v + 1e-9, and deduplicates at L-infinity distance 1e-8.
// Supports are visited in ascending bitmask order, so output order is
// deterministic. Throws when n exceeds max_n.
EquilibriumSet support_enumeration(const SymmetricGame& game, int max_n = 12);

// True iff the approximation error of x is at most eps.
bool verify(const SymmetricGame& game, const MixedStrategy& x, double eps);

}  // namespace hedgenash
