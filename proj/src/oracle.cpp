#include "hedgenash/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hedgenash {

namespace {

constexpr double kMassTolerance = 1e-12;
constexpr double kPayoffTolerance = 1e-9;
constexpr double kDedupTolerance = 1e-8;

bool duplicate(const std::vector<OracleEquilibrium>& found, const std::vector<double>& masses) {
    for (const OracleEquilibrium& eq : found) {
        double dist = 0.0;
        for (size_t i = 0; i < masses.size(); ++i) {
            dist = std::max(dist, std::abs(eq.strategy.masses()[i] - masses[i]));
        }
        if (dist <= kDedupTolerance) return true;
    }
    return false;
}

}  // namespace

EquilibriumSet support_enumeration(const SymmetricGame& game, int max_n) {
    const int n = game.size();
    if (n > max_n) {
        throw std::invalid_argument("support_enumeration: n exceeds max_n (" +
                                    std::to_string(max_n) + ")");
    }

    EquilibriumSet out;
    out.game_label = game.label();

    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> support;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) support.push_back(i);
        }
        const int t = static_cast<int>(support.size());

        // Unknowns: X_i for i in the support, then v.
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(t + 1, t + 1);
        Eigen::VectorXd b = Eigen::VectorXd::Zero(t + 1);
        for (int r = 0; r < t; ++r) {
            for (int c = 0; c < t; ++c) m(r, c) = game.at(support[r], support[c]);
            m(r, t) = -1.0;
        }
        for (int c = 0; c < t; ++c) m(t, c) = 1.0;
        b(t) = 1.0;

        const Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
        if (!lu.isInvertible()) {
            ++out.skipped_singular;
            continue;
        }
        const Eigen::VectorXd sol = lu.solve(b);

        bool feasible = true;
        std::vector<double> masses(static_cast<size_t>(n), 0.0);
        for (int r = 0; r < t; ++r) {
            if (sol(r) < -kMassTolerance) {
                feasible = false;
                break;
            }
            masses[static_cast<size_t>(support[r])] = std::max(0.0, sol(r));
        }
        if (!feasible) continue;

        const double v = sol(t);
        const MixedStrategy x(masses);
        const std::vector<double> payoff = payoff_vector(game, x);
        for (int j = 0; j < n && feasible; ++j) {
            if (!(mask & (1u << j)) && payoff[static_cast<size_t>(j)] > v + kPayoffTolerance) {
                feasible = false;
            }
        }
        if (!feasible) continue;

        const double residual = approximation_error(game, x).epsilon;
        if (residual > kPayoffTolerance) continue;
        if (duplicate(out.equilibria, x.masses())) continue;

        out.equilibria.push_back(OracleEquilibrium{x, residual, support});
    }
    return out;
}

bool verify(const SymmetricGame& game, const MixedStrategy& x, double eps) {
    return approximation_error(game, x).epsilon <= eps;
}

}  // namespace hedgenash
