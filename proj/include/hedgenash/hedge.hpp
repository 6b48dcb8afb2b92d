#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hedgenash/game.hpp"

namespace hedgenash {

// One application of the exponential-weights map at learning rate alpha:
//
//   T_i(X) = X(i) * exp(alpha*(CX)_i) / sum_j X(j) * exp(alpha*(CX)_j)
//
// Requires an interior X and alpha > 0. Exponentials are max-shifted, so the
// map cannot overflow for any alpha up to 50.
MixedStrategy hedge_step(const SymmetricGame& game, const MixedStrategy& x, double alpha);

// Trajectory state of the fixed-rate dynamics. The canonical state is the
// cumulative score vector S^k(i) = sum_{t<k} (CX^t)_i; the iterate
//
//   X^k(i) = x0(i)*exp(alpha*S^k(i)) / sum_j x0(j)*exp(alpha*S^k(j))
//
// is a derived view, recomputed from the scores each step via a max-shifted
// softmax. Probability masses decay like exp(-alpha*k*gap) and underflow
// doubles near k ~ 700/(alpha*gap); log_iterate() stays exact long after
// that, so every logarithmic quantity must be read from it rather than from
// log of a stored mass. Scores grow by at most 1 per step, keeping their
// magnitude far below the 2^53 integer limit for any budget up to K = 2^40.
class HedgeState {
public:
    // Uniform start.
    HedgeState(const SymmetricGame& game, double alpha);
    // Custom interior start.
    HedgeState(const SymmetricGame& game, double alpha, const MixedStrategy& start);

    void advance(const SymmetricGame& game);

    std::int64_t iteration() const { return k_; }
    double alpha() const { return alpha_; }
    int size() const { return static_cast<int>(scores_.size()); }

    const std::vector<double>& scores() const { return scores_; }
    const std::vector<double>& iterate_masses() const { return iterate_; }
    const std::vector<double>& average_masses() const { return average_; }
    MixedStrategy iterate() const { return MixedStrategy(iterate_); }
    MixedStrategy average() const { return MixedStrategy(average_); }

    // ln X^k(j), evaluated in the log domain.
    const std::vector<double>& log_iterate() const { return log_iterate_; }

    // Running sums sum_{t<=k} X^t(j) * ln X^t(j), one per pure strategy.
    const std::vector<double>& entropy_sums() const { return entropy_sums_; }

    // sum_{t<k} X^t . CX^t, the cumulative self-play payoff.
    double played_payoff_sum() const { return played_payoff_sum_; }

    bool uniform_start() const { return uniform_start_; }
    const std::vector<double>& start_masses() const { return start_; }

private:
    void init(const SymmetricGame& game, double alpha, const MixedStrategy& start, bool uniform);
    void refresh_iterate();

    std::int64_t k_ = 0;
    double alpha_ = 0.0;
    std::vector<double> start_;
    std::vector<double> log_start_;
    std::vector<double> scores_;
    std::vector<double> iterate_;
    std::vector<double> log_iterate_;
    std::vector<double> average_;
    std::vector<double> entropy_sums_;
    double played_payoff_sum_ = 0.0;
    bool uniform_start_ = true;
};

// Observation row emitted along a trajectory.
//   eps_iterate   approximation error of X^k
//   eps_average   approximation error of the running average of X^0..X^k
//   bound_rhs     averaged-error bound evaluated at this k
//   regret_avg    max_i (1/(k+1)) sum_{t<=k} (E_i - X^t).CX^t
struct TrajectoryRecord {
    std::int64_t k;
    double eps_iterate;
    double eps_average;
    double bound_rhs;
    double regret_avg;
};

// Runs K advances from the start (uniform unless given) and records at every
// multiple of observe_every plus always at k = K. observe_every <= 0 selects
// the default stride max(1, K/1000).
std::vector<TrajectoryRecord> run_trajectory(const SymmetricGame& game, double alpha,
                                             std::int64_t iterations,
                                             std::int64_t observe_every = 0,
                                             const std::optional<MixedStrategy>& start = {});

std::int64_t default_observe_stride(std::int64_t iterations);

}  // namespace hedgenash
