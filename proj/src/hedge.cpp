#include "hedgenash/hedge.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hedgenash/schedule.hpp"

namespace hedgenash {

namespace {

double log_sum_exp(const std::vector<double>& v) {
    const double m = *std::max_element(v.begin(), v.end());
    double sum = 0.0;
    for (double x : v) sum += std::exp(x - m);
    return m + std::log(sum);
}

}  // namespace

MixedStrategy hedge_step(const SymmetricGame& game, const MixedStrategy& x, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("hedge_step: alpha must be positive");
    if (x.size() != game.size()) throw std::invalid_argument("hedge_step: dimension mismatch");
    if (!x.interior()) throw std::invalid_argument("hedge_step: strategy must be interior");

    const std::vector<double> payoff = payoff_vector(game, x);
    const int n = game.size();
    std::vector<double> logits(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        logits[static_cast<size_t>(i)] = std::log(x[i]) + alpha * payoff[static_cast<size_t>(i)];
    }
    const double lse = log_sum_exp(logits);
    std::vector<double> next(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) next[static_cast<size_t>(i)] = std::exp(logits[static_cast<size_t>(i)] - lse);
    return MixedStrategy(std::move(next));
}

HedgeState::HedgeState(const SymmetricGame& game, double alpha) {
    init(game, alpha, MixedStrategy::uniform(game.size()), true);
}

HedgeState::HedgeState(const SymmetricGame& game, double alpha, const MixedStrategy& start) {
    init(game, alpha, start, false);
}

void HedgeState::init(const SymmetricGame& game, double alpha, const MixedStrategy& start,
                      bool uniform) {
    if (!(alpha > 0.0)) throw std::invalid_argument("HedgeState: alpha must be positive");
    if (start.size() != game.size()) throw std::invalid_argument("HedgeState: dimension mismatch");
    if (!start.interior()) throw std::invalid_argument("HedgeState: start must be interior");
    alpha_ = alpha;
    uniform_start_ = uniform;
    const size_t n = static_cast<size_t>(game.size());
    start_ = start.masses();
    log_start_.resize(n);
    for (size_t i = 0; i < n; ++i) log_start_[i] = std::log(start_[i]);
    scores_.assign(n, 0.0);
    iterate_ = start_;
    log_iterate_ = log_start_;
    average_ = start_;
    entropy_sums_.resize(n);
    for (size_t i = 0; i < n; ++i) entropy_sums_[i] = iterate_[i] * log_iterate_[i];
}

void HedgeState::refresh_iterate() {
    const size_t n = scores_.size();
    std::vector<double> logits(n);
    for (size_t i = 0; i < n; ++i) logits[i] = log_start_[i] + alpha_ * scores_[i];
    const double lse = log_sum_exp(logits);
    for (size_t i = 0; i < n; ++i) {
        log_iterate_[i] = logits[i] - lse;
        iterate_[i] = std::exp(log_iterate_[i]);
    }
}

void HedgeState::advance(const SymmetricGame& game) {
    if (static_cast<size_t>(game.size()) != scores_.size()) {
        throw std::invalid_argument("HedgeState::advance: dimension mismatch");
    }
    const MixedStrategy current(iterate_);
    const std::vector<double> payoff = payoff_vector(game, current);
    const size_t n = scores_.size();

    double self_payoff = 0.0;
    for (size_t i = 0; i < n; ++i) self_payoff += iterate_[i] * payoff[i];
    played_payoff_sum_ += self_payoff;

    for (size_t i = 0; i < n; ++i) scores_[i] += payoff[i];
    k_ += 1;
    refresh_iterate();

    // X̄^k = X^k/(k+1) + k*X̄^{k-1}/(k+1)
    const double kp1 = static_cast<double>(k_) + 1.0;
    for (size_t i = 0; i < n; ++i) {
        average_[i] = iterate_[i] / kp1 + static_cast<double>(k_) * average_[i] / kp1;
    }
    for (size_t i = 0; i < n; ++i) entropy_sums_[i] += iterate_[i] * log_iterate_[i];
}

std::int64_t default_observe_stride(std::int64_t iterations) {
    return std::max<std::int64_t>(1, iterations / 1000);
}

std::vector<TrajectoryRecord> run_trajectory(const SymmetricGame& game, double alpha,
                                             std::int64_t iterations, std::int64_t observe_every,
                                             const std::optional<MixedStrategy>& start) {
    if (iterations < 0) throw std::invalid_argument("run_trajectory: iterations must be >= 0");
    const std::int64_t stride =
        observe_every > 0 ? observe_every : default_observe_stride(iterations);

    HedgeState state = start.has_value() ? HedgeState(game, alpha, *start)
                                         : HedgeState(game, alpha);
    std::vector<TrajectoryRecord> records;
    records.reserve(static_cast<size_t>(iterations / stride + 2));

    for (std::int64_t k = 0;; ++k) {
        if (k % stride == 0 || k == iterations) {
            const MixedStrategy current = state.iterate();
            const std::vector<double> payoff = payoff_vector(game, current);
            double pmax = payoff[0], pself = 0.0;
            for (int i = 0; i < state.size(); ++i) {
                pmax = std::max(pmax, payoff[static_cast<size_t>(i)]);
                pself += current[i] * payoff[static_cast<size_t>(i)];
            }
            const double eps_iterate = std::max(0.0, pmax - pself);
            const double eps_average = approximation_error(game, state.average()).epsilon;

            // Regret over the k+1 plays made so far: scores one step ahead.
            double best_score = state.scores()[0] + payoff[0];
            for (int i = 1; i < state.size(); ++i) {
                best_score = std::max(best_score, state.scores()[static_cast<size_t>(i)] +
                                                      payoff[static_cast<size_t>(i)]);
            }
            const double regret =
                (best_score - (state.played_payoff_sum() + pself)) / (static_cast<double>(k) + 1.0);

            records.push_back(TrajectoryRecord{k, eps_iterate, eps_average,
                                               mylove_bound(game.size(), alpha, k), regret});
        }
        if (k == iterations) break;
        state.advance(game);
    }
    return records;
}

}  // namespace hedgenash
