#include "hedgenash/game.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hedgenash {

namespace {
constexpr double kSimplexSumTolerance = 1e-9;
}

MixedStrategy::MixedStrategy(std::vector<double> masses) : masses_(std::move(masses)) {
    if (masses_.empty()) {
        throw std::invalid_argument("MixedStrategy: empty mass vector");
    }
    double sum = 0.0;
    for (double m : masses_) {
        if (!std::isfinite(m) || m < 0.0) {
            throw std::invalid_argument("MixedStrategy: masses must be finite and nonnegative");
        }
        sum += m;
    }
    if (std::abs(sum - 1.0) > kSimplexSumTolerance) {
        throw std::invalid_argument("MixedStrategy: masses sum to " + std::to_string(sum) +
                                    ", not within 1e-9 of 1");
    }
    for (double& m : masses_) m /= sum;
}

MixedStrategy MixedStrategy::uniform(int n) {
    if (n < 1) throw std::invalid_argument("MixedStrategy::uniform: n must be >= 1");
    return MixedStrategy(std::vector<double>(static_cast<size_t>(n), 1.0 / n));
}

MixedStrategy MixedStrategy::pure(int n, int index) {
    if (n < 1 || index < 0 || index >= n) {
        throw std::invalid_argument("MixedStrategy::pure: index out of range");
    }
    std::vector<double> m(static_cast<size_t>(n), 0.0);
    m[static_cast<size_t>(index)] = 1.0;
    return MixedStrategy(std::move(m));
}

std::vector<int> MixedStrategy::support() const {
    std::vector<int> s;
    for (int i = 0; i < size(); ++i) {
        if (masses_[static_cast<size_t>(i)] > 0.0) s.push_back(i);
    }
    return s;
}

bool MixedStrategy::interior() const {
    return std::all_of(masses_.begin(), masses_.end(), [](double m) { return m > 0.0; });
}

SymmetricGame::SymmetricGame(int n, std::vector<double> payoffs, std::string label)
    : n_(n), payoffs_(std::move(payoffs)), label_(std::move(label)) {
    if (n_ < 1) throw std::invalid_argument("SymmetricGame: n must be >= 1");
    if (payoffs_.size() != static_cast<size_t>(n_) * static_cast<size_t>(n_)) {
        throw std::invalid_argument("SymmetricGame: payoff vector must have n*n entries");
    }
    for (double p : payoffs_) {
        if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
            throw std::invalid_argument(
                "SymmetricGame: payoff entries must lie in [0, 1]; use normalize() first");
        }
    }
}

std::vector<double> payoff_vector(const SymmetricGame& game, const MixedStrategy& x) {
    if (x.size() != game.size()) {
        throw std::invalid_argument("payoff_vector: strategy/game dimension mismatch");
    }
    const int n = game.size();
    std::vector<double> out(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = 0; j < n; ++j) acc += game.at(i, j) * x[j];
        out[static_cast<size_t>(i)] = acc;
    }
    return out;
}

ApproximationReport approximation_error(const SymmetricGame& game, const MixedStrategy& x) {
    const std::vector<double> payoff = payoff_vector(game, x);
    int arg = 0;
    double pmax = payoff[0];
    for (int i = 1; i < game.size(); ++i) {
        if (payoff[static_cast<size_t>(i)] > pmax) {
            pmax = payoff[static_cast<size_t>(i)];
            arg = i;
        }
    }
    double pself = 0.0;
    for (int i = 0; i < game.size(); ++i) pself += x[i] * payoff[static_cast<size_t>(i)];
    // pself <= pmax up to rounding; clamp the residual at zero.
    const double eps = std::max(0.0, pmax - pself);
    return ApproximationReport{eps, pmax, pself, arg, x};
}

Decomposition decompose(const SymmetricGame& game) {
    const int n = game.size();
    Decomposition d;
    d.n = n;
    d.doubly_symmetric_part.resize(static_cast<size_t>(n) * n);
    d.skew_part.resize(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const size_t ij = static_cast<size_t>(i) * n + j;
            d.doubly_symmetric_part[ij] = (game.at(i, j) + game.at(j, i)) / 2.0;
            d.skew_part[ij] = (game.at(i, j) - game.at(j, i)) / 2.0;
        }
    }
    return d;
}

SymmetricGame normalize(int n, const std::vector<double>& matrix, std::string label) {
    if (n < 1 || matrix.size() != static_cast<size_t>(n) * static_cast<size_t>(n)) {
        throw std::invalid_argument("normalize: matrix must have n*n entries, n >= 1");
    }
    for (double v : matrix) {
        if (!std::isfinite(v)) throw std::invalid_argument("normalize: non-finite entry");
    }
    const auto [lo_it, hi_it] = std::minmax_element(matrix.begin(), matrix.end());
    const double lo = *lo_it, hi = *hi_it;
    std::vector<double> scaled(matrix.size());
    if (hi > lo) {
        for (size_t k = 0; k < matrix.size(); ++k) {
            scaled[k] = std::clamp((matrix[k] - lo) / (hi - lo), 0.0, 1.0);
        }
    } else {
        std::fill(scaled.begin(), scaled.end(), 0.5);
    }
    return SymmetricGame(n, std::move(scaled), std::move(label));
}

int best_response(const SymmetricGame& game, const MixedStrategy& x) {
    return approximation_error(game, x).best_response_index;
}

}  // namespace hedgenash
