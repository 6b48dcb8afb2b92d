#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hedgenash {

// A point on the probability simplex. Construction validates: masses must be
// nonnegative and sum to 1 within 1e-9 (the sum is divided out), otherwise
// the constructor throws std::invalid_argument.
class MixedStrategy {
public:
    explicit MixedStrategy(std::vector<double> masses);

    static MixedStrategy uniform(int n);
    static MixedStrategy pure(int n, int index);

    int size() const { return static_cast<int>(masses_.size()); }
    double operator[](int i) const { return masses_[static_cast<size_t>(i)]; }
    const std::vector<double>& masses() const { return masses_; }

    // Indices with strictly positive mass. Never empty.
    std::vector<int> support() const;

    // True when every pure strategy has positive mass.
    bool interior() const;

private:
    std::vector<double> masses_;
};

// Symmetric bimatrix game given by its row player's payoff matrix. Entries
// must lie in [0, 1]; matrices outside that range go through normalize().
class SymmetricGame {
public:
    SymmetricGame(int n, std::vector<double> payoffs, std::string label = "");

    int size() const { return n_; }
    double at(int i, int j) const { return payoffs_[static_cast<size_t>(i) * n_ + j]; }
    const std::vector<double>& payoffs() const { return payoffs_; }
    const std::string& label() const { return label_; }

private:
    int n_;
    std::vector<double> payoffs_;
    std::string label_;
};

// Equilibrium-approximation error of a strategy X:
//   epsilon = max_i (CX)_i - X.CX
// together with the maximizing pure strategy (lowest index on ties).
struct ApproximationReport {
    double epsilon;
    double payoff_max;
    double payoff_self;
    int best_response_index;
    MixedStrategy strategy;
};

// Split of a payoff matrix C into A = (C + C^T)/2 (a matrix equal to its own
// transpose) and S = (C - C^T)/2 (skew), with A + S = C.
struct Decomposition {
    int n;
    std::vector<double> doubly_symmetric_part;
    std::vector<double> skew_part;
};

// Returns CX, one expected payoff per pure strategy.
std::vector<double> payoff_vector(const SymmetricGame& game, const MixedStrategy& x);

ApproximationReport approximation_error(const SymmetricGame& game, const MixedStrategy& x);

Decomposition decompose(const SymmetricGame& game);

// Entrywise affine rescale of an arbitrary finite matrix onto [0, 1]. A
// constant matrix maps to all 0.5.
SymmetricGame normalize(int n, const std::vector<double>& matrix, std::string label = "");

// Lowest index maximizing (CX)_i.
int best_response(const SymmetricGame& game, const MixedStrategy& x);

}  // namespace hedgenash
