#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hedgenash/game.hpp"

namespace hedgenash {

// Checked statements. The first seven hold by proof plus exact algebra and
// are asserted (a failure means a broken implementation); the last two are
// hypotheses under empirical test and are only ever reported.
enum class LemmaId {
    convexity,             // RE(Y, T_a(X)) is convex in the learning rate a
    secant_bound,          // RE(Y,T(X)) <= RE(Y,X) - a(Y-X).CX + a(e^a - 1)
    log_lower_bound,       // ln T_i(X) >= ln X(i) + a(E_i-X).CX - a(e^a - 1)
    slater_chain,          // RE(Y,T(X)) - RE(Y,X) <= a * d/da RE(Y,T(X))
    telescoping_identity,  // ln(X^{K+1}(i)/X^{K+1}(j)) = a(K+1)(E_i-E_j).CX̄^K
    averaged_identity,     // the identity averaged with X̄^K resp. X̄^{K+1} weights
    averaged_bound,        // averaged form with the +1/(K+1) cross term
    inductive_la,          // contested: per-strategy entropy-average bound
    mylove_bound,          // contested: the four-term averaged-error bound
};

std::string_view to_string(LemmaId id);
LemmaId lemma_from_string(std::string_view name);
bool is_contested(LemmaId id);
double lemma_tolerance(LemmaId id);

// Largest offender found by a check, with everything needed to replay it.
struct Witness {
    LemmaId lemma;
    SymmetricGame game;
    double alpha;
    std::int64_t k;
    double lhs;
    double rhs;
    double violation;
    std::optional<MixedStrategy> x;  // sample-based lemmas only
    std::optional<MixedStrategy> y;
};

struct LemmaReport {
    LemmaId lemma;
    std::int64_t samples = 0;
    double max_violation = 0.0;  // positive = violated by that margin
    bool passed = true;
    std::optional<Witness> witness;

    void absorb(double violation, const Witness& candidate);
};

// RE(P, Q) = sum over support(P) of P(i) ln(P(i)/Q(i)). Requires
// support(P) ⊆ support(Q).
double relative_entropy(const MixedStrategy& p, const MixedStrategy& q);

// Closed form of d/d(alpha) RE(Y, T_alpha(X)):
//   sum_j X(j)(CX)_j e^{a(CX)_j} / sum_j X(j) e^{a(CX)_j}  -  Y.CX
double re_alpha_derivative(const SymmetricGame& game, const MixedStrategy& x,
                           const MixedStrategy& y, double alpha);

// RE(Y, T_alpha(X)) evaluated in the log domain; alpha >= 0 (alpha = 0 is
// the identity map).
double re_after_step(const SymmetricGame& game, const MixedStrategy& x, const MixedStrategy& y,
                     double alpha);

// Second central differences of alpha -> RE(Y, T_alpha(X)) over the grid
// (ascending, uniformly spaced, >= 3 points). Violation is the most negative
// undivided second difference.
LemmaReport check_convexity(const SymmetricGame& game, const MixedStrategy& x,
                            const MixedStrategy& y, const std::vector<double>& alpha_grid);

// One-step inequalities at a single sample: secant_bound, log_lower_bound
// (every coordinate), slater_chain.
std::array<LemmaReport, 3> check_step_inequalities(const SymmetricGame& game,
                                                   const MixedStrategy& x, const MixedStrategy& y,
                                                   double alpha);

// Streams a uniform-start trajectory and verifies, at every observed K and
// always at the final one:
//   - the exact per-pair log identity (telescoping_identity),
//   - its X̄^K- and X̄^{K+1}-weighted averaged forms (averaged_identity),
//   - the averaged form with the +1/(K+1) term (averaged_bound).
// All three are asserted-class checks. inject_fault > 0 perturbs the average
// fed to the right-hand sides by that amount (a harness self-test hook that
// must make the identity fail).
std::vector<LemmaReport> check_average_identities(const SymmetricGame& game, double alpha,
                                                  std::int64_t iterations,
                                                  std::int64_t observe_every = 1,
                                                  double inject_fault = 0.0);

// Contested checks, evaluated (never asserted) along a uniform-start
// trajectory at every observed K plus the final one.
struct ContestedReports {
    LemmaReport inductive_la;
    LemmaReport mylove;
    double final_eps_average = 0.0;
    // final_eps_average - n(e^alpha - 1): the claimed limiting error. The
    // bound interpretation is mylove.passed; the equality interpretation is
    // this gap, recorded without judgment.
    double limit_gap = 0.0;
};
ContestedReports check_la_and_bound(const SymmetricGame& game, double alpha,
                                    std::int64_t iterations, std::int64_t observe_every = 1);

// Time-averaged external regret of the first iterations+1 plays from the
// uniform start: max_i (1/(K+1)) sum_k (E_i - X^k).CX^k. Throws
// std::logic_error if the classical bound ln(n)/(alpha(K+1)) + (e^alpha - 1)
// is exceeded beyond 1e-9, since that bound is proved.
double external_regret(const SymmetricGame& game, double alpha, std::int64_t iterations);

// Re-evaluates a trajectory-lemma witness from scratch: re-runs the dynamics
// to witness.k and recomputes the worst (lhs, rhs) pair for that lemma.
// Returns {lhs, rhs}.
std::pair<double, double> replay_witness(const Witness& witness);

}  // namespace hedgenash
