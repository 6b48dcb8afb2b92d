#include "hedgenash/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hedgenash/hedge.hpp"
#include "hedgenash/schedule.hpp"

namespace hedgenash {

std::string_view to_string(LemmaId id) {
    switch (id) {
        case LemmaId::convexity: return "convexity";
        case LemmaId::secant_bound: return "secant_bound";
        case LemmaId::log_lower_bound: return "log_lower_bound";
        case LemmaId::slater_chain: return "slater_chain";
        case LemmaId::telescoping_identity: return "telescoping_identity";
        case LemmaId::averaged_identity: return "averaged_identity";
        case LemmaId::averaged_bound: return "averaged_bound";
        case LemmaId::inductive_la: return "inductive_LA";
        case LemmaId::mylove_bound: return "mylove_bound";
    }
    throw std::logic_error("unreachable");
}

LemmaId lemma_from_string(std::string_view name) {
    for (LemmaId id : {LemmaId::convexity, LemmaId::secant_bound, LemmaId::log_lower_bound,
                       LemmaId::slater_chain, LemmaId::telescoping_identity,
                       LemmaId::averaged_identity, LemmaId::averaged_bound, LemmaId::inductive_la,
                       LemmaId::mylove_bound}) {
        if (to_string(id) == name) return id;
    }
    throw std::invalid_argument("unknown lemma id: " + std::string(name));
}

bool is_contested(LemmaId id) {
    return id == LemmaId::inductive_la || id == LemmaId::mylove_bound;
}

double lemma_tolerance(LemmaId id) {
    switch (id) {
        case LemmaId::convexity:
            return 1e-7;  // undivided second central difference
        case LemmaId::secant_bound:
        case LemmaId::log_lower_bound:
        case LemmaId::slater_chain:
            return 1e-10;
        case LemmaId::telescoping_identity:
        case LemmaId::averaged_identity:
        case LemmaId::averaged_bound:
        case LemmaId::inductive_la:
        case LemmaId::mylove_bound:
            return 1e-8;  // rounding accumulated over long trajectories
    }
    throw std::logic_error("unreachable");
}

void LemmaReport::absorb(double violation, const Witness& candidate) {
    samples += 1;
    if (samples == 1 || violation > max_violation) {
        max_violation = violation;
        if (violation > lemma_tolerance(lemma)) {
            witness = candidate;
        }
    }
    passed = max_violation <= lemma_tolerance(lemma);
    if (passed) witness.reset();
}

double relative_entropy(const MixedStrategy& p, const MixedStrategy& q) {
    if (p.size() != q.size()) throw std::invalid_argument("relative_entropy: dimension mismatch");
    double sum = 0.0;
    for (int i = 0; i < p.size(); ++i) {
        if (p[i] > 0.0) {
            if (q[i] <= 0.0) {
                throw std::invalid_argument(
                    "relative_entropy: support(P) must be contained in support(Q)");
            }
            sum += p[i] * std::log(p[i] / q[i]);
        }
    }
    return std::max(0.0, sum);
}

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double log_sum_exp(const std::vector<double>& v) {
    const double m = *std::max_element(v.begin(), v.end());
    double sum = 0.0;
    for (double x : v) sum += std::exp(x - m);
    return m + std::log(sum);
}

// ln T_alpha(X) per coordinate, log domain, alpha >= 0 allowed.
std::vector<double> log_step(const SymmetricGame& game, const MixedStrategy& x, double alpha,
                             const std::vector<double>& payoff) {
    const int n = game.size();
    std::vector<double> logits(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        logits[static_cast<size_t>(i)] = std::log(x[i]) + alpha * payoff[static_cast<size_t>(i)];
    }
    const double lse = log_sum_exp(logits);
    for (double& v : logits) v -= lse;
    return logits;
}

void require_interior(const MixedStrategy& x, const char* where) {
    if (!x.interior()) throw std::invalid_argument(std::string(where) + ": X must be interior");
}

}  // namespace

double re_after_step(const SymmetricGame& game, const MixedStrategy& x, const MixedStrategy& y,
                     double alpha) {
    require_interior(x, "re_after_step");
    if (alpha < 0.0) throw std::invalid_argument("re_after_step: alpha must be >= 0");
    if (y.size() != game.size()) throw std::invalid_argument("re_after_step: dimension mismatch");
    const std::vector<double> payoff = payoff_vector(game, x);
    const std::vector<double> log_t = log_step(game, x, alpha, payoff);
    double sum = 0.0;
    for (int i = 0; i < y.size(); ++i) {
        if (y[i] > 0.0) sum += y[i] * (std::log(y[i]) - log_t[static_cast<size_t>(i)]);
    }
    return std::max(0.0, sum);
}

double re_alpha_derivative(const SymmetricGame& game, const MixedStrategy& x,
                           const MixedStrategy& y, double alpha) {
    require_interior(x, "re_alpha_derivative");
    if (y.size() != game.size()) {
        throw std::invalid_argument("re_alpha_derivative: dimension mismatch");
    }
    const std::vector<double> payoff = payoff_vector(game, x);
    const double shift = *std::max_element(payoff.begin(), payoff.end());
    double num = 0.0, den = 0.0;
    for (int j = 0; j < game.size(); ++j) {
        const double w = x[j] * std::exp(alpha * (payoff[static_cast<size_t>(j)] - shift));
        num += w * payoff[static_cast<size_t>(j)];
        den += w;
    }
    return num / den - dot(y.masses(), payoff);
}

LemmaReport check_convexity(const SymmetricGame& game, const MixedStrategy& x,
                            const MixedStrategy& y, const std::vector<double>& alpha_grid) {
    if (alpha_grid.size() < 3) {
        throw std::invalid_argument("check_convexity: grid needs at least 3 points");
    }
    const double h = alpha_grid[1] - alpha_grid[0];
    if (!(h > 0.0)) throw std::invalid_argument("check_convexity: grid must be ascending");
    for (size_t i = 1; i + 1 < alpha_grid.size(); ++i) {
        if (std::abs((alpha_grid[i + 1] - alpha_grid[i]) - h) > 1e-12 * std::max(1.0, h)) {
            throw std::invalid_argument("check_convexity: grid must be uniformly spaced");
        }
    }

    std::vector<double> values(alpha_grid.size());
    for (size_t i = 0; i < alpha_grid.size(); ++i) {
        values[i] = re_after_step(game, x, y, alpha_grid[i]);
    }

    LemmaReport report;
    report.lemma = LemmaId::convexity;
    for (size_t i = 1; i + 1 < alpha_grid.size(); ++i) {
        const double second = values[i + 1] - 2.0 * values[i] + values[i - 1];
        Witness w{LemmaId::convexity, game, alpha_grid[i], static_cast<std::int64_t>(i),
                  second,  0.0,  -second, x, y};
        report.absorb(-second, w);
    }
    return report;
}

namespace {

struct PairEval {
    double violation;
    double lhs;
    double rhs;
};

// secant_bound, log_lower_bound (worst coordinate), slater_chain at one sample.
std::array<PairEval, 3> step_evals(const SymmetricGame& game, const MixedStrategy& x,
                                   const MixedStrategy& y, double alpha) {
    require_interior(x, "check_step_inequalities");
    if (!(alpha > 0.0)) throw std::invalid_argument("check_step_inequalities: alpha must be > 0");

    const std::vector<double> payoff = payoff_vector(game, x);
    const std::vector<double> log_t = log_step(game, x, alpha, payoff);
    const double x_cx = dot(x.masses(), payoff);
    const double y_cx = dot(y.masses(), payoff);
    const double re_before = relative_entropy(y, x);
    double re_after = 0.0;
    for (int i = 0; i < y.size(); ++i) {
        if (y[i] > 0.0) re_after += y[i] * (std::log(y[i]) - log_t[static_cast<size_t>(i)]);
    }
    re_after = std::max(0.0, re_after);
    const double slack = alpha * std::expm1(alpha);

    std::array<PairEval, 3> out;

    // RE(Y,T(X)) <= RE(Y,X) - alpha (Y-X).CX + alpha (e^alpha - 1)
    const double secant_rhs = re_before - alpha * (y_cx - x_cx) + slack;
    out[0] = PairEval{re_after - secant_rhs, re_after, secant_rhs};

    // ln T_i(X) >= ln X(i) + alpha (E_i - X).CX - alpha (e^alpha - 1), all i
    out[1] = PairEval{-std::numeric_limits<double>::infinity(), 0.0, 0.0};
    for (int i = 0; i < game.size(); ++i) {
        const double lhs = log_t[static_cast<size_t>(i)];
        const double rhs =
            std::log(x[i]) + alpha * (payoff[static_cast<size_t>(i)] - x_cx) - slack;
        if (rhs - lhs > out[1].violation) out[1] = PairEval{rhs - lhs, lhs, rhs};
    }

    // RE(Y,T(X)) - RE(Y,X) <= alpha * d/dalpha RE(Y,T(X))
    const double slater_lhs = re_after - re_before;
    const double slater_rhs = alpha * re_alpha_derivative(game, x, y, alpha);
    out[2] = PairEval{slater_lhs - slater_rhs, slater_lhs, slater_rhs};
    return out;
}

}  // namespace

std::array<LemmaReport, 3> check_step_inequalities(const SymmetricGame& game,
                                                   const MixedStrategy& x, const MixedStrategy& y,
                                                   double alpha) {
    const std::array<PairEval, 3> evals = step_evals(game, x, y, alpha);
    constexpr LemmaId ids[3] = {LemmaId::secant_bound, LemmaId::log_lower_bound,
                                LemmaId::slater_chain};
    std::array<LemmaReport, 3> out;
    for (size_t s = 0; s < 3; ++s) {
        out[s].lemma = ids[s];
        out[s].absorb(evals[s].violation, Witness{ids[s], game, alpha, 0, evals[s].lhs,
                                                  evals[s].rhs, evals[s].violation, x, y});
    }
    return out;
}

namespace {

// Worst pair (i, j) of |ln(X^{K+1}(i)/X^{K+1}(j)) - alpha(K+1)((CX̄^K)_i - (CX̄^K)_j)|.
PairEval identity_worst(const std::vector<double>& log_next, const std::vector<double>& cxbar,
                        double alpha, std::int64_t K) {
    const double scale = alpha * (static_cast<double>(K) + 1.0);
    PairEval worst{-1.0, 0.0, 0.0};
    const int n = static_cast<int>(log_next.size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const double lhs = log_next[static_cast<size_t>(i)] - log_next[static_cast<size_t>(j)];
            const double rhs = scale * (cxbar[static_cast<size_t>(i)] - cxbar[static_cast<size_t>(j)]);
            const double v = std::abs(lhs - rhs);
            if (v > worst.violation) worst = PairEval{v, lhs, rhs};
        }
    }
    return worst;
}

// Averaged forms. With weights w (X̄^K or X̄^{K+1}) and cross in {0, 1/(K+1)}:
//   (CX̄^K)_max - w.CX̄^K <= -(1/(alpha(K+1))) sum_j w(j) ln X^{K+1}(j) + cross
PairEval averaged_eval(const std::vector<double>& weights, const std::vector<double>& self_weights,
                       const std::vector<double>& cxbar, const std::vector<double>& log_next,
                       double alpha, std::int64_t K, double cross) {
    const double cmax = *std::max_element(cxbar.begin(), cxbar.end());
    const double lhs = cmax - dot(self_weights, cxbar);
    const double scale = 1.0 / (alpha * (static_cast<double>(K) + 1.0));
    double entropy_term = 0.0;
    for (size_t j = 0; j < weights.size(); ++j) entropy_term += weights[j] * log_next[j];
    const double rhs = -scale * entropy_term + cross;
    return PairEval{lhs - rhs, lhs, rhs};
}

// Contested per-strategy bound at iteration K; worst coordinate j of
//   -(1/(alpha(K+1))) X̄^K(j) ln X^K(j)
//     <= -(1/(alpha(K+1)))(1/(K+1)) sum_{k<=K} X^k(j) ln X^k(j)
//        + (e^alpha - 1) + rho^K
PairEval la_worst(const HedgeState& st, std::int64_t K) {
    const double alpha = st.alpha();
    const double scale = 1.0 / (alpha * (static_cast<double>(K) + 1.0));
    const double tail = std::expm1(alpha) + std::pow(kRho, static_cast<double>(K));
    PairEval worst{-std::numeric_limits<double>::infinity(), 0.0, 0.0};
    for (int j = 0; j < st.size(); ++j) {
        const double lhs = -scale * st.average_masses()[static_cast<size_t>(j)] *
                           st.log_iterate()[static_cast<size_t>(j)];
        const double rhs = -scale * st.entropy_sums()[static_cast<size_t>(j)] /
                               (static_cast<double>(K) + 1.0) +
                           tail;
        if (lhs - rhs > worst.violation) worst = PairEval{lhs - rhs, lhs, rhs};
    }
    return worst;
}

std::vector<double> fault_average(std::vector<double> avg, double inject) {
    avg[0] += inject;
    double sum = 0.0;
    for (double v : avg) sum += v;
    for (double& v : avg) v /= sum;
    return avg;
}

bool observed(std::int64_t k, std::int64_t stride, std::int64_t last) {
    return k % stride == 0 || k == last;
}

}  // namespace

std::vector<LemmaReport> check_average_identities(const SymmetricGame& game, double alpha,
                                                  std::int64_t iterations,
                                                  std::int64_t observe_every, double inject_fault) {
    if (iterations < 0) throw std::invalid_argument("check_average_identities: iterations >= 0");
    const std::int64_t stride =
        observe_every > 0 ? observe_every : default_observe_stride(iterations);

    LemmaReport identity, averaged, bounded;
    identity.lemma = LemmaId::telescoping_identity;
    averaged.lemma = LemmaId::averaged_identity;
    bounded.lemma = LemmaId::averaged_bound;

    HedgeState st(game, alpha);
    for (std::int64_t K = 0; K <= iterations; ++K) {
        if (!observed(K, stride, iterations)) {
            st.advance(game);
            continue;
        }
        std::vector<double> avg_k = st.average_masses();  // X̄^K
        if (inject_fault > 0.0) avg_k = fault_average(std::move(avg_k), inject_fault);
        const std::vector<double> cxbar = payoff_vector(game, MixedStrategy(avg_k));

        st.advance(game);  // now holds X^{K+1} and X̄^{K+1}
        const std::vector<double>& log_next = st.log_iterate();
        const std::vector<double>& avg_next = st.average_masses();

        const PairEval id = identity_worst(log_next, cxbar, alpha, K);
        identity.absorb(id.violation, Witness{LemmaId::telescoping_identity, game, alpha, K,
                                              id.lhs, id.rhs, id.violation, {}, {}});

        const PairEval a4 = averaged_eval(avg_k, avg_k, cxbar, log_next, alpha, K, 0.0);
        const PairEval a5 = averaged_eval(avg_next, avg_next, cxbar, log_next, alpha, K, 0.0);
        const PairEval& worst_avg = a4.violation >= a5.violation ? a4 : a5;
        averaged.absorb(worst_avg.violation,
                        Witness{LemmaId::averaged_identity, game, alpha, K, worst_avg.lhs,
                                worst_avg.rhs, worst_avg.violation, {}, {}});

        const PairEval a6 = averaged_eval(avg_next, avg_k, cxbar, log_next, alpha, K,
                                          1.0 / (static_cast<double>(K) + 1.0));
        bounded.absorb(a6.violation, Witness{LemmaId::averaged_bound, game, alpha, K, a6.lhs,
                                             a6.rhs, a6.violation, {}, {}});
    }
    return {identity, averaged, bounded};
}

ContestedReports check_la_and_bound(const SymmetricGame& game, double alpha,
                                    std::int64_t iterations, std::int64_t observe_every) {
    if (iterations < 0) throw std::invalid_argument("check_la_and_bound: iterations >= 0");
    const std::int64_t stride =
        observe_every > 0 ? observe_every : default_observe_stride(iterations);

    ContestedReports out;
    out.inductive_la.lemma = LemmaId::inductive_la;
    out.mylove.lemma = LemmaId::mylove_bound;

    HedgeState st(game, alpha);
    for (std::int64_t K = 0;; ++K) {
        if (observed(K, stride, iterations)) {
            const PairEval la = la_worst(st, K);
            out.inductive_la.absorb(la.violation, Witness{LemmaId::inductive_la, game, alpha, K,
                                                          la.lhs, la.rhs, la.violation, {}, {}});

            const double eps_avg = approximation_error(game, st.average()).epsilon;
            const double rhs = mylove_bound(game.size(), alpha, K);
            out.mylove.absorb(eps_avg - rhs, Witness{LemmaId::mylove_bound, game, alpha, K,
                                                     eps_avg, rhs, eps_avg - rhs, {}, {}});
            if (K == iterations) {
                out.final_eps_average = eps_avg;
                out.limit_gap = eps_avg - game.size() * std::expm1(alpha);
            }
        }
        if (K == iterations) break;
        st.advance(game);
    }
    return out;
}

double external_regret(const SymmetricGame& game, double alpha, std::int64_t iterations) {
    if (iterations < 0) throw std::invalid_argument("external_regret: iterations must be >= 0");
    HedgeState st(game, alpha);
    for (std::int64_t k = 0; k <= iterations; ++k) st.advance(game);

    const double plays = static_cast<double>(iterations) + 1.0;
    const double best = *std::max_element(st.scores().begin(), st.scores().end());
    const double regret = (best - st.played_payoff_sum()) / plays;

    const double bound = std::log(static_cast<double>(game.size())) / (alpha * plays) +
                         std::expm1(alpha);
    if (regret > bound + 1e-9) {
        throw std::logic_error("external_regret: proved bound exceeded (regret=" +
                               std::to_string(regret) + ", bound=" + std::to_string(bound) + ")");
    }
    return regret;
}

std::pair<double, double> replay_witness(const Witness& witness) {
    const SymmetricGame& game = witness.game;
    switch (witness.lemma) {
        case LemmaId::telescoping_identity:
        case LemmaId::averaged_identity:
        case LemmaId::averaged_bound: {
            HedgeState st(game, witness.alpha);
            for (std::int64_t k = 0; k < witness.k; ++k) st.advance(game);
            const std::vector<double> avg_k = st.average_masses();
            const std::vector<double> cxbar = payoff_vector(game, MixedStrategy(avg_k));
            st.advance(game);
            if (witness.lemma == LemmaId::telescoping_identity) {
                const PairEval e = identity_worst(st.log_iterate(), cxbar, witness.alpha, witness.k);
                return {e.lhs, e.rhs};
            }
            if (witness.lemma == LemmaId::averaged_identity) {
                const PairEval a4 =
                    averaged_eval(avg_k, avg_k, cxbar, st.log_iterate(), witness.alpha, witness.k, 0.0);
                const PairEval a5 = averaged_eval(st.average_masses(), st.average_masses(), cxbar,
                                                  st.log_iterate(), witness.alpha, witness.k, 0.0);
                const PairEval& worst = a4.violation >= a5.violation ? a4 : a5;
                return {worst.lhs, worst.rhs};
            }
            const PairEval a6 = averaged_eval(st.average_masses(), avg_k, cxbar, st.log_iterate(),
                                              witness.alpha, witness.k,
                                              1.0 / (static_cast<double>(witness.k) + 1.0));
            return {a6.lhs, a6.rhs};
        }
        case LemmaId::inductive_la: {
            HedgeState st(game, witness.alpha);
            for (std::int64_t k = 0; k < witness.k; ++k) st.advance(game);
            const PairEval e = la_worst(st, witness.k);
            return {e.lhs, e.rhs};
        }
        case LemmaId::mylove_bound: {
            HedgeState st(game, witness.alpha);
            for (std::int64_t k = 0; k < witness.k; ++k) st.advance(game);
            const double eps_avg = approximation_error(game, st.average()).epsilon;
            return {eps_avg, mylove_bound(game.size(), witness.alpha, witness.k)};
        }
        case LemmaId::secant_bound:
        case LemmaId::log_lower_bound:
        case LemmaId::slater_chain: {
            if (!witness.x || !witness.y) {
                throw std::invalid_argument("replay_witness: sample witness lacks strategies");
            }
            const auto evals = step_evals(game, *witness.x, *witness.y, witness.alpha);
            const size_t idx = witness.lemma == LemmaId::secant_bound ? 0
                               : witness.lemma == LemmaId::log_lower_bound ? 1
                                                                           : 2;
            return {evals[idx].lhs, evals[idx].rhs};
        }
        case LemmaId::convexity:
            throw std::invalid_argument("replay_witness: convexity replays via check_convexity");
    }
    throw std::logic_error("unreachable");
}

}  // namespace hedgenash
