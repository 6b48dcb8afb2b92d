#include "hedgenash/campaign.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include "hedgenash/generators.hpp"
#include "hedgenash/hedge.hpp"
#include "hedgenash/io.hpp"
#include "hedgenash/rng.hpp"

namespace hedgenash {

void merge_reports(LemmaReport& into, const LemmaReport& from) {
    if (into.samples == 0) {
        into = from;
        return;
    }
    into.samples += from.samples;
    if (from.max_violation > into.max_violation) {
        into.max_violation = from.max_violation;
        into.witness = from.witness;
    }
    into.passed = into.max_violation <= lemma_tolerance(into.lemma);
    if (into.passed) into.witness.reset();
}

namespace {

std::vector<double> convexity_grid() {
    std::vector<double> grid;
    for (int i = 0; i <= 40; ++i) grid.push_back(0.05 * i);
    return grid;
}

}  // namespace

CheckResult run_checks(const SymmetricGame& game, const CheckOptions& options) {
    CheckResult result;
    const int n = game.size();

    LemmaReport convexity;
    convexity.lemma = LemmaId::convexity;
    LemmaReport secant, log_lower, slater;
    secant.lemma = LemmaId::secant_bound;
    log_lower.lemma = LemmaId::log_lower_bound;
    slater.lemma = LemmaId::slater_chain;

    const std::vector<double> grid = convexity_grid();
    Rng rng(options.seed ^ 0x9e3779b97f4a7c15ull);
    for (int s = 0; s < options.samples; ++s) {
        const MixedStrategy x = random_interior_strategy(n, rng);
        const MixedStrategy y = (s % 5 == 4) ? MixedStrategy::pure(n, s % n)
                                             : random_interior_strategy(n, rng);
        merge_reports(convexity, check_convexity(game, x, y, grid));
        const double alpha = 2.0 * rng.uniform01_open();
        const auto steps = check_step_inequalities(game, x, y, alpha);
        merge_reports(secant, steps[0]);
        merge_reports(log_lower, steps[1]);
        merge_reports(slater, steps[2]);
    }

    const std::vector<LemmaReport> identities = check_average_identities(
        game, options.alpha, options.iterations, options.observe_every, options.inject_fault);

    const ContestedReports contested =
        check_la_and_bound(game, options.alpha, options.iterations, options.observe_every);
    result.final_eps_average = contested.final_eps_average;
    result.limit_gap = contested.limit_gap;

    // Time-averaged regret against the proved bound, at every observed k.
    const std::vector<TrajectoryRecord> records =
        run_trajectory(game, options.alpha, options.iterations, options.observe_every);
    result.regret_ok = true;
    for (const TrajectoryRecord& r : records) {
        const double bound = std::log(static_cast<double>(n)) /
                                 (options.alpha * (static_cast<double>(r.k) + 1.0)) +
                             std::expm1(options.alpha);
        if (r.regret_avg > bound + 1e-9) result.regret_ok = false;
        if (r.k == options.iterations) {
            result.regret = r.regret_avg;
            result.regret_bound = bound;
        }
    }

    result.reports = {convexity,    secant,        log_lower,
                      slater,       identities[0], identities[1],
                      identities[2], contested.inductive_la, contested.mylove};
    result.asserted_ok = result.regret_ok;
    for (const LemmaReport& r : result.reports) {
        if (!is_contested(r.lemma) && !r.passed) result.asserted_ok = false;
    }
    return result;
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("HEDGE_NASH_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<int>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

CampaignResult run_campaign(const CampaignOptions& options) {
    CampaignResult result;
    result.options = options;

    std::vector<CampaignInstance> instances;
    std::size_t index = 0;
    for (int n : options.sizes) {
        for (double eps : options.targets) {
            for (int g = 0; g < options.games_per_cell; ++g) {
                CampaignInstance inst;
                inst.index = index;
                inst.n = n;
                inst.eps = eps;
                inst.seed = options.base_seed + index;
                ++index;
                instances.push_back(std::move(inst));
            }
        }
    }

    const int threads =
        std::min<int>(resolve_threads(options.threads), static_cast<int>(instances.size()));
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= instances.size()) return;
            CampaignInstance& inst = instances[i];
            inst.schedule = build_schedule(inst.n, inst.eps);
            const SymmetricGame game =
                generate(GeneratorSpec{Family::random_uniform, inst.n, inst.seed});
            CheckOptions check;
            check.alpha = inst.schedule.alpha;
            check.iterations = inst.schedule.K;
            check.observe_every = 0;
            check.samples = options.samples;
            check.seed = inst.seed;
            inst.checks = run_checks(game, check);
            inst.target_met = inst.checks.final_eps_average <= inst.eps;
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    result.instances = std::move(instances);
    result.asserted_ok = true;
    for (const CampaignInstance& inst : result.instances) {
        if (!inst.checks.asserted_ok) result.asserted_ok = false;
    }
    return result;
}

namespace {

// Markdown is the human view; exact doubles live in campaign.json.
std::string md_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string verdict_cell(const LemmaReport& report) {
    if (report.passed) return "pass";
    return "VIOLATED (" + md_num(report.max_violation) + ")";
}

}  // namespace

std::string write_campaign(const CampaignResult& result, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);

    nlohmann::json rows = nlohmann::json::array();
    std::vector<std::string> witness_files;
    for (const CampaignInstance& inst : result.instances) {
        nlohmann::json row{{"index", inst.index},
                           {"n", inst.n},
                           {"eps", inst.eps},
                           {"seed", inst.seed},
                           {"schedule", to_json(inst.schedule)},
                           {"final_eps_average", inst.checks.final_eps_average},
                           {"target_met", inst.target_met},
                           {"limit_gap", inst.checks.limit_gap},
                           {"regret", inst.checks.regret},
                           {"regret_bound", inst.checks.regret_bound},
                           {"asserted_ok", inst.checks.asserted_ok}};
        nlohmann::json lemmas = nlohmann::json::array();
        for (const LemmaReport& report : inst.checks.reports) {
            lemmas.push_back(to_json(report));
            if (report.witness) {
                const std::string name = "witness_" + std::to_string(inst.index) + "_" +
                                         std::string(to_string(report.lemma)) + ".json";
                atomic_write(dir / name, to_json(*report.witness).dump(2) + "\n");
                witness_files.push_back(name);
            }
        }
        row["lemmas"] = lemmas;
        rows.push_back(row);
    }
    atomic_write(dir / "campaign.json", rows.dump(2) + "\n");

    std::string md = "# Hedge schedule campaign\n\n";
    md += "Random games per (n, eps) cell: " + std::to_string(result.options.games_per_cell) +
          ", seeds start at " + std::to_string(result.options.base_seed) + ".\n\n";

    md += "## Schedules\n\n";
    md += "| n | eps | k_hat | eps_prime | alpha | theta | K | k_prime | predicted_error |\n";
    md += "|---|-----|-------|-----------|-------|-------|---|---------|----------------|\n";
    for (int n : result.options.sizes) {
        for (double eps : result.options.targets) {
            const FptasSchedule s = build_schedule(n, eps);
            md += "| " + std::to_string(n) + " | " + md_num(eps) + " | " +
                  std::to_string(s.k_hat) + " | " + md_num(s.eps_prime) + " | " +
                  md_num(s.alpha) + " | " + md_num(s.theta) + " | " +
                  std::to_string(s.K) + " | " + std::to_string(s.k_prime) + " | " +
                  md_num(s.predicted_error) + " |\n";
        }
    }

    md += "\n## Instances\n\n";
    md += "| idx | n | eps | seed | final_eps_average | target_met | inductive_LA | "
          "mylove_bound | limit_gap | asserted |\n";
    md += "|-----|---|-----|------|-------------------|------------|--------------|"
          "--------------|-----------|----------|\n";
    std::size_t contested_violations = 0;
    for (const CampaignInstance& inst : result.instances) {
        const LemmaReport& la = inst.checks.reports[7];
        const LemmaReport& ml = inst.checks.reports[8];
        if (!la.passed) ++contested_violations;
        if (!ml.passed) ++contested_violations;
        md += "| " + std::to_string(inst.index) + " | " + std::to_string(inst.n) + " | " +
              md_num(inst.eps) + " | " + std::to_string(inst.seed) + " | " +
              md_num(inst.checks.final_eps_average) + " | " +
              (inst.target_met ? "yes" : "no") + " | " + verdict_cell(la) + " | " +
              verdict_cell(ml) + " | " + md_num(inst.checks.limit_gap) + " | " +
              (inst.checks.asserted_ok ? "ok" : "FAILED") + " |\n";
    }

    md += "\n## Summary\n\n";
    md += std::string("- asserted lemma checks: ") +
          (result.asserted_ok ? "all passed" : "FAILURES (see instance table)") + "\n";
    md += "- contested-lemma violations: " + std::to_string(contested_violations) + "\n";
    md += "- witness files: " + std::to_string(witness_files.size()) + "\n";
    for (const std::string& f : witness_files) md += "  - " + f + "\n";

    atomic_write(dir / "campaign_report.md", md);
    return md;
}

}  // namespace hedgenash
