// hedgenash: fixed-rate exponential-weights dynamics on symmetric bimatrix
// games, with equilibrium-approximation reporting, accuracy schedules, an
// exact small-game oracle, and a lemma-verification harness.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hedgenash/campaign.hpp"
#include "hedgenash/generators.hpp"
#include "hedgenash/hedge.hpp"
#include "hedgenash/io.hpp"
#include "hedgenash/oracle.hpp"
#include "hedgenash/schedule.hpp"

namespace {

using namespace hedgenash;

struct GameSourceOptions {
    std::string game_path;
    std::string family;
    int n = 0;
    std::uint64_t seed = 0;
    bool normalize_flag = false;
};

void add_game_source(CLI::App* cmd, GameSourceOptions& src) {
    auto* file = cmd->add_option("--game", src.game_path, "game JSON file");
    auto* family = cmd->add_option("--family", src.family,
                                   "generator family (rps, random_uniform, doubly_symmetric, "
                                   "symmetric_zero_sum, coordination)");
    cmd->add_option("--n", src.n, "number of pure strategies (with --family)");
    cmd->add_option("--seed", src.seed, "generator seed (with --family)");
    cmd->add_flag("--normalize", src.normalize_flag,
                  "rescale file payoffs onto [0,1] before loading");
    file->excludes(family);
}

SymmetricGame resolve_game(const GameSourceOptions& src) {
    if (!src.game_path.empty()) return load_game(src.game_path, src.normalize_flag);
    if (src.family.empty()) {
        throw CLI::ValidationError("game source", "provide --game FILE or --family NAME --n N");
    }
    if (src.n < 1) throw CLI::ValidationError("--n", "required with --family");
    return generate(GeneratorSpec{family_from_string(src.family), src.n, src.seed});
}

int cmd_run(const GameSourceOptions& src, std::optional<double> alpha,
            std::optional<std::int64_t> iterations, std::optional<double> eps,
            const std::string& out_dir, std::int64_t observe_every) {
    const SymmetricGame game = resolve_game(src);

    double rate;
    std::int64_t budget;
    std::optional<FptasSchedule> schedule;
    if (eps) {
        schedule = build_schedule(game.size(), *eps);
        rate = schedule->alpha;
        budget = schedule->K;
    } else {
        rate = *alpha;
        budget = *iterations;
    }

    const std::vector<TrajectoryRecord> records =
        run_trajectory(game, rate, budget, observe_every);
    const TrajectoryRecord& last = records.back();

    const std::filesystem::path dir(out_dir);
    atomic_write(dir / "trajectory.csv", trajectory_csv(records));

    HedgeState state(game, rate);
    for (std::int64_t k = 0; k < budget; ++k) state.advance(game);
    nlohmann::json report = to_json(approximation_error(game, state.average()));
    report["game"] = game_to_json(game);
    report["alpha"] = rate;
    report["iterations"] = budget;
    if (schedule) report["schedule"] = to_json(*schedule);
    atomic_write(dir / "report.json", report.dump(2) + "\n");

    std::cout << "final eps_average=" << format_double(last.eps_average) << " target="
              << (eps ? format_double(*eps) : std::string("n/a"))
              << " bound=" << format_double(last.bound_rhs) << "\n";
    return 0;
}

int cmd_schedule(int n, double eps, const std::string& out_path) {
    const nlohmann::json j = to_json(build_schedule(n, eps));
    if (!out_path.empty()) atomic_write(out_path, j.dump(2) + "\n");
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_check(const GameSourceOptions& src, const CheckOptions& options,
              const std::string& out_dir) {
    const SymmetricGame game = resolve_game(src);
    const CheckResult result = run_checks(game, options);

    const std::filesystem::path dir(out_dir);
    nlohmann::json j{{"game", game_to_json(game)},
                     {"alpha", options.alpha},
                     {"iterations", options.iterations},
                     {"samples", options.samples},
                     {"final_eps_average", result.final_eps_average},
                     {"limit_gap", result.limit_gap},
                     {"regret", {{"value", result.regret},
                                 {"bound", result.regret_bound},
                                 {"passed", result.regret_ok}}},
                     {"asserted_ok", result.asserted_ok}};
    nlohmann::json reports = nlohmann::json::array();
    for (const LemmaReport& report : result.reports) {
        reports.push_back(to_json(report));
        if (report.witness) {
            atomic_write(dir / ("witness_" + std::string(to_string(report.lemma)) + ".json"),
                         to_json(*report.witness).dump(2) + "\n");
        }
    }
    j["reports"] = reports;
    atomic_write(dir / "check_report.json", j.dump(2) + "\n");

    for (const LemmaReport& report : result.reports) {
        std::cout << to_string(report.lemma) << (is_contested(report.lemma) ? " [reported]" : "")
                  << ": " << (report.passed ? "pass" : "VIOLATED") << " max_violation="
                  << format_double(report.max_violation) << "\n";
    }
    std::cout << "regret: " << (result.regret_ok ? "pass" : "VIOLATED")
              << " value=" << format_double(result.regret)
              << " bound=" << format_double(result.regret_bound) << "\n";
    std::cout << "final eps_average=" << format_double(result.final_eps_average) << "\n";
    return result.asserted_ok ? 0 : 1;
}

int cmd_oracle(const GameSourceOptions& src, const std::string& out_path) {
    const SymmetricGame game = resolve_game(src);
    const nlohmann::json j = to_json(support_enumeration(game));
    if (!out_path.empty()) atomic_write(out_path, j.dump(2) + "\n");
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_campaign(const CampaignOptions& options, const std::string& out_dir) {
    const CampaignResult result = run_campaign(options);
    write_campaign(result, out_dir);
    std::cout << "campaign: " << result.instances.size() << " instances, asserted lemmas "
              << (result.asserted_ok ? "all passed" : "FAILED") << "; report in " << out_dir
              << "\n";
    return result.asserted_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exponential-weights dynamics and equilibrium approximation on symmetric games"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "run a trajectory and write CSV + final report");
    GameSourceOptions run_src;
    add_game_source(run, run_src);
    std::optional<double> run_alpha;
    std::optional<std::int64_t> run_iters;
    std::optional<double> run_eps;
    std::string run_out = ".";
    std::int64_t run_stride = 0;
    auto* alpha_opt = run->add_option("--alpha", run_alpha, "learning rate");
    auto* iters_opt = run->add_option("--K", run_iters, "iteration count");
    auto* eps_opt = run->add_option("--eps", run_eps,
                                    "target accuracy; derives alpha and K from the schedule");
    run->add_option("--out", run_out, "output directory");
    run->add_option("--observe-every", run_stride, "record stride (default max(1, K/1000))");
    eps_opt->excludes(alpha_opt)->excludes(iters_opt);
    alpha_opt->needs(iters_opt);
    iters_opt->needs(alpha_opt);

    // schedule
    auto* schedule = app.add_subcommand("schedule", "print the parameter schedule for (n, eps)");
    int sched_n = 0;
    double sched_eps = 0.0;
    std::string sched_out;
    schedule->add_option("--n", sched_n, "number of pure strategies")->required();
    schedule->add_option("--eps", sched_eps, "target accuracy in (0, 1]")->required();
    schedule->add_option("--out", sched_out, "also write the JSON to this file");

    // check
    auto* check = app.add_subcommand("check", "run every lemma check against one game");
    GameSourceOptions check_src;
    add_game_source(check, check_src);
    CheckOptions check_options;
    std::string check_out = ".";
    check->add_option("--alpha", check_options.alpha, "learning rate (default 0.1)");
    check->add_option("--K", check_options.iterations, "trajectory length (default 2000)");
    check->add_option("--samples", check_options.samples, "one-step check samples (default 200)");
    check->add_option("--check-seed", check_options.seed, "sampling seed");
    check->add_option("--observe-every", check_options.observe_every,
                      "trajectory check stride (default max(1, K/1000))");
    check->add_option("--inject-fault", check_options.inject_fault,
                      "perturb the tracked average by this amount (harness self-test)");
    check->add_option("--out", check_out, "output directory");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "enumerate equilibria by support (n <= 12)");
    GameSourceOptions oracle_src;
    add_game_source(oracle, oracle_src);
    std::string oracle_out;
    oracle->add_option("--out", oracle_out, "also write the JSON to this file");

    // campaign
    auto* campaign = app.add_subcommand("campaign", "schedule grid over random games");
    CampaignOptions campaign_options;
    std::string campaign_out = "campaign";
    campaign->add_option("--games", campaign_options.games_per_cell, "games per (n, eps) cell");
    campaign->add_option("--base-seed", campaign_options.base_seed, "first instance seed");
    campaign->add_option("--samples", campaign_options.samples, "one-step samples per instance");
    campaign->add_option("--threads", campaign_options.threads,
                         "worker threads (default HEDGE_NASH_THREADS or hardware)");
    campaign->add_option("--out", campaign_out, "output directory");

    try {
        app.parse(argc, argv);
        if (run->parsed()) {
            if (!run_eps && !(run_alpha && run_iters)) {
                std::cerr << "run: provide either --eps or both --alpha and --K\n";
                return 2;
            }
            return cmd_run(run_src, run_alpha, run_iters, run_eps, run_out, run_stride);
        }
        if (schedule->parsed()) return cmd_schedule(sched_n, sched_eps, sched_out);
        if (check->parsed()) return cmd_check(check_src, check_options, check_out);
        if (oracle->parsed()) return cmd_oracle(oracle_src, oracle_out);
        if (campaign->parsed()) return cmd_campaign(campaign_options, campaign_out);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
