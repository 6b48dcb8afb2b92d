#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "hedgenash/analysis.hpp"
#include "hedgenash/game.hpp"
#include "hedgenash/schedule.hpp"

namespace hedgenash {

// Full lemma-check bundle for one game: sampled one-step checks plus
// trajectory checks at a fixed learning rate.
struct CheckOptions {
    double alpha = 0.1;
    std::int64_t iterations = 2000;
    std::int64_t observe_every = 0;  // 0 -> max(1, iterations/1000)
    int samples = 200;
    std::uint64_t seed = 0;
    double inject_fault = 0.0;  // harness self-test hook, see check_average_identities
};

struct CheckResult {
    std::vector<LemmaReport> reports;  // all nine, enum order
    double final_eps_average = 0.0;
    double limit_gap = 0.0;
    double regret = 0.0;
    double regret_bound = 0.0;
    bool regret_ok = true;
    bool asserted_ok = true;  // every non-contested report passed and regret_ok
};

CheckResult run_checks(const SymmetricGame& game, const CheckOptions& options);

// Merges per-sample reports of the same lemma, keeping the worst witness.
void merge_reports(LemmaReport& into, const LemmaReport& from);

// Schedule-driven grid of random games. Instances are enumerated in (size,
// target, game) order with seeds base_seed + index; results are merged by
// that index, so output is identical regardless of thread count.
struct CampaignOptions {
    std::vector<int> sizes = {2, 3, 4};
    std::vector<double> targets = {0.1, 0.2};
    int games_per_cell = 10;
    std::uint64_t base_seed = 1;
    int samples = 50;
    int threads = 0;  // 0 -> HEDGE_NASH_THREADS or hardware concurrency
};

struct CampaignInstance {
    std::size_t index = 0;
    int n = 0;
    double eps = 0.0;
    std::uint64_t seed = 0;
    FptasSchedule schedule;
    CheckResult checks;
    bool target_met = false;
};

struct CampaignResult {
    CampaignOptions options;
    std::vector<CampaignInstance> instances;
    bool asserted_ok = true;
};

CampaignResult run_campaign(const CampaignOptions& options);

// campaign_report.md, campaign.json, and one witness file per violated
// (instance, lemma). Returns the markdown.
std::string write_campaign(const CampaignResult& result, const std::filesystem::path& dir);

// Thread budget: explicit requests win, then HEDGE_NASH_THREADS, then
// hardware concurrency.
int resolve_threads(int requested);

}  // namespace hedgenash
