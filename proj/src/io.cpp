#include "hedgenash/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace hedgenash {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

SymmetricGame game_from_json(const nlohmann::json& j, bool normalize_entries) {
    if (!j.is_object() || !j.contains("n") || !j.contains("payoffs")) {
        throw std::invalid_argument("game JSON must contain \"n\" and \"payoffs\"");
    }
    const int n = j.at("n").get<int>();
    const std::vector<double> payoffs = j.at("payoffs").get<std::vector<double>>();
    std::string label = j.value("label", std::string{});
    if (n < 1) throw std::invalid_argument("game JSON: n must be >= 1");
    if (payoffs.size() != static_cast<size_t>(n) * static_cast<size_t>(n)) {
        throw std::invalid_argument("game JSON: payoffs must have n*n entries");
    }
    if (normalize_entries) return normalize(n, payoffs, std::move(label));
    return SymmetricGame(n, payoffs, std::move(label));
}

nlohmann::json game_to_json(const SymmetricGame& game) {
    nlohmann::json j{{"n", game.size()}, {"payoffs", game.payoffs()}};
    if (!game.label().empty()) j["label"] = game.label();
    return j;
}

SymmetricGame load_game(const std::filesystem::path& path, bool normalize_entries) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open game file: " + path.string());
    nlohmann::json j;
    in >> j;
    return game_from_json(j, normalize_entries);
}

std::string trajectory_csv(const std::vector<TrajectoryRecord>& records) {
    std::string out = "k,eps_iterate,eps_average,bound_rhs,regret_avg\n";
    for (const TrajectoryRecord& r : records) {
        out += std::to_string(r.k);
        out += ',';
        out += format_double(r.eps_iterate);
        out += ',';
        out += format_double(r.eps_average);
        out += ',';
        out += format_double(r.bound_rhs);
        out += ',';
        out += format_double(r.regret_avg);
        out += '\n';
    }
    return out;
}

nlohmann::json to_json(const ApproximationReport& report) {
    return nlohmann::json{{"epsilon", report.epsilon},
                          {"payoff_max", report.payoff_max},
                          {"payoff_self", report.payoff_self},
                          {"best_response_index", report.best_response_index},
                          {"strategy", report.strategy.masses()}};
}

nlohmann::json to_json(const FptasSchedule& s) {
    return nlohmann::json{{"n", s.n},
                          {"eps_target", s.eps_target},
                          {"k_hat", s.k_hat},
                          {"eps_prime", s.eps_prime},
                          {"alpha", s.alpha},
                          {"theta", s.theta},
                          {"K", s.K},
                          {"k_prime", s.k_prime},
                          {"rho", s.rho},
                          {"predicted_error", s.predicted_error}};
}

nlohmann::json to_json(const EquilibriumSet& set) {
    nlohmann::json list = nlohmann::json::array();
    for (const OracleEquilibrium& eq : set.equilibria) {
        list.push_back(nlohmann::json{{"masses", eq.strategy.masses()},
                                      {"residual", eq.residual},
                                      {"support", eq.support}});
    }
    return nlohmann::json{{"equilibria", list},
                          {"game_label", set.game_label},
                          {"skipped_singular", set.skipped_singular}};
}

nlohmann::json to_json(const Witness& w) {
    nlohmann::json j{{"lemma", std::string(to_string(w.lemma))},
                     {"game", game_to_json(w.game)},
                     {"alpha", w.alpha},
                     {"k", w.k},
                     {"lhs", w.lhs},
                     {"rhs", w.rhs},
                     {"violation", w.violation}};
    if (w.x) j["x"] = w.x->masses();
    if (w.y) j["y"] = w.y->masses();
    return j;
}

Witness witness_from_json(const nlohmann::json& j) {
    Witness w{lemma_from_string(j.at("lemma").get<std::string>()),
              game_from_json(j.at("game")),
              j.at("alpha").get<double>(),
              j.at("k").get<std::int64_t>(),
              j.at("lhs").get<double>(),
              j.at("rhs").get<double>(),
              j.at("violation").get<double>(),
              {},
              {}};
    if (j.contains("x")) w.x = MixedStrategy(j.at("x").get<std::vector<double>>());
    if (j.contains("y")) w.y = MixedStrategy(j.at("y").get<std::vector<double>>());
    return w;
}

nlohmann::json to_json(const LemmaReport& report) {
    nlohmann::json j{{"lemma", std::string(to_string(report.lemma))},
                     {"samples", report.samples},
                     {"max_violation", report.max_violation},
                     {"passed", report.passed},
                     {"contested", is_contested(report.lemma)},
                     {"tolerance", lemma_tolerance(report.lemma)}};
    if (report.witness) j["witness"] = to_json(*report.witness);
    return j;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for write: " + tmp.string());
        out << content;
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace hedgenash
