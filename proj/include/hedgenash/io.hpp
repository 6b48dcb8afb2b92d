#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "hedgenash/analysis.hpp"
#include "hedgenash/game.hpp"
#include "hedgenash/hedge.hpp"
#include "hedgenash/oracle.hpp"
#include "hedgenash/schedule.hpp"

namespace hedgenash {

// Game files: {"n": <int>, "payoffs": [<row-major n*n reals>], "label": <optional string>}.
// With normalize_entries the payoffs are affinely rescaled onto [0, 1];
// otherwise out-of-range entries are rejected.
SymmetricGame game_from_json(const nlohmann::json& j, bool normalize_entries = false);
nlohmann::json game_to_json(const SymmetricGame& game);
SymmetricGame load_game(const std::filesystem::path& path, bool normalize_entries = false);

// Header k,eps_iterate,eps_average,bound_rhs,regret_avg; 17 significant
// digits per value.
std::string trajectory_csv(const std::vector<TrajectoryRecord>& records);

nlohmann::json to_json(const ApproximationReport& report);
nlohmann::json to_json(const FptasSchedule& schedule);
nlohmann::json to_json(const EquilibriumSet& set);
nlohmann::json to_json(const Witness& witness);
nlohmann::json to_json(const LemmaReport& report);
Witness witness_from_json(const nlohmann::json& j);

// Whole-file atomic write (temp file + rename).
void atomic_write(const std::filesystem::path& path, const std::string& content);

std::string format_double(double v);  // %.17g

}  // namespace hedgenash
