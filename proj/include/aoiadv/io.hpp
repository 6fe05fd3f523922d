#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <nlohmann/json.hpp>

#include "aoiadv/adversary.hpp"
#include "aoiadv/bounds.hpp"
#include "aoiadv/exact_age.hpp"
#include "aoiadv/model.hpp"
#include "aoiadv/sched_sim.hpp"

namespace aoiadv {

using nlohmann::json;

/// One line per row of '0'/'1' characters, each terminated by '\n'.
std::string to_grid(const BlockingMatrix& sigma);
/// Inverse of to_grid; the final newline is optional. Throws ShapeError on
/// ragged rows, empty input or characters other than '0', '1' and '\n'.
BlockingMatrix parse_grid(std::string_view text);

json to_json(const SystemConfig& config);
SystemConfig config_from_json(const json& j);

/// Config fields plus "grid": [row strings].
json matrix_to_json(const SystemConfig& config, const BlockingMatrix& sigma);
std::pair<SystemConfig, BlockingMatrix> matrix_from_json(const json& j);

/// Columns: t,user,delta_exact_num,delta_exact_den,delta_float.
void write_trajectory_csv(std::ostream& os, const AgeTrajectory& trajectory);
json to_json(const AgeTrajectory& trajectory);

json to_json(const MaximizerSet& set);
json to_json(const SimulationReport& report);
void write_report_csv(std::ostream& os, const SimulationReport& report);
json to_json(const BoundReport& bound);
json to_json(const ExactComparison& comparison);
/// Rows of run,t,user,served,subcarrier,age (subcarrier 0 when unused).
void write_trace_csv(std::ostream& os, const RunTrace& trace);

}  // namespace aoiadv
