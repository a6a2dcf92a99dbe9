#pragma once

#include <string>
#include <vector>

#include "bps/scenario.hpp"

namespace bps {

// Result table in the canonical column order.
std::string results_to_csv(const std::vector<ScenarioResult>& results);

// Fixed-width text table for terminal output.
std::string summary_table(const std::vector<ScenarioResult>& results);

// Deterministic bar charts: gas volume and net grid draw per scenario, and
// cost per scenario.
std::string consumption_chart_svg(const std::vector<ScenarioResult>& results);
std::string cost_chart_svg(const std::vector<ScenarioResult>& results);

// Writes charts and results.csv into out_dir (created if missing).
// results.csv is written last, via a temporary file and rename, so its
// presence means the run completed.
void write_report(const std::vector<ScenarioResult>& results, const std::string& out_dir);

}  // namespace bps
