#pragma once

#include <filesystem>
#include <optional>
#include <ostream>

#include <json.hpp>

#include "fdmac/scenario.hpp"
#include "fdmac/stats.hpp"

namespace fdmac {

enum ExitCode : int {
  kExitOk = 0,
  kExitStatFail = 1,  ///< validate: some flow outside z_max
  kExitUsage = 2,     ///< bad arguments, scenario or configuration
  kExitIo = 3,        ///< output file could not be written
};

nlohmann::json to_json(const NetworkConfig& config);
nlohmann::json to_json(const ThroughputReport& report);
nlohmann::json to_json(const ComparisonResult& result);

/// Prints the closed-form report as JSON; with `csv_out`, also writes it as a
/// one-row CSV in the sweep column layout.
int cmd_theory(const Scenario& scenario, const std::optional<std::filesystem::path>& csv_out,
               std::ostream& out, std::ostream& err);

/// Runs the simulator and prints empirical and theory values side by side.
int cmd_simulate(const Scenario& scenario, std::ostream& out, std::ostream& err);

/// Writes the sweep CSV to `csv_out`, or to `out` when no path is given.
int cmd_sweep(const SweepSpec& spec, const std::optional<std::filesystem::path>& csv_out,
              std::ostream& out, std::ostream& err);

/// Runs the simulator and compares it with theory; exit code 0 on pass, 1 on fail.
int cmd_validate(const Scenario& scenario, double z_max, std::ostream& out, std::ostream& err);

}  // namespace fdmac
