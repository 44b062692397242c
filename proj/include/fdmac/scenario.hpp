#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fdmac/network.hpp"
#include "fdmac/simulator.hpp"

namespace fdmac {

/// Malformed scenario or sweep input (unknown field, wrong type, bad value).
class ScenarioError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Preset { dca, fair };

std::string_view to_string(Preset preset);
std::optional<Preset> parse_preset(std::string_view text);

struct SimSettings {
  std::uint64_t slots = 1'000'000;
  std::optional<std::uint64_t> warmup;    ///< default_warmup(slots) when unset
  std::optional<std::size_t> capacity;    ///< default_capacity(config) when unset
  std::uint64_t seed = 0;
  BacklogPolicy backlog = BacklogPolicy::saturated;

  std::uint64_t warmup_or_default() const { return warmup.value_or(default_warmup(slots)); }
};

/// Either explicit access probabilities or a named preset, plus optional
/// simulation settings.
///
/// JSON form:
///   {"m": 1, "n": 1, "p_A": 0.6, "p_F": 0.3, "p_H": 0.1}
///   {"preset": "dca", "m": 2, "n": 2,
///    "sim": {"slots": 1000000, "warmup": 10000, "capacity": 40, "seed": 0,
///            "backlog": "saturated"}}
struct Scenario {
  std::optional<Preset> preset;
  int fd_count = 0;
  int hd_count = 0;
  double p_ap = 0.0;
  double p_fd = 0.0;
  double p_hd = 0.0;
  std::optional<SimSettings> sim;

  /// The configuration this scenario describes. A preset with zero stations
  /// throws EmptyNetwork; explicit values are returned as given (not validated).
  NetworkConfig network() const;

  /// "dca", "fair" or "explicit".
  std::string label() const;

  SimSettings sim_or_default() const { return sim.value_or(SimSettings{}); }
};

Scenario parse_scenario(const nlohmann::json& doc);
Scenario load_scenario(const std::filesystem::path& path);

/// 12 significant digits, '.' as decimal point regardless of locale.
std::string format_number(double value);

/// `value` rounded to 12 significant digits.
double round12(double value);

struct SweepSpec {
  int total_stations = 40;
  std::vector<int> fd_counts;  ///< empty selects 0..total_stations
  std::vector<Preset> presets{Preset::dca, Preset::fair};

  std::vector<int> fd_counts_or_all() const;
};

/// Problems with a sweep spec; empty means valid.
std::vector<std::string> check(const SweepSpec& spec);

struct SweepRow {
  std::string label;
  NetworkConfig config;
  ThroughputReport report;
};

/// Rows ordered by preset, then by FD count.
std::vector<SweepRow> sweep(const SweepSpec& spec);

std::string csv_header();
std::string csv_row(const SweepRow& row);

}  // namespace fdmac
