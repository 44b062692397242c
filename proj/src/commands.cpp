#include "fdmac/commands.hpp"

#include <cmath>
#include <fstream>

#include "fdmac/analytic.hpp"
#include "fdmac/rng.hpp"

namespace fdmac {

using nlohmann::json;

namespace {

json number(double v) { return std::isfinite(v) ? json(round12(v)) : json(nullptr); }

// Resolves and validates a scenario, reporting problems on `err`.
std::optional<NetworkConfig> resolve(const Scenario& scenario, std::ostream& err) {
  NetworkConfig config;
  try {
    config = scenario.network();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return std::nullopt;
  }
  if (auto violations = validate(config); !violations.empty()) {
    err << "error: invalid network configuration\n";
    for (const auto& v : violations) err << "  " << to_string(v.kind) << ": " << v.message << "\n";
    return std::nullopt;
  }
  return config;
}

json sim_json(const SimSettings& s, std::size_t capacity) {
  return {{"slots", s.slots},
          {"warmup", s.warmup_or_default()},
          {"capacity", capacity},
          {"seed", s.seed},
          {"backlog", std::string(to_string(s.backlog))},
          {"rng", std::string(Rng::kAlgorithm)}};
}

struct SimRun {
  SimSettings settings;
  std::size_t capacity;
  SimStats stats;
};

SimRun simulate(const Scenario& scenario, const NetworkConfig& config) {
  const SimSettings s = scenario.sim_or_default();
  const std::size_t capacity = s.capacity.value_or(default_capacity(config));
  return {s, capacity, run(config, s.slots, s.warmup_or_default(), capacity, s.seed, s.backlog)};
}

}  // namespace

json to_json(const NetworkConfig& c) {
  return {{"m", c.fd_count},
          {"n", c.hd_count},
          {"p_A", number(c.p_ap)},
          {"p_F", number(c.p_fd)},
          {"p_H", number(c.p_hd)}};
}

json to_json(const ThroughputReport& r) {
  return {{"p", number(r.head_fraction)}, {"hd_down", number(r.hd_down)},
          {"hd_up", number(r.hd_up)},     {"fd_down", number(r.fd_down)},
          {"fd_up", number(r.fd_up)},     {"sum", number(r.sum)}};
}

json to_json(const ComparisonResult& result) {
  json flows = json::array();
  for (const auto& f : result.flows) {
    flows.push_back({{"flow", f.flow},
                     {"applicable", f.applicable},
                     {"theory", number(f.theory)},
                     {"estimate", number(f.empirical.mean)},
                     {"std_error", number(f.empirical.std_error)},
                     {"z", f.applicable ? number(f.z) : json(nullptr)},
                     {"pass", f.pass}});
  }
  return {{"z_max", number(result.z_max)}, {"pass", result.pass}, {"flows", flows}};
}

int cmd_theory(const Scenario& scenario, const std::optional<std::filesystem::path>& csv_out,
               std::ostream& out, std::ostream& err) {
  const auto config = resolve(scenario, err);
  if (!config) return kExitUsage;
  const ThroughputReport report = throughputs(*config);

  if (csv_out) {
    std::ofstream csv(*csv_out);
    csv << csv_header() << "\n" << csv_row({scenario.label(), *config, report}) << "\n";
    if (!csv) {
      err << "error: cannot write " << csv_out->string() << "\n";
      return kExitIo;
    }
  }
  json doc = {{"command", "theory"},
              {"scenario", scenario.label()},
              {"config", to_json(*config)},
              {"theory", to_json(report)}};
  out << doc.dump(2) << "\n";
  return kExitOk;
}

int cmd_simulate(const Scenario& scenario, std::ostream& out, std::ostream& err) {
  const auto config = resolve(scenario, err);
  if (!config) return kExitUsage;

  const SimRun r = simulate(scenario, *config);
  const EmpiricalEstimates e = estimates(r.stats, *config);
  const ThroughputReport empirical = empirical_report(r.stats, *config);

  json doc = {
      {"command", "simulate"},
      {"scenario", scenario.label()},
      {"config", to_json(*config)},
      {"sim", sim_json(r.settings, r.capacity)},
      {"theory", to_json(throughputs(*config))},
      {"empirical", to_json(empirical)},
      {"std_error",
       {{"p", number(e.head_fraction.std_error)},
        {"hd_down", number(e.hd_down.std_error)},
        {"hd_up", number(e.hd_up.std_error)},
        {"fd_down", number(e.fd_down.std_error)},
        {"fd_up", number(e.fd_up.std_error)},
        {"sum", number(e.sum.std_error)}}},
      {"counts",
       {{"total_slots", r.stats.total_slots},
        {"ap_wins", r.stats.ap_wins},
        {"ap_wins_hd_head", r.stats.ap_wins_hd_head},
        {"fd_wins_no_packet", r.stats.fd_wins_no_packet}}},
      {"fd_wins_no_packet_fraction",
       number(static_cast<double>(r.stats.fd_wins_no_packet) /
              static_cast<double>(r.stats.total_slots))},
  };
  out << doc.dump(2) << "\n";
  return kExitOk;
}

int cmd_sweep(const SweepSpec& spec, const std::optional<std::filesystem::path>& csv_out,
              std::ostream& out, std::ostream& err) {
  if (auto problems = check(spec); !problems.empty()) {
    err << "error: invalid sweep\n";
    for (const auto& p : problems) err << "  " << p << "\n";
    return kExitUsage;
  }

  std::string text = csv_header() + "\n";
  for (const SweepRow& row : sweep(spec)) text += csv_row(row) + "\n";

  if (!csv_out) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(*csv_out, std::ios::binary);
  file << text;
  file.close();
  if (!file) {
    err << "error: cannot write " << csv_out->string() << "\n";
    return kExitIo;
  }
  return kExitOk;
}

int cmd_validate(const Scenario& scenario, double z_max, std::ostream& out, std::ostream& err) {
  if (!(z_max > 0.0)) {
    err << "error: --z-max must be positive\n";
    return kExitUsage;
  }
  const auto config = resolve(scenario, err);
  if (!config) return kExitUsage;

  const SimRun r = simulate(scenario, *config);
  const ComparisonResult result = compare(throughputs(*config), r.stats, *config, z_max);

  json doc = to_json(result);
  doc["command"] = "validate";
  doc["scenario"] = scenario.label();
  doc["config"] = to_json(*config);
  doc["sim"] = sim_json(r.settings, r.capacity);
  doc["fd_wins_no_packet"] = r.stats.fd_wins_no_packet;
  out << doc.dump(2) << "\n";
  return result.pass ? kExitOk : kExitStatFail;
}

}  // namespace fdmac
