// fdmac: throughput of a full-duplex AP serving mixed FD/HD stations.
//
//   fdmac theory   --preset dca --m 4 --n 36
//   fdmac simulate --m 1 --n 1 --pA 0.6 --pF 0.3 --pH 0.1 --seed 3
//   fdmac validate --preset fair --m 2 --n 2 --z-max 4
//   fdmac sweep    --total-stations 40 --presets dca,fair --out fig1.csv
//
// Exit codes: 0 ok, 1 validate failed statistically, 2 usage/config error,
// 3 output file error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fdmac/commands.hpp"
#include "fdmac/scenario.hpp"

namespace {

using fdmac::Scenario;

struct ScenarioFlags {
  std::string file;
  std::string preset;
  std::optional<int> m, n;
  std::optional<double> p_ap, p_fd, p_hd;
  std::optional<std::uint64_t> slots, warmup, capacity, seed;
  std::string backlog;

  void attach(CLI::App* cmd, bool with_sim) {
    cmd->add_option("--scenario", file, "Scenario JSON file")->check(CLI::ExistingFile);
    cmd->add_option("--preset", preset, "Named configuration")
        ->check(CLI::IsMember({"dca", "fair"}));
    cmd->add_option("--m", m, "Number of full-duplex stations")->check(CLI::NonNegativeNumber);
    cmd->add_option("--n", n, "Number of half-duplex stations")->check(CLI::NonNegativeNumber);
    cmd->add_option("--pA", p_ap, "AP access probability");
    cmd->add_option("--pF", p_fd, "Access probability of one FD station");
    cmd->add_option("--pH", p_hd, "Access probability of one HD station");
    if (!with_sim) return;
    cmd->add_option("--slots", slots, "Measured slots (default 1000000)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--warmup", warmup, "Discarded warm-up slots (default max(10000, slots/100))");
    cmd->add_option("--capacity", capacity, "AP queue capacity (default 10*(m+n))")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", seed, "PRNG seed (default 0)");
    cmd->add_option("--backlog", backlog, "AP queue policy")
        ->check(CLI::IsMember({"saturated", "fixed"}));
  }

  Scenario build() const {
    Scenario s;
    if (!file.empty()) s = fdmac::load_scenario(file);

    if (!preset.empty()) {
      s.preset = fdmac::parse_preset(preset);
    } else if (p_ap || p_fd || p_hd) {
      s.preset.reset();
    }
    if (file.empty() && (!m || !n)) throw fdmac::ScenarioError("--m and --n are required");
    if (m) s.fd_count = *m;
    if (n) s.hd_count = *n;
    if (!s.preset) {
      if (file.empty() && !(p_ap && p_fd && p_hd)) {
        throw fdmac::ScenarioError("give --preset, or all of --pA --pF --pH");
      }
      if (p_ap) s.p_ap = *p_ap;
      if (p_fd) s.p_fd = *p_fd;
      if (p_hd) s.p_hd = *p_hd;
    }

    if (slots || warmup || capacity || seed || !backlog.empty()) {
      fdmac::SimSettings sim = s.sim_or_default();
      if (slots) sim.slots = *slots;
      if (warmup) sim.warmup = *warmup;
      if (capacity) sim.capacity = *capacity;
      if (seed) sim.seed = *seed;
      if (!backlog.empty()) sim.backlog = *fdmac::parse_backlog_policy(backlog);
      s.sim = sim;
    }
    return s;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Throughput model and simulator for a full-duplex AP with mixed FD/HD stations"};
  app.require_subcommand(1);

  ScenarioFlags theory_flags, sim_flags, validate_flags;
  std::string theory_out;
  double z_max = fdmac::kDefaultZMax;

  auto* theory = app.add_subcommand("theory", "Closed-form per-flow throughputs");
  theory_flags.attach(theory, false);
  theory->add_option("--out", theory_out, "Also write the result as a one-row CSV");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo simulation of the slot process");
  sim_flags.attach(simulate, true);

  auto* validate = app.add_subcommand("validate", "Compare simulation with theory");
  validate_flags.attach(validate, true);
  validate->add_option("--z-max", z_max, "Largest accepted |z| per flow (default 4)");

  fdmac::SweepSpec spec;
  std::vector<std::string> presets;
  std::string sweep_out;
  auto* sweep = app.add_subcommand("sweep", "Closed-form sweep over the number of FD stations");
  sweep->add_option("--total-stations", spec.total_stations, "m + n for every point (default 40)");
  sweep->add_option("--m-values", spec.fd_counts, "FD counts to evaluate (default 0..total)")
      ->delimiter(',');
  sweep->add_option("--presets", presets, "Subset of dca,fair (default both)")
      ->delimiter(',')
      ->check(CLI::IsMember({"dca", "fair"}));
  sweep->add_option("--out", sweep_out, "CSV output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return fdmac::kExitUsage;
  }

  try {
    if (theory->parsed()) {
      std::optional<std::filesystem::path> out;
      if (!theory_out.empty()) out = theory_out;
      return fdmac::cmd_theory(theory_flags.build(), out, std::cout, std::cerr);
    }
    if (simulate->parsed()) return fdmac::cmd_simulate(sim_flags.build(), std::cout, std::cerr);
    if (validate->parsed()) {
      return fdmac::cmd_validate(validate_flags.build(), z_max, std::cout, std::cerr);
    }
    if (sweep->parsed()) {
      if (!presets.empty()) {
        spec.presets.clear();
        for (const auto& p : presets) spec.presets.push_back(*fdmac::parse_preset(p));
      }
      std::optional<std::filesystem::path> out;
      if (!sweep_out.empty()) out = sweep_out;
      return fdmac::cmd_sweep(spec, out, std::cout, std::cerr);
    }
  } catch (const fdmac::ScenarioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return fdmac::kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return fdmac::kExitIo;
  }
  return fdmac::kExitUsage;
}
