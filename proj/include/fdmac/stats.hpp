#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fdmac/network.hpp"
#include "fdmac/simulator.hpp"

namespace fdmac {

/// A slot fraction and its binomial standard error.
struct FlowEstimate {
  double mean = 0.0;
  double std_error = 0.0;

  friend bool operator==(const FlowEstimate&, const FlowEstimate&) = default;
};

/// count/total with standard error sqrt(q(1-q)/total), q = min(mean, 1).
/// Throws std::invalid_argument when total is 0.
FlowEstimate estimate(std::uint64_t count, std::uint64_t total);

/// Sum of independent estimates (variances add).
FlowEstimate operator+(const FlowEstimate& a, const FlowEstimate& b);

/// Rescales mean and standard error by `factor`.
FlowEstimate scaled(const FlowEstimate& e, double factor);

inline constexpr double kDefaultZMax = 4.0;

/// Tolerance for the exact comparison used when the standard error is 0.
inline constexpr double kExactMatchTolerance = 1e-9;

struct FlowComparison {
  std::string flow;
  bool applicable = true;
  double theory = 0.0;
  FlowEstimate empirical;
  double z = 0.0;  ///< +-inf when std_error == 0 and values differ
  bool pass = true;
};

struct ComparisonResult {
  std::vector<FlowComparison> flows;  ///< hd_down, hd_up, fd_down, fd_up, p, sum
  double z_max = kDefaultZMax;
  bool pass = true;

  const FlowComparison& flow(const std::string& name) const;
};

/// Empirical per-flow estimates from simulator counts.
///
/// Per-station flows are class totals divided by the class size, so the error
/// is that of the class-total slot fraction, rescaled. The sum is one plus
/// the binomial fraction of slots that carried both a downlink and an uplink.
struct EmpiricalEstimates {
  FlowEstimate hd_down, hd_up, fd_down, fd_up, head_fraction, sum;
};

EmpiricalEstimates estimates(const SimStats& stats, const NetworkConfig& config);

/// Theory against simulation, one z-score per flow. Flows of an absent class,
/// and the head fraction when the AP never won, are not applicable.
ComparisonResult compare(const ThroughputReport& theory, const SimStats& stats,
                         const NetworkConfig& config, double z_max = kDefaultZMax);

}  // namespace fdmac
