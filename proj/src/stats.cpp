#include "fdmac/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace fdmac {

FlowEstimate estimate(std::uint64_t count, std::uint64_t total) {
  if (total == 0) throw std::invalid_argument("estimate over zero slots");
  const double mean = static_cast<double>(count) / static_cast<double>(total);
  const double q = std::min(mean, 1.0);
  return {mean, std::sqrt(std::max(q * (1.0 - q), 0.0) / static_cast<double>(total))};
}

FlowEstimate operator+(const FlowEstimate& a, const FlowEstimate& b) {
  return {a.mean + b.mean, std::hypot(a.std_error, b.std_error)};
}

FlowEstimate scaled(const FlowEstimate& e, double factor) {
  return {e.mean * factor, e.std_error * std::abs(factor)};
}

const FlowComparison& ComparisonResult::flow(const std::string& name) const {
  auto it = std::find_if(flows.begin(), flows.end(),
                         [&](const FlowComparison& f) { return f.flow == name; });
  if (it == flows.end()) throw std::out_of_range("no flow named " + name);
  return *it;
}

namespace {

std::uint64_t total(const std::vector<std::uint64_t>& v) {
  return std::accumulate(v.begin(), v.end(), std::uint64_t{0});
}

FlowEstimate per_station(std::uint64_t class_total, std::uint64_t slots, int stations) {
  if (stations == 0) return {};
  return scaled(estimate(class_total, slots), 1.0 / stations);
}

FlowComparison judge(std::string name, bool applicable, double theory, FlowEstimate e,
                     double z_max) {
  FlowComparison f{std::move(name), applicable, theory, e, 0.0, true};
  const double diff = e.mean - theory;
  if (e.std_error > 0.0) {
    f.z = diff / e.std_error;
  } else if (std::abs(diff) > kExactMatchTolerance) {
    f.z = std::copysign(std::numeric_limits<double>::infinity(), diff);
  }
  f.pass = !applicable || std::abs(f.z) <= z_max;
  return f;
}

}  // namespace

EmpiricalEstimates estimates(const SimStats& stats, const NetworkConfig& config) {
  const std::uint64_t slots = stats.total_slots;
  if (slots == 0) throw std::invalid_argument("no measured slots");

  EmpiricalEstimates e;
  e.hd_down = per_station(total(stats.hd_down), slots, config.hd_count);
  e.hd_up = per_station(total(stats.hd_up), slots, config.hd_count);
  e.fd_down = per_station(total(stats.fd_down), slots, config.fd_count);
  e.fd_up = per_station(total(stats.fd_up), slots, config.fd_count);
  e.head_fraction =
      stats.ap_wins == 0 ? FlowEstimate{} : estimate(stats.ap_wins_hd_head, stats.ap_wins);
  // Every slot moves one or two packets, so the sum is one plus the binomial
  // fraction of dual-packet slots; down and up are far from independent.
  const std::uint64_t moved = stats.total_down() + stats.total_up();
  if (moved < slots) throw std::logic_error("slots without any transmission");
  e.sum = estimate(moved - slots, slots);
  e.sum.mean += 1.0;
  return e;
}

ComparisonResult compare(const ThroughputReport& theory, const SimStats& stats,
                         const NetworkConfig& config, double z_max) {
  if (!(z_max > 0.0)) throw std::invalid_argument("z_max must be positive");
  const EmpiricalEstimates e = estimates(stats, config);
  const bool has_hd = config.hd_count > 0;
  const bool has_fd = config.fd_count > 0;

  ComparisonResult r;
  r.z_max = z_max;
  r.flows = {
      judge("hd_down", has_hd, theory.hd_down, e.hd_down, z_max),
      judge("hd_up", has_hd, theory.hd_up, e.hd_up, z_max),
      judge("fd_down", has_fd, theory.fd_down, e.fd_down, z_max),
      judge("fd_up", has_fd, theory.fd_up, e.fd_up, z_max),
      judge("p", stats.ap_wins > 0, theory.head_fraction, e.head_fraction, z_max),
      judge("sum", true, theory.sum, e.sum, z_max),
  };
  r.pass = std::all_of(r.flows.begin(), r.flows.end(), [](const auto& f) { return f.pass; });
  return r;
}

}  // namespace fdmac
