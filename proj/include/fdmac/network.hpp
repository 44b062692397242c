#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fdmac {

/// Access configuration of one AP serving `fd_count` full-duplex and
/// `hd_count` half-duplex stations. Each probability is the chance that the
/// AP, one given FD station or one given HD station wins a slot.
struct NetworkConfig {
  int fd_count = 0;
  int hd_count = 0;
  double p_ap = 0.0;
  double p_fd = 0.0;
  double p_hd = 0.0;

  int station_count() const { return fd_count + hd_count; }

  friend bool operator==(const NetworkConfig&, const NetworkConfig&) = default;
};

/// Normalized throughputs: the fraction of all slots carrying data on a
/// directed flow. Per-station flows refer to one station of the class.
struct ThroughputReport {
  double head_fraction = 0.0;  ///< share of AP-won slots with an HD packet at the head
  double hd_down = 0.0;
  double hd_up = 0.0;
  double fd_down = 0.0;
  double fd_up = 0.0;
  double sum = 0.0;

  friend bool operator==(const ThroughputReport&, const ThroughputReport&) = default;
};

enum class ViolationKind {
  empty_network,
  negative_count,
  probability_range,
  probability_sum,
  unused_fd_probability,
  unused_hd_probability,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

std::string to_string(ViolationKind kind);

/// Thrown by operations that need a valid configuration.
class InvalidConfig : public std::invalid_argument {
 public:
  explicit InvalidConfig(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Thrown by the preset constructors when asked for zero stations.
class EmptyNetwork : public std::invalid_argument {
 public:
  EmptyNetwork() : std::invalid_argument("network needs at least one station") {}
};

enum class StationClass : std::uint8_t { fd, hd };

/// A station identified by class and index within the class.
struct StationId {
  StationClass cls = StationClass::hd;
  int index = 0;

  static constexpr StationId fd(int i) { return {StationClass::fd, i}; }
  static constexpr StationId hd(int j) { return {StationClass::hd, j}; }

  friend auto operator<=>(const StationId&, const StationId&) = default;
};

std::string to_string(StationClass cls);
std::string to_string(StationId id);

}  // namespace fdmac
