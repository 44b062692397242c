#pragma once

#include <vector>

#include "fdmac/network.hpp"

namespace fdmac {

/// Absolute tolerance on p_ap + fd_count*p_fd + hd_count*p_hd == 1.
inline constexpr double kProbabilitySumTolerance = 1e-9;

/// Checks every configuration invariant. An empty result means the
/// configuration is usable; violations are reported, never thrown.
std::vector<Violation> validate(const NetworkConfig& config);

/// Throws InvalidConfig if validate() reports anything.
void require_valid(const NetworkConfig& config);

/// Fraction of AP-won slots whose head-of-queue packet is for an HD station.
///
/// min(1, hd/(hd+fd) * (p_ap + fd*p_fd) / p_ap) for a mixed network. When
/// there are no FD stations the head is always HD (1); when there are no HD
/// stations it never is (0). A mixed network with p_ap == 0 reports 0: the
/// value is only ever multiplied by p_ap, so no throughput depends on it.
double head_fraction(const NetworkConfig& config);

/// Steady-state per-flow throughputs. Flows of an absent class are 0.
ThroughputReport throughputs(const NetworkConfig& config);

/// Equal access for every node: p_ap = p_fd = p_hd = 1/(1+fd+hd). The
/// probability of an empty class is set to 0.
NetworkConfig dca_config(int fd_count, int hd_count);

/// Access probabilities that equalize every station's uplink and downlink:
/// p_hd = p_fd = 1/(2hd+fd), p_ap = hd/(2hd+fd). Without HD stations the AP
/// never contends and each FD station gets 1/fd.
NetworkConfig fairness_config(int fd_count, int hd_count);

/// Sum-throughput gain of the equal-access network over an all-HD one,
/// 1 + fd/(1+fd+hd).
double dca_gain(int fd_count, int hd_count);

}  // namespace fdmac
