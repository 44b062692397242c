#include "fdmac/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace fdmac {

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::empty_network: return "empty_network";
    case ViolationKind::negative_count: return "negative_count";
    case ViolationKind::probability_range: return "probability_range";
    case ViolationKind::probability_sum: return "probability_sum";
    case ViolationKind::unused_fd_probability: return "unused_fd_probability";
    case ViolationKind::unused_hd_probability: return "unused_hd_probability";
  }
  return "unknown";
}

std::string to_string(StationClass cls) { return cls == StationClass::fd ? "FD" : "HD"; }

std::string to_string(StationId id) {
  return to_string(id.cls) + "(" + std::to_string(id.index) + ")";
}

namespace {

std::string describe(const std::vector<Violation>& violations) {
  std::string out = "invalid network configuration:";
  for (const auto& v : violations) {
    out += "\n  " + v.message;
  }
  return out;
}

template <typename... Args>
std::string concat(Args&&... args) {
  std::ostringstream os;
  os.precision(17);
  (os << ... << std::forward<Args>(args));
  return os.str();
}

}  // namespace

InvalidConfig::InvalidConfig(std::vector<Violation> violations)
    : std::invalid_argument(describe(violations)), violations_(std::move(violations)) {}

std::vector<Violation> validate(const NetworkConfig& c) {
  std::vector<Violation> out;
  if (c.fd_count < 0 || c.hd_count < 0) {
    out.push_back({ViolationKind::negative_count,
                   concat("station counts must be non-negative (m=", c.fd_count,
                          ", n=", c.hd_count, ")")});
  } else if (c.fd_count + c.hd_count < 1) {
    out.push_back({ViolationKind::empty_network, "m + n must be at least 1 (m=0, n=0)"});
  }

  const std::pair<const char*, double> probs[] = {
      {"p_A", c.p_ap}, {"p_F", c.p_fd}, {"p_H", c.p_hd}};
  bool finite = true;
  for (const auto& [name, value] : probs) {
    if (!(value >= 0.0 && value <= 1.0)) {
      finite = finite && std::isfinite(value);
      out.push_back({ViolationKind::probability_range,
                     concat(name, " must lie in [0, 1] (", name, "=", value, ")")});
    }
  }

  if (finite) {
    const double total = c.p_ap + c.fd_count * c.p_fd + c.hd_count * c.p_hd;
    if (std::abs(total - 1.0) > kProbabilitySumTolerance) {
      out.push_back({ViolationKind::probability_sum,
                     concat("p_A + m*p_F + n*p_H must equal 1 (got ", total, " with p_A=", c.p_ap,
                            ", m=", c.fd_count, ", p_F=", c.p_fd, ", n=", c.hd_count,
                            ", p_H=", c.p_hd, ")")});
    }
  }
  if (c.fd_count == 0 && c.p_fd != 0.0) {
    out.push_back({ViolationKind::unused_fd_probability,
                   concat("m=0 requires p_F=0 (p_F=", c.p_fd, ")")});
  }
  if (c.hd_count == 0 && c.p_hd != 0.0) {
    out.push_back({ViolationKind::unused_hd_probability,
                   concat("n=0 requires p_H=0 (p_H=", c.p_hd, ")")});
  }
  return out;
}

void require_valid(const NetworkConfig& config) {
  if (auto violations = validate(config); !violations.empty()) {
    throw InvalidConfig(std::move(violations));
  }
}

double head_fraction(const NetworkConfig& c) {
  require_valid(c);
  if (c.fd_count == 0) return 1.0;
  if (c.hd_count == 0) return 0.0;
  if (c.p_ap == 0.0) return 0.0;

  const double fd = c.fd_count;
  const double hd = c.hd_count;
  return std::min(1.0, hd / (hd + fd) * (c.p_ap + fd * c.p_fd) / c.p_ap);
}

ThroughputReport throughputs(const NetworkConfig& c) {
  ThroughputReport r;
  r.head_fraction = head_fraction(c);
  const double p = r.head_fraction;

  if (c.hd_count > 0) {
    r.hd_down = c.p_ap * p / c.hd_count;
    r.hd_up = c.p_hd;
  }
  if (c.fd_count > 0) {
    r.fd_down = c.p_ap * (1.0 - p) / c.fd_count + c.p_fd;
    r.fd_up = r.fd_down;
  }
  r.sum = 1.0 + c.fd_count * c.p_fd + c.p_ap * (1.0 - p);
  return r;
}

NetworkConfig dca_config(int fd_count, int hd_count) {
  if (fd_count < 0 || hd_count < 0) {
    throw std::invalid_argument("station counts must be non-negative");
  }
  if (fd_count + hd_count == 0) throw EmptyNetwork();

  const double share = 1.0 / (1.0 + fd_count + hd_count);
  return {.fd_count = fd_count,
          .hd_count = hd_count,
          .p_ap = share,
          .p_fd = fd_count > 0 ? share : 0.0,
          .p_hd = hd_count > 0 ? share : 0.0};
}

NetworkConfig fairness_config(int fd_count, int hd_count) {
  if (fd_count < 0 || hd_count < 0) {
    throw std::invalid_argument("station counts must be non-negative");
  }
  if (fd_count + hd_count == 0) throw EmptyNetwork();

  if (hd_count == 0) {
    return {.fd_count = fd_count, .hd_count = 0, .p_ap = 0.0, .p_fd = 1.0 / fd_count, .p_hd = 0.0};
  }
  const double denom = 2.0 * hd_count + fd_count;
  return {.fd_count = fd_count,
          .hd_count = hd_count,
          .p_ap = hd_count / denom,
          .p_fd = fd_count > 0 ? 1.0 / denom : 0.0,
          .p_hd = 1.0 / denom};
}

double dca_gain(int fd_count, int hd_count) {
  if (fd_count < 0 || hd_count < 0) {
    throw std::invalid_argument("station counts must be non-negative");
  }
  if (fd_count + hd_count == 0) throw EmptyNetwork();
  return 1.0 + static_cast<double>(fd_count) / (1.0 + fd_count + hd_count);
}

}  // namespace fdmac
