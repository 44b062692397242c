#include "fdmac/simulator.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fdmac/analytic.hpp"

namespace fdmac {

std::string_view to_string(BacklogPolicy policy) {
  return policy == BacklogPolicy::saturated ? "saturated" : "fixed";
}

std::optional<BacklogPolicy> parse_backlog_policy(std::string_view text) {
  if (text == "saturated") return BacklogPolicy::saturated;
  if (text == "fixed") return BacklogPolicy::fixed;
  return std::nullopt;
}

SimStats::SimStats(int fd_count, int hd_count)
    : fd_count(fd_count),
      hd_count(hd_count),
      fd_down(fd_count),
      fd_up(fd_count),
      hd_down(hd_count),
      hd_up(hd_count) {}

std::uint64_t SimStats::down_slots(StationId s) const {
  return s.cls == StationClass::fd ? fd_down.at(s.index) : hd_down.at(s.index);
}

std::uint64_t SimStats::up_slots(StationId s) const {
  return s.cls == StationClass::fd ? fd_up.at(s.index) : hd_up.at(s.index);
}

namespace {
std::uint64_t total(const std::vector<std::uint64_t>& v) {
  return std::accumulate(v.begin(), v.end(), std::uint64_t{0});
}
}  // namespace

std::uint64_t SimStats::total_down() const { return total(fd_down) + total(hd_down); }
std::uint64_t SimStats::total_up() const { return total(fd_up) + total(hd_up); }

std::size_t default_capacity(const NetworkConfig& config) {
  return 10 * static_cast<std::size_t>(std::max(config.station_count(), 0));
}

std::uint64_t default_warmup(std::uint64_t measured_slots) {
  return std::max<std::uint64_t>(10'000, measured_slots / 100);
}

Simulation::Simulation(const NetworkConfig& config, const SimOptions& options)
    : config_(config),
      capacity_(options.capacity.value_or(default_capacity(config))),
      backlog_(options.backlog),
      warmup_slots_(options.warmup_slots),
      rng_(options.seed),
      queue_((require_valid(config), config.fd_count), config.hd_count),
      stats_(config.fd_count, config.hd_count) {
  if (capacity_ == 0) throw std::invalid_argument("queue capacity must be at least 1");
  refill();
}

Simulation::Simulation(const NetworkConfig& config, std::vector<Packet> initial_queue,
                       const SimOptions& options)
    : config_(config),
      capacity_(initial_queue.size()),
      backlog_(options.backlog),
      warmup_slots_(options.warmup_slots),
      rng_(options.seed),
      queue_((require_valid(config), config.fd_count), config.hd_count),
      stats_(config.fd_count, config.hd_count) {
  if (capacity_ == 0) throw std::invalid_argument("queue capacity must be at least 1");
  for (const Packet& p : initial_queue) queue_.push_back(p);
}

Packet Simulation::fresh_packet() {
  const auto k = static_cast<int>(rng_.below(static_cast<std::uint64_t>(config_.station_count())));
  return k < config_.fd_count ? Packet{StationId::fd(k)}
                              : Packet{StationId::hd(k - config_.fd_count)};
}

void Simulation::refill() {
  while (queue_.size() < capacity_) queue_.push_back(fresh_packet());
}

Node Simulation::draw_winner() {
  const NetworkConfig& c = config_;
  double u = rng_.uniform();
  if (u < c.p_ap) return Node::ap();
  u -= c.p_ap;

  const double fd_mass = c.fd_count * c.p_fd;
  if (c.p_fd > 0.0 && u < fd_mass) {
    return Node::fd(std::min(c.fd_count - 1, static_cast<int>(u / c.p_fd)));
  }
  u -= fd_mass;

  if (c.hd_count > 0 && c.p_hd > 0.0) {
    return Node::hd(std::min(c.hd_count - 1, static_cast<int>(u / c.p_hd)));
  }
  // Only reachable through rounding when the probabilities sum to just under 1.
  if (c.fd_count > 0 && c.p_fd > 0.0) return Node::fd(c.fd_count - 1);
  return Node::ap();
}

SlotOutcome Simulation::step() { return play(draw_winner()); }

SlotOutcome Simulation::play(Node winner) {
  SlotOutcome out;
  out.winner = winner;
  out.measured = slots_played_ >= warmup_slots_;
  ++slots_played_;

  switch (winner.kind) {
    case NodeKind::ap: {
      const Packet p = queue_.pop_head();
      out.head_class_at_win = p.destination.cls;
      out.downlink_to = p.destination;
      if (p.destination.cls == StationClass::fd) out.uplink_from = p.destination;
      break;
    }
    case NodeKind::hd:
      if (winner.index < 0 || winner.index >= config_.hd_count) {
        throw std::out_of_range("no such HD station");
      }
      out.uplink_from = StationId::hd(winner.index);
      break;
    case NodeKind::fd: {
      if (winner.index < 0 || winner.index >= config_.fd_count) {
        throw std::out_of_range("no such FD station");
      }
      const StationId me = StationId::fd(winner.index);
      out.uplink_from = me;
      if (queue_.remove_first(me)) {
        out.downlink_to = me;
      } else if (backlog_ == BacklogPolicy::saturated) {
        // Bring the stream forward until this station's next packet shows up;
        // the packets drawn on the way stay queued in arrival order.
        for (Packet p = fresh_packet(); p.destination != me; p = fresh_packet()) {
          queue_.push_back(p);
        }
        out.downlink_to = me;
      } else if (out.measured) {
        ++stats_.fd_wins_no_packet;
      }
      break;
    }
  }
  refill();

  if (out.measured) {
    ++stats_.total_slots;
    if (out.downlink_to) {
      auto& v = out.downlink_to->cls == StationClass::fd ? stats_.fd_down : stats_.hd_down;
      ++v[out.downlink_to->index];
    }
    if (out.uplink_from) {
      auto& v = out.uplink_from->cls == StationClass::fd ? stats_.fd_up : stats_.hd_up;
      ++v[out.uplink_from->index];
    }
    if (winner.kind == NodeKind::ap) {
      ++stats_.ap_wins;
      if (out.head_class_at_win == StationClass::hd) ++stats_.ap_wins_hd_head;
    }
  }
  return out;
}

SimStats run(const NetworkConfig& config, std::uint64_t measured_slots,
             std::uint64_t warmup_slots, std::size_t capacity, std::uint64_t seed,
             BacklogPolicy backlog) {
  if (measured_slots == 0) throw std::invalid_argument("measured_slots must be at least 1");
  Simulation sim(config, SimOptions{.capacity = capacity,
                                    .seed = seed,
                                    .warmup_slots = warmup_slots,
                                    .backlog = backlog});
  const std::uint64_t total = warmup_slots + measured_slots;
  for (std::uint64_t t = 0; t < total; ++t) sim.step();
  return sim.stats();
}

ThroughputReport empirical_report(const SimStats& stats, const NetworkConfig& config) {
  if (stats.total_slots == 0) throw std::invalid_argument("no measured slots");
  const auto slots = static_cast<double>(stats.total_slots);

  ThroughputReport r;
  if (config.hd_count > 0) {
    const double per = slots * config.hd_count;
    r.hd_down = static_cast<double>(total(stats.hd_down)) / per;
    r.hd_up = static_cast<double>(total(stats.hd_up)) / per;
  }
  if (config.fd_count > 0) {
    const double per = slots * config.fd_count;
    r.fd_down = static_cast<double>(total(stats.fd_down)) / per;
    r.fd_up = static_cast<double>(total(stats.fd_up)) / per;
  }
  r.head_fraction = stats.ap_wins == 0 ? 0.0
                                       : static_cast<double>(stats.ap_wins_hd_head) /
                                             static_cast<double>(stats.ap_wins);
  r.sum = static_cast<double>(stats.total_down() + stats.total_up()) / slots;
  return r;
}

}  // namespace fdmac
