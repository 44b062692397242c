#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "fdmac/ap_queue.hpp"
#include "fdmac/network.hpp"
#include "fdmac/rng.hpp"

namespace fdmac {

/// How the AP queue behaves beyond its nominal capacity.
enum class BacklogPolicy {
  /// The queue is the materialized front of an unbounded stream of
  /// uniformly addressed packets. Its length never drops below capacity, and
  /// an FD winner always finds a packet: if none is materialized yet, stream
  /// packets are appended in order until one for that station appears.
  saturated,
  /// Exactly `capacity` packets; every removal is refilled at the tail. An FD
  /// winner with no queued packet transmits uplink only.
  fixed,
};

std::string_view to_string(BacklogPolicy policy);
std::optional<BacklogPolicy> parse_backlog_policy(std::string_view text);

enum class NodeKind : std::uint8_t { ap, fd, hd };

struct Node {
  NodeKind kind = NodeKind::ap;
  int index = 0;

  static constexpr Node ap() { return {NodeKind::ap, 0}; }
  static constexpr Node fd(int i) { return {NodeKind::fd, i}; }
  static constexpr Node hd(int j) { return {NodeKind::hd, j}; }

  friend bool operator==(const Node&, const Node&) = default;
};

/// What happened in one slot.
struct SlotOutcome {
  Node winner;
  std::optional<StationId> downlink_to;
  std::optional<StationId> uplink_from;
  std::optional<StationClass> head_class_at_win;  ///< only when the AP won
  bool measured = false;                          ///< counted into SimStats

  friend bool operator==(const SlotOutcome&, const SlotOutcome&) = default;
};

/// Counters over the measured (post warm-up) slots.
struct SimStats {
  int fd_count = 0;
  int hd_count = 0;
  std::uint64_t total_slots = 0;
  std::vector<std::uint64_t> fd_down;  ///< per FD station
  std::vector<std::uint64_t> fd_up;
  std::vector<std::uint64_t> hd_down;  ///< per HD station
  std::vector<std::uint64_t> hd_up;
  std::uint64_t ap_wins = 0;
  std::uint64_t ap_wins_hd_head = 0;
  std::uint64_t fd_wins_no_packet = 0;

  SimStats() = default;
  SimStats(int fd_count, int hd_count);

  std::uint64_t down_slots(StationId s) const;
  std::uint64_t up_slots(StationId s) const;
  std::uint64_t total_down() const;
  std::uint64_t total_up() const;

  friend bool operator==(const SimStats&, const SimStats&) = default;
};

struct SimOptions {
  std::optional<std::size_t> capacity;  ///< unset selects default_capacity()
  std::uint64_t seed = 0;
  std::uint64_t warmup_slots = 0;
  BacklogPolicy backlog = BacklogPolicy::saturated;
};

std::size_t default_capacity(const NetworkConfig& config);

/// Warm-up used when none is given: 1% of the measured slots, at least 10^4.
std::uint64_t default_warmup(std::uint64_t measured_slots);

/// Slot-by-slot simulation of the contention process and the AP queue.
///
/// Each slot draws one winner (AP with p_ap, each FD station with p_fd, each
/// HD station with p_hd). An AP win sends the head packet, which is a
/// full-duplex exchange when it is for an FD station. An FD win sends uplink
/// and pulls that station's first queued packet out of turn. An HD win is
/// uplink only. Every removed packet is replaced at the tail by one with a
/// uniformly random destination.
class Simulation {
 public:
  /// Fills the queue with `capacity` uniformly addressed packets.
  Simulation(const NetworkConfig& config, const SimOptions& options);

  /// Starts from an explicit queue; capacity is its length.
  Simulation(const NetworkConfig& config, std::vector<Packet> initial_queue,
             const SimOptions& options);

  /// Samples a winner and plays the slot.
  SlotOutcome step();

  /// Plays one slot with a given winner (no contention draw).
  SlotOutcome play(Node winner);

  Node draw_winner();

  const NetworkConfig& config() const { return config_; }
  const ApQueue& queue() const { return queue_; }
  const SimStats& stats() const { return stats_; }
  std::size_t capacity() const { return capacity_; }
  BacklogPolicy backlog() const { return backlog_; }
  std::uint64_t slots_played() const { return slots_played_; }

  friend bool operator==(const Simulation&, const Simulation&) = default;

 private:
  Packet fresh_packet();
  void refill();

  NetworkConfig config_;
  std::size_t capacity_;
  BacklogPolicy backlog_;
  std::uint64_t warmup_slots_;
  Rng rng_;
  ApQueue queue_;
  SimStats stats_;
  std::uint64_t slots_played_ = 0;
};

/// Runs `warmup_slots` uncounted slots and then `measured_slots` counted ones.
SimStats run(const NetworkConfig& config, std::uint64_t measured_slots,
             std::uint64_t warmup_slots, std::size_t capacity, std::uint64_t seed,
             BacklogPolicy backlog = BacklogPolicy::saturated);

/// Empirical counterpart of throughputs(): per-station flows averaged over
/// the class, head fraction from AP wins (0 when the AP never won).
ThroughputReport empirical_report(const SimStats& stats, const NetworkConfig& config);

}  // namespace fdmac
