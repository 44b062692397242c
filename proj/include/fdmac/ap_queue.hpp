#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "fdmac/network.hpp"

namespace fdmac {

struct Packet {
  StationId destination;

  friend bool operator==(const Packet&, const Packet&) = default;
};

/// The AP's single downlink queue. Supports popping the head and extracting
/// the first packet for a given station; survivors keep their order.
///
/// Both operations are O(1) amortized regardless of length: each station
/// keeps a FIFO of the sequence numbers of its queued packets, and removed
/// entries are left as tombstones until they reach the front.
class ApQueue {
 public:
  ApQueue(int fd_count, int hd_count);

  std::size_t size() const { return live_; }
  bool empty() const { return live_ == 0; }

  /// Requires !empty().
  const Packet& head() const;
  Packet pop_head();

  /// Removes and returns the first queued packet addressed to `station`.
  std::optional<Packet> remove_first(StationId station);

  /// Number of queued packets addressed to `station`.
  std::size_t count_for(StationId station) const;

  void push_back(Packet packet);

  /// Live packets, head first.
  std::vector<Packet> packets() const;

  friend bool operator==(const ApQueue& a, const ApQueue& b) { return a.packets() == b.packets(); }

 private:
  struct Entry {
    Packet packet;
    bool live;
  };

  std::size_t key(StationId station) const;
  void drop_dead_front();

  int fd_count_;
  int hd_count_;
  std::deque<Entry> entries_;
  std::uint64_t front_seq_ = 0;  // sequence number of entries_.front()
  std::vector<std::deque<std::uint64_t>> by_station_;
  std::size_t live_ = 0;
};

}  // namespace fdmac
