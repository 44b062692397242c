#include "fdmac/ap_queue.hpp"

#include <cassert>
#include <stdexcept>

namespace fdmac {

ApQueue::ApQueue(int fd_count, int hd_count)
    : fd_count_(fd_count), hd_count_(hd_count), by_station_(fd_count + hd_count) {
  if (fd_count < 0 || hd_count < 0) throw std::invalid_argument("negative station count");
}

std::size_t ApQueue::key(StationId station) const {
  const int limit = station.cls == StationClass::fd ? fd_count_ : hd_count_;
  if (station.index < 0 || station.index >= limit) {
    throw std::out_of_range("no such station: " + to_string(station));
  }
  return station.cls == StationClass::fd ? station.index : fd_count_ + station.index;
}

const Packet& ApQueue::head() const {
  assert(!empty());
  return entries_.front().packet;
}

Packet ApQueue::pop_head() {
  if (empty()) throw std::logic_error("pop_head on empty queue");
  const Packet p = entries_.front().packet;
  // The head is the oldest live packet, so it is also its station's oldest.
  by_station_[key(p.destination)].pop_front();
  entries_.pop_front();
  ++front_seq_;
  --live_;
  drop_dead_front();
  return p;
}

std::optional<Packet> ApQueue::remove_first(StationId station) {
  auto& fifo = by_station_[key(station)];
  if (fifo.empty()) return std::nullopt;
  const std::uint64_t seq = fifo.front();
  fifo.pop_front();
  Entry& e = entries_[seq - front_seq_];
  e.live = false;
  --live_;
  drop_dead_front();
  return Packet{station};
}

std::size_t ApQueue::count_for(StationId station) const { return by_station_[key(station)].size(); }

void ApQueue::push_back(Packet packet) {
  by_station_[key(packet.destination)].push_back(front_seq_ + entries_.size());
  entries_.push_back({packet, true});
  ++live_;
}

std::vector<Packet> ApQueue::packets() const {
  std::vector<Packet> out;
  out.reserve(live_);
  for (const auto& e : entries_) {
    if (e.live) out.push_back(e.packet);
  }
  return out;
}

void ApQueue::drop_dead_front() {
  while (!entries_.empty() && !entries_.front().live) {
    entries_.pop_front();
    ++front_seq_;
  }
}

}  // namespace fdmac
