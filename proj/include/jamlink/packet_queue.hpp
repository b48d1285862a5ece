#pragma once

#include <cstddef>
#include <deque>

#include "jamlink/time.hpp"

namespace jamlink {

struct QueuedPacket {
  Micros arrival_us = 0;
  int retries = 0;
};

// Bounded FIFO transmit queue. Arrivals beyond capacity and packets older
// than max_delay are dropped; both are reported to the caller for loss
// accounting.
class PacketQueue {
 public:
  PacketQueue(std::size_t capacity, Micros max_delay_us)
      : capacity_(capacity), max_delay_us_(max_delay_us) {}

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::size_t capacity() const { return capacity_; }

  // Appends an arrival; returns false (a drop) when the queue is full.
  bool push(Micros arrival_us);

  // Re-inserts an unacknowledged packet at the head, preserving FIFO order
  // for retransmission. Never drops.
  void push_front(const QueuedPacket& pkt);

  // Removes packets older than max_delay; returns how many were evicted.
  std::size_t evict_expired(Micros now);

  const QueuedPacket& front() const { return entries_.front(); }
  QueuedPacket pop_front();

 private:
  std::size_t capacity_;
  Micros max_delay_us_;
  std::deque<QueuedPacket> entries_;
};

}  // namespace jamlink
