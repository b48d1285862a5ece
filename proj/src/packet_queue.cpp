#include "jamlink/packet_queue.hpp"

namespace jamlink {

bool PacketQueue::push(Micros arrival_us) {
  if (entries_.size() >= capacity_) return false;
  entries_.push_back(QueuedPacket{arrival_us, 0});
  return true;
}

void PacketQueue::push_front(const QueuedPacket& pkt) {
  entries_.push_front(pkt);
}

std::size_t PacketQueue::evict_expired(Micros now) {
  std::size_t evicted = 0;
  while (!entries_.empty() &&
         now - entries_.front().arrival_us > max_delay_us_) {
    entries_.pop_front();
    ++evicted;
  }
  return evicted;
}

QueuedPacket PacketQueue::pop_front() {
  QueuedPacket pkt = entries_.front();
  entries_.pop_front();
  return pkt;
}

}  // namespace jamlink
