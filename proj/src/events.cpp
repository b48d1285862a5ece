#include "jamlink/events.hpp"

#include <stdexcept>
#include <utility>

namespace jamlink {

void EventQueue::schedule(Micros at, Handler fn) {
  if (at < now_) {
    throw std::invalid_argument("EventQueue::schedule: past event");
  }
  heap_.push(Entry{at, next_seq_++, std::move(fn)});
}

void EventQueue::run_until(Micros until) {
  while (!heap_.empty() && heap_.top().at <= until) {
    Entry e = std::move(const_cast<Entry&>(heap_.top()));
    heap_.pop();
    now_ = e.at;
    e.fn();
  }
  if (now_ < until) now_ = until;
}

}  // namespace jamlink
