#include "hexswarm/comms.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hexswarm {

void TrackerLog::write_csv(std::ostream& out) const {
  out << "tick,msg_origin,msg_seq,relay,hops\n";
  for (const auto& e : entries_) {
    out << e.tick << ',' << e.message.origin << ',' << e.message.seq << ',' << e.relay << ','
        << e.hops << '\n';
  }
}

std::set<RobotId> comm_neighbors(const Positions& positions, RobotId self, int range) {
  const auto it = positions.find(self);
  if (it == positions.end()) throw std::out_of_range("unknown robot id " + std::to_string(self));
  std::set<RobotId> out;
  for (const auto& [id, cell] : positions) {
    if (id != self && hex_distance(cell, it->second) <= range) out.insert(id);
  }
  return out;
}

bool inject(Inboxes& inboxes, RobotId at, const Message& msg) {
  if (msg.ttl < 0) throw std::invalid_argument("message ttl must be >= 0");
  if (const auto* dance = std::get_if<DanceAdvert>(&msg.payload)) {
    if (!(dance->strength >= 0.0 && dance->strength <= 1.0)) {
      throw std::invalid_argument("dance strength outside [0,1]");
    }
  }
  Inbox& inbox = inboxes[at];
  if (!inbox.held.emplace(msg.id, Delivery{msg, 0}).second) return false;
  inbox.frontier.push_back(msg.id);
  return true;
}

std::size_t flood_round(const Positions& positions, Inboxes& inboxes, int range,
                        TrackerLog& tracker, Tick tick) {
  struct Send {
    RobotId to;
    Message msg;
    int hops;
  };
  std::vector<Send> sends;

  for (auto& [id, inbox] : inboxes) {
    if (!positions.contains(id) || inbox.frontier.empty()) {
      inbox.frontier.clear();
      continue;
    }
    std::sort(inbox.frontier.begin(), inbox.frontier.end());
    const auto neighbours = comm_neighbors(positions, id, range);
    for (const MessageId& mid : inbox.frontier) {
      const Delivery& held = inbox.held.at(mid);
      if (held.message.ttl <= 0) continue;
      Message relayed = held.message;
      --relayed.ttl;
      for (RobotId n : neighbours) sends.push_back({n, relayed, held.hops + 1});
    }
    inbox.frontier.clear();
  }

  std::size_t delivered = 0;
  for (const auto& s : sends) {
    Inbox& inbox = inboxes[s.to];
    if (!inbox.held.emplace(s.msg.id, Delivery{s.msg, s.hops}).second) continue;
    inbox.frontier.push_back(s.msg.id);
    tracker.append({tick, s.msg.id, s.to, s.hops});
    ++delivered;
  }
  return delivered;
}

std::size_t flood(const Positions& positions, Inboxes& inboxes, int range, TrackerLog& tracker,
                  Tick tick) {
  std::size_t total = 0;
  for (;;) {
    const bool pending = std::any_of(inboxes.begin(), inboxes.end(), [&](const auto& kv) {
      return positions.contains(kv.first) && !kv.second.frontier.empty();
    });
    if (!pending) break;
    total += flood_round(positions, inboxes, range, tracker, tick);
  }
  return total;
}

std::vector<std::vector<RobotId>> connectivity_components(const Positions& positions, int range) {
  std::vector<std::vector<RobotId>> parts;
  std::set<RobotId> seen;
  for (const auto& [start, cell] : positions) {
    if (seen.contains(start)) continue;
    std::vector<RobotId> part;
    std::deque<RobotId> queue{start};
    seen.insert(start);
    while (!queue.empty()) {
      const RobotId at = queue.front();
      queue.pop_front();
      part.push_back(at);
      for (RobotId n : comm_neighbors(positions, at, range)) {
        if (seen.insert(n).second) queue.push_back(n);
      }
    }
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  return parts;
}

}  // namespace hexswarm
