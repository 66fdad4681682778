#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <variant>
#include <vector>

#include "hexswarm/hexworld.hpp"

namespace hexswarm {

using Tick = std::int64_t;
using Positions = std::map<RobotId, HexCoord>;

struct PositionReport {
  HexCoord cell;
  Direction heading;
  int speed = 0;
};

struct TargetReport {
  int distance = 0;
  Tick sensed_at = 0;
};

struct DanceAdvert {
  RobotId leader = 0;
  Direction direction;
  double strength = 0.0;  // in [0,1]
};

enum class MessageKind { PositionReport, TargetReport, DanceAdvert };

struct MessageId {
  RobotId origin = 0;
  std::uint64_t seq = 0;

  friend constexpr auto operator<=>(const MessageId&, const MessageId&) = default;
};

struct Message {
  MessageId id;
  std::variant<PositionReport, TargetReport, DanceAdvert> payload;
  int ttl = 0;  // remaining hops

  MessageKind kind() const noexcept { return static_cast<MessageKind>(payload.index()); }
};

/// A message as held by one robot: `message.ttl` is what remained on arrival.
struct Delivery {
  Message message;
  int hops = 0;
};

struct Inbox {
  std::map<MessageId, Delivery> held;
  std::vector<MessageId> frontier;  // received last round, not yet relayed
};

using Inboxes = std::map<RobotId, Inbox>;

struct TrackerEntry {
  Tick tick = 0;
  MessageId message;
  RobotId relay = 0;  // robot the message was delivered to
  int hops = 0;
};

/// Record of every delivery across the ad hoc network.
class TrackerLog {
public:
  void append(const TrackerEntry& e) { entries_.push_back(e); }
  const std::vector<TrackerEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  void clear() { entries_.clear(); }

  /// CSV with header `tick,msg_origin,msg_seq,relay,hops`.
  void write_csv(std::ostream& out) const;

private:
  std::vector<TrackerEntry> entries_;
};

/// Robots other than `self` within hex distance `range`.  Throws
/// std::out_of_range for an unknown id.
std::set<RobotId> comm_neighbors(const Positions& positions, RobotId self, int range);

/**
 * Places a freshly originated message at `at` (hop 0).  Returns false when
 * the robot already holds a message with the same id.
 */
bool inject(Inboxes& inboxes, RobotId at, const Message& msg);

/**
 * One synchronous relay round.  Every robot forwards each message on its
 * frontier with remaining ttl > 0 to all comm neighbours, decremented.  Robots
 * act in ascending id order and messages in ascending (origin, seq) order;
 * repeats are dropped.  Returns the number of new deliveries.
 */
std::size_t flood_round(const Positions& positions, Inboxes& inboxes, int range,
                        TrackerLog& tracker, Tick tick);

/// Repeats flood_round until no robot has anything left to relay.
std::size_t flood(const Positions& positions, Inboxes& inboxes, int range, TrackerLog& tracker,
                  Tick tick);

/// Connected components of the comm graph, each sorted, ordered by smallest id.
std::vector<std::vector<RobotId>> connectivity_components(const Positions& positions, int range);

}  // namespace hexswarm
