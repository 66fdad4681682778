#pragma once

#include <optional>
#include <span>
#include <stdexcept>

#include "hexswarm/comms.hpp"
#include "hexswarm/controller.hpp"

namespace hexswarm {

/// Shared dance state: who leads, what it advertises, when it was last heard.
struct DanceBoard {
  RobotId leader = 0;
  Direction advertised_direction;
  double strength = 0.0;  // in [0,1]
  Tick last_heard_tick = 0;

  friend bool operator==(const DanceBoard&, const DanceBoard&) = default;
};

struct BcoParams {
  double follow_gain = 2.0;
  double scout_prob = 0.1;
  int leader_timeout = 10;  // ticks

  void validate() const;
};

enum class BeeTask { Follow, Scout, Continue };

/// 1/(1+d) for a known distance, 0 otherwise.
double dance_strength(std::optional<int> leader_target_distance) noexcept;

/**
 * Follow with probability min(1, follow_gain * strength); otherwise Scout
 * with probability scout_prob; otherwise Continue.  Always Scout when no
 * dance was heard.
 */
BeeTask choose_task(const std::optional<DanceBoard>& heard, const BcoParams& params, Rng& rng);

struct BeeState {
  RobotId id = 0;
  Direction heading;
  bool is_leader = false;
};

struct BcoDecision {
  Move move;
  std::optional<BeeTask> task;         // empty for the leader
  std::optional<DanceAdvert> advert;   // set for the leader only
};

/**
 * Leader: greedy step toward the target (random when it is unknown) and a
 * dance advert for its chosen direction.  Follower: Follow / Scout /
 * Continue per choose_task, falling back to Scout when the chosen heading
 * is blocked.  Speed is 1, or 0 on the target cell.
 */
BcoDecision decide_move_bco(const BeeState& self, const Observation& obs,
                            const std::optional<DanceBoard>& heard, const World& world,
                            const BcoParams& params, Rng& rng);

struct LeaderCandidate {
  RobotId id = 0;
  Direction heading;
  std::optional<int> best_known_target_distance;
};

class SwarmExtinctError : public std::runtime_error {
public:
  SwarmExtinctError() : std::runtime_error("no live robots left to lead") {}
};

/// True when the board's leader has been heard within the timeout.
bool leader_fresh(const DanceBoard& board, Tick now, const BcoParams& params) noexcept;

/**
 * Keeps a fresh board.  Otherwise elects the candidate with the smallest
 * known target distance (unknown ranks last, ties to the lower id) and
 * returns a reset board stamped `now`.  The leader's death is only noticed
 * through silence, so a departed leader stays on the board until it goes
 * stale.  Throws SwarmExtinctError when an election has no candidates.
 */
DanceBoard elect_leader(std::span<const LeaderCandidate> candidates, Tick now,
                        const std::optional<DanceBoard>& board, const BcoParams& params);

}  // namespace hexswarm
