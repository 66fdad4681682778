#include "hexswarm/bco.hpp"

#include <algorithm>
#include <limits>

namespace hexswarm {

void BcoParams::validate() const {
  if (!(follow_gain > 0.0)) throw ConfigError("follow_gain", "must be > 0");
  if (!(scout_prob >= 0.0 && scout_prob <= 1.0)) throw ConfigError("scout_prob", "must lie in [0,1]");
  if (leader_timeout < 1) throw ConfigError("leader_timeout", "must be >= 1");
}

double dance_strength(std::optional<int> leader_target_distance) noexcept {
  if (!leader_target_distance) return 0.0;
  return 1.0 / (1.0 + std::max(0, *leader_target_distance));
}

BeeTask choose_task(const std::optional<DanceBoard>& heard, const BcoParams& params, Rng& rng) {
  if (!heard) return BeeTask::Scout;
  const double follow = std::min(1.0, params.follow_gain * heard->strength);
  if (uniform01(rng) < follow) return BeeTask::Follow;
  if (uniform01(rng) < params.scout_prob) return BeeTask::Scout;
  return BeeTask::Continue;
}

namespace {

Move scout(const BeeState& self, const Observation& obs, const World& world, Rng& rng) {
  if (auto d = random_feasible_direction(world, obs.situation, rng)) return {*d, 1};
  return {self.heading, 0};
}

Move greedy(const BeeState& self, const Observation& obs, const World& world, Rng& rng) {
  if (!obs.knows_target()) return scout(self, obs, world, rng);
  std::optional<Direction> best;
  int best_dist = std::numeric_limits<int>::max();
  for (const auto& [dir, cell] : world.accessible_neighbors(obs.situation)) {
    const int d = hex_distance(cell, world.target());
    if (d < best_dist) {
      best_dist = d;
      best = dir;
    }
  }
  if (!best) return {self.heading, 0};
  return {*best, 1};
}

}  // namespace

BcoDecision decide_move_bco(const BeeState& self, const Observation& obs,
                            const std::optional<DanceBoard>& heard, const World& world,
                            const BcoParams& params, Rng& rng) {
  BcoDecision out;
  const bool on_target = obs.situation == world.target();

  if (self.is_leader) {
    out.move = on_target ? Move{self.heading, 0} : greedy(self, obs, world, rng);
    out.advert = DanceAdvert{self.id, out.move.direction,
                             dance_strength(obs.best_known_target_distance)};
    return out;
  }

  const BeeTask task = choose_task(heard, params, rng);
  out.task = task;
  if (on_target) {
    out.move = {self.heading, 0};
    return out;
  }
  switch (task) {
    case BeeTask::Follow: {
      const Move m{heard->advertised_direction, 1};
      out.move = feasible(world, obs.situation, m) ? m : scout(self, obs, world, rng);
      break;
    }
    case BeeTask::Continue: {
      const Move m{self.heading, 1};
      out.move = feasible(world, obs.situation, m) ? m : scout(self, obs, world, rng);
      break;
    }
    case BeeTask::Scout:
      out.move = scout(self, obs, world, rng);
      break;
  }
  return out;
}

bool leader_fresh(const DanceBoard& board, Tick now, const BcoParams& params) noexcept {
  return now - board.last_heard_tick <= params.leader_timeout;
}

DanceBoard elect_leader(std::span<const LeaderCandidate> candidates, Tick now,
                        const std::optional<DanceBoard>& board, const BcoParams& params) {
  if (board && leader_fresh(*board, now, params)) return *board;
  if (candidates.empty()) throw SwarmExtinctError();

  const auto rank = [](const LeaderCandidate& c) {
    return std::pair{c.best_known_target_distance.value_or(std::numeric_limits<int>::max()), c.id};
  };
  const auto best = std::min_element(candidates.begin(), candidates.end(),
                                     [&](const auto& a, const auto& b) { return rank(a) < rank(b); });
  return DanceBoard{best->id, best->heading, dance_strength(best->best_known_target_distance), now};
}

}  // namespace hexswarm
