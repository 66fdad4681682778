#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "hexswarm/aco.hpp"
#include "hexswarm/bco.hpp"
#include "hexswarm/comms.hpp"
#include "hexswarm/ga.hpp"
#include "hexswarm/hexworld.hpp"

namespace hexswarm {

struct Removal {
  Tick tick = 0;
  RobotId robot = 0;

  friend bool operator==(const Removal&, const Removal&) = default;
};

struct ScenarioConfig {
  ControllerKind controller = ControllerKind::Ga;
  int robots = 20;
  int radius = 15;
  int margin = 1;
  HexCoord target{10, 0};
  HexCoord entry{-10, 0};
  std::uint64_t seed = 0;
  int max_ticks = 500;
  int comm_range = 2;
  int ttl = 5;
  int sensing_radius = 8;
  std::vector<Removal> removals;
  GaParams ga;
  AcoParams aco;
  BcoParams bco;

  /// Throws ConfigError naming the first offending key.
  void validate() const;
};

enum class RobotStatus { Pending, Live, Arrived, Removed };

struct Robot {
  RobotId id = 0;
  RobotStatus status = RobotStatus::Pending;
  HexCoord position;
  Direction heading;
  int speed = 0;  // cells moved last tick
  std::uint64_t next_seq = 0;
  std::optional<int> sensed_distance;
  bool knows_target = false;  // learned by sensing or report; never forgotten
  Observation observation;
  std::optional<DanceBoard> heard_dance;  // last dance heard, dropped once stale
  // ACO replica and the last report sequence merged per origin.
  PheromoneField field;
  std::map<RobotId, std::uint64_t> merged_seq;
  std::optional<Tick> arrived_at;
  int arrival_distance = 0;
};

struct SimState {
  explicit SimState(World w) : world(std::move(w)) {}

  Tick tick = 0;
  World world;
  std::map<RobotId, Robot> robots;
  std::deque<RobotId> pending_spawn;
  std::optional<DanceBoard> board;
  std::optional<DanceAdvert> pending_advert;  // leader's dance, sent next tick
  TrackerLog tracker;
  std::uint64_t rng_root = 0;
  std::set<HexCoord> visited;

  Positions live_positions() const;
  std::size_t count(RobotStatus s) const;
};

struct MoveIntent {
  RobotId robot = 0;
  Move move;

  friend bool operator==(const MoveIntent&, const MoveIntent&) = default;
};

struct ExecutedMove {
  RobotId robot = 0;
  HexCoord from;
  HexCoord to;
  Direction direction;
  int cells = 0;
};

/**
 * Executes intents in a random order.  Each robot takes unit steps up to its
 * speed and stops before the first inaccessible or occupied cell; occupancy
 * and `positions` are updated after every step.  Result is sorted by robot.
 */
std::vector<ExecutedMove> resolve_conflicts(std::span<const MoveIntent> intents, World& world,
                                            Positions& positions, Rng& rng);

struct TraceRow {
  Tick tick = 0;
  RobotId robot = 0;
  HexCoord cell;
  int heading = 0;
  int speed = 0;
  int dist_to_target = 0;
  ControllerKind controller = ControllerKind::Ga;
  std::optional<RobotId> leader;
  std::size_t component_size = 0;
};

/// Everything decided in phases 1-6 of a tick, before anything moves.
struct TickPlan {
  Tick tick = 0;
  std::vector<MoveIntent> intents;
  std::optional<DanceAdvert> advert;
  bool elected = false;
  std::size_t messages = 0;
};

struct TickRecord {
  Tick tick = 0;
  std::vector<TraceRow> rows;
  double mean_distance = 0;
  double median_distance = 0;
  std::size_t largest_component = 0;
  std::size_t messages = 0;
  std::vector<RobotId> arrivals;
};

enum class RunStatus { Running, Success, Timeout, Extinct };
std::string_view to_string(RunStatus s) noexcept;

/**
 * Owns the simulation.  A tick runs: removals and spawn, reports, flooding,
 * observation and replica merge, leader election, decisions (plan_tick), then
 * conflict resolution, pheromone update, trace and arrivals (commit).
 * Robots that reach the target or a cell next to it are retired; a retiring
 * leader is replaced at the next tick, any other loss of the leader is only
 * noticed once its dance goes silent for longer than the timeout.
 */
class Engine {
public:
  explicit Engine(ScenarioConfig config, bool keep_tracker = false);

  const ScenarioConfig& config() const noexcept { return config_; }
  const SimState& state() const noexcept { return state_; }
  RunStatus status() const noexcept { return status_; }
  bool finished() const noexcept { return status_ != RunStatus::Running; }

  TickPlan plan_tick();
  TickRecord commit(const TickPlan& plan);
  TickRecord step() { return commit(plan_tick()); }

  /// Takes a robot out of the swarm immediately.
  void remove_robot(RobotId id);

  /// Cellwise maximum over the replicas of robots that took part in the last tick.
  PheromoneField merged_field() const;

  /// Throws std::logic_error describing the first broken state invariant.
  void check_invariants() const;

private:
  void apply_removals();
  void spawn_step();
  void emit_reports(Inboxes& inboxes);
  void observe(const Positions& positions, const Inboxes& inboxes);
  bool elect();
  void update_status();

  ScenarioConfig config_;
  SimState state_;
  RunStatus status_ = RunStatus::Running;
  bool keep_tracker_;
  Tick last_committed_ = -1;
};

struct RunSummary {
  ControllerKind controller = ControllerKind::Ga;
  std::uint64_t seed = 0;
  RunStatus status = RunStatus::Timeout;
  Tick ticks = 0;
  int robots = 0;
  std::size_t arrived = 0;
  std::size_t removed = 0;
  double fraction_arrived = 0;
  std::optional<Tick> first_arrival_tick;
  std::size_t messages = 0;
  std::size_t max_component_size = 0;
  std::vector<double> mean_distance;
  std::vector<double> median_distance;
  std::vector<std::size_t> largest_component;
};

struct RunResult {
  std::vector<TraceRow> trace;
  RunSummary summary;
  std::optional<PheromoneField> field;  // ACO only
  Tick field_tick = 0;
  TrackerLog tracker;
};

/// Runs to success, extinction or max_ticks.  Throws ConfigError.
RunResult run(const ScenarioConfig& config, bool keep_tracker = false);

int exit_code(RunStatus s) noexcept;

}  // namespace hexswarm
