#include "hexswarm/engine.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hexswarm {

namespace {

void require(bool ok, const char* field, const char* what) {
  if (!ok) throw ConfigError(field, what);
}

SimState initial_state(const ScenarioConfig& cfg) {
  SimState s(make_world(cfg.radius, cfg.margin, cfg.target, cfg.entry));
  s.rng_root = cfg.seed;
  for (int i = 1; i <= cfg.robots; ++i) {
    const auto id = static_cast<RobotId>(i);
    Robot robot;
    robot.id = id;
    s.robots.emplace(id, std::move(robot));
    s.pending_spawn.push_back(id);
  }
  return s;
}

double median_of(std::vector<int> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

void ScenarioConfig::validate() const {
  require(robots >= 1, "robots", "must be >= 1");
  require(radius >= 1, "radius", "must be >= 1");
  require(margin >= 0 && margin < radius, "margin", "must lie in [0, radius)");
  (void)make_world(radius, margin, target, entry);
  require(robots <= hexagon_cell_count(radius - margin), "robots",
          "exceeds the number of accessible cells");
  require(max_ticks >= 0, "max_ticks", "must be >= 0");
  require(comm_range >= 1, "comm_range", "must be >= 1");
  require(ttl >= 0, "ttl", "must be >= 0");
  require(sensing_radius >= 0, "sensing_radius", "must be >= 0");
  for (const auto& r : removals) {
    require(r.tick >= 0, "removals", "tick must be >= 0");
    require(r.robot >= 1 && r.robot <= static_cast<RobotId>(robots), "removals",
            "robot id outside 1..robots");
  }
  ga.validate();
  aco.validate();
  bco.validate();
}

Positions SimState::live_positions() const {
  Positions out;
  for (const auto& [id, r] : robots) {
    if (r.status == RobotStatus::Live) out.emplace(id, r.position);
  }
  return out;
}

std::size_t SimState::count(RobotStatus s) const {
  return static_cast<std::size_t>(std::count_if(
      robots.begin(), robots.end(), [&](const auto& kv) { return kv.second.status == s; }));
}

std::string_view to_string(RunStatus s) noexcept {
  switch (s) {
    case RunStatus::Running: return "running";
    case RunStatus::Success: return "success";
    case RunStatus::Timeout: return "timeout";
    case RunStatus::Extinct: return "extinct";
  }
  return "?";
}

int exit_code(RunStatus s) noexcept {
  switch (s) {
    case RunStatus::Success: return 0;
    case RunStatus::Timeout: return 2;
    case RunStatus::Extinct: return 3;
    case RunStatus::Running: break;
  }
  return 1;
}

std::vector<ExecutedMove> resolve_conflicts(std::span<const MoveIntent> intents, World& world,
                                            Positions& positions, Rng& rng) {
  std::vector<std::size_t> order(intents.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<ExecutedMove> done;
  done.reserve(intents.size());
  for (std::size_t i : order) {
    const MoveIntent& in = intents[i];
    const auto it = positions.find(in.robot);
    if (it == positions.end()) throw std::logic_error("intent for a robot that is not live");
    ExecutedMove ex{in.robot, it->second, it->second, in.move.direction, 0};
    for (int s = 0; s < in.move.speed; ++s) {
      const HexCoord next = step(ex.to, in.move.direction);
      if (!world.accessible(next) || world.occupied(next)) break;
      world.vacate(ex.to);
      world.occupy(next, in.robot);
      ex.to = next;
      ++ex.cells;
    }
    it->second = ex.to;
    done.push_back(ex);
  }
  std::sort(done.begin(), done.end(),
            [](const ExecutedMove& a, const ExecutedMove& b) { return a.robot < b.robot; });
  return done;
}

Engine::Engine(ScenarioConfig config, bool keep_tracker)
    : config_((config.validate(), std::move(config))),
      state_(initial_state(config_)),
      keep_tracker_(keep_tracker) {
  if (config_.max_ticks == 0) status_ = RunStatus::Timeout;
}

void Engine::remove_robot(RobotId id) {
  auto it = state_.robots.find(id);
  if (it == state_.robots.end()) throw std::out_of_range("unknown robot id");
  Robot& r = it->second;
  if (r.status == RobotStatus::Live) {
    state_.world.vacate(r.position);
  } else if (r.status == RobotStatus::Pending) {
    std::erase(state_.pending_spawn, id);
  } else {
    return;
  }
  r.status = RobotStatus::Removed;
}

void Engine::apply_removals() {
  for (const auto& rm : config_.removals) {
    if (rm.tick == state_.tick) remove_robot(rm.robot);
  }
}

void Engine::spawn_step() {
  if (state_.pending_spawn.empty()) return;
  const HexCoord entry = state_.world.entry();
  if (state_.world.occupied(entry)) return;
  const RobotId id = state_.pending_spawn.front();
  state_.pending_spawn.pop_front();
  Robot& r = state_.robots.at(id);
  Rng rng = derive_stream(state_.rng_root, "spawn", static_cast<std::uint64_t>(state_.tick));
  r.status = RobotStatus::Live;
  r.position = entry;
  r.heading = Direction(uniform_int(rng, 0, Direction::kCount - 1));
  r.speed = 0;
  state_.world.occupy(entry, id);
  state_.visited.insert(entry);
}

void Engine::emit_reports(Inboxes& inboxes) {
  const HexCoord target = state_.world.target();
  for (auto& [id, r] : state_.robots) {
    if (r.status != RobotStatus::Live) continue;
    inject(inboxes, id, Message{{id, r.next_seq++}, PositionReport{r.position, r.heading, r.speed},
                                config_.ttl});
    const int d = hex_distance(r.position, target);
    r.sensed_distance.reset();
    if (d <= config_.sensing_radius) {
      r.sensed_distance = d;
      inject(inboxes, id, Message{{id, r.next_seq++}, TargetReport{d, state_.tick}, config_.ttl});
    }
  }
  if (state_.pending_advert) {
    const DanceAdvert advert = *state_.pending_advert;
    state_.pending_advert.reset();
    Robot& leader = state_.robots.at(advert.leader);
    if (leader.status == RobotStatus::Live) {
      inject(inboxes, advert.leader,
             Message{{advert.leader, leader.next_seq++}, advert, config_.ttl});
    }
  }
}

void Engine::observe(const Positions& positions, const Inboxes& inboxes) {
  const bool aco = config_.controller == ControllerKind::Aco;
  bool leader_heard = false;

  for (auto& [id, r] : state_.robots) {
    if (r.status != RobotStatus::Live) continue;
    Observation obs;
    obs.situation = r.position;
    obs.degree = static_cast<int>(comm_neighbors(positions, id, config_.comm_range).size());
    obs.best_known_target_distance = r.sensed_distance;
    if (r.heard_dance && !leader_fresh(*r.heard_dance, state_.tick, config_.bco)) r.heard_dance.reset();

    std::map<RobotId, int> reported_distance;
    const auto inbox = inboxes.find(id);
    if (inbox != inboxes.end()) {
      for (const auto& [mid, delivery] : inbox->second.held) {
        if (mid.origin == id) continue;
        const auto& payload = delivery.message.payload;
        if (const auto* t = std::get_if<TargetReport>(&payload)) {
          reported_distance[mid.origin] = t->distance;
          if (!obs.best_known_target_distance || t->distance < *obs.best_known_target_distance) {
            obs.best_known_target_distance = t->distance;
          }
        } else if (const auto* p = std::get_if<PositionReport>(&payload)) {
          obs.reported_cells.push_back(p->cell);
          // A robot that did not move last tick shows no heading.
          if (p->speed > 0) obs.neighbor_headings.emplace_back(p->heading, p->speed);
        } else if (const auto* d = std::get_if<DanceAdvert>(&payload)) {
          r.heard_dance = DanceBoard{d->leader, d->direction, d->strength, state_.tick};
          if (state_.board && d->leader == state_.board->leader) leader_heard = true;
        }
      }
      if (aco) {
        for (const auto& [mid, delivery] : inbox->second.held) {
          const auto* p = std::get_if<PositionReport>(&delivery.message.payload);
          if (!p || mid.origin == id) continue;
          const auto last = r.merged_seq.find(mid.origin);
          if (last != r.merged_seq.end() && last->second >= mid.seq) continue;
          r.merged_seq[mid.origin] = mid.seq;
          const auto rd = reported_distance.find(mid.origin);
          deposit(r.field, state_.world, p->cell,
                  rd == reported_distance.end() ? std::nullopt : std::optional<int>(rd->second),
                  config_.aco);
        }
      }
    }
    if (obs.best_known_target_distance) r.knows_target = true;
    if (r.knows_target) {
      const int own = hex_distance(r.position, state_.world.target());
      if (!obs.best_known_target_distance || own < *obs.best_known_target_distance) {
        obs.best_known_target_distance = own;
      }
    }
    r.observation = std::move(obs);
  }

  if (state_.board) {
    const bool alone = positions.size() == 1 && positions.contains(state_.board->leader);
    if (leader_heard || alone) state_.board->last_heard_tick = state_.tick;
  }
}

bool Engine::elect() {
  std::vector<LeaderCandidate> candidates;
  for (const auto& [id, r] : state_.robots) {
    if (r.status == RobotStatus::Live) {
      candidates.push_back({id, r.heading, r.observation.best_known_target_distance});
    }
  }
  if (candidates.empty()) return false;
  const DanceBoard next = elect_leader(candidates, state_.tick, state_.board, config_.bco);
  const bool changed = !state_.board || !(*state_.board == next);
  state_.board = next;
  return changed;
}

TickPlan Engine::plan_tick() {
  if (finished()) throw std::logic_error("plan_tick on a finished run");
  TickPlan plan;
  plan.tick = state_.tick;

  apply_removals();
  spawn_step();

  Inboxes inboxes;
  emit_reports(inboxes);
  const Positions positions = state_.live_positions();
  TrackerLog tick_log;
  plan.messages = flood(positions, inboxes, config_.comm_range, tick_log, state_.tick);
  if (keep_tracker_) {
    for (const auto& e : tick_log.entries()) state_.tracker.append(e);
  }

  observe(positions, inboxes);
  if (config_.controller == ControllerKind::Bco) plan.elected = elect();

  for (auto& [id, r] : state_.robots) {
    if (r.status != RobotStatus::Live) continue;
    Rng rng = derive_stream(state_.rng_root, "decide", id, static_cast<std::uint64_t>(state_.tick));
    Move m;
    switch (config_.controller) {
      case ControllerKind::Ga:
        m = decide_move_ga(r.observation, state_.world, config_.ga, rng);
        break;
      case ControllerKind::Aco: {
        std::optional<HexCoord> came_from;
        if (r.speed > 0) came_from = hexswarm::step(r.position, r.heading.opposite());
        m = decide_move_aco(r.observation, r.field, state_.world, config_.aco, rng, came_from);
        break;
      }
      case ControllerKind::Bco: {
        const bool leads = state_.board && state_.board->leader == id;
        const auto d = decide_move_bco({id, r.heading, leads}, r.observation, r.heard_dance,
                                       state_.world, config_.bco, rng);
        m = d.move;
        if (d.advert) plan.advert = d.advert;
        break;
      }
    }
    plan.intents.push_back({id, m});
  }
  return plan;
}

TickRecord Engine::commit(const TickPlan& plan) {
  if (plan.tick != state_.tick) throw std::logic_error("commit of a stale plan");
  TickRecord rec;
  rec.tick = state_.tick;
  rec.messages = plan.messages;

  Positions positions = state_.live_positions();
  Rng conflict_rng = derive_stream(state_.rng_root, "conflict", static_cast<std::uint64_t>(state_.tick));
  for (const auto& ex : resolve_conflicts(plan.intents, state_.world, positions, conflict_rng)) {
    Robot& r = state_.robots.at(ex.robot);
    r.position = ex.to;
    r.heading = ex.direction;
    r.speed = ex.cells;
    state_.visited.insert(ex.to);
  }

  if (plan.advert) {
    state_.pending_advert = plan.advert;
    if (state_.board && state_.board->leader == plan.advert->leader) {
      state_.board->advertised_direction = plan.advert->direction;
      state_.board->strength = plan.advert->strength;
    }
  }

  const HexCoord target = state_.world.target();
  if (config_.controller == ControllerKind::Aco) {
    for (auto& [id, r] : state_.robots) {
      if (r.status != RobotStatus::Live) continue;
      const int d = hex_distance(r.position, target);
      deposit(r.field, state_.world, r.position,
              d <= config_.sensing_radius ? std::optional<int>(d) : std::nullopt, config_.aco);
      evaporate(r.field, config_.aco.evaporation);
    }
  }

  std::map<RobotId, std::size_t> component_size;
  for (const auto& part : connectivity_components(positions, config_.comm_range)) {
    rec.largest_component = std::max(rec.largest_component, part.size());
    for (RobotId id : part) component_size[id] = part.size();
  }

  std::optional<RobotId> leader;
  if (config_.controller == ControllerKind::Bco && state_.board) leader = state_.board->leader;

  std::vector<int> distances;
  for (auto& [id, r] : state_.robots) {
    if (r.status == RobotStatus::Arrived) {
      distances.push_back(r.arrival_distance);
      continue;
    }
    if (r.status != RobotStatus::Live) continue;
    const int d = hex_distance(r.position, target);
    distances.push_back(d);
    rec.rows.push_back({state_.tick, id, r.position, r.heading.index(), r.speed, d,
                        config_.controller, leader, component_size.at(id)});
    if (d <= 1) {
      r.status = RobotStatus::Arrived;
      r.arrived_at = state_.tick;
      r.arrival_distance = d;
      state_.world.vacate(r.position);
      rec.arrivals.push_back(id);
      if (state_.board && state_.board->leader == id) state_.board.reset();
    }
  }
  if (!distances.empty()) {
    rec.mean_distance = std::accumulate(distances.begin(), distances.end(), 0.0) /
                        static_cast<double>(distances.size());
    rec.median_distance = median_of(std::move(distances));
  }

  last_committed_ = state_.tick;
  ++state_.tick;
  update_status();
  return rec;
}

void Engine::update_status() {
  const bool none_live = state_.count(RobotStatus::Live) == 0;
  if (none_live && state_.pending_spawn.empty()) {
    status_ = state_.count(RobotStatus::Arrived) > 0 ? RunStatus::Success : RunStatus::Extinct;
  } else if (state_.tick >= config_.max_ticks) {
    status_ = RunStatus::Timeout;
  }
}

PheromoneField Engine::merged_field() const {
  std::map<HexCoord, double> best;
  for (const auto& [id, r] : state_.robots) {
    const bool took_part = r.status == RobotStatus::Live ||
                           (r.status == RobotStatus::Arrived && r.arrived_at == last_committed_);
    if (!took_part) continue;
    for (const auto& [cell, level] : r.field.levels()) {
      double& b = best[cell];
      b = std::max(b, level);
    }
  }
  PheromoneField out;
  for (const auto& [cell, level] : best) out.add(cell, level);
  return out;
}

void Engine::check_invariants() const {
  std::size_t live = 0;
  for (const auto& [id, r] : state_.robots) {
    if (r.status != RobotStatus::Live) continue;
    ++live;
    if (!state_.world.accessible(r.position)) throw std::logic_error("robot on inaccessible cell");
    if (state_.world.occupant(r.position) != id) throw std::logic_error("occupancy out of sync");
  }
  if (live != state_.world.occupancy().size()) throw std::logic_error("stray occupancy entries");
  for (RobotId id : state_.pending_spawn) {
    if (state_.robots.at(id).status != RobotStatus::Pending) {
      throw std::logic_error("pending robot is already spawned");
    }
  }
  std::size_t accounted = 0;
  for (auto s : {RobotStatus::Pending, RobotStatus::Live, RobotStatus::Arrived, RobotStatus::Removed}) {
    accounted += state_.count(s);
  }
  if (accounted != static_cast<std::size_t>(config_.robots) ||
      state_.pending_spawn.size() != state_.count(RobotStatus::Pending)) {
    throw std::logic_error("robot count not conserved");
  }
  if (state_.board && !state_.robots.contains(state_.board->leader)) {
    throw std::logic_error("board names an unknown robot");
  }
}

RunResult run(const ScenarioConfig& config, bool keep_tracker) {
  Engine engine(config, keep_tracker);
  RunResult out;
  RunSummary& s = out.summary;
  s.controller = config.controller;
  s.seed = config.seed;
  s.robots = config.robots;

  while (!engine.finished()) {
    TickRecord rec = engine.step();
    if (!s.first_arrival_tick && !rec.arrivals.empty()) s.first_arrival_tick = rec.tick;
    s.messages += rec.messages;
    s.max_component_size = std::max(s.max_component_size, rec.largest_component);
    s.mean_distance.push_back(rec.mean_distance);
    s.median_distance.push_back(rec.median_distance);
    s.largest_component.push_back(rec.largest_component);
    out.trace.insert(out.trace.end(), rec.rows.begin(), rec.rows.end());
  }

  const SimState& st = engine.state();
  s.status = engine.status();
  s.ticks = st.tick;
  s.arrived = st.count(RobotStatus::Arrived);
  s.removed = st.count(RobotStatus::Removed);
  s.fraction_arrived = static_cast<double>(s.arrived) / static_cast<double>(config.robots);
  if (config.controller == ControllerKind::Aco) {
    out.field = engine.merged_field();
    out.field_tick = st.tick - 1;
  }
  out.tracker = st.tracker;
  return out;
}

}  // namespace hexswarm
