#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "hexswarm/hexworld.hpp"
#include "hexswarm/rng.hpp"

namespace hexswarm {

enum class ControllerKind { Ga, Aco, Bco };

std::string_view to_string(ControllerKind kind) noexcept;
/// Accepts "ga", "aco", "bco".  Throws ConfigError("controller", ...).
ControllerKind parse_controller(std::string_view name);

inline constexpr int kMaxSpeed = 2;

/// Direction plus number of unit steps, speed in [0, kMaxSpeed].
struct Move {
  Direction direction;
  int speed = 0;

  friend constexpr bool operator==(const Move&, const Move&) = default;
};

/// What a robot knows when it decides: its cell, comm degree, best known
/// target distance and the headings carried by position reports it received.
struct Observation {
  HexCoord situation;
  int degree = 0;
  std::optional<int> best_known_target_distance;
  std::vector<std::pair<Direction, int>> neighbor_headings;
  std::vector<HexCoord> reported_cells;  // where received position reports put other robots

  bool knows_target() const noexcept { return best_known_target_distance.has_value(); }
};

/// A move is feasible when it stays put or its first step is accessible.
bool feasible(const World& world, const HexCoord& from, const Move& m);

/// Uniform draw among directions whose first step is accessible.  nullopt
/// when every neighbour is inaccessible.
std::optional<Direction> random_feasible_direction(const World& world, const HexCoord& from,
                                                   Rng& rng);

}  // namespace hexswarm
