#include "hexswarm/controller.hpp"

#include <string>

namespace hexswarm {

std::string_view to_string(ControllerKind kind) noexcept {
  switch (kind) {
    case ControllerKind::Ga: return "ga";
    case ControllerKind::Aco: return "aco";
    case ControllerKind::Bco: return "bco";
  }
  return "?";
}

ControllerKind parse_controller(std::string_view name) {
  if (name == "ga") return ControllerKind::Ga;
  if (name == "aco") return ControllerKind::Aco;
  if (name == "bco") return ControllerKind::Bco;
  throw ConfigError("controller", "expected one of ga, aco, bco; got '" + std::string(name) + "'");
}

bool feasible(const World& world, const HexCoord& from, const Move& m) {
  return m.speed == 0 || world.accessible(step(from, m.direction));
}

std::optional<Direction> random_feasible_direction(const World& world, const HexCoord& from,
                                                   Rng& rng) {
  const auto options = world.accessible_neighbors(from);
  if (options.empty()) return std::nullopt;
  const int pick = uniform_int(rng, 0, static_cast<int>(options.size()) - 1);
  return options[static_cast<std::size_t>(pick)].first;
}

}  // namespace hexswarm
