#include "hexswarm/aco.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <fmt/format.h>

namespace hexswarm {

void AcoParams::validate() const {
  if (!(evaporation > 0.0 && evaporation < 1.0)) throw ConfigError("evaporation", "must lie in (0,1)");
  if (!(deposit > 0.0)) throw ConfigError("deposit", "must be > 0");
  if (!(alpha >= 0.0)) throw ConfigError("alpha", "must be >= 0");
  if (!(beta >= 0.0)) throw ConfigError("beta", "must be >= 0");
  if (!(floor >= 0.0)) throw ConfigError("floor", "must be >= 0");
}

double PheromoneField::level(const HexCoord& c) const {
  const auto it = levels_.find(c);
  return it == levels_.end() ? 0.0 : it->second;
}

void PheromoneField::add(const HexCoord& c, double amount) {
  if (!(amount >= 0.0)) throw std::invalid_argument("pheromone increments must be >= 0");
  if (amount == 0.0) return;
  levels_[c] += amount;
}

void PheromoneField::scale(double factor, double cutoff) {
  for (auto it = levels_.begin(); it != levels_.end();) {
    it->second *= factor;
    if (it->second < cutoff) {
      it = levels_.erase(it);
    } else {
      ++it;
    }
  }
}

PheromoneField operator+(const PheromoneField& a, const PheromoneField& b) {
  PheromoneField sum = a;
  for (const auto& [cell, level] : b.levels_) sum.levels_[cell] += level;
  return sum;
}

void write_field_rows(std::ostream& out, Tick tick, const PheromoneField& field) {
  for (const auto& [cell, level] : field.levels()) {
    out << fmt::format("{},{},{},{}\n", tick, cell.q, cell.r, level);
  }
}

void deposit(PheromoneField& field, const World& world, const HexCoord& cell,
             std::optional<int> known_target_distance, const AcoParams& params) {
  if (!world.accessible(cell)) throw std::invalid_argument("deposit on an inaccessible cell");
  const double amount = known_target_distance
                            ? params.deposit / (1.0 + *known_target_distance)
                            : params.floor;
  field.add(cell, amount);
}

void evaporate(PheromoneField& field, double rho) { field.scale(1.0 - rho, kPheromoneCutoff); }

std::vector<std::pair<Direction, double>> transition_probs(const HexCoord& c,
                                                          const PheromoneField& field,
                                                          const Observation& obs,
                                                          const World& world,
                                                          const AcoParams& params,
                                                          std::span<const HexCoord> excluded) {
  std::vector<std::pair<Direction, double>> probs;
  double total = 0.0;
  for (const auto& [dir, cell] : world.accessible_neighbors(c)) {
    if (std::find(excluded.begin(), excluded.end(), cell) != excluded.end()) continue;
    const double tau = field.level(cell) + params.floor;
    const double eta =
        obs.knows_target() ? 1.0 / (1.0 + hex_distance(cell, world.target())) : 1.0;
    const double w = std::pow(tau, params.alpha) * std::pow(eta, params.beta);
    probs.emplace_back(dir, w);
    total += w;
  }
  if (probs.empty()) throw DeadEndError("no accessible neighbour");
  if (!(total > 0.0)) {
    // Every weight underflowed (tau0 = 0 on a bare field); fall back to uniform.
    for (auto& p : probs) p.second = 1.0 / static_cast<double>(probs.size());
    return probs;
  }
  for (auto& p : probs) p.second /= total;
  return probs;
}

Move decide_move_aco(const Observation& obs, const PheromoneField& field, const World& world,
                     const AcoParams& params, Rng& rng, std::optional<HexCoord> came_from) {
  if (obs.situation == world.target()) return {Direction(0), 0};
  std::vector<HexCoord> excluded = obs.reported_cells;
  std::vector<std::pair<Direction, double>> probs;
  if (came_from) {
    excluded.push_back(*came_from);
    try {
      probs = transition_probs(obs.situation, field, obs, world, params, excluded);
    } catch (const DeadEndError&) {
      excluded.pop_back();
    }
  }
  if (probs.empty()) {
    try {
      probs = transition_probs(obs.situation, field, obs, world, params, excluded);
    } catch (const DeadEndError&) {
      return {Direction(0), 0};
    }
  }
  const double u = uniform01(rng);
  double acc = 0.0;
  for (const auto& [dir, p] : probs) {
    acc += p;
    if (u < acc) return {dir, 1};
  }
  return {probs.back().first, 1};
}

}  // namespace hexswarm
