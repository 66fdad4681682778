#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hexswarm/comms.hpp"
#include "hexswarm/controller.hpp"

namespace hexswarm {

struct AcoParams {
  double evaporation = 0.1;  // rho, in (0,1)
  double deposit = 1.0;      // Q
  double alpha = 1.0;        // pheromone exponent
  double beta = 2.0;         // heuristic exponent
  double floor = 0.01;       // tau0

  void validate() const;
};

/// Levels below this are dropped by evaporate().
inline constexpr double kPheromoneCutoff = 1e-9;

/// Per-cell trail intensity.  Absent cells read as zero.
class PheromoneField {
public:
  double level(const HexCoord& c) const;
  const std::map<HexCoord, double>& levels() const noexcept { return levels_; }
  bool empty() const noexcept { return levels_.empty(); }

  void add(const HexCoord& c, double amount);
  void scale(double factor, double cutoff);

  /// Cellwise sum; used to check that evaporation is linear.
  friend PheromoneField operator+(const PheromoneField& a, const PheromoneField& b);

private:
  std::map<HexCoord, double> levels_;
};

/// Writes `tick,q,r,level` rows (no header).
void write_field_rows(std::ostream& out, Tick tick, const PheromoneField& field);

/// Adds Q/(1+d) when the target distance d is known, else tau0.  Throws
/// std::invalid_argument for an inaccessible cell.
void deposit(PheromoneField& field, const World& world, const HexCoord& cell,
             std::optional<int> known_target_distance, const AcoParams& params);

/// Multiplies every level by (1 - rho); levels under kPheromoneCutoff vanish.
void evaporate(PheromoneField& field, double rho);

/// No accessible, non-excluded neighbour to move to.
class DeadEndError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/**
 * Normalised transition weights (tau + tau0)^alpha * eta^beta over the
 * accessible neighbours of `c`, ascending by direction.  eta is
 * 1/(1 + distance to target) once the robot knows about the target, else 1.
 * Cells listed in `excluded` are skipped.  Throws DeadEndError when nothing
 * is left.
 */
std::vector<std::pair<Direction, double>> transition_probs(const HexCoord& c,
                                                          const PheromoneField& field,
                                                          const Observation& obs,
                                                          const World& world,
                                                          const AcoParams& params,
                                                          std::span<const HexCoord> excluded = {});

/**
 * Samples a direction by inverse CDF, avoiding cells other robots reported
 * and the cell it just left.  The backtrack ban is dropped first when that
 * leaves nothing; the robot stays put on the target or when every neighbour
 * is blocked.
 */
Move decide_move_aco(const Observation& obs, const PheromoneField& field, const World& world,
                     const AcoParams& params, Rng& rng,
                     std::optional<HexCoord> came_from = std::nullopt);

}  // namespace hexswarm
