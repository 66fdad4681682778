#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hexswarm/controller.hpp"

namespace hexswarm {

/// Genome of the GA controller: a heading gene and a speed gene.
struct Chromosome {
  Direction direction;
  int speed = 0;       // in [0, kMaxSpeed]
  double fitness = 0;  // scratch value assigned by the search

  Move move() const noexcept { return {direction, speed}; }
};

struct GaParams {
  int population = 12;
  int generations = 8;
  int tournament_k = 2;
  double crossover_prob = 0.9;
  double mutation_prob = 0.1;  // per gene
  double alignment_weight = 0.25;

  /// Throws ConfigError naming the offending key.
  void validate() const;
};

/**
 * Target-distance gain of the landing cell plus `alignment_weight` times the
 * fraction of reported neighbour headings matching the chromosome's heading.
 * The gain term is zero when the robot knows nothing about the target.
 */
double fitness(const Chromosome& ch, const Observation& obs, const World& world,
               double alignment_weight);

/// k draws with replacement; highest fitness wins, ties to the lower index.
/// Throws std::invalid_argument on an empty population.
Chromosome tournament_select(std::span<const Chromosome> pop, int k, Rng& rng);

/// Uniform per-gene crossover with probability `prob`, else parent copies.
std::pair<Chromosome, Chromosome> crossover(const Chromosome& a, const Chromosome& b, double prob,
                                            Rng& rng);

/// Resamples each gene uniformly from its domain with probability `prob`.
Chromosome mutate(Chromosome ch, double prob, Rng& rng);

Chromosome random_chromosome(Rng& rng);

/// Best score of the population after initialisation and after each generation.
struct GaTrace {
  std::vector<double> best_per_generation;
};

/**
 * Chooses the robot's next move.  A robot with neither target knowledge nor
 * neighbour headings draws a uniformly random feasible move.  Otherwise a
 * small elitist GA is run; infeasible chromosomes score -inf.
 */
Move decide_move_ga(const Observation& obs, const World& world, const GaParams& params, Rng& rng,
                    GaTrace* trace = nullptr);

}  // namespace hexswarm
