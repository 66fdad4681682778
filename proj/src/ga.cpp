#include "hexswarm/ga.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace hexswarm {

namespace {

constexpr double kInfeasible = -std::numeric_limits<double>::infinity();

void require_probability(double p, const char* key) {
  if (!(p >= 0.0 && p <= 1.0)) throw ConfigError(key, "must lie in [0,1]");
}

double score(const Chromosome& ch, const Observation& obs, const World& world, double weight) {
  if (!feasible(world, obs.situation, ch.move())) return kInfeasible;
  return fitness(ch, obs, world, weight);
}

std::size_t best_index(std::span<const Chromosome> pop) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < pop.size(); ++i) {
    if (pop[i].fitness > pop[best].fitness) best = i;
  }
  return best;
}

}  // namespace

void GaParams::validate() const {
  if (population < 2) throw ConfigError("population", "must be >= 2");
  if (population % 2 != 0) throw ConfigError("population", "must be even");
  if (generations < 1) throw ConfigError("generations", "must be >= 1");
  if (tournament_k < 1) throw ConfigError("tournament_k", "must be >= 1");
  require_probability(crossover_prob, "crossover_prob");
  require_probability(mutation_prob, "mutation_prob");
  if (!(alignment_weight >= 0.0)) throw ConfigError("alignment_weight", "must be >= 0");
}

double fitness(const Chromosome& ch, const Observation& obs, const World& world,
               double alignment_weight) {
  double gain = 0.0;
  if (obs.best_known_target_distance) {
    const HexCoord landing = world.board().walk(obs.situation, ch.direction, ch.speed);
    gain = *obs.best_known_target_distance - hex_distance(landing, world.target());
  }
  double align = 0.0;
  if (!obs.neighbor_headings.empty()) {
    const auto same = std::count_if(obs.neighbor_headings.begin(), obs.neighbor_headings.end(),
                                    [&](const auto& h) { return h.first == ch.direction; });
    align = static_cast<double>(same) / static_cast<double>(obs.neighbor_headings.size());
  }
  return gain + alignment_weight * align;
}

Chromosome tournament_select(std::span<const Chromosome> pop, int k, Rng& rng) {
  if (pop.empty()) throw std::invalid_argument("tournament_select: empty population");
  if (k < 1) throw std::invalid_argument("tournament_select: k must be >= 1");
  const int last = static_cast<int>(pop.size()) - 1;
  std::size_t winner = static_cast<std::size_t>(uniform_int(rng, 0, last));
  for (int i = 1; i < k; ++i) {
    const auto draw = static_cast<std::size_t>(uniform_int(rng, 0, last));
    if (pop[draw].fitness > pop[winner].fitness ||
        (pop[draw].fitness == pop[winner].fitness && draw < winner)) {
      winner = draw;
    }
  }
  return pop[winner];
}

std::pair<Chromosome, Chromosome> crossover(const Chromosome& a, const Chromosome& b, double prob,
                                            Rng& rng) {
  if (uniform01(rng) >= prob) return {a, b};
  Chromosome c1 = a;
  Chromosome c2 = b;
  if (uniform01(rng) < 0.5) std::swap(c1.direction, c2.direction);
  if (uniform01(rng) < 0.5) std::swap(c1.speed, c2.speed);
  return {c1, c2};
}

Chromosome mutate(Chromosome ch, double prob, Rng& rng) {
  if (uniform01(rng) < prob) ch.direction = Direction(uniform_int(rng, 0, Direction::kCount - 1));
  if (uniform01(rng) < prob) ch.speed = uniform_int(rng, 0, kMaxSpeed);
  return ch;
}

Chromosome random_chromosome(Rng& rng) {
  Chromosome ch;
  ch.direction = Direction(uniform_int(rng, 0, Direction::kCount - 1));
  ch.speed = uniform_int(rng, 0, kMaxSpeed);
  return ch;
}

Move decide_move_ga(const Observation& obs, const World& world, const GaParams& params, Rng& rng,
                    GaTrace* trace) {
  if (!obs.knows_target() && obs.neighbor_headings.empty()) {
    std::vector<Move> options;
    for (Direction d : Direction::all()) {
      for (int s = 0; s <= kMaxSpeed; ++s) {
        if (feasible(world, obs.situation, {d, s})) options.push_back({d, s});
      }
    }
    return options[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(options.size()) - 1))];
  }

  const double weight = params.alignment_weight;
  const auto pop_size = static_cast<std::size_t>(params.population);
  std::vector<Chromosome> pop(pop_size);
  for (auto& ch : pop) {
    ch = random_chromosome(rng);
    ch.fitness = score(ch, obs, world, weight);
  }
  if (trace) trace->best_per_generation.push_back(pop[best_index(pop)].fitness);

  std::vector<Chromosome> next;
  next.reserve(pop_size);
  for (int g = 0; g < params.generations; ++g) {
    next.clear();
    next.push_back(pop[best_index(pop)]);
    while (next.size() < pop_size) {
      const Chromosome a = tournament_select(pop, params.tournament_k, rng);
      const Chromosome b = tournament_select(pop, params.tournament_k, rng);
      auto [c1, c2] = crossover(a, b, params.crossover_prob, rng);
      c1 = mutate(c1, params.mutation_prob, rng);
      c2 = mutate(c2, params.mutation_prob, rng);
      c1.fitness = score(c1, obs, world, weight);
      next.push_back(c1);
      if (next.size() < pop_size) {
        c2.fitness = score(c2, obs, world, weight);
        next.push_back(c2);
      }
    }
    pop.swap(next);
    if (trace) trace->best_per_generation.push_back(pop[best_index(pop)].fitness);
  }
  return pop[best_index(pop)].move();
}

}  // namespace hexswarm
