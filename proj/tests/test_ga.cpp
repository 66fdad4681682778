#include <doctest.h>

#include <array>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "hexswarm/ga.hpp"

using namespace hexswarm;

namespace {

Chromosome chrom(int dir, int speed, double fit = 0.0) { return {Direction(dir), speed, fit}; }

std::string error_field(const GaParams& p) {
  try {
    p.validate();
  } catch (const ConfigError& e) {
    return e.field();
  }
  return "";
}

}  // namespace

TEST_CASE("fitness examples") {
  const World w = make_world(10, 1, {5, 0}, {-5, 0});

  Observation still;
  still.situation = {0, 0};
  still.best_known_target_distance = 5;
  still.neighbor_headings = {{Direction(1), 1}, {Direction(2), 1}};
  CHECK(fitness(chrom(1, 0), still, w, 0.25) == doctest::Approx(0.25 * 0.5));

  Observation toward;
  toward.situation = {0, 0};
  toward.best_known_target_distance = 5;
  CHECK(fitness(chrom(0, 2), toward, w, 0.25) == doctest::Approx(2.0));
  CHECK(fitness(chrom(3, 2), toward, w, 0.25) == doctest::Approx(-2.0));

  Observation herd;
  herd.situation = {0, 0};
  herd.neighbor_headings.assign(4, {Direction(2), 1});
  CHECK(fitness(chrom(2, 1), herd, w, 0.25) == doctest::Approx(0.25));
  CHECK(fitness(chrom(3, 1), herd, w, 0.25) == doctest::Approx(0.0));
}

TEST_CASE("fitness truncates at the margin") {
  const World w = make_world(6, 1, {4, 0}, {-4, 0});
  Observation obs;
  obs.situation = {4, 0};
  obs.best_known_target_distance = 0;
  // One step to (5,0) is allowed, the second would leave the accessible disc.
  CHECK(fitness(chrom(0, 2), obs, w, 0.0) == doctest::Approx(-1.0));
}

TEST_CASE("tournament_select basics") {
  Rng rng(1);
  const std::vector<Chromosome> one{chrom(4, 1, -3.0)};
  for (int i = 0; i < 20; ++i) CHECK(tournament_select(one, 2, rng).direction == Direction(4));

  const std::vector<Chromosome> none;
  CHECK_THROWS_AS(tournament_select(none, 2, rng), std::invalid_argument);
}

TEST_CASE("tournament selection matches the closed form") {
  // Fitness rank i of n wins a k=2 tournament with probability (i/n)^2 - ((i-1)/n)^2.
  const std::vector<Chromosome> pop{chrom(0, 0, 1.0), chrom(1, 0, 2.0), chrom(2, 0, 3.0), chrom(3, 0, 4.0)};
  Rng rng(2024);
  constexpr int kTrials = 100000;
  std::array<int, 4> wins{};
  for (int i = 0; i < kTrials; ++i) ++wins[static_cast<std::size_t>(tournament_select(pop, 2, rng).direction.index())];
  for (int i = 0; i < 4; ++i) {
    const double p = (std::pow(i + 1, 2) - std::pow(i, 2)) / 16.0;
    const double sigma = std::sqrt(p * (1 - p) / kTrials);
    CHECK(std::abs(wins[static_cast<std::size_t>(i)] / double(kTrials) - p) <= 3 * sigma);
  }
  CHECK(std::abs(wins[3] / double(kTrials) - 7.0 / 16.0) <= 0.01);

  // 3.0 against 1.0: the weaker one only wins when drawn twice.
  const std::vector<Chromosome> duo{chrom(0, 0, 1.0), chrom(1, 0, 3.0)};
  int strong = 0;
  for (int i = 0; i < kTrials; ++i) strong += tournament_select(duo, 2, rng).fitness == 3.0;
  CHECK(std::abs(strong / double(kTrials) - 0.75) <= 0.01);

  // Equal fitness: the lower index wins any pair that contains it.
  const std::vector<Chromosome> tie{chrom(0, 0, 2.0), chrom(1, 0, 2.0)};
  int low = 0;
  for (int i = 0; i < kTrials; ++i) low += tournament_select(tie, 2, rng).direction == Direction(0);
  CHECK(std::abs(low / double(kTrials) - 0.75) <= 0.01);
}

TEST_CASE("crossover") {
  Rng rng(3);
  const Chromosome a = chrom(0, 2), b = chrom(3, 0);
  for (int i = 0; i < 1000; ++i) {
    const auto [c1, c2] = crossover(a, a, 0.9, rng);
    CHECK(c1.move() == a.move());
    CHECK(c2.move() == a.move());

    const auto [k1, k2] = crossover(a, b, 0.0, rng);
    CHECK(k1.move() == a.move());
    CHECK(k2.move() == b.move());
  }
  std::set<std::pair<int, int>> children;
  for (int i = 0; i < 1000; ++i) {
    const auto [c1, c2] = crossover(a, b, 1.0, rng);
    for (const Chromosome& c : {c1, c2}) {
      CHECK((c.direction == Direction(0) || c.direction == Direction(3)));
      CHECK((c.speed == 0 || c.speed == 2));
      children.insert({c.direction.index(), c.speed});
    }
    // Complementary children.
    CHECK(c1.direction != c2.direction);
    CHECK(c1.speed != c2.speed);
  }
  CHECK(children.size() == 4);
}

TEST_CASE("mutation") {
  Rng rng(4);
  const Chromosome base = chrom(2, 1);
  for (int i = 0; i < 1000; ++i) CHECK(mutate(base, 0.0, rng).move() == base.move());

  constexpr int kTrials = 100000;
  std::array<int, 6> dirs{};
  std::array<int, 3> speeds{};
  for (int i = 0; i < kTrials; ++i) {
    const Chromosome m = mutate(base, 1.0, rng);
    REQUIRE(m.speed >= 0);
    REQUIRE(m.speed <= kMaxSpeed);
    ++dirs[static_cast<std::size_t>(m.direction.index())];
    ++speeds[static_cast<std::size_t>(m.speed)];
  }
  for (int n : dirs) CHECK(std::abs(n / double(kTrials) - 1.0 / 6.0) <= 0.01);
  for (int n : speeds) CHECK(std::abs(n / double(kTrials) - 1.0 / 3.0) <= 0.01);
}

TEST_CASE("isolated robot draws a uniform feasible move") {
  const World w = make_world(1, 0, {1, 0}, {0, 1});
  Observation obs;
  obs.situation = {1, 0};
  GaParams p;
  std::map<std::pair<int, int>, int> seen;
  constexpr int kTrials = 60000;
  for (int i = 0; i < kTrials; ++i) {
    Rng rng = derive_stream(8, "iso", static_cast<std::uint64_t>(i));
    const Move m = decide_move_ga(obs, w, p, rng);
    REQUIRE(feasible(w, obs.situation, m));
    ++seen[{m.direction.index(), m.speed}];
  }
  // Corner of the 7-cell world: 3 open directions x speeds {1,2} plus 6 stays.
  CHECK(seen.size() == 12);
  for (const auto& [move, n] : seen) CHECK(std::abs(n / double(kTrials) - 1.0 / 12.0) <= 0.01);
}

TEST_CASE("cornered robot only picks open directions") {
  const World w = make_world(1, 0, {0, 0}, {0, 1});
  Observation obs;
  obs.situation = {1, 0};
  obs.best_known_target_distance = 1;
  obs.neighbor_headings = {{Direction(0), 1}};
  const std::set<int> open{2, 3, 4};
  for (int i = 0; i < 2000; ++i) {
    Rng rng = derive_stream(9, "corner", static_cast<std::uint64_t>(i));
    const Move m = decide_move_ga(obs, w, GaParams{}, rng);
    CHECK((m.speed == 0 || open.contains(m.direction.index())));
  }
}

TEST_CASE("robot next to a known target never moves away") {
  const World w = make_world(8, 1, {3, 0}, {-3, 0});
  Observation obs;
  obs.situation = {2, 0};
  obs.best_known_target_distance = 1;
  for (int i = 0; i < 2000; ++i) {
    Rng rng = derive_stream(10, "adjacent", static_cast<std::uint64_t>(i));
    const Move m = decide_move_ga(obs, w, GaParams{}, rng);
    const HexCoord landing = w.board().walk(obs.situation, m.direction, m.speed);
    CHECK(hex_distance(landing, w.target()) <= 1);
  }
}

TEST_CASE("elitism keeps the best fitness nondecreasing") {
  const World w = make_world(10, 1, {6, -2}, {-6, 0});
  Rng gen(5);
  for (int i = 0; i < 2000; ++i) {
    Observation obs;
    obs.situation = {uniform_int(gen, -4, 4), uniform_int(gen, -4, 4)};
    obs.best_known_target_distance = hex_distance(obs.situation, w.target()) + uniform_int(gen, 0, 2);
    obs.neighbor_headings.emplace_back(Direction(uniform_int(gen, 0, 5)), 1);
    GaParams p;
    p.mutation_prob = 0.5;
    Rng rng = derive_stream(11, "elite", static_cast<std::uint64_t>(i));
    GaTrace trace;
    decide_move_ga(obs, w, p, rng, &trace);
    REQUIRE(trace.best_per_generation.size() == static_cast<std::size_t>(p.generations + 1));
    for (std::size_t g = 1; g < trace.best_per_generation.size(); ++g) {
      CHECK(trace.best_per_generation[g] >= trace.best_per_generation[g - 1]);
    }
  }
}

TEST_CASE("decide_move_ga is a pure function of its inputs") {
  const World w = make_world(10, 1, {6, -2}, {-6, 0});
  Observation obs;
  obs.situation = {0, 0};
  obs.best_known_target_distance = 6;
  obs.neighbor_headings = {{Direction(5), 2}};
  for (int i = 0; i < 100; ++i) {
    Rng a = derive_stream(12, "pure", static_cast<std::uint64_t>(i));
    Rng b = derive_stream(12, "pure", static_cast<std::uint64_t>(i));
    CHECK(decide_move_ga(obs, w, GaParams{}, a) == decide_move_ga(obs, w, GaParams{}, b));
  }
}

TEST_CASE("GaParams validation") {
  CHECK(error_field(GaParams{}).empty());
  GaParams p;
  p.population = 7;
  CHECK(error_field(p) == "population");
  p = {};
  p.population = 0;
  CHECK(error_field(p) == "population");
  p = {};
  p.generations = 0;
  CHECK(error_field(p) == "generations");
  p = {};
  p.mutation_prob = 1.5;
  CHECK(error_field(p) == "mutation_prob");
  p = {};
  p.crossover_prob = -0.1;
  CHECK(error_field(p) == "crossover_prob");
  p = {};
  p.alignment_weight = -1;
  CHECK(error_field(p) == "alignment_weight");
}
