#include <doctest.h>

#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "hexswarm/hexworld.hpp"
#include "hexswarm/rng.hpp"

using namespace hexswarm;

namespace {

// Independent neighbour table, not taken from the library.
const HexCoord kOffsets[6] = {{1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}};

// BFS distances from `src` over cells accepted by `inside`.
template <class Inside>
std::map<HexCoord, int> bfs(HexCoord src, Inside inside) {
  std::map<HexCoord, int> dist{{src, 0}};
  std::queue<HexCoord> q;
  q.push(src);
  while (!q.empty()) {
    const HexCoord c = q.front();
    q.pop();
    for (const HexCoord& o : kOffsets) {
      const HexCoord n{c.q + o.q, c.r + o.r};
      if (inside(n) && !dist.contains(n)) {
        dist[n] = dist[c] + 1;
        q.push(n);
      }
    }
  }
  return dist;
}

}  // namespace

TEST_CASE("hex_distance examples") {
  CHECK(hex_distance({0, 0}, {0, 0}) == 0);
  CHECK(hex_distance({0, 0}, {1, 0}) == 1);
  CHECK(hex_distance({0, 0}, {2, -1}) == 2);

  const auto oracle = bfs({0, 0}, [](const HexCoord& c) { return std::abs(c.q) <= 4 && std::abs(c.r) <= 4; });
  CHECK(oracle.at({2, -1}) == 2);
}

TEST_CASE("step examples") {
  CHECK(step({0, 0}, Direction(0)) == HexCoord{1, 0});
  CHECK(step({0, 0}, Direction(3)) == HexCoord{-1, 0});
  CHECK(step({2, -1}, Direction(5)) == HexCoord{2, 0});
  for (int d = 0; d < 6; ++d) CHECK(Direction(d).offset() == kOffsets[d]);
}

TEST_CASE("direction domain") {
  CHECK(Direction::all().size() == 6);
  CHECK_THROWS_AS(Direction(6), std::out_of_range);
  CHECK_THROWS_AS(Direction(-1), std::out_of_range);
  for (const Direction d : Direction::all()) {
    CHECK(d.opposite().opposite() == d);
    CHECK(step(step({3, -2}, d), d.opposite()) == HexCoord{3, -2});
  }
}

TEST_CASE("every step lands at distance 1 on six distinct cells") {
  Rng rng(17);
  for (int i = 0; i < 1000; ++i) {
    const HexCoord c{uniform_int(rng, -1000, 1000), uniform_int(rng, -1000, 1000)};
    std::set<HexCoord> seen;
    for (const Direction d : Direction::all()) {
      const HexCoord n = step(c, d);
      CHECK(hex_distance(c, n) == 1);
      seen.insert(n);
    }
    CHECK(seen.size() == 6);
  }
}

TEST_CASE("metric is symmetric and obeys the triangle inequality") {
  Rng rng(3);
  auto cell = [&] { return HexCoord{uniform_int(rng, -50, 50), uniform_int(rng, -50, 50)}; };
  for (int i = 0; i < 5000; ++i) {
    const HexCoord a = cell(), b = cell(), c = cell();
    CHECK(hex_distance(a, b) == hex_distance(b, a));
    CHECK(hex_distance(a, c) <= hex_distance(a, b) + hex_distance(b, c));
  }
}

TEST_CASE("hex_distance matches BFS on a radius-6 board") {
  const HexBoard board(6, 0);
  const auto cells = board.accessible_cells();
  REQUIRE(cells.size() == 127);
  for (const HexCoord& src : cells) {
    const auto dist = bfs(src, [&](const HexCoord& c) { return board.accessible(c); });
    REQUIRE(dist.size() == cells.size());
    for (const HexCoord& dst : cells) CHECK(hex_distance(src, dst) == dist.at(dst));
  }
}

TEST_CASE("accessible cell counts") {
  // Enumeration over the bounding square against the closed form.
  for (int k = 0; k <= 14; ++k) {
    std::int64_t n = 0;
    for (int q = -k; q <= k; ++q) {
      for (int r = -k; r <= k; ++r) n += hex_distance({0, 0}, {q, r}) <= k;
    }
    CHECK(n == hexagon_cell_count(k));
  }
  const World w = make_world(15, 1, {10, 0}, {-10, 0});
  CHECK(w.board().accessible_count() == 631);
  CHECK(w.board().accessible_cells().size() == 631);

  const World tiny = make_world(1, 0, {1, 0}, {0, 1});
  CHECK(tiny.board().accessible_count() == 7);
}

TEST_CASE("accessible_neighbors") {
  const World w = make_world(10, 1, {5, 0}, {-5, 0});
  CHECK(w.accessible_neighbors({0, 0}).size() == 6);

  const auto rim = w.accessible_neighbors({9, 0});
  CHECK(rim.size() < 6);
  std::size_t expected = 0;
  for (const HexCoord& o : kOffsets) expected += hex_distance({0, 0}, {9 + o.q, o.r}) <= 9;
  CHECK(rim.size() == expected);

  for (const HexCoord& c : w.board().accessible_cells()) {
    const auto ns = w.accessible_neighbors(c);
    for (std::size_t i = 0; i < ns.size(); ++i) {
      CHECK(w.accessible(ns[i].second));
      CHECK(ns[i].second == step(c, ns[i].first));
      if (i > 0) CHECK(ns[i - 1].first.index() < ns[i].first.index());
    }
  }

  const HexBoard single(5, 5);
  CHECK(single.accessible_count() == 1);
  CHECK(single.accessible_neighbors({0, 0}).empty());
}

TEST_CASE("accessibility predicate") {
  const HexBoard b(7, 2);
  for (int q = -9; q <= 9; ++q) {
    for (int r = -9; r <= 9; ++r) {
      const HexCoord c{q, r};
      CHECK(b.accessible(c) == (hex_distance(c, {0, 0}) <= 5));
      CHECK(b.contains(c) == (hex_distance(c, {0, 0}) <= 7));
    }
  }
}

TEST_CASE("make_world rejects bad input with the field name") {
  auto field_of = [](auto&& fn) {
    try {
      fn();
    } catch (const ConfigError& e) {
      return std::string(e.field());
    }
    return std::string("none");
  };
  CHECK(field_of([] { make_world(5, 5, {0, 0}, {1, 0}); }) == "margin");
  CHECK(field_of([] { make_world(0, 0, {0, 0}, {0, 0}); }) == "radius");
  CHECK(field_of([] { make_world(5, 1, {5, 0}, {0, 0}); }) == "target");
  CHECK(field_of([] { make_world(5, 1, {0, 0}, {0, 7}); }) == "entry");
  CHECK(field_of([] { make_world(5, 1, {1, 1}, {1, 1}); }) == "entry");
}

TEST_CASE("occupancy") {
  World w = make_world(3, 1, {1, 0}, {-1, 0});
  CHECK(w.occupancy().empty());
  w.occupy({0, 0}, 4);
  CHECK(w.occupied({0, 0}));
  CHECK(w.occupant({0, 0}) == 4u);
  CHECK_THROWS_AS(w.occupy({0, 0}, 5), std::logic_error);
  CHECK_THROWS_AS(w.occupy({3, 0}, 5), std::logic_error);
  w.vacate({0, 0});
  CHECK_FALSE(w.occupied({0, 0}));
  CHECK_FALSE(w.occupant({0, 0}).has_value());
}

TEST_CASE("walk truncates at inaccessible cells") {
  const HexBoard b(4, 1);
  const auto none = [](const HexCoord&) { return false; };
  CHECK(b.walk({2, 0}, Direction(0), 2, none) == HexCoord{3, 0});
  CHECK(b.walk({0, 0}, Direction(0), 2, none) == HexCoord{2, 0});
  CHECK(b.walk({3, 0}, Direction(0), 2, none) == HexCoord{3, 0});
  CHECK(b.walk({0, 0}, Direction(0), 0, none) == HexCoord{0, 0});
}
