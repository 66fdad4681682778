#include "hexswarm/hexworld.hpp"

#include <cstdlib>

namespace hexswarm {

namespace {

constexpr std::array<HexCoord, Direction::kCount> kOffsets{{
    {+1, 0}, {+1, -1}, {0, -1}, {-1, 0}, {-1, +1}, {0, +1},
}};

const HexCoord kOrigin{0, 0};

}  // namespace

std::ostream& operator<<(std::ostream& out, const HexCoord& c) {
  return out << '(' << c.q << ',' << c.r << ')';
}

Direction::Direction(int index) : index_(index) {
  if (index < 0 || index >= kCount) {
    throw std::out_of_range("direction index " + std::to_string(index) + " outside [0,6)");
  }
}

HexCoord Direction::offset() const noexcept { return kOffsets[static_cast<std::size_t>(index_)]; }

const std::array<Direction, Direction::kCount>& Direction::all() {
  static const std::array<Direction, kCount> dirs{Direction(0), Direction(1), Direction(2),
                                                  Direction(3), Direction(4), Direction(5)};
  return dirs;
}

int hex_distance(const HexCoord& a, const HexCoord& b) noexcept {
  const int dq = a.q - b.q;
  const int dr = a.r - b.r;
  return (std::abs(dq) + std::abs(dr) + std::abs(dq + dr)) / 2;
}

HexCoord step(const HexCoord& c, Direction d) noexcept {
  const HexCoord o = d.offset();
  return {c.q + o.q, c.r + o.r};
}

HexBoard::HexBoard(int radius, int margin) : radius_(radius), margin_(margin) {
  if (radius < 1) throw ConfigError("radius", "must be >= 1");
  if (margin < 0 || margin > radius) throw ConfigError("margin", "must lie in [0, radius]");
}

bool HexBoard::contains(const HexCoord& c) const noexcept {
  return hex_distance(c, kOrigin) <= radius_;
}

bool HexBoard::accessible(const HexCoord& c) const noexcept {
  return hex_distance(c, kOrigin) <= radius_ - margin_;
}

std::vector<std::pair<Direction, HexCoord>> HexBoard::accessible_neighbors(
    const HexCoord& c) const {
  std::vector<std::pair<Direction, HexCoord>> out;
  out.reserve(Direction::kCount);
  for (Direction d : Direction::all()) {
    const HexCoord n = step(c, d);
    if (accessible(n)) out.emplace_back(d, n);
  }
  return out;
}

std::vector<HexCoord> HexBoard::accessible_cells() const {
  const int k = radius_ - margin_;
  std::vector<HexCoord> cells;
  cells.reserve(static_cast<std::size_t>(hexagon_cell_count(k)));
  for (int q = -k; q <= k; ++q) {
    for (int r = -k; r <= k; ++r) {
      if (accessible({q, r})) cells.push_back({q, r});
    }
  }
  return cells;
}

HexCoord HexBoard::walk(const HexCoord& from, Direction d, int speed,
                        const std::function<bool(const HexCoord&)>& blocked) const {
  HexCoord at = from;
  for (int i = 0; i < speed; ++i) {
    const HexCoord next = step(at, d);
    if (!accessible(next) || (blocked && blocked(next))) break;
    at = next;
  }
  return at;
}

std::optional<RobotId> World::occupant(const HexCoord& c) const {
  if (auto it = occupancy_.find(c); it != occupancy_.end()) return it->second;
  return std::nullopt;
}

void World::occupy(const HexCoord& c, RobotId id) {
  if (!accessible(c)) throw std::logic_error("occupy: inaccessible cell");
  if (occupied(c)) throw std::logic_error("occupy: cell already occupied");
  for (const auto& [cell, who] : occupancy_) {
    if (who == id) throw std::logic_error("occupy: robot already placed");
  }
  occupancy_.emplace(c, id);
}

void World::vacate(const HexCoord& c) { occupancy_.erase(c); }

World make_world(int radius, int margin, HexCoord target, HexCoord entry) {
  if (radius < 1) throw ConfigError("radius", "must be >= 1");
  if (margin < 0 || margin >= radius) throw ConfigError("margin", "must lie in [0, radius)");
  const HexBoard board(radius, margin);
  if (!board.accessible(target)) throw ConfigError("target", "cell is not accessible");
  if (!board.accessible(entry)) throw ConfigError("entry", "cell is not accessible");
  if (target == entry) throw ConfigError("entry", "must differ from target");
  return World(board, target, entry);
}

}  // namespace hexswarm
