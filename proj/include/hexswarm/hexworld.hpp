#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hexswarm {

using RobotId = std::uint32_t;

/// Configuration problem tied to a named field (config key or world parameter).
class ConfigError : public std::runtime_error {
public:
  ConfigError(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

private:
  std::string field_;
};

/**
 * Axial hex coordinate.  Any pair of integers is a coordinate; whether it is
 * a cell of a particular board is answered by HexBoard.
 */
struct HexCoord {
  int q = 0;
  int r = 0;

  friend constexpr auto operator<=>(const HexCoord&, const HexCoord&) = default;
};

std::ostream& operator<<(std::ostream& out, const HexCoord& c);

/// One of the six neighbour offsets, in the fixed order
/// (+1,0), (+1,-1), (0,-1), (-1,0), (-1,+1), (0,+1).
class Direction {
public:
  static constexpr int kCount = 6;

  constexpr Direction() = default;
  explicit Direction(int index);

  constexpr int index() const noexcept { return index_; }
  HexCoord offset() const noexcept;
  Direction opposite() const noexcept { return Direction((index_ + 3) % kCount); }

  static const std::array<Direction, kCount>& all();

  friend constexpr auto operator<=>(const Direction&, const Direction&) = default;

private:
  int index_ = 0;
};

int hex_distance(const HexCoord& a, const HexCoord& b) noexcept;
HexCoord step(const HexCoord& c, Direction d) noexcept;

/// Number of cells within hex distance k of a point: 3k(k+1)+1.
constexpr std::int64_t hexagon_cell_count(int k) {
  return k < 0 ? 0 : 3 * static_cast<std::int64_t>(k) * (k + 1) + 1;
}

/**
 * Hexagonal board centred on the origin.  Cells within `radius` exist; those
 * farther than `radius - margin` from the origin form the inaccessible rim.
 */
class HexBoard {
public:
  HexBoard(int radius, int margin);

  int radius() const noexcept { return radius_; }
  int margin() const noexcept { return margin_; }

  bool contains(const HexCoord& c) const noexcept;
  bool accessible(const HexCoord& c) const noexcept;

  /// Accessible neighbours of `c` in ascending direction order.
  std::vector<std::pair<Direction, HexCoord>> accessible_neighbors(const HexCoord& c) const;

  /// Every accessible cell, sorted by (q, r).
  std::vector<HexCoord> accessible_cells() const;
  std::int64_t accessible_count() const noexcept {
    return hexagon_cell_count(radius_ - margin_);
  }

  /**
   * Cell reached by up to `speed` unit steps along `d`, stopping before the
   * first inaccessible cell.  `blocked` is consulted for every candidate cell
   * as an extra obstacle test.
   */
  HexCoord walk(const HexCoord& from, Direction d, int speed,
                const std::function<bool(const HexCoord&)>& blocked = {}) const;

private:
  int radius_;
  int margin_;
};

/// Board plus target, importing point and robot occupancy.
class World {
public:
  const HexBoard& board() const noexcept { return board_; }
  const HexCoord& target() const noexcept { return target_; }
  const HexCoord& entry() const noexcept { return entry_; }

  bool accessible(const HexCoord& c) const noexcept { return board_.accessible(c); }
  std::vector<std::pair<Direction, HexCoord>> accessible_neighbors(const HexCoord& c) const {
    return board_.accessible_neighbors(c);
  }

  std::optional<RobotId> occupant(const HexCoord& c) const;
  bool occupied(const HexCoord& c) const { return occupancy_.contains(c); }
  const std::map<HexCoord, RobotId>& occupancy() const noexcept { return occupancy_; }

  /// Throws std::logic_error when the cell is taken, inaccessible or the id
  /// already stands elsewhere.
  void occupy(const HexCoord& c, RobotId id);
  void vacate(const HexCoord& c);

  friend World make_world(int radius, int margin, HexCoord target, HexCoord entry);

private:
  World(HexBoard board, HexCoord target, HexCoord entry)
      : board_(board), target_(target), entry_(entry) {}

  HexBoard board_;
  HexCoord target_;
  HexCoord entry_;
  std::map<HexCoord, RobotId> occupancy_;
};

/// Validates geometry and returns an empty world.  Throws ConfigError.
World make_world(int radius, int margin, HexCoord target, HexCoord entry);

}  // namespace hexswarm
