#pragma once

// Triangular-lattice geometry.
//
// Lattice points are (h, k): h counts horizontal lattice lines downward and k
// runs along a line. The point sits at x = k + h/2, y = -h * sqrt(3)/2, so every
// integer shift (dh, dk) is a lattice translation.
//
// Unit triangles:
//   Up(r, c)   apex (r, c), base (r+1, c-1) -- (r+1, c)
//   Down(r, c) top edge (r, c) -- (r, c+1), bottom vertex (r+1, c)
//
// Within row r the triangles interleave as ... Up(r,c) Down(r,c) Up(r,c+1) ...
// and TriCoord's ordering follows that (row first, then column, Up before Down).
//
// Adjacency:
//   Up(r,c):   Down(r,c) right, Down(r,c-1) left, Down(r+1,c-1) below
//   Down(r,c): Up(r,c) left, Up(r,c+1) right, Up(r-1,c+1) above
//
// Lozenge kinds, named by the direction the long diagonal leans:
//   Up(r,c) + Down(r,c)     RightTilting
//   Up(r,c) + Down(r,c-1)   LeftTilting
//   Up(r,c) + Down(r+1,c-1) Vertical

#include "hexafern/exact.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hexafern {

enum class Orient : unsigned char { Up = 0, Down = 1 };

struct TriCoord {
  int row = 0;
  int col = 0;
  Orient orient = Orient::Up;

  auto operator<=>(const TriCoord&) const = default;
  bool operator==(const TriCoord&) const = default;
};

TriCoord up(int row, int col);
TriCoord down(int row, int col);
std::string to_string(const TriCoord& t);

enum class LozengeKind : unsigned char { LeftTilting, RightTilting, Vertical };

struct Lozenge {
  TriCoord first;   // the Up triangle
  TriCoord second;  // the Down triangle
  LozengeKind kind = LozengeKind::RightTilting;

  auto operator<=>(const Lozenge&) const = default;
  bool operator==(const Lozenge&) const = default;
};

/// Lozenge formed by two adjacent triangles given in either order, or nullopt
/// if they do not share an edge.
std::optional<Lozenge> make_lozenge(const TriCoord& a, const TriCoord& b);

/// Adjacent triangles of opposite orientation. Triangles with a negative row or
/// column are not addressable and are omitted, so the result has 1 to 3 entries.
std::vector<TriCoord> neighbors(const TriCoord& t);

/// A finite set of unit triangles. Lozenge weights default to 1; only the
/// non-default ones are stored.
class WeightedRegion {
 public:
  WeightedRegion() = default;
  /// Throws std::invalid_argument if a weight is not strictly positive or its
  /// lozenge is not inside the cell set.
  explicit WeightedRegion(std::vector<TriCoord> cells,
                          std::map<Lozenge, Rational> weights = {});

  const std::vector<TriCoord>& cells() const { return cells_; }
  const std::map<Lozenge, Rational>& weights() const { return weights_; }

  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  bool contains(const TriCoord& t) const;
  std::optional<std::size_t> index_of(const TriCoord& t) const;
  Rational weight(const Lozenge& l) const;
  std::size_t up_count() const;
  std::size_t down_count() const;

  /// Same region with the given cells deleted; weights on lozenges that lose a
  /// cell are dropped.
  WeightedRegion without(const std::vector<TriCoord>& removed) const;
  /// Cell set only, every weight 1.
  WeightedRegion unweighted() const;

  bool operator==(const WeightedRegion& other) const;

 private:
  std::vector<TriCoord> cells_;  // sorted, unique
  std::map<Lozenge, Rational> weights_;
};

struct Tiling {
  std::vector<Lozenge> lozenges;
};

bool is_balanced(const WeightedRegion& r);

/// Every cell covered exactly once by lozenges lying inside the region.
bool is_valid_tiling(const WeightedRegion& r, const Tiling& t);

/// Product of the lozenge weights of a tiling.
Rational tiling_weight(const WeightedRegion& r, const Tiling& t);

struct Reduction {
  WeightedRegion region;
  Rational multiplier;
  std::vector<Lozenge> removed;
};

/// Removes cells with a single admissible lozenge until none is left. A cell
/// with no admissible lozenge makes the region untileable: the result is then
/// the empty region with multiplier 0 and no removed lozenges.
Reduction forced_reduce(const WeightedRegion& r);

}  // namespace hexafern
