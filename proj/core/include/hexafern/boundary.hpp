#pragma once

// Boundary walks on the lattice and the cell set they enclose.

#include "hexafern/lattice.hpp"

#include <set>
#include <utility>
#include <vector>

namespace hexafern {

struct LatticePoint {
  int h = 0;
  int k = 0;

  auto operator<=>(const LatticePoint&) const = default;
  bool operator==(const LatticePoint&) const = default;
};

// E/W run along a horizontal line; DR/UL and DL/UR along the two slanted ones.
enum class Dir : unsigned char { E, W, DR, DL, UR, UL };

struct Run {
  Dir dir;
  int length;
};

using Path = std::vector<Run>;

LatticePoint step(LatticePoint p, Dir d, int length = 1);

/// Every point visited, unit step by unit step, starting with `start`.
std::vector<LatticePoint> walk(LatticePoint start, const Path& path);

/// Reverses a path and flips each direction, so it retraces the same edges.
Path reversed(const Path& path);

/// Alternating DL, DR, DL, ... unit steps, `edges` of them.
Path down_zigzag(int edges);

/// Unit triangles whose centroid lies strictly inside the closed polygon.
/// The polygon is given without repeating its first vertex; fewer than three
/// vertices encloses nothing.
std::vector<TriCoord> cells_inside(const std::vector<LatticePoint>& polygon);

/// Vertical lozenges at the notches of an upward western zigzag: a point
/// reached by an UL step and left by an UR step.
std::set<Lozenge> notch_lozenges(const std::vector<LatticePoint>& west_points);

/// Shift that moves the smallest row and the smallest column of `cells` to 0.
std::pair<int, int> normalizing_shift(const std::vector<TriCoord>& cells);

TriCoord shifted(const TriCoord& t, int dh, int dk);
LatticePoint shifted(const LatticePoint& p, int dh, int dk);
Lozenge shifted(const Lozenge& l, int dh, int dk);

}  // namespace hexafern
