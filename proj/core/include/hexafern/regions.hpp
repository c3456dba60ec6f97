#pragma once

// Constructors for the region families. Each one walks the region's boundary
// clockwise from its north-western corner, collects the enclosed cells and
// translates the result so the smallest row and column are 0.
//
// Primed variants put weight 1/2 on the vertical lozenges sitting in the
// notches of the western zigzag.

#include "hexafern/boundary.hpp"
#include "hexafern/fern.hpp"
#include "hexafern/lattice.hpp"

#include <string>
#include <vector>

namespace hexafern {

enum class Family { P, Pp, Q, Qp, K, Kp, L, Lbar, R, Rp, F };

std::string family_name(Family f);
/// Accepts the names produced by family_name; throws std::invalid_argument.
Family parse_family(const std::string& name);
bool is_primed(Family f);

struct RegionSpec {
  Family family = Family::P;
  int a = 0, b = 0, c = 0;     // P, Pp
  FernSeq t;                   // Q, Qp, K, Kp
  int m = 0, n = 0;            // L, Lbar
  std::vector<int> positions;  // L, Lbar
  int x = 0, y = 0, z = 0;     // R, Rp, F
  FernSeq fern;                // R, Rp, F

  bool operator==(const RegionSpec&) const = default;
};

std::string describe(const RegionSpec& spec);

WeightedRegion build_P(int a, int b, int c);
WeightedRegion build_P_primed(int a, int b, int c);
WeightedRegion build_Q(const FernSeq& t);
WeightedRegion build_Q_primed(const FernSeq& t);
WeightedRegion build_K(const FernSeq& t);
WeightedRegion build_K_primed(const FernSeq& t);
WeightedRegion build_L(int m, int n, const std::vector<int>& positions);
WeightedRegion build_L_bar(int m, int n, const std::vector<int>& positions);
WeightedRegion build_R(int x, int y, int z, const FernSeq& a);
WeightedRegion build_R_primed(int x, int y, int z, const FernSeq& a);
WeightedRegion build_F(int x, int y, int z, const FernSeq& a);

WeightedRegion build(const RegionSpec& spec);

/// A region together with its drawing data, in the region's normalized
/// coordinates: the clockwise outline (first point not repeated) and the
/// triangles cut out of it.
struct RegionGeometry {
  WeightedRegion region;
  std::vector<LatticePoint> outline;
  std::vector<TriCoord> removed;
};

RegionGeometry build_geometry(const RegionSpec& spec);

/// False when the parameters describe no lattice polygon (a negative side).
/// build() throws std::invalid_argument in exactly these cases.
bool buildable(const RegionSpec& spec);

/// Whether the cell set is its own mirror image in some vertical line.
bool is_mirror_symmetric(const std::vector<TriCoord>& cells);

}  // namespace hexafern
