#pragma once

// Exact weighted tiling counts.
//
// count_tilings searches depth first: it always covers the smallest uncovered
// cell (in TriCoord order), propagates forced lozenges after each placement,
// and optionally memoizes on the set of uncovered cells. Because cells are
// covered in order, only the cells of the current and next row can be covered
// out of order, so the number of distinct states stays small.
//
// count_matchings_dual works on the dual bipartite graph instead and removes
// the highest-numbered vertex first, without forced-move propagation.

#include "hexafern/exact.hpp"
#include "hexafern/lattice.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hexafern {

inline constexpr std::uint64_t kDefaultNodeCap = 100'000'000;

struct CountOptions {
  bool memoize = true;
  std::uint64_t node_cap = kDefaultNodeCap;
  bool count_unweighted = false;  // also fill CountResult::tilings_enumerated
};

struct CountResult {
  Rational value;
  std::optional<BigInt> tilings_enumerated;
  std::uint64_t nodes = 0;
};

class ResourceLimitExceeded : public std::runtime_error {
 public:
  ResourceLimitExceeded(std::size_t cells, std::uint64_t cap);
  std::size_t cells() const { return cells_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::size_t cells_;
  std::uint64_t cap_;
};

CountResult count_tilings(const WeightedRegion& r, const CountOptions& options = {});

std::optional<Tiling> find_one_tiling(const WeightedRegion& r, const CountOptions& options = {});

/// Weighted bipartite graph on vertices 0..size-1. `left[v]` tells the side.
struct BipartiteGraph {
  struct Edge {
    int u;
    int v;
    Rational weight;
  };
  std::vector<bool> left;
  std::vector<Edge> edges;

  int size() const { return static_cast<int>(left.size()); }
};

/// Vertices are the region's cells in TriCoord order (Up cells on the left),
/// edges its lozenges.
BipartiteGraph dual_graph(const WeightedRegion& r);

/// Sum over perfect matchings of the product of edge weights.
Rational count_perfect_matchings(const BipartiteGraph& g, const CountOptions& options = {});

Rational count_matchings_dual(const WeightedRegion& r, const CountOptions& options = {});

}  // namespace hexafern
