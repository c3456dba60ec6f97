#include "hexafern/count.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

namespace hexafern {

ResourceLimitExceeded::ResourceLimitExceeded(std::size_t cells, std::uint64_t cap)
    : std::runtime_error("region too large: search over " + std::to_string(cells) +
                         " cells exceeded the node cap of " + std::to_string(cap)),
      cells_(cells),
      cap_(cap) {}

namespace {

using Words = std::vector<std::uint64_t>;

struct WordsHash {
  std::size_t operator()(const Words& w) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t x : w) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xbf58476d1ce4e5b9ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

bool test(const Words& w, int i) { return (w[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1U; }
void clear(Words& w, int i) { w[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

int lowest(const Words& w) {
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k]) return static_cast<int>(k * 64) + std::countr_zero(w[k]);
  }
  return -1;
}

int highest(const Words& w) {
  for (std::size_t k = w.size(); k-- > 0;) {
    if (w[k]) return static_cast<int>(k * 64) + 63 - std::countl_zero(w[k]);
  }
  return -1;
}

Words full(int n) {
  Words w(static_cast<std::size_t>((n + 63) / 64), 0);
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
  return w;
}

struct Arc {
  int to;
  int weight;  // index into Graph::weights; 0 is the weight 1
};

// Cells and lozenges of a region in index form.
struct Graph {
  int n = 0;
  std::vector<std::vector<Arc>> adj;
  std::vector<Rational> weights{Rational(1)};
  std::vector<TriCoord> cells;
};

Graph index_region(const WeightedRegion& r, bool use_weights) {
  Graph g;
  g.cells = r.cells();
  g.n = static_cast<int>(g.cells.size());
  g.adj.resize(g.cells.size());
  for (int i = 0; i < g.n; ++i) {
    for (const auto& nb : neighbors(g.cells[static_cast<std::size_t>(i)])) {
      auto j = r.index_of(nb);
      if (!j) continue;
      int widx = 0;
      if (use_weights) {
        const Rational w = r.weight(*make_lozenge(g.cells[static_cast<std::size_t>(i)], nb));
        if (w != 1) {
          g.weights.push_back(w);
          widx = static_cast<int>(g.weights.size()) - 1;
        }
      }
      g.adj[static_cast<std::size_t>(i)].push_back({static_cast<int>(*j), widx});
    }
  }
  return g;
}

template <typename Value>
Value weight_as(const Graph& g, int idx);

template <>
BigInt weight_as<BigInt>(const Graph&, int) {
  return 1;
}

template <>
Rational weight_as<Rational>(const Graph& g, int idx) {
  return g.weights[static_cast<std::size_t>(idx)];
}

// Depth-first tiling search shared by counting and by find_one_tiling.
template <typename Value>
class Search {
 public:
  Search(const Graph& g, const CountOptions& options) : g_(g), options_(options) {}

  std::uint64_t nodes() const { return nodes_; }

  // Places forced lozenges reachable from `seeds`; returns false on a dead end.
  bool propagate(Words& state, std::vector<int> seeds, Value& factor,
                 std::vector<std::pair<int, int>>* placed) {
    while (!seeds.empty()) {
      const int c = seeds.back();
      seeds.pop_back();
      if (!test(state, c)) continue;
      int options = 0;
      const Arc* only = nullptr;
      for (const Arc& arc : g_.adj[static_cast<std::size_t>(c)]) {
        if (test(state, arc.to)) {
          ++options;
          only = &arc;
        }
      }
      if (options == 0) return false;
      if (options > 1) continue;
      clear(state, c);
      clear(state, only->to);
      if (only->weight != 0) factor *= weight_as<Value>(g_, only->weight);
      if (placed) placed->emplace_back(c, only->to);
      for (const int end : {c, only->to}) {
        for (const Arc& arc : g_.adj[static_cast<std::size_t>(end)]) {
          if (test(state, arc.to)) seeds.push_back(arc.to);
        }
      }
    }
    return true;
  }

  Value count(const Words& state) {
    tick();
    const int i = lowest(state);
    if (i < 0) return Value(1);
    if (options_.memoize) {
      auto it = memo_.find(state);
      if (it != memo_.end()) return it->second;
    }
    Value total = 0;
    for (const Arc& arc : g_.adj[static_cast<std::size_t>(i)]) {
      if (!test(state, arc.to)) continue;
      Words next = state;
      clear(next, i);
      clear(next, arc.to);
      Value factor = weight_as<Value>(g_, arc.weight);
      if (!propagate(next, seeds_around(i, arc.to, next), factor, nullptr)) continue;
      total += factor * count(next);
    }
    if (options_.memoize) memo_.emplace(state, total);
    return total;
  }

  // Fills `out` with one tiling's cell pairs; failed states are remembered.
  bool find(const Words& state, std::vector<std::pair<int, int>>& out) {
    tick();
    const int i = lowest(state);
    if (i < 0) return true;
    if (dead_.count(state)) return false;
    for (const Arc& arc : g_.adj[static_cast<std::size_t>(i)]) {
      if (!test(state, arc.to)) continue;
      Words next = state;
      clear(next, i);
      clear(next, arc.to);
      const std::size_t mark = out.size();
      out.emplace_back(i, arc.to);
      Value unused = 1;
      if (propagate(next, seeds_around(i, arc.to, next), unused, &out) && find(next, out)) {
        return true;
      }
      out.resize(mark);
    }
    dead_.insert(state);
    return false;
  }

 private:
  std::vector<int> seeds_around(int a, int b, const Words& state) const {
    std::vector<int> seeds;
    for (const int end : {a, b}) {
      for (const Arc& arc : g_.adj[static_cast<std::size_t>(end)]) {
        if (test(state, arc.to)) seeds.push_back(arc.to);
      }
    }
    return seeds;
  }

  void tick() {
    if (++nodes_ > options_.node_cap) {
      throw ResourceLimitExceeded(static_cast<std::size_t>(g_.n), options_.node_cap);
    }
  }

  const Graph& g_;
  const CountOptions& options_;
  std::uint64_t nodes_ = 0;
  std::unordered_map<Words, Value, WordsHash> memo_;
  std::unordered_set<Words, WordsHash> dead_;
};

std::vector<int> all_cells(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - 1 - i;
  return v;
}

template <typename Value>
Value run_count(const Graph& g, const CountOptions& options, std::uint64_t& nodes) {
  Search<Value> search(g, options);
  Words state = full(g.n);
  Value factor = 1;
  Value result = 0;
  if (search.propagate(state, all_cells(g.n), factor, nullptr)) result = factor * search.count(state);
  nodes += search.nodes();
  return result;
}

}  // namespace

CountResult count_tilings(const WeightedRegion& r, const CountOptions& options) {
  CountResult result;
  if (r.weights().empty()) {
    const BigInt plain = run_count<BigInt>(index_region(r, false), options, result.nodes);
    result.value = Rational(plain);
    if (options.count_unweighted) result.tilings_enumerated = plain;
  } else {
    result.value = run_count<Rational>(index_region(r, true), options, result.nodes);
    if (options.count_unweighted) {
      result.tilings_enumerated = run_count<BigInt>(index_region(r, false), options, result.nodes);
    }
  }
  return result;
}

std::optional<Tiling> find_one_tiling(const WeightedRegion& r, const CountOptions& options) {
  const Graph g = index_region(r, false);
  Search<BigInt> search(g, options);
  Words state = full(g.n);
  std::vector<std::pair<int, int>> pairs;
  BigInt unused = 1;
  if (!search.propagate(state, all_cells(g.n), unused, &pairs)) return std::nullopt;
  if (!search.find(state, pairs)) return std::nullopt;
  Tiling t;
  for (auto [a, b] : pairs) {
    t.lozenges.push_back(
        *make_lozenge(g.cells[static_cast<std::size_t>(a)], g.cells[static_cast<std::size_t>(b)]));
  }
  std::sort(t.lozenges.begin(), t.lozenges.end());
  return t;
}

BipartiteGraph dual_graph(const WeightedRegion& r) {
  BipartiteGraph g;
  const auto& cells = r.cells();
  for (const auto& c : cells) g.left.push_back(c.orient == Orient::Up);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].orient != Orient::Up) continue;
    for (const auto& nb : neighbors(cells[i])) {
      if (auto j = r.index_of(nb)) {
        g.edges.push_back({static_cast<int>(i), static_cast<int>(*j),
                           r.weight(*make_lozenge(cells[i], nb))});
      }
    }
  }
  return g;
}

namespace {

class Eliminator {
 public:
  Eliminator(const BipartiteGraph& g, const CountOptions& options)
      : options_(options), adj_(static_cast<std::size_t>(g.size())) {
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      adj_[static_cast<std::size_t>(g.edges[e].u)].emplace_back(g.edges[e].v, e);
      adj_[static_cast<std::size_t>(g.edges[e].v)].emplace_back(g.edges[e].u, e);
    }
    weights_.reserve(g.edges.size());
    for (const auto& e : g.edges) weights_.push_back(e.weight);
  }

  Rational run(const Words& state) {
    if (++nodes_ > options_.node_cap) {
      throw ResourceLimitExceeded(adj_.size(), options_.node_cap);
    }
    const int v = highest(state);
    if (v < 0) return 1;
    if (options_.memoize) {
      auto it = memo_.find(state);
      if (it != memo_.end()) return it->second;
    }
    Rational total = 0;
    for (auto [u, e] : adj_[static_cast<std::size_t>(v)]) {
      if (u == v || !test(state, u)) continue;
      Words next = state;
      clear(next, v);
      clear(next, u);
      total += weights_[e] * run(next);
    }
    if (options_.memoize) memo_.emplace(state, total);
    return total;
  }

 private:
  const CountOptions& options_;
  std::vector<std::vector<std::pair<int, std::size_t>>> adj_;
  std::vector<Rational> weights_;
  std::uint64_t nodes_ = 0;
  std::unordered_map<Words, Rational, WordsHash> memo_;
};

}  // namespace

Rational count_perfect_matchings(const BipartiteGraph& g, const CountOptions& options) {
  std::size_t left = 0;
  for (bool b : g.left) left += b ? 1 : 0;
  if (2 * left != g.left.size()) return 0;
  Eliminator elim(g, options);
  return elim.run(full(g.size()));
}

Rational count_matchings_dual(const WeightedRegion& r, const CountOptions& options) {
  return count_perfect_matchings(dual_graph(r), options);
}

}  // namespace hexafern
