#include "hexafern/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace hexafern {

TriCoord up(int row, int col) { return {row, col, Orient::Up}; }
TriCoord down(int row, int col) { return {row, col, Orient::Down}; }

std::string to_string(const TriCoord& t) {
  return std::string(t.orient == Orient::Up ? "U(" : "D(") + std::to_string(t.row) + "," +
         std::to_string(t.col) + ")";
}

std::optional<Lozenge> make_lozenge(const TriCoord& a, const TriCoord& b) {
  if (a.orient == b.orient) return std::nullopt;
  const TriCoord& u = a.orient == Orient::Up ? a : b;
  const TriCoord& d = a.orient == Orient::Up ? b : a;
  if (d.row == u.row && d.col == u.col) return Lozenge{u, d, LozengeKind::RightTilting};
  if (d.row == u.row && d.col == u.col - 1) return Lozenge{u, d, LozengeKind::LeftTilting};
  if (d.row == u.row + 1 && d.col == u.col - 1) return Lozenge{u, d, LozengeKind::Vertical};
  return std::nullopt;
}

std::vector<TriCoord> neighbors(const TriCoord& t) {
  std::vector<TriCoord> out;
  out.reserve(3);
  auto push = [&](int r, int c, Orient o) {
    if (r >= 0 && c >= 0) out.push_back({r, c, o});
  };
  if (t.orient == Orient::Up) {
    push(t.row, t.col, Orient::Down);
    push(t.row, t.col - 1, Orient::Down);
    push(t.row + 1, t.col - 1, Orient::Down);
  } else {
    push(t.row, t.col, Orient::Up);
    push(t.row, t.col + 1, Orient::Up);
    push(t.row - 1, t.col + 1, Orient::Up);
  }
  return out;
}

WeightedRegion::WeightedRegion(std::vector<TriCoord> cells, std::map<Lozenge, Rational> weights)
    : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
  for (auto& [loz, w] : weights) {
    if (w <= 0) {
      throw std::invalid_argument("lozenge weight must be positive, got " + to_string(w));
    }
    if (!contains(loz.first) || !contains(loz.second)) {
      throw std::invalid_argument("weighted lozenge " + to_string(loz.first) + "+" +
                                  to_string(loz.second) + " is not inside the region");
    }
    if (w != 1) weights_.emplace(loz, w);
  }
}

bool WeightedRegion::contains(const TriCoord& t) const {
  return std::binary_search(cells_.begin(), cells_.end(), t);
}

std::optional<std::size_t> WeightedRegion::index_of(const TriCoord& t) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), t);
  if (it == cells_.end() || *it != t) return std::nullopt;
  return static_cast<std::size_t>(it - cells_.begin());
}

Rational WeightedRegion::weight(const Lozenge& l) const {
  auto it = weights_.find(l);
  return it == weights_.end() ? Rational(1) : it->second;
}

std::size_t WeightedRegion::up_count() const {
  return static_cast<std::size_t>(std::count_if(
      cells_.begin(), cells_.end(), [](const TriCoord& t) { return t.orient == Orient::Up; }));
}

std::size_t WeightedRegion::down_count() const { return cells_.size() - up_count(); }

WeightedRegion WeightedRegion::without(const std::vector<TriCoord>& removed) const {
  std::vector<TriCoord> gone = removed;
  std::sort(gone.begin(), gone.end());
  std::vector<TriCoord> kept;
  kept.reserve(cells_.size());
  std::set_difference(cells_.begin(), cells_.end(), gone.begin(), gone.end(),
                      std::back_inserter(kept));
  std::map<Lozenge, Rational> w;
  for (const auto& [loz, value] : weights_) {
    if (!std::binary_search(gone.begin(), gone.end(), loz.first) &&
        !std::binary_search(gone.begin(), gone.end(), loz.second)) {
      w.emplace(loz, value);
    }
  }
  return WeightedRegion(std::move(kept), std::move(w));
}

WeightedRegion WeightedRegion::unweighted() const { return WeightedRegion(cells_); }

bool WeightedRegion::operator==(const WeightedRegion& other) const {
  return cells_ == other.cells_ && weights_ == other.weights_;
}

bool is_balanced(const WeightedRegion& r) { return r.up_count() == r.down_count(); }

bool is_valid_tiling(const WeightedRegion& r, const Tiling& t) {
  std::vector<char> covered(r.size(), 0);
  for (const auto& loz : t.lozenges) {
    auto check = make_lozenge(loz.first, loz.second);
    if (!check || check->kind != loz.kind || check->first != loz.first) return false;
    for (const TriCoord& cell : {loz.first, loz.second}) {
      auto idx = r.index_of(cell);
      if (!idx || covered[*idx]) return false;
      covered[*idx] = 1;
    }
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

Rational tiling_weight(const WeightedRegion& r, const Tiling& t) {
  Rational w = 1;
  for (const auto& loz : t.lozenges) w *= r.weight(loz);
  return w;
}

Reduction forced_reduce(const WeightedRegion& r) {
  const auto& cells = r.cells();
  const std::size_t n = cells.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& nb : neighbors(cells[i])) {
      if (auto j = r.index_of(nb)) adj[i].push_back(*j);
    }
  }

  std::vector<char> alive(n, 1);
  Rational multiplier = 1;
  std::vector<Lozenge> removed;
  std::vector<std::size_t> work(n);
  for (std::size_t i = 0; i < n; ++i) work[i] = n - 1 - i;

  while (!work.empty()) {
    const std::size_t i = work.back();
    work.pop_back();
    if (!alive[i]) continue;
    std::size_t options = 0;
    std::size_t partner = 0;
    for (std::size_t j : adj[i]) {
      if (alive[j]) {
        ++options;
        partner = j;
      }
    }
    if (options == 0) return {WeightedRegion(), Rational(0), {}};
    if (options > 1) continue;
    const Lozenge loz = *make_lozenge(cells[i], cells[partner]);
    multiplier *= r.weight(loz);
    removed.push_back(loz);
    alive[i] = alive[partner] = 0;
    // Only cells next to the removed pair can have lost an option.
    for (std::size_t k : adj[i]) {
      if (alive[k]) work.push_back(k);
    }
    for (std::size_t k : adj[partner]) {
      if (alive[k]) work.push_back(k);
    }
  }

  std::vector<TriCoord> gone;
  gone.reserve(2 * removed.size());
  for (const auto& loz : removed) {
    gone.push_back(loz.first);
    gone.push_back(loz.second);
  }
  return {r.without(gone), multiplier, std::move(removed)};
}

}  // namespace hexafern
