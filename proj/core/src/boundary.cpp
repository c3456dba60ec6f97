#include "hexafern/boundary.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>

namespace hexafern {

namespace {

std::pair<int, int> delta(Dir d) {
  switch (d) {
    case Dir::E: return {0, 1};
    case Dir::W: return {0, -1};
    case Dir::DR: return {1, 0};
    case Dir::DL: return {1, -1};
    case Dir::UR: return {-1, 1};
    case Dir::UL: return {-1, 0};
  }
  return {0, 0};
}

Dir opposite(Dir d) {
  switch (d) {
    case Dir::E: return Dir::W;
    case Dir::W: return Dir::E;
    case Dir::DR: return Dir::UL;
    case Dir::UL: return Dir::DR;
    case Dir::DL: return Dir::UR;
    case Dir::UR: return Dir::DL;
  }
  return d;
}

// Everything is scaled by 3 so centroids have integer coordinates:
// X = 3 * (2k + h), Y = -3h.
struct Scaled {
  std::int64_t x;
  std::int64_t y;
};

Scaled scaled(LatticePoint p) { return {3 * (2 * std::int64_t{p.k} + p.h), -3 * std::int64_t{p.h}}; }

Scaled centroid(const TriCoord& t) {
  const std::int64_t r = t.row;
  const std::int64_t c = t.col;
  if (t.orient == Orient::Up) return {6 * c + 3 * r, -(3 * r + 2)};
  return {6 * c + 3 * r + 3, -(3 * r + 1)};
}

bool inside(Scaled p, const std::vector<Scaled>& poly) {
  bool in = false;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Scaled a = poly[i];
    const Scaled b = poly[(i + 1) % n];
    if ((a.y > p.y) == (b.y > p.y)) continue;
    // p.x < x-coordinate of the edge at height p.y
    const std::int64_t lhs = (p.x - a.x) * (b.y - a.y);
    const std::int64_t rhs = (p.y - a.y) * (b.x - a.x);
    if (b.y > a.y ? lhs < rhs : lhs > rhs) in = !in;
  }
  return in;
}

}  // namespace

LatticePoint step(LatticePoint p, Dir d, int length) {
  auto [dh, dk] = delta(d);
  return {p.h + dh * length, p.k + dk * length};
}

std::vector<LatticePoint> walk(LatticePoint start, const Path& path) {
  std::vector<LatticePoint> pts{start};
  for (const Run& run : path) {
    for (int i = 0; i < run.length; ++i) pts.push_back(step(pts.back(), run.dir));
  }
  return pts;
}

Path reversed(const Path& path) {
  Path out;
  out.reserve(path.size());
  for (auto it = path.rbegin(); it != path.rend(); ++it) out.push_back({opposite(it->dir), it->length});
  return out;
}

Path down_zigzag(int edges) {
  Path out;
  for (int i = 0; i < edges; ++i) out.push_back({i % 2 == 0 ? Dir::DL : Dir::DR, 1});
  return out;
}

std::vector<TriCoord> cells_inside(const std::vector<LatticePoint>& polygon) {
  if (polygon.size() < 3) return {};
  std::vector<Scaled> poly;
  poly.reserve(polygon.size());
  int hmin = INT_MAX, hmax = INT_MIN, kmin = INT_MAX, kmax = INT_MIN;
  for (const auto& p : polygon) {
    poly.push_back(scaled(p));
    hmin = std::min(hmin, p.h);
    hmax = std::max(hmax, p.h);
    kmin = std::min(kmin, p.k);
    kmax = std::max(kmax, p.k);
  }
  std::vector<TriCoord> out;
  // Columns slide one unit per row, hence the extra width.
  const int span = hmax - hmin;
  for (int r = hmin - 1; r <= hmax; ++r) {
    for (int c = kmin - span - 2; c <= kmax + span + 2; ++c) {
      for (Orient o : {Orient::Up, Orient::Down}) {
        const TriCoord t{r, c, o};
        if (inside(centroid(t), poly)) out.push_back(t);
      }
    }
  }
  return out;
}

std::set<Lozenge> notch_lozenges(const std::vector<LatticePoint>& west_points) {
  std::set<Lozenge> out;
  for (std::size_t i = 1; i + 1 < west_points.size(); ++i) {
    const LatticePoint a = west_points[i - 1];
    const LatticePoint b = west_points[i];
    const LatticePoint c = west_points[i + 1];
    if (step(a, Dir::UL) == b && step(b, Dir::UR) == c) {
      out.insert(*make_lozenge(up(b.h - 1, b.k + 1), down(b.h, b.k)));
    }
  }
  return out;
}

std::pair<int, int> normalizing_shift(const std::vector<TriCoord>& cells) {
  if (cells.empty()) return {0, 0};
  int rmin = INT_MAX, cmin = INT_MAX;
  for (const auto& t : cells) {
    rmin = std::min(rmin, t.row);
    cmin = std::min(cmin, t.col);
  }
  return {-rmin, -cmin};
}

TriCoord shifted(const TriCoord& t, int dh, int dk) { return {t.row + dh, t.col + dk, t.orient}; }

LatticePoint shifted(const LatticePoint& p, int dh, int dk) { return {p.h + dh, p.k + dk}; }

Lozenge shifted(const Lozenge& l, int dh, int dk) {
  return {shifted(l.first, dh, dk), shifted(l.second, dh, dk), l.kind};
}

}  // namespace hexafern
