#include "hexafern/regions.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

namespace hexafern {

int seq_E(const FernSeq& a) {
  int s = 0;
  for (std::size_t i = 1; i < a.size(); i += 2) s += a[i];
  return s;
}

int seq_O(const FernSeq& a) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); i += 2) s += a[i];
  return s;
}

int seq_sk(const FernSeq& a, int k) {
  if (k < 0 || k > static_cast<int>(a.size())) {
    throw std::out_of_range("s_k: k=" + std::to_string(k) + " outside [0, " +
                            std::to_string(a.size()) + "]");
  }
  int s = 0;
  for (int i = 0; i < k; ++i) s += a[static_cast<std::size_t>(i)];
  return s;
}

int term(const FernSeq& a, int k) {
  return k >= 1 && k <= static_cast<int>(a.size()) ? a[static_cast<std::size_t>(k - 1)] : 0;
}

namespace {

[[noreturn]] void reject(const std::string& what) { throw std::invalid_argument(what); }

void require_non_negative(const std::vector<int>& values, const char* what) {
  for (int v : values) {
    if (v < 0) reject(std::string(what) + " must be non-negative");
  }
}

std::string join(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

// Boundary in walk form: `body` runs clockwise from the north-western corner
// at (0,0) to the foot of the western side, `west` climbs back to (0,0).
// Holes are closed polygons of the triangles cut from the boundary.
struct Shape {
  Path body;
  Path west;
  std::vector<std::vector<LatticePoint>> holes;
};

RegionGeometry realize(const Shape& shape, bool weighted_west) {
  const auto pts = walk({0, 0}, shape.body);
  const auto west = walk(pts.back(), shape.west);
  if (west.back() != LatticePoint{0, 0}) {
    throw std::logic_error("boundary walk does not close");
  }
  std::vector<LatticePoint> outline(pts.begin(), pts.end());
  outline.insert(outline.end(), west.begin() + 1, west.end());
  outline.pop_back();

  std::vector<TriCoord> cells = cells_inside(outline);
  std::sort(cells.begin(), cells.end());
  std::map<Lozenge, Rational> weights;
  if (weighted_west) {
    for (const auto& loz : notch_lozenges(west)) {
      if (std::binary_search(cells.begin(), cells.end(), loz.first) &&
          std::binary_search(cells.begin(), cells.end(), loz.second)) {
        weights.emplace(loz, Rational(1, 2));
      }
    }
  }
  std::vector<TriCoord> removed;
  for (const auto& hole : shape.holes) {
    auto inside = cells_inside(hole);
    removed.insert(removed.end(), inside.begin(), inside.end());
  }

  const auto [dh, dk] = normalizing_shift(cells);
  RegionGeometry g;
  for (auto& t : cells) t = shifted(t, dh, dk);
  std::map<Lozenge, Rational> moved;
  for (const auto& [loz, w] : weights) moved.emplace(shifted(loz, dh, dk), w);
  g.region = WeightedRegion(std::move(cells), std::move(moved));
  for (const auto& p : outline) g.outline.push_back(shifted(p, dh, dk));
  for (const auto& t : removed) g.removed.push_back(shifted(t, dh, dk));
  std::sort(g.removed.begin(), g.removed.end());
  return g;
}

std::vector<LatticePoint> triangle_hole(LatticePoint base_east, int side) {
  // walked as UL side, DL side while heading west along the base
  const LatticePoint apex = step(base_east, Dir::UL, side);
  return {base_east, apex, step(apex, Dir::DL, side)};
}

Shape p_shape(int a, int b, int c) {
  require_non_negative({a, b, c}, "P parameters");
  if (a > b) reject("P requires a <= b");
  Shape s;
  s.body = {{Dir::E, c}, {Dir::DR, b}, {Dir::DL, a}, {Dir::W, c}};
  s.west.push_back({Dir::UL, b - a});
  for (int i = 0; i < a; ++i) {
    s.west.push_back({Dir::UL, 1});
    s.west.push_back({Dir::UR, 1});
  }
  return s;
}

// Trapezoid with northern side `north`, north-eastern side `ne`, base
// north + ceil(ne/2) carrying up-pointing holes listed west to east as
// (gap before the hole, hole side), and a western zigzag of `ne` unit edges.
Shape trapezoid_shape(int north, int ne, const std::vector<std::pair<int, int>>& holes) {
  const int base = north + (ne + 1) / 2;
  int used = 0;
  for (auto [gap, side] : holes) used += gap + side;
  if (used > base) reject("holes do not fit on the base");

  Shape s;
  s.body = {{Dir::E, north}, {Dir::DR, ne}, {Dir::W, base - used}};
  LatticePoint at = step(step({0, 0}, Dir::E, north), Dir::DR, ne);
  at = step(at, Dir::W, base - used);
  for (auto it = holes.rbegin(); it != holes.rend(); ++it) {
    auto [gap, side] = *it;
    if (side > 0) s.holes.push_back(triangle_hole(at, side));
    s.body.push_back({Dir::UL, side});
    s.body.push_back({Dir::DL, side});
    s.body.push_back({Dir::W, gap});
    at = step(at, Dir::W, side + gap);
  }
  s.west = reversed(down_zigzag(ne));
  return s;
}

Shape qk_shape(const FernSeq& t, bool k_type) {
  if (t.size() % 2 != 0) reject("t must have even length");
  require_non_negative(t, "t terms");
  const int e = seq_E(t);
  if (k_type && e == 0) reject("K requires E(t) >= 1");
  std::vector<std::pair<int, int>> holes;
  for (std::size_t i = 0; i < t.size(); i += 2) holes.emplace_back(t[i], t[i + 1]);
  return trapezoid_shape(seq_O(t), k_type ? 2 * e - 1 : 2 * e, holes);
}

Shape l_shape(int m, int n, const std::vector<int>& positions) {
  if (m < 1 || n < 1) reject("L requires m >= 1 and n >= 1");
  const int k = (m + 1) / 2;
  if (static_cast<int>(positions.size()) != k) {
    reject("L_{m,n} needs exactly floor((m+1)/2) = " + std::to_string(k) + " positions");
  }
  std::vector<std::pair<int, int>> holes;
  int prev = 0;
  for (int p : positions) {
    if (p <= prev) reject("positions must be strictly increasing and >= 1");
    if (p > n + k) reject("position " + std::to_string(p) + " exceeds n + k");
    holes.emplace_back(p - prev - 1, 1);
    prev = p;
  }
  return trapezoid_shape(n, m, holes);
}

// The fern walked downward along an eastern side from the corner of a_1's
// triangle: first the upper outline from right to left, then the lower outline
// back to the right. Ends a_1 steps down-right of where it started.
Path fern_path(const FernSeq& a) {
  Path p;
  const int n = static_cast<int>(a.size());
  for (int i = 1; i <= n; ++i) {
    const int ai = a[static_cast<std::size_t>(i - 1)];
    if (i % 2 == 1) {
      if (i > 1) p.push_back({Dir::UL, ai});
      p.push_back({Dir::DL, ai});
    } else {
      p.push_back({Dir::W, ai});
    }
  }
  for (int i = n; i >= 1; --i) {
    const int ai = a[static_cast<std::size_t>(i - 1)];
    if (i % 2 == 0) {
      p.push_back({Dir::DR, ai});
      p.push_back({Dir::UR, ai});
    } else {
      p.push_back({Dir::E, ai});
    }
  }
  return p;
}

// Same fern on a western side walked upward (mirror image, traversed in the
// opposite sense).
Path mirrored_fern_path(const FernSeq& a) {
  Path p;
  const Path east = fern_path(a);
  for (auto it = east.rbegin(); it != east.rend(); ++it) {
    Dir d = it->dir;
    switch (d) {
      case Dir::DR: d = Dir::UR; break;
      case Dir::DL: d = Dir::UL; break;
      case Dir::UL: d = Dir::DL; break;
      case Dir::UR: d = Dir::DR; break;
      default: break;
    }
    p.push_back({d, it->length});
  }
  return p;
}

Shape r_shape(int x, int y, int z, const FernSeq& a) {
  require_non_negative({x, y, z}, "x, y, z");
  require_non_negative(a, "fern terms");
  const int n = static_cast<int>(a.size());
  const int e = seq_E(a), o = seq_O(a), sn = seq_sk(a, n);
  const int top = y + 2 * o - 1 - term(a, 1);
  const int south_east = y + z + 2 * e - 1;
  const int bumps = y + z + sn - 1;
  if (n > 0 && top < 0) reject("fern does not fit below the northern corner (y + 2O(a) - 1 < a_1)");
  if (south_east < 0) reject("south-eastern side y + z + 2E(a) - 1 is negative");
  if (bumps < 0) reject("western side y + z + s_n(a) - 1 is negative");

  Shape s;
  s.body.push_back({Dir::E, x + e});
  if (n == 0) {
    s.body.push_back({Dir::DR, y + z - 1});
  } else {
    s.body.push_back({Dir::DR, top});
    const LatticePoint corner = walk({0, 0}, s.body).back();
    const Path fern = fern_path(a);
    s.holes.push_back(walk(corner, fern));
    s.body.insert(s.body.end(), fern.begin(), fern.end());
    s.body.push_back({Dir::DR, z});
  }
  s.body.push_back({Dir::DL, south_east});
  s.body.push_back({Dir::W, x + o});
  s.west = reversed(down_zigzag(2 * bumps));
  return s;
}

Shape f_shape(int x, int y, int z, const FernSeq& a) {
  require_non_negative({x, y, z}, "x, y, z");
  require_non_negative(a, "fern terms");
  const int n = static_cast<int>(a.size());
  const int e = seq_E(a), o = seq_O(a);
  const int slant = y + z + 2 * o - 1;  // north-eastern and north-western sides
  const int lower = y + z + 2 * e - 1;  // south-eastern and south-western sides
  const int top = slant - z - term(a, 1);
  if (slant < 0) reject("northern slanted sides y + z + 2O(a) - 1 are negative");
  if (n > 0 && top < 0) reject("fern does not fit below the northern corners");
  if (lower < 0) reject("southern slanted sides y + z + 2E(a) - 1 are negative");

  Shape s;
  s.body.push_back({Dir::E, x + 2 * e});
  if (n == 0) {
    s.body.push_back({Dir::DR, slant});
  } else {
    s.body.push_back({Dir::DR, top});
    const LatticePoint corner = walk({0, 0}, s.body).back();
    const Path fern = fern_path(a);
    s.holes.push_back(walk(corner, fern));
    s.body.insert(s.body.end(), fern.begin(), fern.end());
    s.body.push_back({Dir::DR, z});
  }
  s.body.push_back({Dir::DL, lower});
  s.body.push_back({Dir::W, x + 2 * o});
  s.body.push_back({Dir::UL, lower});
  // The western side is part of the body here; `west` stays empty so no
  // notch weights arise.
  if (n == 0) {
    s.body.push_back({Dir::UR, slant});
  } else {
    s.body.push_back({Dir::UR, z});
    const LatticePoint corner = walk({0, 0}, s.body).back();
    const Path fern = mirrored_fern_path(a);
    s.holes.push_back(walk(corner, fern));
    s.body.insert(s.body.end(), fern.begin(), fern.end());
    s.body.push_back({Dir::UR, top});
  }
  return s;
}

Shape shape_of(const RegionSpec& spec) {
  switch (spec.family) {
    case Family::P:
    case Family::Pp: return p_shape(spec.a, spec.b, spec.c);
    case Family::Q:
    case Family::Qp: return qk_shape(spec.t, false);
    case Family::K:
    case Family::Kp: return qk_shape(spec.t, true);
    case Family::L:
    case Family::Lbar: return l_shape(spec.m, spec.n, spec.positions);
    case Family::R:
    case Family::Rp: return r_shape(spec.x, spec.y, spec.z, spec.fern);
    case Family::F: return f_shape(spec.x, spec.y, spec.z, spec.fern);
  }
  throw std::logic_error("unknown family");
}

RegionSpec p_spec(Family f, int a, int b, int c) {
  RegionSpec s;
  s.family = f;
  s.a = a;
  s.b = b;
  s.c = c;
  return s;
}

RegionSpec t_spec(Family f, const FernSeq& t) {
  RegionSpec s;
  s.family = f;
  s.t = t;
  return s;
}

RegionSpec l_spec(Family f, int m, int n, const std::vector<int>& positions) {
  RegionSpec s;
  s.family = f;
  s.m = m;
  s.n = n;
  s.positions = positions;
  return s;
}

RegionSpec xyz_spec(Family f, int x, int y, int z, const FernSeq& a) {
  RegionSpec s;
  s.family = f;
  s.x = x;
  s.y = y;
  s.z = z;
  s.fern = a;
  return s;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::P: return "P";
    case Family::Pp: return "Pp";
    case Family::Q: return "Q";
    case Family::Qp: return "Qp";
    case Family::K: return "K";
    case Family::Kp: return "Kp";
    case Family::L: return "L";
    case Family::Lbar: return "Lbar";
    case Family::R: return "R";
    case Family::Rp: return "Rp";
    case Family::F: return "F";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::P, Family::Pp, Family::Q, Family::Qp, Family::K, Family::Kp, Family::L,
                   Family::Lbar, Family::R, Family::Rp, Family::F}) {
    if (family_name(f) == name) return f;
  }
  throw std::invalid_argument("unknown family '" + name + "'");
}

bool is_primed(Family f) {
  return f == Family::Pp || f == Family::Qp || f == Family::Kp || f == Family::Lbar ||
         f == Family::Rp;
}

std::string describe(const RegionSpec& spec) {
  std::ostringstream out;
  out << family_name(spec.family) << "(";
  switch (spec.family) {
    case Family::P:
    case Family::Pp: out << "a=" << spec.a << ",b=" << spec.b << ",c=" << spec.c; break;
    case Family::Q:
    case Family::Qp:
    case Family::K:
    case Family::Kp: out << "t=" << join(spec.t); break;
    case Family::L:
    case Family::Lbar:
      out << "m=" << spec.m << ",n=" << spec.n << ",positions=" << join(spec.positions);
      break;
    case Family::R:
    case Family::Rp:
    case Family::F:
      out << "x=" << spec.x << ",y=" << spec.y << ",z=" << spec.z << ",a=" << join(spec.fern);
      break;
  }
  out << ")";
  return out.str();
}

WeightedRegion build_P(int a, int b, int c) { return build(p_spec(Family::P, a, b, c)); }
WeightedRegion build_P_primed(int a, int b, int c) { return build(p_spec(Family::Pp, a, b, c)); }
WeightedRegion build_Q(const FernSeq& t) { return build(t_spec(Family::Q, t)); }
WeightedRegion build_Q_primed(const FernSeq& t) { return build(t_spec(Family::Qp, t)); }
WeightedRegion build_K(const FernSeq& t) { return build(t_spec(Family::K, t)); }
WeightedRegion build_K_primed(const FernSeq& t) { return build(t_spec(Family::Kp, t)); }

WeightedRegion build_L(int m, int n, const std::vector<int>& positions) {
  return build(l_spec(Family::L, m, n, positions));
}

WeightedRegion build_L_bar(int m, int n, const std::vector<int>& positions) {
  return build(l_spec(Family::Lbar, m, n, positions));
}

WeightedRegion build_R(int x, int y, int z, const FernSeq& a) {
  return build(xyz_spec(Family::R, x, y, z, a));
}

WeightedRegion build_R_primed(int x, int y, int z, const FernSeq& a) {
  return build(xyz_spec(Family::Rp, x, y, z, a));
}

WeightedRegion build_F(int x, int y, int z, const FernSeq& a) {
  return build(xyz_spec(Family::F, x, y, z, a));
}

WeightedRegion build(const RegionSpec& spec) { return build_geometry(spec).region; }

RegionGeometry build_geometry(const RegionSpec& spec) {
  return realize(shape_of(spec), is_primed(spec.family));
}

bool buildable(const RegionSpec& spec) {
  try {
    shape_of(spec);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

bool is_mirror_symmetric(const std::vector<TriCoord>& cells) {
  if (cells.empty()) return true;
  // doubled x-coordinate of a triangle's centre line
  auto x2 = [](const TriCoord& t) { return 2 * t.col + t.row + (t.orient == Orient::Down ? 1 : 0); };
  int lo = INT_MAX, hi = INT_MIN;
  for (const auto& t : cells) {
    lo = std::min(lo, x2(t));
    hi = std::max(hi, x2(t));
  }
  const int sum = lo + hi;
  if (sum % 2 != 0) return false;
  std::vector<TriCoord> image;
  image.reserve(cells.size());
  for (const auto& t : cells) {
    const int extra = t.orient == Orient::Down ? 2 : 0;
    image.push_back({t.row, (sum - 2 * t.col - 2 * t.row - extra) / 2, t.orient});
  }
  std::sort(image.begin(), image.end());
  std::vector<TriCoord> sorted = cells;
  std::sort(sorted.begin(), sorted.end());
  return image == sorted;
}

}  // namespace hexafern
