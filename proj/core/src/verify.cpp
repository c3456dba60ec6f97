#include "hexafern/verify.hpp"

#include "hexafern/formulas.hpp"
#include "hexafern/lgv.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace hexafern {

namespace {

std::string seq_text(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

RegionSpec r_spec(int x, int y, int z, const FernSeq& a, bool primed) {
  RegionSpec s;
  s.family = primed ? Family::Rp : Family::R;
  s.x = x;
  s.y = y;
  s.z = z;
  s.fern = a;
  return s;
}

RegionSpec qk_spec(const FernSeq& t, bool k_type, bool primed) {
  RegionSpec s;
  s.family = k_type ? (primed ? Family::Kp : Family::K) : (primed ? Family::Qp : Family::Q);
  s.t = t;
  return s;
}

RegionSpec p_spec(int a, int b, int c, bool primed) {
  RegionSpec s;
  s.family = primed ? Family::Pp : Family::P;
  s.a = a;
  s.b = b;
  s.c = c;
  return s;
}

RegionSpec l_spec(int m, int n, const std::vector<int>& positions, bool bar) {
  RegionSpec s;
  s.family = bar ? Family::Lbar : Family::L;
  s.m = m;
  s.n = n;
  s.positions = positions;
  return s;
}

RegionSpec f_spec(int x, int y, int z, const FernSeq& a) {
  RegionSpec s = r_spec(x, y, z, a, false);
  s.family = Family::F;
  return s;
}

bool usable(const RegionSpec& s) {
  return main_hypothesis(s.y, s.fern) && buildable(s);
}

bool all_usable(const std::vector<RegionSpec>& specs) {
  return std::all_of(specs.begin(), specs.end(), usable);
}

// Sequences of length 0..max_len over `values`, shorter first.
std::vector<FernSeq> ferns(int max_len, const std::vector<int>& values) {
  std::vector<FernSeq> out{{}};
  std::size_t from = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t to = out.size();
    for (std::size_t i = from; i < to; ++i) {
      for (int v : values) {
        FernSeq f = out[i];
        f.push_back(v);
        out.push_back(f);
      }
    }
    from = to;
  }
  return out;
}

// Non-negative sequences of the given length with sum <= max_sum.
void sequences(int len, int max_sum, FernSeq& cur, std::vector<FernSeq>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  const int used = seq_sk(cur, static_cast<int>(cur.size()));
  for (int v = 0; v + used <= max_sum; ++v) {
    cur.push_back(v);
    sequences(len, max_sum, cur, out);
    cur.pop_back();
  }
}

void subsets(int lo, int hi, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int v = lo; v <= hi; ++v) {
    cur.push_back(v);
    subsets(v + 1, hi, k, cur, out);
    cur.pop_back();
  }
}

FernSeq plus_last(FernSeq a) {
  a.back() += 1;
  return a;
}

FernSeq minus_last(FernSeq a) {
  a.back() -= 1;
  if (a.back() == 0) a.pop_back();
  return a;
}

FernSeq tail(const FernSeq& a) { return FernSeq(a.begin() + 1, a.end()); }

std::vector<int> reversed_prefix(const FernSeq& a, int k) {
  std::vector<int> out;
  for (int i = k; i >= 1; --i) out.push_back(term(a, i));
  return out;
}

std::vector<int> cat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<RegionSpec> kuo_even_regions(int x, int y, int z, const FernSeq& a, bool primed) {
  const FernSeq ap = plus_last(a);
  return {r_spec(x, y, z, a, primed),         r_spec(x, y - 2, z - 1, ap, primed),
          r_spec(x, y, z - 1, a, primed),     r_spec(x, y - 2, z, ap, primed),
          r_spec(x + 1, y - 2, z, a, primed), r_spec(x - 1, y, z - 1, ap, primed)};
}

std::vector<RegionSpec> kuo_odd_regions(int x, int y, int z, const FernSeq& a, bool primed) {
  const FernSeq am = minus_last(a);
  return {r_spec(x, y, z, a, primed),         r_spec(x + 1, y, z - 1, am, primed),
          r_spec(x + 1, y, z, am, primed),    r_spec(x, y, z - 1, a, primed),
          r_spec(x, y + 2, z - 1, am, primed), r_spec(x + 1, y - 2, z, a, primed)};
}

CheckOutcome six_term(const std::vector<RegionSpec>& s, const Evaluator& M) {
  CheckOutcome out;
  out.lhs = M(s[0]) * M(s[1]);
  out.rhs = M(s[2]) * M(s[3]) + M(s[4]) * M(s[5]);
  out.ok = out.lhs == out.rhs;
  return out;
}

CheckOutcome compare(Rational lhs, Rational rhs) {
  CheckOutcome out;
  out.ok = lhs == rhs;
  out.lhs = std::move(lhs);
  out.rhs = std::move(rhs);
  return out;
}

std::pair<RegionSpec, RegionSpec> split_parts(SplitKind kind, int x, int y, int z, const FernSeq& a) {
  const int n = static_cast<int>(a.size());
  const bool k_type = y % 2 == 0;
  const int h = y % 2 != 0 ? (y - 1) / 2 : y / 2;
  const int an = term(a, n);
  std::vector<int> first, second;
  if (kind == SplitKind::x_zero) {
    if (n % 2 == 0) {
      first = cat({0, h}, reversed_prefix(a, n));
      second = cat(cat({0, h + an}, reversed_prefix(a, n - 1)), {z});
    } else {
      first = cat({0, h + an}, reversed_prefix(a, n - 1));
      second = cat(cat({0, h}, reversed_prefix(a, n)), {z});
    }
  } else {
    if (n % 2 == 0) {
      first = cat({x + an}, reversed_prefix(a, n - 1));
      second = cat(cat({x}, reversed_prefix(a, n)), {z});
    } else {
      first = cat({x}, reversed_prefix(a, n));
      second = cat(cat({x + an}, reversed_prefix(a, n - 1)), {z});
    }
  }
  return {qk_spec(first, k_type, false), qk_spec(second, k_type, false)};
}

// ---------------------------------------------------------------------------
// Suite machinery

struct Comparison {
  std::string label;
  Rational lhs;
  Rational rhs;
};

struct CaseResult {
  bool skipped = false;
  std::vector<Comparison> comparisons;
};

struct Context {
  Evaluator oracle;
  const SuiteConfig* config = nullptr;
};

struct Case {
  std::string params;
  std::function<CaseResult(const Context&)> run;
};

CaseResult skip() {
  CaseResult r;
  r.skipped = true;
  return r;
}

void add(CaseResult& r, std::string label, const CheckOutcome& c) {
  r.comparisons.push_back({std::move(label), c.lhs, c.rhs});
}

void add(CaseResult& r, std::string label, Rational lhs, Rational rhs) {
  r.comparisons.push_back({std::move(label), std::move(lhs), std::move(rhs)});
}

void add_integral(CaseResult& r, const Rational& v) {
  add(r, "integral", Rational(v.get_den()), Rational(1));
}

std::vector<Case> proctor_cases(const SweepBounds& b, bool primed) {
  std::vector<Case> cases;
  for (int a = 0; a <= b.pbc_max; ++a) {
    for (int bb = a; bb <= b.pbc_max; ++bb) {
      for (int c = 0; c <= b.pbc_max; ++c) {
        cases.push_back({"a=" + std::to_string(a) + " b=" + std::to_string(bb) + " c=" + std::to_string(c),
                         [=](const Context& ctx) {
                           CaseResult r;
                           const Rational m = ctx.oracle(p_spec(a, bb, c, primed));
                           const Rational f = primed ? eval_ciucu_primed(a, bb, c).value
                                                     : eval_proctor(a, bb, c).value;
                           add(r, "oracle=formula", m, f);
                           if (!primed) add_integral(r, f);
                           return r;
                         }});
      }
    }
  }
  return cases;
}

std::vector<Case> qk_cases(const SweepBounds& b) {
  std::vector<Case> cases;
  for (int len = 2; len <= b.t_len_max; len += 2) {
    std::vector<FernSeq> ts;
    FernSeq cur;
    sequences(len, b.t_sum_max, cur, ts);
    for (const auto& t : ts) {
      cases.push_back({"t=" + seq_text(t), [t](const Context& ctx) {
                         CaseResult r;
                         for (QKind kind : {QKind::Q, QKind::Qp, QKind::K, QKind::Kp}) {
                           const bool k_type = kind == QKind::K || kind == QKind::Kp;
                           const bool primed = kind == QKind::Qp || kind == QKind::Kp;
                           const RegionSpec s = qk_spec(t, k_type, primed);
                           if (!buildable(s)) continue;
                           const Rational f = qk_value(t, kind);
                           add(r, family_name(s.family) + " oracle=formula", ctx.oracle(s), f);
                           if (!primed) add_integral(r, f);
                         }
                         if (r.comparisons.empty()) r.skipped = true;
                         return r;
                       }});
    }
  }
  return cases;
}

std::vector<Case> quartered_cases(const SweepBounds& b) {
  std::vector<Case> cases;
  for (int m = 1; m <= b.mn_max; ++m) {
    for (int n = 1; n <= b.mn_max; ++n) {
      const int k = (m + 1) / 2;
      std::vector<std::vector<int>> sets;
      std::vector<int> cur;
      subsets(1, n + k, k, cur, sets);
      for (const auto& pos : sets) {
        cases.push_back({"m=" + std::to_string(m) + " n=" + std::to_string(n) + " positions=" + seq_text(pos),
                         [=](const Context& ctx) {
                           CaseResult r;
                           const Rational plain = eval_L(m, n, pos, l_variant(m, false)).value;
                           add(r, "L oracle=formula", ctx.oracle(l_spec(m, n, pos, false)), plain);
                           add_integral(r, plain);
                           add(r, "Lbar oracle=formula", ctx.oracle(l_spec(m, n, pos, true)),
                               eval_L(m, n, pos, l_variant(m, true)).value);
                           return r;
                         }});
      }
    }
  }
  return cases;
}

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

std::vector<Case> lgv_cases(const SweepBounds& b) {
  std::vector<Case> cases;
  for (int k = 1; k <= b.lgv_k_max; ++k) {
    const int n = std::max(1, b.lgv_pos_max - k);
    std::vector<std::vector<int>> sets;
    std::vector<int> cur;
    subsets(1, b.lgv_pos_max, k, cur, sets);
    for (const auto& pos : sets) {
      cases.push_back({"k=" + std::to_string(k) + " n=" + std::to_string(n) + " positions=" + seq_text(pos),
                       [=](const Context& ctx) {
                         CaseResult r;
                         const RationalMatrix a = lgv_matrix_Lbar_odd(pos);
                         const Rational det = determinant_exact(a);
                         add(r, "det=oracle", det, ctx.oracle(l_spec(2 * k - 1, n, pos, true)));
                         add(r, "det=formula", det, eval_L(2 * k - 1, n, pos, LVariant::bar_odd).value);
                         add(r, "gauss=bareiss", det, determinant_bareiss(a));
                         return r;
                       }});
    }
  }
  std::mt19937 rng(20240901);
  for (int i = 0; i < b.krattenthaler_points; ++i) {
    const int k = 1 + i % 4;
    std::vector<Rational> X, A;
    for (int j = 0; j < k; ++j) X.push_back(random_rational(rng));
    for (int j = 1; j < k; ++j) A.push_back(random_rational(rng));
    const Rational C = random_rational(rng);
    std::ostringstream params;
    params << "krattenthaler k=" << k << " X=";
    for (const auto& v : X) params << to_string(v) << ";";
    params << " A=";
    for (const auto& v : A) params << to_string(v) << ";";
    params << " C=" << to_string(C);
    cases.push_back({params.str(), [=](const Context&) {
                       CaseResult r;
                       add(r, "det=product", determinant_exact(krattenthaler_matrix(X, A, C)),
                           krattenthaler_product(X, A, C));
                       return r;
                     }});
  }
  return cases;
}

std::string xyz_text(int x, int y, int z, const FernSeq& a) {
  return "x=" + std::to_string(x) + " y=" + std::to_string(y) + " z=" + std::to_string(z) +
         " a=" + seq_text(a);
}

std::vector<Case> main_cases(const SweepBounds& b) {
  std::vector<Case> cases;
  for (const auto& a : ferns(b.fern_len_max, b.fern_values)) {
    for (int x = 0; x <= b.x_max; ++x) {
      for (int y = 0; y <= b.y_max; ++y) {
        for (int z = 0; z <= b.z_max; ++z) {
          cases.push_back({xyz_text(x, y, z, a), [=](const Context& ctx) {
                             if (!usable(r_spec(x, y, z, a, false))) return skip();
                             CaseResult r;
                             const Rational f = eval_R(x, y, z, a).value;
                             add(r, "R oracle=formula", ctx.oracle(r_spec(x, y, z, a, false)), f);
                             add_integral(r, f);
                             add(r, "R' oracle=formula", ctx.oracle(r_spec(x, y, z, a, true)),
                                 eval_R_primed(x, y, z, a).value);
                             return r;
                           }});
        }
      }
    }
  }
  return cases;
}

std::vector<Case> kuo_cases(const SweepBounds& b) {
  std::vector<Case> cases;
  const Evaluator formula = formula_evaluator();
  for (const auto& a : ferns(b.fern_len_max, b.fern_values)) {
    if (a.empty()) continue;
    const bool even = a.size() % 2 == 0;
    for (int x = even ? 1 : 0; x <= b.x_max; ++x) {
      for (int y = 2; y <= b.y_max; ++y) {
        for (int z = 1; z <= b.z_max; ++z) {
          cases.push_back({std::string(even ? "even " : "odd ") + xyz_text(x, y, z, a),
                           [=](const Context& ctx) {
                             auto regions = [&](bool primed) {
                               return even ? kuo_even_regions(x, y, z, a, primed)
                                           : kuo_odd_regions(x, y, z, a, primed);
                             };
                             if (!all_usable(regions(false))) return skip();
                             CaseResult r;
                             for (bool primed : {false, true}) {
                               const std::string tag = primed ? "R'" : "R";
                               auto check = even ? check_kuo_even : check_kuo_odd;
                               add(r, tag + " oracle", check(x, y, z, a, ctx.oracle, primed));
                               add(r, tag + " formula", check(x, y, z, a, formula, primed));
                             }
                             return r;
                           }});
        }
      }
    }
  }
  return cases;
}

std::vector<Case> split_cases(const SweepBounds& b) {
  std::vector<Case> cases;
  for (const auto& a : ferns(b.fern_len_max, b.fern_values)) {
    if (a.empty()) continue;
    for (int x = 0; x <= b.x_max; ++x) {
      for (int y = 0; y <= b.y_max; ++y) {
        for (int z = 0; z <= b.z_max; ++z) {
          for (SplitKind kind : {SplitKind::x_zero, SplitKind::small_y}) {
            if (kind == SplitKind::x_zero && x != 0) continue;
            if (kind == SplitKind::small_y && y > 1) continue;
            cases.push_back({std::string(kind == SplitKind::x_zero ? "x=0 split " : "y<=1 split ") +
                                 xyz_text(x, y, z, a),
                             [=](const Context& ctx) {
                               if (!usable(r_spec(x, y, z, a, false))) return skip();
                               auto [p1, p2] = split_parts(kind, x, y, z, a);
                               if (!buildable(p1) || !buildable(p2)) return skip();
                               CaseResult r;
                               add(r, "whole=parts", check_base_split(kind, x, y, z, a, ctx.oracle));
                               return r;
                             }});
          }
        }
      }
    }
  }
  return cases;
}

std::vector<Case> z0_cases(const SweepBounds& b) {
  std::vector<Case> cases;
  for (const auto& a : ferns(b.fern_len_max, b.fern_values)) {
    if (a.empty()) continue;
    for (int x = 0; x <= b.x_max; ++x) {
      for (int y = 0; y <= b.y_max; ++y) {
        cases.push_back({xyz_text(x, y, 0, a), [=](const Context& ctx) {
                           if (!usable(r_spec(x, y, 0, a, false)) ||
                               !usable(r_spec(x, y, a[0], tail(a), false))) {
                             return skip();
                           }
                           CaseResult r;
                           add(r, "R", check_z0_reduction(x, y, a, ctx.oracle, false));
                           add(r, "R'", check_z0_reduction(x, y, a, ctx.oracle, true));
                           return r;
                         }});
      }
    }
  }
  return cases;
}

std::vector<Case> degenerate_cases(const SweepBounds& b) {
  std::vector<Case> cases;
  std::vector<int> values{0};
  values.insert(values.end(), b.fern_values.begin(), b.fern_values.end());
  for (const auto& a : ferns(b.fern_len_max, values)) {
    if (std::find(a.begin(), a.end(), 0) == a.end()) continue;
    for (int x = 0; x <= std::min(1, b.x_max); ++x) {
      for (int y = 0; y <= std::min(2, b.y_max); ++y) {
        for (int z = 0; z <= b.z_max; ++z) {
          cases.push_back({xyz_text(x, y, z, a), [=](const Context& ctx) {
                             const auto [reduced, zz] = eliminate_degenerate(a, z);
                             if (!buildable(r_spec(x, y, z, a, false)) ||
                                 !buildable(r_spec(x, y, zz, reduced, false))) {
                               return skip();
                             }
                             CaseResult r;
                             add(r, "R", check_degenerate_holes(x, y, z, a, false, ctx.oracle));
                             add(r, "R'", check_degenerate_holes(x, y, z, a, true, ctx.oracle));
                             return r;
                           }});
        }
      }
    }
  }
  return cases;
}

std::vector<Case> rohatgi_cases(const SweepBounds& b) {
  std::vector<Case> cases;
  const Evaluator formula = formula_evaluator();
  for (int a1 = 1; a1 <= 3; ++a1) {
    for (int x = 0; x <= b.x_max; ++x) {
      for (int y = 1; y <= b.y_max; ++y) {
        for (int z = 0; z <= b.z_max; ++z) {
          cases.push_back({xyz_text(x, y, z, {a1}), [=](const Context& ctx) {
                             if (!usable(r_spec(x, y, z, {a1}, false))) return skip();
                             CaseResult r;
                             for (bool primed : {false, true}) {
                               const std::string tag = primed ? "R'" : "R";
                               add(r, tag + " formula", check_rohatgi(x, y, z, a1, primed, formula));
                               add(r, tag + " oracle", check_rohatgi(x, y, z, a1, primed, ctx.oracle));
                             }
                             return r;
                           }});
        }
      }
    }
  }
  return cases;
}

std::vector<Case> corollary_cases(const SweepBounds& b) {
  std::vector<Case> cases;
  const Evaluator formula = formula_evaluator();
  for (const auto& a : ferns(b.fern_len_max, b.fern_values)) {
    if (a.empty()) continue;
    for (int x = 0; x <= b.x_max; ++x) {
      for (int y = 0; y <= b.y_max; ++y) {
        for (int z = 0; z <= b.z_max; ++z) {
          cases.push_back({xyz_text(x, y, z, a), [=](const Context& ctx) {
                             if (!main_hypothesis(y, a) || !main_hypothesis(y, tail(a))) return skip();
                             CaseResult r;
                             const bool oracle_ok = buildable(r_spec(x, y, z, a, false)) &&
                                                    buildable(r_spec(x, y, a[0], tail(a), false));
                             for (bool primed : {false, true}) {
                               const std::string tag = primed ? "R'" : "R";
                               add(r, tag + " formula", check_corollary_recurrences(x, y, z, a, primed, formula));
                               if (oracle_ok) {
                                 add(r, tag + " oracle",
                                     check_corollary_recurrences(x, y, z, a, primed, ctx.oracle));
                               }
                             }
                             return r;
                           }});
        }
      }
    }
  }
  return cases;
}

std::vector<Case> factorization_cases(const SweepBounds& b) {
  std::vector<Case> cases;
  for (const auto& a : ferns(std::min(2, b.fern_len_max), b.fern_values)) {
    for (int x = 0; x <= b.x_max; ++x) {
      for (int y = 1; y <= std::min(2, b.y_max); ++y) {
        for (int z = 0; z <= std::min(1, b.z_max); ++z) {
          cases.push_back({xyz_text(x, y, z, a), [=](const Context& ctx) {
                             if (!usable(r_spec(0, y - 1, z, a, false)) || !buildable(f_spec(x, y, z, a))) {
                               return skip();
                             }
                             CaseResult r;
                             add(r, x % 2 == 0 ? "even x" : "odd x", check_factorization(x, y, z, a, ctx.oracle));
                             return r;
                           }});
        }
      }
    }
  }
  return cases;
}

const std::vector<std::string>& identity_suites() {
  static const std::vector<std::string> names{"proctor",    "ciucu",     "qk",      "quartered",
                                              "lgv",        "main",      "kuo",     "splits",
                                              "z0",         "degenerate", "rohatgi", "corollary",
                                              "factorization"};
  return names;
}

std::vector<Case> identity_cases(const std::string& suite, const SweepBounds& b) {
  if (suite == "proctor") return proctor_cases(b, false);
  if (suite == "ciucu") return proctor_cases(b, true);
  if (suite == "qk") return qk_cases(b);
  if (suite == "quartered") return quartered_cases(b);
  if (suite == "lgv") return lgv_cases(b);
  if (suite == "main") return main_cases(b);
  if (suite == "kuo") return kuo_cases(b);
  if (suite == "splits") return split_cases(b);
  if (suite == "z0") return z0_cases(b);
  if (suite == "degenerate") return degenerate_cases(b);
  if (suite == "rohatgi") return rohatgi_cases(b);
  if (suite == "corollary") return corollary_cases(b);
  if (suite == "factorization") return factorization_cases(b);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

std::vector<Case> consistency_cases(bool memo, const SweepBounds& b) {
  std::vector<Case> cases;
  for (const auto& spec : touched_regions(b)) {
    cases.push_back({describe(spec), [spec, memo](const Context& ctx) {
                       CaseResult r;
                       const Rational search = ctx.oracle(spec);
                       const WeightedRegion region = build(spec);
                       if (memo) {
                         CountOptions plain = ctx.config->count;
                         plain.memoize = false;
                         plain.node_cap = ctx.config->no_memo_cap;
                         add(r, "memo=plain", search, count_tilings(region, plain).value);
                       } else {
                         add(r, "search=dual", search, count_matchings_dual(region, ctx.config->count));
                       }
                       return r;
                     }});
  }
  return cases;
}

class CountCache {
 public:
  explicit CountCache(CountOptions options) : options_(options) {}

  Rational get(const RegionSpec& spec) {
    const std::string key = describe(spec);
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = values_.find(key);
      if (it != values_.end()) return it->second;
    }
    Rational v = count_tilings(build(spec), options_).value;
    std::lock_guard<std::mutex> lock(mutex_);
    values_.emplace(key, v);
    return v;
  }

 private:
  CountOptions options_;
  std::mutex mutex_;
  std::map<std::string, Rational> values_;
};

unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned n = requested ? requested : std::max(1U, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

VerificationReport execute(const std::string& suite, const std::vector<Case>& cases,
                           const SuiteConfig& config, const Evaluator& oracle) {
  const auto start = std::chrono::steady_clock::now();
  Context ctx{oracle, &config};

  struct Outcome {
    bool skipped = false;
    std::vector<Failure> failures;
  };
  std::vector<Outcome> outcomes(cases.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      Outcome& out = outcomes[i];
      try {
        CaseResult r = cases[i].run(ctx);
        out.skipped = r.skipped;
        for (auto& c : r.comparisons) {
          if (config.inject_fault) c.rhs += 1;
          if (c.lhs != c.rhs) out.failures.push_back({cases[i].params, c.lhs, c.rhs, c.label});
        }
      } catch (const std::exception& e) {
        out.failures.push_back({cases[i].params, Rational(0), Rational(0), e.what()});
      }
    }
  };
  const unsigned workers = worker_count(config.threads, cases.size());
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  VerificationReport report;
  report.suite = suite;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    Outcome& o = outcomes[i];
    if (o.skipped) {
      ++report.skipped;
      continue;
    }
    ++report.cases_run;
    report.executed.push_back(cases[i].params);
    for (auto& f : o.failures) report.failures.push_back(std::move(f));
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace

Evaluator oracle_evaluator(const CountOptions& options) {
  return [options](const RegionSpec& spec) { return count_tilings(build(spec), options).value; };
}

Evaluator formula_evaluator() {
  return [](const RegionSpec& spec) { return evaluate(spec).value; };
}

CheckOutcome check_kuo_even(int x, int y, int z, const FernSeq& a, const Evaluator& M, bool primed) {
  if (a.empty() || a.size() % 2 != 0) throw std::invalid_argument("even recurrence needs an even-length fern");
  return six_term(kuo_even_regions(x, y, z, a, primed), M);
}

CheckOutcome check_kuo_odd(int x, int y, int z, const FernSeq& a, const Evaluator& M, bool primed) {
  if (a.size() % 2 != 1) throw std::invalid_argument("odd recurrence needs an odd-length fern");
  return six_term(kuo_odd_regions(x, y, z, a, primed), M);
}

CheckOutcome check_z0_reduction(int x, int y, const FernSeq& a, const Evaluator& M, bool primed) {
  if (a.empty()) throw std::invalid_argument("z = 0 reduction needs a non-empty fern");
  return compare(M(r_spec(x, y, 0, a, primed)), M(r_spec(x, y, a[0], tail(a), primed)));
}

CheckOutcome check_factorization(int x, int y, int z, const FernSeq& a, const Evaluator& M) {
  return compare(M(f_spec(x, y, z, a)), eval_F(x, y, z, a).value);
}

CheckOutcome check_rohatgi(int x, int y, int z, int a1, bool primed, const Evaluator& M) {
  return compare(M(r_spec(x, y, z, {a1}, primed)), rohatgi_rhs(x, y, z, a1, primed));
}

CheckOutcome check_corollary_recurrences(int x, int y, int z, const FernSeq& a, bool primed,
                                         const Evaluator& M) {
  if (a.empty()) throw std::invalid_argument("the recurrence needs a non-empty fern");
  const Rational reduced = M(r_spec(x, y, a[0], tail(a), primed));
  return compare(M(r_spec(x, y, z, a, primed)), corollary_rhs(x, y, z, a, primed, reduced));
}

CheckOutcome check_base_split(SplitKind kind, int x, int y, int z, const FernSeq& a, const Evaluator& M) {
  if (a.empty()) throw std::invalid_argument("base split needs a non-empty fern");
  if (kind == SplitKind::x_zero && x != 0) throw std::invalid_argument("x = 0 split needs x = 0");
  if (kind == SplitKind::small_y && y > 1) throw std::invalid_argument("small-y split needs y <= 1");
  auto [p1, p2] = split_parts(kind, x, y, z, a);
  return compare(M(r_spec(x, y, z, a, false)), M(p1) * M(p2));
}

std::pair<FernSeq, int> eliminate_degenerate(const FernSeq& input, int z) {
  FernSeq a = input;
  auto drop_trailing = [&a] {
    bool changed = false;
    while (!a.empty() && a.back() == 0) {
      a.pop_back();
      changed = true;
    }
    return changed;
  };
  drop_trailing();
  for (bool changed = true; changed;) {
    changed = false;
    if (a.size() > 1 && a[0] == 0) {
      z += a[1];
      a.erase(a.begin(), a.begin() + 2);
      changed = true;
      continue;
    }
    for (std::size_t i = 1; i + 1 < a.size(); ++i) {
      if (a[i] == 0) {
        a[i - 1] += a[i + 1];
        a.erase(a.begin() + static_cast<std::ptrdiff_t>(i), a.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
    if (drop_trailing()) changed = true;
  }
  return {a, z};
}

CheckOutcome check_degenerate_holes(int x, int y, int z, const FernSeq& a, bool primed, const Evaluator& M) {
  const auto [reduced, zz] = eliminate_degenerate(a, z);
  return compare(M(r_spec(x, y, z, a, primed)), M(r_spec(x, y, zz, reduced, primed)));
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names = identity_suites();
  names.push_back("dual");
  names.push_back("memo");
  return names;
}

std::vector<RegionSpec> touched_regions(const SweepBounds& bounds) {
  std::vector<RegionSpec> order;
  std::set<std::string> seen;
  std::mutex mutex;
  const Evaluator recorder = [&](const RegionSpec& spec) {
    std::lock_guard<std::mutex> lock(mutex);
    if (seen.insert(describe(spec)).second) order.push_back(spec);
    return Rational(1);
  };
  SuiteConfig config;
  config.threads = 1;
  for (const auto& suite : identity_suites()) {
    execute(suite, identity_cases(suite, bounds), config, recorder);
  }
  return order;
}

VerificationReport run_suite(const std::string& suite, const SuiteConfig& config) {
  auto cache = std::make_shared<CountCache>(config.count);
  const Evaluator oracle = [cache](const RegionSpec& spec) { return cache->get(spec); };
  if (suite == "dual" || suite == "memo") {
    return execute(suite, consistency_cases(suite == "memo", config.bounds), config, oracle);
  }
  return execute(suite, identity_cases(suite, config.bounds), config, oracle);
}

std::vector<VerificationReport> run_suites(const SuiteConfig& config) {
  std::vector<std::string> names;
  for (const auto& s : config.suites) {
    if (s == "all") {
      for (const auto& n : suite_names()) {
        if (n != "memo") names.push_back(n);
      }
    } else {
      names.push_back(s);
    }
  }
  auto cache = std::make_shared<CountCache>(config.count);
  const Evaluator oracle = [cache](const RegionSpec& spec) { return cache->get(spec); };
  std::vector<VerificationReport> reports;
  for (const auto& name : names) {
    if (name == "dual" || name == "memo") {
      reports.push_back(execute(name, consistency_cases(name == "memo", config.bounds), config, oracle));
    } else {
      reports.push_back(execute(name, identity_cases(name, config.bounds), config, oracle));
    }
  }
  return reports;
}

}  // namespace hexafern
