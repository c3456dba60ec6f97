#include "hexafern/formulas.hpp"

#include <stdexcept>

namespace hexafern {

namespace {

Rational H(int n) { return Rational(hyperfactorial(n)); }
Rational H2(int n) { return Rational(skipping_hyperfactorial(n)); }
Rational fact(int n) { return Rational(factorial(n)); }

void require_non_negative(std::initializer_list<int> values, const char* what) {
  for (int v : values) {
    if (v < 0) throw std::invalid_argument(std::string(what) + " must be non-negative");
  }
}

void require_positive_fern(const FernSeq& a) {
  for (int v : a) {
    if (v < 1) throw std::invalid_argument("fern terms must be positive");
  }
}

Rational proctor_product(int a, int b, int c) {
  require_non_negative({a, b, c}, "P parameters");
  if (a > b) throw std::invalid_argument("P requires a <= b");
  Rational v = 1;
  for (int i = 1; i <= a; ++i) {
    for (int j = 1; j <= b - a + 1; ++j) v *= ratio(c + i + j - 1, i + j - 1);
    for (int j = b - a + 2; j <= b - a + i; ++j) v *= ratio(2 * c + i + j - 1, i + j - 1);
  }
  return v;
}

Rational ciucu_product(int a, int b, int c) {
  Rational v = proctor_product(a, b, c);
  v *= power_of_two(-a);
  for (int i = 1; i <= a; ++i) v *= ratio(2 * c + b - a + i, c + b - a + i);
  return v;
}

QKind qk_kind(int y, bool primed) {
  if (y % 2 != 0) return primed ? QKind::Qp : QKind::Q;
  return primed ? QKind::Kp : QKind::K;
}

// a_{m}, a_{m-1}, ..., a_{lo}
std::vector<int> run_down(const FernSeq& a, int m, int lo) {
  std::vector<int> out;
  for (int k = m; k >= lo; --k) out.push_back(term(a, k));
  return out;
}

std::vector<int> concat(std::vector<int> head, const std::vector<int>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

void check_positions(int m, int n, const std::vector<int>& positions) {
  if (m < 1 || n < 1) throw std::invalid_argument("L requires m >= 1 and n >= 1");
  const int k = (m + 1) / 2;
  if (static_cast<int>(positions.size()) != k) {
    throw std::invalid_argument("L_{m,n} needs exactly floor((m+1)/2) positions");
  }
  int prev = 0;
  for (int p : positions) {
    if (p <= prev || p > n + k) throw std::invalid_argument("positions out of range or not increasing");
    prev = p;
  }
}

}  // namespace

FormulaValue eval_proctor(int a, int b, int c) { return {proctor_product(a, b, c), true}; }

FormulaValue eval_ciucu_primed(int a, int b, int c) { return {ciucu_product(a, b, c), true}; }

Rational qk_value(const FernSeq& input, QKind kind) {
  if (input.size() % 2 != 0) throw std::invalid_argument("t must have even length");
  for (int v : input) {
    if (v < 0) throw std::invalid_argument("t terms must be non-negative");
  }
  std::size_t skip = 0;
  while (skip + 1 < input.size() && input[skip] == 0 && input[skip + 1] == 0) skip += 2;
  const FernSeq t(input.begin() + static_cast<std::ptrdiff_t>(skip), input.end());

  const int l = static_cast<int>(t.size()) / 2;
  const int e = seq_E(t);
  auto s = [&](int j) { return seq_sk(t, j); };

  Rational v = 1;
  int offset = 0;
  switch (kind) {
    case QKind::Q:
      v /= H2(2 * e + 1);
      for (int i = 1; i <= l; ++i) v *= fact(s(2 * i)) / fact(s(2 * i - 1));
      for (int i = 1; i <= l; ++i) {
        v *= H2(2 * s(2 * i) + 1) * H(2 * s(2 * i - 1) + 2) / H2(2 * s(2 * i - 1) + 3);
      }
      offset = 1;
      break;
    case QKind::Qp:
      v /= power_of_two(e) * H2(2 * e + 1);
      for (int i = 1; i <= l; ++i) {
        v *= H2(2 * s(2 * i) + 1) * H(2 * s(2 * i - 1)) / H2(2 * s(2 * i - 1) + 1);
      }
      offset = 0;
      break;
    case QKind::K:
      v /= H2(2 * e);
      for (int i = 1; i <= l; ++i) {
        v *= H2(2 * s(2 * i)) * H(2 * s(2 * i - 1) + 1) / H2(2 * s(2 * i - 1) + 2);
      }
      offset = 0;
      break;
    case QKind::Kp:
      v /= H2(2 * e);
      for (int i = 1; i <= l; ++i) {
        v *= H2(2 * s(2 * i) - 1) * H(2 * s(2 * i - 1)) / H2(2 * s(2 * i - 1) + 1);
      }
      offset = -1;
      break;
  }
  for (int i = 1; i <= 2 * l; ++i) {
    for (int j = i + 1; j <= 2 * l; ++j) {
      const Rational diff = H(s(j) - s(i));
      const Rational sum = H(s(j) + s(i) + offset);
      if ((j - i) % 2 == 1) {
        v *= diff / sum;
      } else {
        v *= sum / diff;
      }
    }
  }
  return v;
}

FormulaValue eval_Q(const FernSeq& t) { return {qk_value(t, QKind::Q), true}; }
FormulaValue eval_Q_primed(const FernSeq& t) { return {qk_value(t, QKind::Qp), true}; }
FormulaValue eval_K(const FernSeq& t) { return {qk_value(t, QKind::K), true}; }
FormulaValue eval_K_primed(const FernSeq& t) { return {qk_value(t, QKind::Kp), true}; }

LVariant l_variant(int m, bool bar) {
  if (m % 2 == 0) return bar ? LVariant::bar_even : LVariant::plain_even;
  return bar ? LVariant::bar_odd : LVariant::plain_odd;
}

FormulaValue eval_L(int m, int n, const std::vector<int>& positions, LVariant variant) {
  check_positions(m, n, positions);
  const bool bar = variant == LVariant::bar_even || variant == LVariant::bar_odd;
  if (l_variant(m, bar) != variant) {
    throw std::invalid_argument("L variant does not match the parity of m");
  }
  const std::vector<int>& a = positions;
  const int k = static_cast<int>(a.size());
  Rational v = 1;
  switch (variant) {
    case LVariant::plain_even:
      for (int p : a) v *= p;
      v /= H2(2 * k + 1);
      for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) v *= (a[j] - a[i]) * (a[i] + a[j]);
      }
      break;
    case LVariant::plain_odd:
      v /= H2(2 * k);
      for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) v *= (a[j] - a[i]) * (a[i] + a[j] - 1);
      }
      break;
    case LVariant::bar_even:
      v /= power_of_two(k) * H2(2 * k + 1);
      for (int i = 0; i < k; ++i) {
        for (int j = i; j < k; ++j) {
          if (j > i) v *= a[j] - a[i];
          v *= a[i] + a[j] - 1;
        }
      }
      break;
    case LVariant::bar_odd:
      v /= H2(2 * k);
      for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) v *= (a[j] - a[i]) * (a[i] + a[j] - 2);
      }
      break;
  }
  return {v, true};
}

bool main_hypothesis(int y, const FernSeq& a) {
  return y + 2 * seq_O(a) >= (a.empty() ? 0 : a[0]) + 1;
}

PhiComponents phi_components(int x, int y, int z, const FernSeq& a, bool primed) {
  require_non_negative({x, y, z}, "x, y, z");
  require_positive_fern(a);
  const int n = static_cast<int>(a.size());
  const int e = seq_E(a), o = seq_O(a), s = seq_sk(a, n);

  PhiComponents c;
  c.f = 1;
  for (int i = 1; i <= y / 2; ++i) {
    c.f *= pochhammer(Rational(2 * x + 2 * i - (primed ? 1 : 0)), 2 * s + 2 * y + 2 * z - 4 * i + 1);
  }

  int shift = 0;
  if (y % 2 != 0) {
    c.g = H(s + y + z - 1) * H2(y) * H2(2 * e + 2 * z + 1) * H2(2 * o + 1) * H2(2 * s + y + 2 * z) /
          (power_of_two(y - 1) * H(s + z) * H2(2 * e + y + 2 * z) * H2(2 * o + y) *
           H2(2 * s + 2 * y + 2 * z - 1));
    shift = (y - 1) / 2;
  } else {
    c.g = H(s + y + z) * H2(y) * H2(2 * e + 2 * z) * H2(2 * o) * H2(2 * s + y + 2 * z) /
          (H(s + z) * H2(2 * e + y + 2 * z) * H2(2 * o + y) * H2(2 * s + 2 * y + 2 * z));
    shift = y / 2;
  }

  const QKind kind = qk_kind(y, primed);
  const int m1 = 2 * ((n + 1) / 2);
  const int m2 = 2 * (n / 2) + 1;
  const FernSeq t2 = concat(concat({x + shift + term(a, m2)}, run_down(a, m2 - 1, 1)), {z});
  c.h = qk_value(t2, kind);
  // With no fern the first factor has no sequence at all and is taken as 1.
  if (m1 > 0) c.h *= qk_value(concat({x + shift + term(a, m1)}, run_down(a, m1 - 1, 1)), kind);
  return c;
}

FormulaValue phi(int x, int y, int z, const FernSeq& a) {
  const auto c = phi_components(x, y, z, a, false);
  return {c.f * c.g * c.h, main_hypothesis(y, a)};
}

FormulaValue phi_primed(int x, int y, int z, const FernSeq& a) {
  const auto c = phi_components(x, y, z, a, true);
  return {c.f * c.g * c.h, main_hypothesis(y, a)};
}

FormulaValue eval_R(int x, int y, int z, const FernSeq& a) { return phi(x, y, z, a); }

FormulaValue eval_R_primed(int x, int y, int z, const FernSeq& a) { return phi_primed(x, y, z, a); }

FormulaValue eval_F(int x, int y, int z, const FernSeq& a) {
  require_non_negative({x, y, z}, "x, y, z");
  require_positive_fern(a);
  if (y < 1) throw std::invalid_argument("the two-fern hexagon formula needs y >= 1");
  const Rational c = power_of_two(y + z + seq_sk(a, static_cast<int>(a.size())) - 1);
  FormulaValue plain, primed;
  if (x % 2 == 0) {
    plain = eval_R(x / 2, y - 1, z, a);
    primed = eval_R_primed(x / 2, y, z, a);
  } else {
    plain = eval_R((x - 1) / 2, y, z, a);
    primed = eval_R_primed((x + 1) / 2, y - 1, z, a);
  }
  return {c * plain.value * primed.value, plain.hypothesis_ok && primed.hypothesis_ok};
}

Rational rohatgi_rhs(int x, int y, int z, int a1, bool primed) {
  require_non_negative({x, y, z}, "x, y, z");
  if (a1 < 1) throw std::invalid_argument("a_1 must be positive");
  if (y < 1) throw std::invalid_argument("the single-triangle identity needs y >= 1");
  auto P = [primed](int a, int b, int c) {
    return primed ? ciucu_product(a, b, c) : proctor_product(a, b, c);
  };
  return P(y + a1 - 1, y + a1 - 1, x) * P(z, y + z - 1, a1) * P(y + z - 1, y + z - 1, x + a1) /
         P(y + z - 1, y + z - 1, a1) * P(y - 1, y - 1, a1) / P(y - 1, y - 1, x + a1);
}

Rational corollary_rhs(int x, int y, int z, const FernSeq& a, bool primed, const Rational& reduced) {
  require_non_negative({x, y, z}, "x, y, z");
  require_positive_fern(a);
  if (a.empty()) throw std::invalid_argument("the recurrence needs a non-empty fern");
  const int n = static_cast<int>(a.size());
  const int m1 = 2 * ((n + 1) / 2);
  const int m2 = 2 * (n / 2) + 1;
  const QKind kind = qk_kind(y, primed);
  const int h = y % 2 != 0 ? (y - 1) / 2 : y / 2;
  const int c = y % 2 != 0 ? y + z - 1 : y + z;
  const int d = y % 2 != 0 ? y - 1 : y;
  const auto upper = run_down(a, m1 - 1, 1);
  const auto upper_short = run_down(a, m1 - 1, 2);
  const auto lower = run_down(a, m2 - 1, 1);
  const int head = term(a, m2);

  Rational v = reduced;
  v *= qk_value(concat(concat({0, h + term(a, m1)}, upper), {z}), kind) /
       qk_value(concat({0, h + term(a, m1)}, upper_short), kind);
  v *= qk_value(concat(concat({x + head}, lower), {c}), kind) /
       qk_value(concat(concat({head}, lower), {c}), kind);
  v *= qk_value(concat(concat({head}, lower), {d}), kind) /
       qk_value(concat(concat({x + head}, lower), {d}), kind);
  return v;
}

FormulaValue evaluate(const RegionSpec& spec) {
  switch (spec.family) {
    case Family::P: return eval_proctor(spec.a, spec.b, spec.c);
    case Family::Pp: return eval_ciucu_primed(spec.a, spec.b, spec.c);
    case Family::Q: return eval_Q(spec.t);
    case Family::Qp: return eval_Q_primed(spec.t);
    case Family::K: return eval_K(spec.t);
    case Family::Kp: return eval_K_primed(spec.t);
    case Family::L: return eval_L(spec.m, spec.n, spec.positions, l_variant(spec.m, false));
    case Family::Lbar: return eval_L(spec.m, spec.n, spec.positions, l_variant(spec.m, true));
    case Family::R: return eval_R(spec.x, spec.y, spec.z, spec.fern);
    case Family::Rp: return eval_R_primed(spec.x, spec.y, spec.z, spec.fern);
    case Family::F: return eval_F(spec.x, spec.y, spec.z, spec.fern);
  }
  throw std::logic_error("unknown family");
}

}  // namespace hexafern
