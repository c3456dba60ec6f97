#pragma once

// Closed-form tiling counts, evaluated literally as products of factorials,
// hyperfactorials and Pochhammer symbols. Nothing is simplified, so these
// serve as an independent witness against the counting oracle.

#include "hexafern/exact.hpp"
#include "hexafern/fern.hpp"
#include "hexafern/regions.hpp"

#include <vector>

namespace hexafern {

struct FormulaValue {
  Rational value;
  bool hypothesis_ok = true;
};

/// Halved hexagon with a staircase defect. Throws std::invalid_argument if a > b.
FormulaValue eval_proctor(int a, int b, int c);
/// Its weighted version (western verticals weighted 1/2).
FormulaValue eval_ciucu_primed(int a, int b, int c);

enum class QKind { Q, Qp, K, Kp };

/// Literal value of the Q/Q'/K'/K product for an even-length sequence.
/// Leading (0,0) pairs are dropped first: they describe the same region.
/// Throws std::invalid_argument for odd length or negative terms, and
/// std::domain_error when a factorial-type argument turns negative.
Rational qk_value(const FernSeq& t, QKind kind);

FormulaValue eval_Q(const FernSeq& t);
FormulaValue eval_Q_primed(const FernSeq& t);
FormulaValue eval_K(const FernSeq& t);
FormulaValue eval_K_primed(const FernSeq& t);

enum class LVariant { plain_even, plain_odd, bar_even, bar_odd };

/// The variant matching the parity of m.
LVariant l_variant(int m, bool bar);

/// Throws std::invalid_argument for a variant whose parity disagrees with m,
/// or for positions build_L would reject.
FormulaValue eval_L(int m, int n, const std::vector<int>& positions, LVariant variant);

/// y + 2 O(a) >= a_1 + 1, with a_1 = 0 for the empty fern.
bool main_hypothesis(int y, const FernSeq& a);

struct PhiComponents {
  Rational f;
  Rational g;
  Rational h;
};

/// Throws std::invalid_argument for a negative x, y, z or a non-positive a_i.
PhiComponents phi_components(int x, int y, int z, const FernSeq& a, bool primed);
FormulaValue phi(int x, int y, int z, const FernSeq& a);
FormulaValue phi_primed(int x, int y, int z, const FernSeq& a);

FormulaValue eval_R(int x, int y, int z, const FernSeq& a);
FormulaValue eval_R_primed(int x, int y, int z, const FernSeq& a);

/// Two-fern hexagon via its factorization. Throws std::invalid_argument if y < 1.
FormulaValue eval_F(int x, int y, int z, const FernSeq& a);

/// Single-triangle identity as a product of five halved-hexagon counts
/// (weighted ones when primed). Throws std::invalid_argument if y < 1.
Rational rohatgi_rhs(int x, int y, int z, int a1, bool primed);

/// Right-hand side of the recurrence that moves a_1 into z:
/// `reduced` (the count of R_{x,y,a_1}(a_2..a_n), or its primed version)
/// times the displayed ratio of Q/K (or Q'/K') values.
/// Throws std::invalid_argument for an empty fern.
Rational corollary_rhs(int x, int y, int z, const FernSeq& a, bool primed, const Rational& reduced);

/// Closed form for any region spec (the hypothesis flag travels along).
FormulaValue evaluate(const RegionSpec& spec);

}  // namespace hexafern
