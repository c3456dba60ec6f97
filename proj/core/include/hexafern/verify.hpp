#pragma once

// Identity checks over parameter sweeps.
//
// Each suite expands into a deterministic list of cases. A case compares two
// exact rationals (lhs from the tiling side, rhs from the closed-form or
// factorized side), or is skipped when the identity's hypotheses do not hold
// at that point. Cases run in parallel; the report lists failures in case
// order whatever the scheduling.

#include "hexafern/count.hpp"
#include "hexafern/exact.hpp"
#include "hexafern/regions.hpp"

#include <chrono>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace hexafern {

struct SweepBounds {
  // halved hexagons P(a,b,c): 0 <= a <= b <= pbc_max, 0 <= c <= pbc_max
  int pbc_max = 3;
  // Q/K sequences: even length <= t_len_max, sum <= t_sum_max
  int t_len_max = 4;
  int t_sum_max = 4;
  // quartered hexagons L_{m,n}: m, n <= mn_max
  int mn_max = 5;
  // LGV determinants: k <= lgv_k_max, positions in [1, lgv_pos_max]
  int lgv_k_max = 3;
  int lgv_pos_max = 6;
  int krattenthaler_points = 20;
  // fern regions
  int x_max = 2;
  int y_max = 3;
  int z_max = 2;
  int fern_len_max = 3;
  std::vector<int> fern_values{1, 2};
};

struct SuiteConfig {
  std::vector<std::string> suites{"all"};
  SweepBounds bounds;
  CountOptions count;
  unsigned threads = 0;       // 0: hardware concurrency
  bool inject_fault = false;  // perturbs every right-hand side by +1
  // node cap for the non-memoized side of the "memo" suite
  std::uint64_t no_memo_cap = 2'000'000;
};

struct Failure {
  std::string params;
  Rational lhs;
  Rational rhs;
  std::string note;
};

struct VerificationReport {
  std::string suite;
  std::size_t cases_run = 0;
  std::size_t skipped = 0;
  std::vector<std::string> executed;  // params of every case that ran, in case order
  std::vector<Failure> failures;
  std::chrono::duration<double> elapsed{0};

  bool passed() const { return failures.empty(); }
};

/// Every suite name accepted by run_suite, in execution order for "all".
/// "memo" is not part of "all" (see run_suite).
std::vector<std::string> suite_names();

/// Runs one suite. Besides the identity suites there are two oracle
/// self-consistency suites over every region the identity suites touch:
///   "dual"  search count == dual matching count
///   "memo"  memoized == non-memoized search, the latter under
///           config.no_memo_cap; a region whose plain search exceeds the cap
///           cannot be compared and is reported as a failure.
/// Throws std::invalid_argument for an unknown suite name.
VerificationReport run_suite(const std::string& suite, const SuiteConfig& config);

/// Runs config.suites in order; "all" expands to suite_names() minus "memo".
std::vector<VerificationReport> run_suites(const SuiteConfig& config);

/// Every region counted by the identity suites under these bounds, deduplicated,
/// in first-use order.
std::vector<RegionSpec> touched_regions(const SweepBounds& bounds);

// Single checks. An Evaluator gives M(region): either the oracle count or the
// closed form.
using Evaluator = std::function<Rational(const RegionSpec&)>;

Evaluator oracle_evaluator(const CountOptions& options = {});
Evaluator formula_evaluator();

struct CheckOutcome {
  bool ok = false;
  Rational lhs;
  Rational rhs;
};

/// M(R_{x,y,z}(a)) M(R_{x,y-2,z-1}(a+)) ==
///   M(R_{x,y,z-1}(a)) M(R_{x,y-2,z}(a+)) + M(R_{x+1,y-2,z}(a)) M(R_{x-1,y,z-1}(a+)),
/// a+ = a with its last term increased; a has even length. Primed uses R'.
CheckOutcome check_kuo_even(int x, int y, int z, const FernSeq& a, const Evaluator& M,
                            bool primed = false);

/// M(R_{x,y,z}(a)) M(R_{x+1,y,z-1}(a-)) ==
///   M(R_{x+1,y,z}(a-)) M(R_{x,y,z-1}(a)) + M(R_{x,y+2,z-1}(a-)) M(R_{x+1,y-2,z}(a)),
/// a- = a with its last term decreased (and dropped if it reaches 0); a has
/// odd length.
CheckOutcome check_kuo_odd(int x, int y, int z, const FernSeq& a, const Evaluator& M,
                           bool primed = false);

/// M(R_{x,y,0}(a)) == M(R_{x,y,a_1}(a_2, ..., a_n)).
CheckOutcome check_z0_reduction(int x, int y, const FernSeq& a, const Evaluator& M,
                                bool primed = false);

/// Oracle count of the two-fern hexagon against its factorized closed form.
CheckOutcome check_factorization(int x, int y, int z, const FernSeq& a, const Evaluator& M);

/// eval_R (or eval_R_primed) at a one-term fern against the product of
/// halved-hexagon counts.
CheckOutcome check_rohatgi(int x, int y, int z, int a1, bool primed, const Evaluator& M);

/// M(R_{x,y,z}(a)) against corollary_rhs with M(R_{x,y,a_1}(a_2..)).
CheckOutcome check_corollary_recurrences(int x, int y, int z, const FernSeq& a, bool primed,
                                         const Evaluator& M);

enum class SplitKind { x_zero, small_y };

/// M(R_{x,y,z}(a)) as a product of two Q-type (odd y) or K-type (even y)
/// counts, for x = 0 or for y in {0, 1}. a must be non-empty.
CheckOutcome check_base_split(SplitKind kind, int x, int y, int z, const FernSeq& a,
                              const Evaluator& M);

/// Fern with zero terms against the fern with the zeros eliminated:
/// trailing zeros dropped, a leading (0, a_2) pair folded into z, and an
/// interior zero merging its two neighbours.
CheckOutcome check_degenerate_holes(int x, int y, int z, const FernSeq& a, bool primed,
                                    const Evaluator& M);

/// The fern and z after eliminating zero terms as described above.
std::pair<FernSeq, int> eliminate_degenerate(const FernSeq& a, int z);

// Reports.
std::string report_text(const VerificationReport& report);
std::string report_json(const std::vector<VerificationReport>& reports);

}  // namespace hexafern
