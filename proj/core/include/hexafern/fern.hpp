#pragma once

#include <vector>

namespace hexafern {

// Side lengths a_1, ..., a_n of a fern (or the t-sequence of a Q/K region).
// Index origin is 1 throughout, matching the formulas.
using FernSeq = std::vector<int>;

/// a_2 + a_4 + ...
int seq_E(const FernSeq& a);
/// a_1 + a_3 + ...
int seq_O(const FernSeq& a);
/// a_1 + ... + a_k, with s_0 = 0. Throws std::out_of_range unless 0 <= k <= n.
int seq_sk(const FernSeq& a, int k);
/// a_k for 1 <= k <= n, otherwise 0.
int term(const FernSeq& a, int k);

}  // namespace hexafern
