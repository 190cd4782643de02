#pragma once

#include "loopcalc/bigint.hpp"
#include "loopcalc/hilton.hpp"

#include <vector>

namespace loopcalc {

enum class RankSubject { LoopSpace, BaseSpace };

/// Ranks of pi_q (x) Q for q <= cap.
struct RankTable {
    RankSubject subject = RankSubject::LoopSpace;
    int cap = 0;
    DimMultiset ranks;   // degree -> rank, zero ranks omitted
    bool truncated = false; // classes above cap exist or may exist

    friend bool operator==(const RankTable&, const RankTable&) = default;
};

/// Loop-space table: S^1 gives degree 1, plain S^d (d odd) degree d,
/// OmegaS^d degree d - 1 and, for d even, also 2d - 2.
RankTable rational_ranks(const FactorList& f);

/// The space being looped: every degree shifted up by one, same cap.
RankTable base_ranks(const RankTable& loop);

/// Ranks L_j (j <= cap) of the free graded Lie algebra on generators of the
/// given degrees, solved from
///   prod_{j odd} (1 + t^j)^(L_j) * prod_{j even} (1 - t^j)^(-L_j) = 1 / (1 - sum_i t^(d_i)).
DimMultiset free_lie_ranks(const std::vector<int>& generator_degrees, int cap);

} // namespace loopcalc
