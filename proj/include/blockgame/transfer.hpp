// Copyright 2026 The Blockgame Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <vector>

#include "blockgame/game.hpp"
#include "blockgame/net.hpp"
#include "blockgame/norm.hpp"
#include "blockgame/tolerance.hpp"

namespace blockgame {

// Setting for the discrete-to-continuous strategy adapter: a net board, its
// pairwise-sum covering board, and the net configuration at the inner
// tolerance delta'_n = delta_n / (10 C).
struct TransferContext {
    FiniteBlockSequence ztilde;   // net board
    FiniteBlockSequence z;        // coveringSequence(ztilde)
    NetConfig cfg;                // net at innerDelta
    RationalScalar c;             // basis constant C
    ToleranceSequence innerDelta;
    ToleranceSequence outerDelta;
};

// Validates the outer tolerance (delta_0 <= 1 with summable tails), derives
// the inner tolerance, and checks every board vector against the net at the
// inner tolerance.
TransferContext makeTransferContext(const FiniteBlockSequence& ztilde,
                                    const ToleranceSequence& outerDelta, const NormPlugin& norm);

// Exact per-round certificate of the adapter's bounds.
struct RoundCertificate {
    std::size_t round = 0;
    RationalScalar lambdaMax;    // max |lambda_k| in the discrete pick's expansion
    RationalScalar lambdaBound;  // 4C
    ExactNorm pickError;         // ||x_n - xtilde_n||
    RationalScalar pickBound;    // (4/5) delta_n, outer tolerance
    bool pass = false;           // always true on a returned certificate
};

// Live view of the adapter's internal state: the discrete co-game transcript
// and the certificates collected so far. Grows as the strategy plays.
struct AdapterTrace {
    GameTranscript discrete;
    std::vector<RoundCertificate> certificates;
};

struct AdaptedStrategy {
    StrategyII strategy;
    std::shared_ptr<const AdapterTrace> trace;
};

// Wraps a discrete player-II strategy into a continuous one. Per round, given
// player I's move (z_k): normalizes each z_k to norm one (exact rational norm
// required), rounds the normalized move onto the net board via verifyCovering,
// picks the least index k0 >= round with the previous pick strictly before
// ztilde-image position k0, feeds the suffix to the discrete strategy, maps
// the discrete pick xtilde = sum lambda_k ztilde_k back as x = sum lambda_k
// z_k, and certifies exactly: every |lambda_k| <= 4C,
// ||x - xtilde|| <= (4/5) delta_n, and ||x|| <= 1 (unit-ball legality is
// certified per round, not assumed). Any violation raises CertificationError
// carrying the exact offending quantity.
AdaptedStrategy adaptStrategy(StrategyII discreteStratII, const TransferContext& ctx);

// True iff some member V of the extensional family satisfies
// dist(u_n, v_n) <= delta_n for every index. Members of a different length
// than u never match; an empty family gives false.
bool expansionMember(const FiniteBlockSequence& u,
                     const std::vector<FiniteBlockSequence>& family,
                     const ToleranceSequence& delta, const NetConfig& cfg);

// Desk-scale witness of the emptiness-transfer step: the rounded net image of
// a unit-ball sequence together with the family verdict on it.
struct EmptinessCertificate {
    FiniteBlockSequence netSequence;  // Utilde
    std::vector<CoveringRow> rows;    // exact per-index distance chain
    Determination verdict;
};

EmptinessCertificate emptinessTransfer(const FiniteBlockSequence& u, const TransferContext& ctx,
                                       const FamilyPredicate& familyOnNet);

}  // namespace blockgame
