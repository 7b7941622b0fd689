// Copyright 2026 The Blockgame Authors
// SPDX-License-Identifier: Apache-2.0

#include "blockgame/transfer.hpp"

#include <string>
#include <utility>

#include "blockgame/errors.hpp"

namespace blockgame {

TransferContext makeTransferContext(const FiniteBlockSequence& ztilde,
                                    const ToleranceSequence& outerDelta, const NormPlugin& norm) {
    outerDelta.requireSummableTails();
    const RationalScalar c = norm.basisConstant();
    const ToleranceSequence inner = outerDelta.scaled(RationalScalar(1) / (10 * c));
    NetConfig cfg(inner, norm);
    for (const auto& v : ztilde) {
        if (!netMember(v, cfg))
            throw PreconditionError("net board vector outside the net at the inner tolerance");
    }
    return TransferContext{ztilde, coveringSequence(ztilde), std::move(cfg), c, inner, outerDelta};
}

namespace {

// Mutable adapter state shared between the returned strategy and its trace.
struct AdapterState {
    AdapterTrace trace;
};

RationalScalar exactNormOrThrow(const NormPlugin& norm, const BlockVector& v) {
    const auto value = norm.exactValue(v);
    if (!value)
        throw PreconditionError(
            "player I's move has an irrational norm; exact normalization is impossible");
    return *value;
}

}  // namespace

AdaptedStrategy adaptStrategy(StrategyII discreteStratII, const TransferContext& ctx) {
    auto state = std::make_shared<AdapterState>();
    auto strategy = [state, ctx, discrete = std::move(discreteStratII)](
                        const GameTranscript& t, const MoveI& move) -> MoveII {
        const std::size_t n = t.rounds.size();
        GameTranscript& coGame = state->trace.discrete;
        if (coGame.rounds.size() != n)
            throw PreconditionError("adapted strategy observed an out-of-order round");
        if (n == 0) {
            coGame.board = ctx.ztilde;
            coGame.horizon = t.horizon;
        }

        // (a) normalize player I's vectors to norm one, exactly
        std::vector<BlockVector> normalized;
        normalized.reserve(move.sequence.size());
        for (const auto& zk : move.sequence) {
            const RationalScalar norm = exactNormOrThrow(ctx.cfg.norm(), zk);
            normalized.push_back((RationalScalar(1) / norm) * zk);
        }
        const FiniteBlockSequence unitMove(std::move(normalized));

        // (b) round the move onto the net board, with the exact distance chain
        const CoveringResult cov = verifyCovering(unitMove, ctx.z, ctx.ztilde, ctx.cfg);
        for (std::size_t k = 0; k < cov.rounded.size(); ++k) {
            const RationalScalar floor = 1 - ctx.innerDelta.at(k);
            if (!ctx.cfg.norm().norm(cov.rounded[k]).geq(floor))
                throw CertificationError(
                    "rounded move vector " + std::to_string(k) + " has norm below 1 - delta'_" +
                    std::to_string(k) + " = " + rationalToString(floor));
        }

        // (c) least k0 >= n whose rounded vector is past the previous pick
        const FiniteBlockSequence played = t.outcome();
        std::size_t k0 = n;
        if (!played.empty()) {
            while (k0 < cov.rounded.size() && !blockLess(played.back(), cov.rounded[k0])) ++k0;
        }
        if (k0 >= cov.rounded.size())
            throw PreconditionError(
                "player I's move is too short to offer a vector past the previous pick");
        const FiniteBlockSequence offered = cov.rounded.suffix(k0);

        // (d) discrete pick, validated as a co-game move
        const MoveII discretePick = discrete(coGame, MoveI{offered});
        const BlockVector& xt = discretePick.vector;
        if (xt.isZero()) throw PreconditionError("discrete strategy picked the zero vector");
        const auto lambdaOnSuffix = expandInSpan(xt, offered);
        if (!lambdaOnSuffix)
            throw PreconditionError("discrete strategy picked outside the offered span");
        if (!coGame.rounds.empty() &&
            !blockLess(coGame.rounds.back().ii.vector, xt))
            throw PreconditionError("discrete strategy broke the block order of the co-game");
        if (!netMember(xt, ctx.cfg)) {
            const ExactNorm xtNorm = ctx.cfg.norm().norm(xt);
            if (xtNorm.gt(RationalScalar(1)))
                throw CertificationError("discrete pick has norm above 1: squared norm " +
                                         rationalToString(xtNorm.squared()));
            throw CertificationError("discrete pick is not a net member");
        }

        // map back along the same positions, over the normalized move
        BlockVector x;
        RationalScalar lambdaMax(0);
        for (std::size_t j = 0; j < lambdaOnSuffix->size(); ++j) {
            const RationalScalar& lambda = (*lambdaOnSuffix)[j];
            if (lambda == 0) continue;
            x = x + lambda * unitMove[k0 + j];
            if (abs(lambda) > lambdaMax) lambdaMax = abs(lambda);
        }

        // certify the three bounds exactly
        const RationalScalar lambdaBound = 4 * ctx.c;
        if (lambdaMax > lambdaBound)
            throw CertificationError("expansion coefficient " + rationalToString(lambdaMax) +
                                     " exceeds 4C = " + rationalToString(lambdaBound));
        const ExactNorm pickError = ctx.cfg.norm().norm(x - xt);
        const RationalScalar pickBound = RationalScalar(4, 5) * ctx.outerDelta.at(n);
        if (!pickError.leq(pickBound))
            throw CertificationError("adapted pick strays from the discrete pick: squared "
                                     "distance " +
                                     rationalToString(pickError.squared()) + ", bound " +
                                     rationalToString(pickBound));
        const ExactNorm xNorm = ctx.cfg.norm().norm(x);
        if (xNorm.gt(RationalScalar(1)))
            throw CertificationError("adapted pick leaves the unit ball: squared norm " +
                                     rationalToString(xNorm.squared()));

        coGame.rounds.push_back({MoveI{offered}, discretePick});
        state->trace.certificates.push_back(
            {n, lambdaMax, lambdaBound, pickError, pickBound, true});
        return MoveII{std::move(x)};
    };
    return AdaptedStrategy{std::move(strategy),
                           std::shared_ptr<const AdapterTrace>(state, &state->trace)};
}

bool expansionMember(const FiniteBlockSequence& u,
                     const std::vector<FiniteBlockSequence>& family,
                     const ToleranceSequence& delta, const NetConfig& cfg) {
    for (const auto& v : family) {
        if (v.size() != u.size()) continue;
        if (distLeqDelta(u, v, delta, cfg.norm())) return true;
    }
    return false;
}

EmptinessCertificate emptinessTransfer(const FiniteBlockSequence& u, const TransferContext& ctx,
                                       const FamilyPredicate& familyOnNet) {
    CoveringResult cov = verifyCovering(u, ctx.z, ctx.ztilde, ctx.cfg);
    const Determination verdict = familyOnNet.decide(cov.rounded);
    return EmptinessCertificate{std::move(cov.rounded), std::move(cov.rows), verdict};
}

}  // namespace blockgame
