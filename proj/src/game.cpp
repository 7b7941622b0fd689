// Copyright 2026 The Blockgame Authors
// SPDX-License-Identifier: Apache-2.0

#include "blockgame/game.hpp"

#include <string>
#include <utility>

#include "blockgame/errors.hpp"

namespace blockgame {

FamilyPredicate FamilyPredicate::constant(Determination d) {
    return {[d](const FiniteBlockSequence&) { return d; }};
}

FamilyPredicate FamilyPredicate::lengthReaches(std::size_t length) {
    return {[length](const FiniteBlockSequence& s) {
        return s.size() >= length ? Determination::In : Determination::Undetermined;
    }};
}

FamilyPredicate FamilyPredicate::firstPickSupportCard(std::size_t cardinality) {
    return {[cardinality](const FiniteBlockSequence& s) {
        if (s.empty()) return Determination::Undetermined;
        return s[0].entries().size() == cardinality ? Determination::In : Determination::Out;
    }};
}

FamilyPredicate FamilyPredicate::prefixList(std::vector<FiniteBlockSequence> members) {
    return {[members = std::move(members)](const FiniteBlockSequence& s) {
        bool extendable = false;
        for (const auto& m : members) {
            const std::size_t shared = std::min(s.size(), m.size());
            bool agree = true;
            for (std::size_t i = 0; i < shared; ++i) {
                if (s[i] != m[i]) {
                    agree = false;
                    break;
                }
            }
            if (!agree) continue;
            if (s.size() >= m.size()) return Determination::In;
            extendable = true;
        }
        return extendable ? Determination::Undetermined : Determination::Out;
    }};
}

FiniteBlockSequence GameTranscript::outcome() const {
    FiniteBlockSequence seq = prefix;
    for (const auto& round : rounds) seq = seq.appended(round.ii.vector);
    return seq;
}

namespace {

enum class Ball { Net, Unit };

std::string atRound(std::size_t round) {
    return "round " + std::to_string(round) + ": ";
}

void validateMoveI(const MoveI& move, const FiniteBlockSequence& board, Ball ball,
                   const NetConfig& cfg, std::size_t round) {
    if (move.sequence.empty())
        throw PreconditionError(atRound(round) + "player I's move is empty");
    for (const auto& v : move.sequence) {
        if (!expandInSpan(v, board))
            throw PreconditionError(atRound(round) +
                                    "player I's move leaves the board's span");
        if (ball == Ball::Net && !netMember(v, cfg))
            throw PreconditionError(atRound(round) +
                                    "player I's move contains a vector outside the net");
        if (ball == Ball::Unit && !cfg.norm().normLeq(v, RationalScalar(1)))
            throw PreconditionError(atRound(round) +
                                    "player I's move contains a vector outside the unit ball");
    }
}

void validateMoveII(const MoveII& move, const MoveI& menu, const FiniteBlockSequence& current,
                    Ball ball, const NetConfig& cfg, std::size_t round) {
    if (move.vector.isZero())
        throw PreconditionError(atRound(round) + "player II picked the zero vector");
    if (!expandInSpan(move.vector, menu.sequence))
        throw PreconditionError(atRound(round) +
                                "player II's pick leaves the span of player I's move");
    if (ball == Ball::Net && !netMember(move.vector, cfg))
        throw PreconditionError(atRound(round) + "player II's pick is outside the net");
    if (ball == Ball::Unit && !cfg.norm().normLeq(move.vector, RationalScalar(1)))
        throw PreconditionError(atRound(round) + "player II's pick is outside the unit ball");
    if (!current.empty() && !blockLess(current.back(), move.vector))
        throw PreconditionError(atRound(round) +
                                "player II's pick is not strictly block-after the previous one");
}

GameTranscript playGame(const FiniteBlockSequence& board, const FiniteBlockSequence& prefix,
                        std::size_t horizon, const StrategyI& stratI, const StrategyII& stratII,
                        const FamilyPredicate& family, const NetConfig& cfg, Ball ball) {
    if (ball == Ball::Net) {
        for (const auto& z : board) {
            if (!netMember(z, cfg))
                throw PreconditionError("board contains a vector outside the net");
        }
    }
    GameTranscript t{board, prefix, horizon, {}, std::nullopt};
    FiniteBlockSequence current = prefix;
    for (std::size_t round = 0; round < horizon; ++round) {
        const Determination d = family.decide(current);
        if (d != Determination::Undetermined) {
            t.verdict = d == Determination::In;
            return t;
        }
        MoveI menu = stratI(t);
        validateMoveI(menu, board, ball, cfg, round);
        MoveII pick = stratII(t, menu);
        validateMoveII(pick, menu, current, ball, cfg, round);
        current = current.appended(pick.vector);
        t.rounds.push_back({std::move(menu), std::move(pick)});
    }
    t.verdict = family.decide(current) == Determination::In;
    return t;
}

}  // namespace

GameTranscript playDiscrete(const FiniteBlockSequence& board, const FiniteBlockSequence& prefix,
                            std::size_t horizon, const StrategyI& stratI,
                            const StrategyII& stratII, const FamilyPredicate& family,
                            const NetConfig& cfg) {
    return playGame(board, prefix, horizon, stratI, stratII, family, cfg, Ball::Net);
}

GameTranscript playContinuous(const FiniteBlockSequence& board, const FiniteBlockSequence& prefix,
                              std::size_t horizon, const StrategyI& stratI,
                              const StrategyII& stratII, const FamilyPredicate& family,
                              const NetConfig& cfg) {
    return playGame(board, prefix, horizon, stratI, stratII, family, cfg, Ball::Unit);
}

namespace {

// Backward induction. Returns the winning plan for II at this position, or
// null when player I can win from here.
std::shared_ptr<const WitnessPlan> solveNode(const FiniteBlockSequence& picks, std::size_t depth,
                                             std::size_t horizon,
                                             const std::vector<FiniteBlockSequence>& menu,
                                             const FamilyPredicate& family, const NetConfig& cfg,
                                             SolveStats& stats) {
    ++stats.nodes;
    const Determination d = family.decide(picks);
    if (d == Determination::In) return std::make_shared<WitnessPlan>();
    if (d == Determination::Out) return nullptr;
    if (depth == horizon) return nullptr;

    auto plan = std::make_shared<WitnessPlan>();
    plan->perMenu.reserve(menu.size());
    for (const auto& entry : menu) {
        const std::optional<BlockVector> after =
            picks.empty() ? std::nullopt : std::optional<BlockVector>(picks.back());
        bool entryAnswered = false;
        for (auto& pick : enumerateNetInSpan(entry, after, cfg)) {
            auto continuation =
                solveNode(picks.appended(pick), depth + 1, horizon, menu, family, cfg, stats);
            if (continuation) {
                plan->perMenu.push_back({std::move(pick), std::move(continuation)});
                entryAnswered = true;
                break;
            }
        }
        if (!entryAnswered) return nullptr;  // I plays this entry and II is lost or stuck
    }
    return plan;
}

}  // namespace

SolveResult solveBounded(const FiniteBlockSequence& board, const FiniteBlockSequence& prefix,
                         std::size_t horizon, const std::vector<FiniteBlockSequence>& moveMenuI,
                         const FamilyPredicate& family, const NetConfig& cfg) {
    if (moveMenuI.empty()) throw PreconditionError("player I's move menu is empty");
    for (const auto& entry : moveMenuI) validateMoveI(MoveI{entry}, board, Ball::Net, cfg, 0);

    SolveResult result;
    auto plan = solveNode(prefix, 0, horizon, moveMenuI, family, cfg, result.stats);
    result.accepts = plan != nullptr;
    result.witness = std::move(plan);
    return result;
}

StrategyII witnessStrategy(std::shared_ptr<const WitnessPlan> plan,
                           std::vector<FiniteBlockSequence> moveMenuI) {
    return [plan = std::move(plan), menu = std::move(moveMenuI)](
               const GameTranscript& t, const MoveI& current) -> MoveII {
        auto indexOf = [&menu](const FiniteBlockSequence& s) -> std::size_t {
            for (std::size_t j = 0; j < menu.size(); ++j) {
                if (menu[j] == s) return j;
            }
            throw PreconditionError("player I's move is not in the witnessed menu");
        };
        const WitnessPlan* node = plan.get();
        if (node == nullptr) throw PreconditionError("witness strategy without a winning plan");
        for (const auto& round : t.rounds) {
            const std::size_t j = indexOf(round.i.sequence);
            if (j >= node->perMenu.size() || round.ii.vector != node->perMenu[j].pick)
                throw PreconditionError("transcript diverged from the witnessed picks");
            node = node->perMenu[j].continuation.get();
        }
        const std::size_t j = indexOf(current.sequence);
        if (j >= node->perMenu.size())
            throw PreconditionError("witness plan is already decided; no pick stored");
        return MoveII{node->perMenu[j].pick};
    };
}

}  // namespace blockgame
