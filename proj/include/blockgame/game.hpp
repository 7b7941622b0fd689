// Copyright 2026 The Blockgame Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "blockgame/block.hpp"
#include "blockgame/net.hpp"

namespace blockgame {

enum class Determination { In, Out, Undetermined };

// Three-valued membership test on finite pick sequences. Callers must supply
// monotone determination: once In or Out is returned for a prefix, every
// extension returns the same value. The engines exploit that to stop early.
struct FamilyPredicate {
    std::function<Determination(const FiniteBlockSequence&)> decide;

    static FamilyPredicate constant(Determination d);
    // In once the sequence reaches the given length, Undetermined before.
    static FamilyPredicate lengthReaches(std::size_t length);
    // Determined by the first vector: In iff its support has the given size.
    static FamilyPredicate firstPickSupportCard(std::size_t cardinality);
    // In once the sequence extends one of the listed finite sequences; Out
    // once it deviates from all of them; Undetermined while still a proper
    // prefix of some member.
    static FamilyPredicate prefixList(std::vector<FiniteBlockSequence> members);
};

// Player I declares a finite block subsequence of the board.
struct MoveI {
    FiniteBlockSequence sequence;
    friend bool operator==(const MoveI&, const MoveI&) = default;
};

// Player II picks one vector from the span of player I's last move.
struct MoveII {
    BlockVector vector;
    friend bool operator==(const MoveII&, const MoveII&) = default;
};

struct GameRound {
    MoveI i;
    MoveII ii;
    friend bool operator==(const GameRound&, const GameRound&) = default;
};

struct GameTranscript {
    FiniteBlockSequence board;
    FiniteBlockSequence prefix;  // picks already fixed before the game starts
    std::size_t horizon = 0;
    std::vector<GameRound> rounds;
    std::optional<bool> verdict;

    // prefix followed by the picks made so far
    FiniteBlockSequence outcome() const;

    friend bool operator==(const GameTranscript&, const GameTranscript&) = default;
};

using StrategyI = std::function<MoveI(const GameTranscript&)>;
using StrategyII = std::function<MoveII(const GameTranscript&, const MoveI&)>;

// Runs up to `horizon` rounds. Each round: player I's move is validated
// (nonempty, every vector a net member inside the board's span), player II's
// pick is validated (in the span of I's move, a net member, strictly
// block-after the previous pick or the prefix). The family is evaluated on
// prefix + picks before every round and after the last; verdict is true iff
// it returns In within the horizon. Illegal moves raise PreconditionError
// naming the violated invariant and the round.
GameTranscript playDiscrete(const FiniteBlockSequence& board, const FiniteBlockSequence& prefix,
                            std::size_t horizon, const StrategyI& stratI,
                            const StrategyII& stratII, const FamilyPredicate& family,
                            const NetConfig& cfg);

// Same engine with the unit ball replacing net membership: player I's vectors
// and player II's picks need ||.|| <= 1 (and nonzero) instead of lying in the
// net. The board itself is not constrained to the ball.
GameTranscript playContinuous(const FiniteBlockSequence& board, const FiniteBlockSequence& prefix,
                              std::size_t horizon, const StrategyI& stratI,
                              const StrategyII& stratII, const FamilyPredicate& family,
                              const NetConfig& cfg);

// Winning plan for player II: one branch per menu entry, holding the pick to
// play and the plan for the resulting position. An empty perMenu marks a
// position the family has already determined In (no further play needed).
struct WitnessPlan {
    struct Branch {
        BlockVector pick;
        std::shared_ptr<const WitnessPlan> continuation;
    };
    std::vector<Branch> perMenu;
};

struct SolveStats {
    std::size_t nodes = 0;  // game-tree positions visited
};

struct SolveResult {
    bool accepts = false;
    std::shared_ptr<const WitnessPlan> witness;  // set iff accepts
    SolveStats stats;
};

// Bounded backward induction over the tree where player I chooses from
// moveMenuI each round and player II's picks are enumerateNetInSpan of that
// choice (block-after the position). A position where II has no legal pick is
// a loss for II. accepts iff II can force the family to In within horizon.
// The menu must be nonempty; entries are validated as player-I moves.
SolveResult solveBounded(const FiniteBlockSequence& board, const FiniteBlockSequence& prefix,
                         std::size_t horizon, const std::vector<FiniteBlockSequence>& moveMenuI,
                         const FamilyPredicate& family, const NetConfig& cfg);

// Turns a solver witness into a strategy replayable through playDiscrete
// against any player-I strategy over the same menu. Navigation matches the
// transcript's player-I moves to menu entries by exact equality.
StrategyII witnessStrategy(std::shared_ptr<const WitnessPlan> plan,
                           std::vector<FiniteBlockSequence> moveMenuI);

}  // namespace blockgame
