// Copyright 2026 The Blockgame Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "blockgame/block.hpp"
#include "blockgame/norm.hpp"
#include "blockgame/tolerance.hpp"

namespace blockgame {

struct Segment {
    std::size_t lo = 0;
    std::size_t hi = 0;  // inclusive, lo <= hi
    std::size_t length() const { return hi - lo + 1; }
    friend bool operator==(const Segment&, const Segment&) = default;
};

// Quantization net configuration: tolerance rule, derived exponents, norm.
class NetConfig {
  public:
    NetConfig(ToleranceSequence delta, NormPlugin norm)
        : delta_(std::move(delta)), norm_(std::move(norm)), exponents_(delta_) {}

    static NetConfig standard();  // delta_n = 2^-n, ell1, basis constant 1

    const ToleranceSequence& delta() const { return delta_; }
    const NormPlugin& norm() const { return norm_; }
    // k_n: strictly increasing, 2^(1-k_n) <= delta_n.
    unsigned exponent(std::size_t n) const { return exponents_.at(n); }

  private:
    ToleranceSequence delta_;
    NormPlugin norm_;
    ExponentSequence exponents_;
};

// True iff lambda is an integer multiple of 2^-(segmentLength*(k_i+1)).
bool latticeMember(const RationalScalar& lambda, std::size_t i, std::size_t segmentLength,
                   const NetConfig& cfg);

// Membership in the quantization net: x nonzero, every coefficient on the
// support interval [min supp, max supp] on the interval's lattice, and
// ||x|| <= 1. The zero vector is not a member.
bool netMember(const BlockVector& x, const NetConfig& cfg);

// One net element in integer form: lambda_i = digits[i - segment.lo] scaled
// by 2^-(segment.length()*(k_i+1)); the first and last digits are nonzero.
struct NetTuple {
    Segment segment;
    std::vector<std::int64_t> digits;
};

BlockVector netTupleVector(const NetTuple& tuple, const NetConfig& cfg);

// Streams every net element supported inside [0, n) in canonical order:
// support intervals ordered by (lo, hi), digit tuples lexicographically.
// Enumeration state is integer-only; scales whose digit bounds would not fit
// 63 bits are refused (the member count is astronomically large well before
// that point).
class NetTupleCursor {
  public:
    NetTupleCursor(std::size_t n, const NetConfig& cfg);
    ~NetTupleCursor();
    NetTupleCursor(NetTupleCursor&&) noexcept;
    NetTupleCursor& operator=(NetTupleCursor&&) noexcept;

    // Advances to the next element; false once exhausted.
    bool next(NetTuple& out);

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Complete list of net elements supported inside [0, n), canonically sorted.
// Precondition n >= 1. Feasible for small n only; the count grows doubly
// exponentially with n.
std::vector<BlockVector> enumerateNetBelow(std::size_t n, const NetConfig& cfg);

// Net elements in the linear span of a block-ordered board of net elements,
// optionally restricted to vectors strictly block-after `after`. Enumerated
// directly in board coordinates (each board vector admits one coefficient
// lattice), so this stays small even when the ambient net does not.
std::vector<BlockVector> enumerateNetInSpan(const FiniteBlockSequence& board,
                                            const std::optional<BlockVector>& after,
                                            const NetConfig& cfg);

struct RoundingResult {
    BlockVector rounded;
    std::vector<RationalScalar> mu;       // expansion of the input over the board
    std::vector<RationalScalar> muTilde;  // quantized coefficients
    std::size_t m1 = 0;                   // first/last board position carrying the input
    std::size_t m2 = 0;
    ExactNorm error;            // ||w - rounded||
    RationalScalar errorBound;  // 2^(-k_{m1}+1)
};

// Certified rounding of w onto the net along the board ztilde. Requires every
// board vector in the net, w in the board's span with board-support
// cardinality at least 2, and ||w|| <= 1. Postconditions are checked exactly
// on every call: board-support equality, per-coefficient shrink bounds, the
// aggregate step-sum bound, the distance bound, and net membership of the
// result; any violation raises CertificationError.
RoundingResult roundToNet(const BlockVector& w, const FiniteBlockSequence& ztilde,
                          const NetConfig& cfg);

// Pairwise sums z_j = ztilde_{2j} + ztilde_{2j+1}; an odd trailing element is
// dropped.
FiniteBlockSequence coveringSequence(const FiniteBlockSequence& ztilde);

struct CoveringRow {
    std::size_t index = 0;  // position in the input sequence
    std::size_t m1 = 0;     // first board position of the vector, >= index
    ExactNorm error;        // ||u_i - rounded_i||
    RationalScalar claimBound;     // 2^(-k_{m1}+1)
    RationalScalar exponentBound;  // 2^(-k_i+1)
    RationalScalar delta;          // delta_i
};

struct CoveringResult {
    FiniteBlockSequence rounded;
    std::vector<CoveringRow> rows;
};

// Rounds each u_i onto the net along ztilde and certifies the distance chain
// ||u_i - rounded_i|| <= 2^(-k_{m1}+1) <= 2^(-k_i+1) <= delta_i exactly.
// Requires z == coveringSequence(ztilde), board vectors in the net, u a block
// subsequence of z with every ||u_i|| <= 1.
CoveringResult verifyCovering(const FiniteBlockSequence& u, const FiniteBlockSequence& z,
                              const FiniteBlockSequence& ztilde, const NetConfig& cfg);

}  // namespace blockgame
