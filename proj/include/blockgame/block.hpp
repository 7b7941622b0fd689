// Copyright 2026 The Blockgame Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "blockgame/rational.hpp"

namespace blockgame {

// Finitely supported vector over the basis (e_i): an ordered map from basis
// index to nonzero rational coefficient. The zero vector is the empty map.
class BlockVector {
  public:
    using Entry = std::pair<std::size_t, RationalScalar>;

    BlockVector() = default;
    // Entries must have distinct indices; zero coefficients are dropped.
    explicit BlockVector(std::vector<Entry> entries);

    static BlockVector unit(std::size_t i);

    bool isZero() const { return entries_.empty(); }
    const std::vector<Entry>& entries() const { return entries_; }
    RationalScalar coeff(std::size_t i) const;

    // First/last support index; PreconditionError on the zero vector.
    std::size_t minSupport() const;
    std::size_t maxSupport() const;
    std::vector<std::size_t> support() const;

    BlockVector operator-() const;
    friend BlockVector operator+(const BlockVector& a, const BlockVector& b);
    friend BlockVector operator-(const BlockVector& a, const BlockVector& b);
    friend BlockVector operator*(const RationalScalar& c, const BlockVector& x);
    friend bool operator==(const BlockVector&, const BlockVector&) = default;

    // Total order: support interval (min, max) lexicographically, then the
    // coefficient tuple over the interval lexicographically by value. Used
    // for canonical sorted output; zero sorts first.
    static bool canonicalLess(const BlockVector& a, const BlockVector& b);

  private:
    std::vector<Entry> entries_;  // sorted by index, coefficients nonzero
};

// Strict block order: max supp x < min supp y. Undefined (throws) when either
// vector is zero.
bool blockLess(const BlockVector& x, const BlockVector& y);

// Finite sequence of nonzero vectors with strictly increasing support blocks.
class FiniteBlockSequence {
  public:
    FiniteBlockSequence() = default;
    explicit FiniteBlockSequence(std::vector<BlockVector> vectors);

    std::size_t size() const { return vectors_.size(); }
    bool empty() const { return vectors_.empty(); }
    const BlockVector& operator[](std::size_t i) const { return vectors_[i]; }
    const BlockVector& back() const { return vectors_.back(); }
    const std::vector<BlockVector>& vectors() const { return vectors_; }
    auto begin() const { return vectors_.begin(); }
    auto end() const { return vectors_.end(); }

    // Copy with one vector appended; validates the block order.
    FiniteBlockSequence appended(BlockVector v) const;
    // Suffix starting at position `from` (empty when from >= size).
    FiniteBlockSequence suffix(std::size_t from) const;

    friend bool operator==(const FiniteBlockSequence&, const FiniteBlockSequence&) = default;

  private:
    std::vector<BlockVector> vectors_;
};

FiniteBlockSequence standardBasis(std::size_t count);

// Coefficients c with y = sum c_j z_j, or nullopt when y is outside the span.
// Exact: the z_j have pairwise disjoint supports, so the system is decided
// blockwise by ratio extraction.
std::optional<std::vector<RationalScalar>> expandInSpan(const BlockVector& y,
                                                        const FiniteBlockSequence& zs);

// True iff every vector of ys lies in the linear span of zs.
bool isBlockSubsequence(const FiniteBlockSequence& ys, const FiniteBlockSequence& zs);

}  // namespace blockgame
