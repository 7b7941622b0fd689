// Copyright 2026 The Blockgame Authors
// SPDX-License-Identifier: Apache-2.0

#include "blockgame/block.hpp"

#include <algorithm>

#include "blockgame/errors.hpp"

namespace blockgame {

BlockVector::BlockVector(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i - 1].first == entries_[i].first)
            throw PreconditionError("duplicate basis index in vector construction");
    }
    entries_.erase(std::remove_if(entries_.begin(), entries_.end(),
                                  [](const Entry& e) { return e.second == 0; }),
                   entries_.end());
}

BlockVector BlockVector::unit(std::size_t i) {
    return BlockVector({{i, RationalScalar(1)}});
}

RationalScalar BlockVector::coeff(std::size_t i) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const Entry& e, std::size_t idx) { return e.first < idx; });
    if (it != entries_.end() && it->first == i) return it->second;
    return RationalScalar(0);
}

std::size_t BlockVector::minSupport() const {
    if (isZero()) throw PreconditionError("zero vector has no support");
    return entries_.front().first;
}

std::size_t BlockVector::maxSupport() const {
    if (isZero()) throw PreconditionError("zero vector has no support");
    return entries_.back().first;
}

std::vector<std::size_t> BlockVector::support() const {
    std::vector<std::size_t> indices;
    indices.reserve(entries_.size());
    for (const auto& [i, c] : entries_) indices.push_back(i);
    return indices;
}

BlockVector BlockVector::operator-() const {
    BlockVector result = *this;
    for (auto& [i, c] : result.entries_) c = -c;
    return result;
}

BlockVector operator+(const BlockVector& a, const BlockVector& b) {
    BlockVector result;
    result.entries_.reserve(a.entries_.size() + b.entries_.size());
    auto ia = a.entries_.begin();
    auto ib = b.entries_.begin();
    while (ia != a.entries_.end() || ib != b.entries_.end()) {
        if (ib == b.entries_.end() || (ia != a.entries_.end() && ia->first < ib->first)) {
            result.entries_.push_back(*ia++);
        } else if (ia == a.entries_.end() || ib->first < ia->first) {
            result.entries_.push_back(*ib++);
        } else {
            RationalScalar sum = ia->second + ib->second;
            if (sum != 0) result.entries_.emplace_back(ia->first, std::move(sum));
            ++ia;
            ++ib;
        }
    }
    return result;
}

BlockVector operator-(const BlockVector& a, const BlockVector& b) {
    return a + (-b);
}

BlockVector operator*(const RationalScalar& c, const BlockVector& x) {
    if (c == 0) return BlockVector();
    BlockVector result = x;
    for (auto& [i, coeff] : result.entries_) coeff *= c;
    return result;
}

bool BlockVector::canonicalLess(const BlockVector& a, const BlockVector& b) {
    if (a.isZero() || b.isZero()) return a.isZero() && !b.isZero();
    const auto keyA = std::make_pair(a.minSupport(), a.maxSupport());
    const auto keyB = std::make_pair(b.minSupport(), b.maxSupport());
    if (keyA != keyB) return keyA < keyB;
    for (std::size_t i = keyA.first; i <= keyA.second; ++i) {
        const RationalScalar ca = a.coeff(i);
        const RationalScalar cb = b.coeff(i);
        if (ca != cb) return ca < cb;
    }
    return false;
}

bool blockLess(const BlockVector& x, const BlockVector& y) {
    if (x.isZero() || y.isZero()) throw PreconditionError("block order undefined for zero vector");
    return x.maxSupport() < y.minSupport();
}

FiniteBlockSequence::FiniteBlockSequence(std::vector<BlockVector> vectors)
    : vectors_(std::move(vectors)) {
    for (const auto& v : vectors_) {
        if (v.isZero()) throw PreconditionError("block sequence entries must be nonzero");
    }
    for (std::size_t i = 1; i < vectors_.size(); ++i) {
        if (!blockLess(vectors_[i - 1], vectors_[i]))
            throw PreconditionError("block sequence entries must be strictly block-ordered");
    }
}

FiniteBlockSequence FiniteBlockSequence::appended(BlockVector v) const {
    std::vector<BlockVector> extended = vectors_;
    extended.push_back(std::move(v));
    return FiniteBlockSequence(std::move(extended));
}

FiniteBlockSequence FiniteBlockSequence::suffix(std::size_t from) const {
    if (from >= vectors_.size()) return FiniteBlockSequence();
    FiniteBlockSequence result;
    result.vectors_.assign(vectors_.begin() + static_cast<std::ptrdiff_t>(from), vectors_.end());
    return result;
}

FiniteBlockSequence standardBasis(std::size_t count) {
    std::vector<BlockVector> basis;
    basis.reserve(count);
    for (std::size_t i = 0; i < count; ++i) basis.push_back(BlockVector::unit(i));
    return FiniteBlockSequence(std::move(basis));
}

std::optional<std::vector<RationalScalar>> expandInSpan(const BlockVector& y,
                                                        const FiniteBlockSequence& zs) {
    std::vector<RationalScalar> coeffs(zs.size(), RationalScalar(0));
    std::size_t covered = 0;
    for (std::size_t j = 0; j < zs.size(); ++j) {
        const BlockVector& z = zs[j];
        const RationalScalar lead = y.coeff(z.minSupport());
        const RationalScalar c = lead / z.entries().front().second;
        for (const auto& [i, zi] : z.entries()) {
            if (y.coeff(i) != c * zi) return std::nullopt;
        }
        if (c != 0) covered += z.entries().size();
        coeffs[j] = c;
    }
    if (covered != y.entries().size()) return std::nullopt;
    return coeffs;
}

bool isBlockSubsequence(const FiniteBlockSequence& ys, const FiniteBlockSequence& zs) {
    for (const auto& y : ys) {
        if (!expandInSpan(y, zs)) return false;
    }
    return true;
}

}  // namespace blockgame
