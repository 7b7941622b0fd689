// Copyright 2026 The Blockgame Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "blockgame/block.hpp"
#include "blockgame/rational.hpp"
#include "blockgame/tolerance.hpp"

namespace blockgame {

enum class NormKind { Ell1, Sup, Ell2 };

// A nonnegative norm value known exactly: always through its square, and as a
// rational number whenever the square is a perfect square (which covers the
// ell1 and sup norms outright). All threshold comparisons are exact.
class ExactNorm {
  public:
    static ExactNorm ofValue(RationalScalar value);
    static ExactNorm ofSquare(RationalScalar square);

    const RationalScalar& squared() const { return squared_; }
    const std::optional<RationalScalar>& value() const { return value_; }

    bool leq(const RationalScalar& q) const;
    bool lt(const RationalScalar& q) const;
    bool eq(const RationalScalar& q) const;
    bool geq(const RationalScalar& q) const { return !lt(q); }
    bool gt(const RationalScalar& q) const { return !leq(q); }

  private:
    ExactNorm(RationalScalar squared, std::optional<RationalScalar> value)
        : squared_(std::move(squared)), value_(std::move(value)) {}

    RationalScalar squared_;
    std::optional<RationalScalar> value_;
};

// Norm on finitely supported vectors, normalized so every basis vector has
// norm one. basisConstant is the certified basis constant C: any x with
// ||x|| <= 1 has every coefficient bounded by 2C.
class NormPlugin {
  public:
    explicit NormPlugin(NormKind kind, RationalScalar basisConstant = RationalScalar(1));

    NormKind kind() const { return kind_; }
    const RationalScalar& basisConstant() const { return basisConstant_; }

    ExactNorm norm(const BlockVector& x) const;
    // Exact rational norm value; nullopt for ell2 vectors whose norm is
    // irrational.
    std::optional<RationalScalar> exactValue(const BlockVector& x) const;
    // 2C, the coefficient bound certified for unit-ball vectors.
    RationalScalar coefficientBound() const;

    bool normLeq(const BlockVector& x, const RationalScalar& q) const { return norm(x).leq(q); }
    bool normEq(const BlockVector& x, const RationalScalar& q) const { return norm(x).eq(q); }

    friend bool operator==(const NormPlugin&, const NormPlugin&) = default;

  private:
    NormKind kind_;
    RationalScalar basisConstant_;
};

// True iff |u| = |v| and ||u_n - v_n|| <= delta_n for every n; throws on
// length mismatch.
bool distLeqDelta(const FiniteBlockSequence& u, const FiniteBlockSequence& v,
                  const ToleranceSequence& delta, const NormPlugin& p);

}  // namespace blockgame
