// Copyright 2026 The Blockgame Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "blockgame/rational.hpp"

namespace blockgame {

// Positive tolerance sequence delta_n given by a closed-form rule, so every
// term is recomputable exactly.
class ToleranceSequence {
  public:
    enum class Kind { Geometric, ExplicitPrefixThenGeometric };

    // delta_n = c * r^n, c > 0, r > 0.
    static ToleranceSequence geometric(RationalScalar c, RationalScalar r);

    // delta_n = prefix[n] for n < |prefix|, then the last prefix term decays
    // geometrically with the given ratio.
    static ToleranceSequence explicitPrefixThenGeometric(std::vector<RationalScalar> prefix,
                                                         RationalScalar ratio);

    RationalScalar at(std::size_t n) const;

    // Scales every term by a positive factor, preserving the rule kind.
    ToleranceSequence scaled(const RationalScalar& factor) const;

    // Requires delta_0 <= 1 and sum_{j>n} delta_j <= delta_n for all n, the
    // form verified symbolically for geometric rules with ratio <= 1/2.
    // Throws PreconditionError for any other rule.
    void requireSummableTails() const;

    Kind kind() const { return kind_; }
    const RationalScalar& ratio() const { return ratio_; }
    const std::vector<RationalScalar>& prefix() const { return prefix_; }

    friend bool operator==(const ToleranceSequence&, const ToleranceSequence&) = default;

  private:
    ToleranceSequence(Kind kind, std::vector<RationalScalar> prefix, RationalScalar ratio);

    Kind kind_;
    std::vector<RationalScalar> prefix_;  // geometric: single element c
    RationalScalar ratio_;
};

// Strictly increasing positive exponents k_n with 2^(1-k_n) <= delta_n:
// k_n = max(k_{n-1} + 1, minimal admissible k), with k_{-1} taken as 0.
std::vector<unsigned> deriveExponents(const ToleranceSequence& delta, std::size_t count);

class ExponentSequence {
  public:
    explicit ExponentSequence(ToleranceSequence delta) : delta_(std::move(delta)) {}

    unsigned at(std::size_t n) const;
    const ToleranceSequence& delta() const { return delta_; }

  private:
    ToleranceSequence delta_;
};

}  // namespace blockgame
