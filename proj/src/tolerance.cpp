// Copyright 2026 The Blockgame Authors
// SPDX-License-Identifier: Apache-2.0

#include "blockgame/tolerance.hpp"

#include "blockgame/errors.hpp"

namespace blockgame {

ToleranceSequence::ToleranceSequence(Kind kind, std::vector<RationalScalar> prefix,
                                     RationalScalar ratio)
    : kind_(kind), prefix_(std::move(prefix)), ratio_(std::move(ratio)) {
    if (prefix_.empty()) throw PreconditionError("tolerance rule needs at least one term");
    for (const auto& term : prefix_) {
        if (term <= 0) throw PreconditionError("tolerance terms must be positive");
    }
    if (ratio_ <= 0) throw PreconditionError("tolerance ratio must be positive");
}

ToleranceSequence ToleranceSequence::geometric(RationalScalar c, RationalScalar r) {
    return ToleranceSequence(Kind::Geometric, {std::move(c)}, std::move(r));
}

ToleranceSequence ToleranceSequence::explicitPrefixThenGeometric(
    std::vector<RationalScalar> prefix, RationalScalar ratio) {
    return ToleranceSequence(Kind::ExplicitPrefixThenGeometric, std::move(prefix),
                             std::move(ratio));
}

RationalScalar ToleranceSequence::at(std::size_t n) const {
    std::size_t steps;
    RationalScalar value;
    if (n < prefix_.size()) {
        if (kind_ == Kind::ExplicitPrefixThenGeometric) return prefix_[n];
        value = prefix_[0];
        steps = n;
    } else {
        value = prefix_.back();
        steps = n - (prefix_.size() - 1);
    }
    for (std::size_t i = 0; i < steps; ++i) value *= ratio_;
    return value;
}

ToleranceSequence ToleranceSequence::scaled(const RationalScalar& factor) const {
    if (factor <= 0) throw PreconditionError("tolerance scale factor must be positive");
    std::vector<RationalScalar> prefix = prefix_;
    for (auto& term : prefix) term *= factor;
    return ToleranceSequence(kind_, std::move(prefix), ratio_);
}

void ToleranceSequence::requireSummableTails() const {
    if (kind_ != Kind::Geometric)
        throw PreconditionError("summable-tail verification covers geometric rules only");
    if (ratio_ > RationalScalar(1, 2))
        throw PreconditionError("summable tails need ratio <= 1/2, got " +
                                rationalToString(ratio_));
    // sum_{j>n} c r^j = delta_n * r/(1-r) <= delta_n exactly when r <= 1/2.
    if (prefix_[0] > 1)
        throw PreconditionError("summable tails need delta_0 <= 1, got " +
                                rationalToString(prefix_[0]));
}

namespace {

// Minimal k >= 1 with 2^(1-k) <= delta, i.e. minimal j >= 0 with
// 2^j * delta >= 1, plus one.
unsigned minimalAdmissibleExponent(const RationalScalar& delta) {
    unsigned j = 0;
    RationalScalar scaled = delta;
    while (scaled < 1) {
        scaled *= 2;
        ++j;
    }
    return j + 1;
}

}  // namespace

std::vector<unsigned> deriveExponents(const ToleranceSequence& delta, std::size_t count) {
    std::vector<unsigned> exponents;
    exponents.reserve(count);
    unsigned prev = 0;
    for (std::size_t n = 0; n < count; ++n) {
        const unsigned least = minimalAdmissibleExponent(delta.at(n));
        prev = std::max(prev + 1, least);
        exponents.push_back(prev);
    }
    return exponents;
}

unsigned ExponentSequence::at(std::size_t n) const {
    unsigned prev = 0;
    for (std::size_t i = 0; i <= n; ++i) {
        prev = std::max(prev + 1, minimalAdmissibleExponent(delta_.at(i)));
    }
    return prev;
}

}  // namespace blockgame
