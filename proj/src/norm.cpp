// Copyright 2026 The Blockgame Authors
// SPDX-License-Identifier: Apache-2.0

#include "blockgame/norm.hpp"

#include <algorithm>

#include "blockgame/errors.hpp"

namespace blockgame {

ExactNorm ExactNorm::ofValue(RationalScalar value) {
    if (value < 0) throw PreconditionError("norm value cannot be negative");
    RationalScalar squared = value * value;
    return ExactNorm(std::move(squared), std::move(value));
}

ExactNorm ExactNorm::ofSquare(RationalScalar square) {
    if (square < 0) throw PreconditionError("norm square cannot be negative");
    const Integer num = numerator(square);
    const Integer den = denominator(square);
    const Integer rootNum = boost::multiprecision::sqrt(num);
    const Integer rootDen = boost::multiprecision::sqrt(den);
    std::optional<RationalScalar> value;
    if (rootNum * rootNum == num && rootDen * rootDen == den)
        value = RationalScalar(rootNum, rootDen);
    return ExactNorm(std::move(square), std::move(value));
}

bool ExactNorm::leq(const RationalScalar& q) const {
    if (q < 0) return false;
    return squared_ <= q * q;
}

bool ExactNorm::lt(const RationalScalar& q) const {
    if (q <= 0) return false;
    return squared_ < q * q;
}

bool ExactNorm::eq(const RationalScalar& q) const {
    if (q < 0) return false;
    return squared_ == q * q;
}

NormPlugin::NormPlugin(NormKind kind, RationalScalar basisConstant)
    : kind_(kind), basisConstant_(std::move(basisConstant)) {
    if (basisConstant_ < 1) throw PreconditionError("basis constant must be at least 1");
}

ExactNorm NormPlugin::norm(const BlockVector& x) const {
    switch (kind_) {
        case NormKind::Ell1: {
            RationalScalar sum = 0;
            for (const auto& [i, c] : x.entries()) sum += abs(c);
            return ExactNorm::ofValue(std::move(sum));
        }
        case NormKind::Sup: {
            RationalScalar best = 0;
            for (const auto& [i, c] : x.entries()) best = std::max(best, RationalScalar(abs(c)));
            return ExactNorm::ofValue(std::move(best));
        }
        case NormKind::Ell2: {
            RationalScalar sum = 0;
            for (const auto& [i, c] : x.entries()) sum += c * c;
            return ExactNorm::ofSquare(std::move(sum));
        }
    }
    throw Error("unreachable norm kind");
}

std::optional<RationalScalar> NormPlugin::exactValue(const BlockVector& x) const {
    return norm(x).value();
}

RationalScalar NormPlugin::coefficientBound() const {
    return 2 * basisConstant_;
}

bool distLeqDelta(const FiniteBlockSequence& u, const FiniteBlockSequence& v,
                  const ToleranceSequence& delta, const NormPlugin& p) {
    if (u.size() != v.size())
        throw PreconditionError("distance requires sequences of equal length");
    for (std::size_t n = 0; n < u.size(); ++n) {
        if (!p.norm(u[n] - v[n]).leq(delta.at(n))) return false;
    }
    return true;
}

}  // namespace blockgame
