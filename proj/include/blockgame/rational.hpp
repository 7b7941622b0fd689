// Copyright 2026 The Blockgame Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace blockgame {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar: arbitrary-precision numerator/denominator kept in
// lowest terms with positive denominator. Arithmetic is exact; division by
// zero throws.
using RationalScalar = boost::multiprecision::cpp_rational;

// Parses "p/q" or "p" with optional sign. Rejects anything else (notably
// decimal notation) with ParseError; q = 0 is a ParseError too.
RationalScalar parseRational(const std::string& text);

// Canonical "p/q" form, q > 0, lowest terms. Integers render as "p/1".
std::string rationalToString(const RationalScalar& value);

Integer floorRational(const RationalScalar& value);
Integer ceilRational(const RationalScalar& value);

// 2^e for any integer e, as an exact rational.
RationalScalar pow2(long e);

// True iff the denominator is a power of two.
bool isDyadicRational(const RationalScalar& value);

// Dyadic scalar t * 2^(-e) with e >= 0, kept canonical: e is minimal, so the
// mantissa is odd whenever e > 0, and t = 0 forces e = 0.
class DyadicScalar {
  public:
    DyadicScalar() : mantissa_(0), exponent_(0) {}
    DyadicScalar(Integer mantissa, unsigned exponent);

    // Exact conversion when the value is dyadic; nullopt otherwise.
    static std::optional<DyadicScalar> fromRational(const RationalScalar& value);

    RationalScalar toRational() const;
    const Integer& mantissa() const { return mantissa_; }
    unsigned exponent() const { return exponent_; }
    bool isZero() const { return mantissa_ == 0; }

    friend bool operator==(const DyadicScalar&, const DyadicScalar&) = default;

  private:
    Integer mantissa_;
    unsigned exponent_;
};

}  // namespace blockgame
