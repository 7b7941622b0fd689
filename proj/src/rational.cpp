// Copyright 2026 The Blockgame Authors
// SPDX-License-Identifier: Apache-2.0

#include "blockgame/rational.hpp"

#include <cstddef>

#include "blockgame/errors.hpp"

namespace blockgame {

namespace {

bool parseInteger(const std::string& text, std::size_t& pos, Integer& out) {
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    std::size_t digits = 0;
    Integer value = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        value = value * 10 + (text[pos] - '0');
        ++pos;
        ++digits;
    }
    if (digits == 0) return false;
    out = negative ? Integer(-value) : value;
    return true;
}

}  // namespace

RationalScalar parseRational(const std::string& text) {
    std::size_t pos = 0;
    Integer num;
    if (!parseInteger(text, pos, num)) throw ParseError("malformed rational: '" + text + "'");
    Integer den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        if (!parseInteger(text, pos, den)) throw ParseError("malformed rational: '" + text + "'");
    }
    if (pos != text.size()) throw ParseError("malformed rational: '" + text + "'");
    if (den == 0) throw ParseError("zero denominator: '" + text + "'");
    return RationalScalar(num, den);
}

std::string rationalToString(const RationalScalar& value) {
    return numerator(value).str() + "/" + denominator(value).str();
}

Integer floorRational(const RationalScalar& value) {
    const Integer num = numerator(value);
    const Integer den = denominator(value);
    Integer q = num / den;  // truncates toward zero
    if (num % den != 0 && num < 0) --q;
    return q;
}

Integer ceilRational(const RationalScalar& value) {
    return -floorRational(-value);
}

RationalScalar pow2(long e) {
    if (e >= 0) return RationalScalar(Integer(1) << static_cast<unsigned>(e));
    return RationalScalar(1, Integer(1) << static_cast<unsigned>(-e));
}

bool isDyadicRational(const RationalScalar& value) {
    const Integer den = denominator(value);
    return (den & (den - 1)) == 0;
}

DyadicScalar::DyadicScalar(Integer mantissa, unsigned exponent)
    : mantissa_(std::move(mantissa)), exponent_(exponent) {
    if (mantissa_ == 0) {
        exponent_ = 0;
        return;
    }
    while (exponent_ > 0 && mantissa_ % 2 == 0) {
        mantissa_ /= 2;
        --exponent_;
    }
}

std::optional<DyadicScalar> DyadicScalar::fromRational(const RationalScalar& value) {
    if (!isDyadicRational(value)) return std::nullopt;
    const Integer den = denominator(value);
    const unsigned e = den == 1 ? 0u : boost::multiprecision::lsb(den);
    return DyadicScalar(numerator(value), e);
}

RationalScalar DyadicScalar::toRational() const {
    return RationalScalar(mantissa_, Integer(1) << exponent_);
}

}  // namespace blockgame
