// Copyright 2026 The Blockgame Authors
// SPDX-License-Identifier: Apache-2.0

#include "blockgame/net.hpp"

#include <algorithm>
#include <cmath>

#include "blockgame/errors.hpp"

namespace blockgame {

NetConfig NetConfig::standard() {
    return NetConfig(ToleranceSequence::geometric(RationalScalar(1), RationalScalar(1, 2)),
                     NormPlugin(NormKind::Ell1));
}

bool latticeMember(const RationalScalar& lambda, std::size_t i, std::size_t segmentLength,
                   const NetConfig& cfg) {
    const auto dyadic = DyadicScalar::fromRational(lambda);
    if (!dyadic) return false;
    const unsigned long long stepExp =
        static_cast<unsigned long long>(segmentLength) * (cfg.exponent(i) + 1ull);
    return dyadic->exponent() <= stepExp;
}

bool netMember(const BlockVector& x, const NetConfig& cfg) {
    if (x.isZero()) return false;
    const std::size_t lo = x.minSupport();
    const std::size_t hi = x.maxSupport();
    const std::size_t l = hi - lo + 1;
    for (const auto& [i, c] : x.entries()) {
        if (!latticeMember(c, i, l, cfg)) return false;
    }
    return cfg.norm().normLeq(x, RationalScalar(1));
}

BlockVector netTupleVector(const NetTuple& tuple, const NetConfig& cfg) {
    const std::size_t l = tuple.segment.length();
    std::vector<BlockVector::Entry> entries;
    for (std::size_t offset = 0; offset < tuple.digits.size(); ++offset) {
        const std::int64_t t = tuple.digits[offset];
        if (t == 0) continue;
        const std::size_t i = tuple.segment.lo + offset;
        const unsigned stepExp = static_cast<unsigned>(l * (cfg.exponent(i) + 1));
        entries.emplace_back(i, RationalScalar(Integer(t), Integer(1) << stepExp));
    }
    return BlockVector(std::move(entries));
}

namespace {

std::int64_t isqrt64(std::int64_t x) {
    if (x <= 0) return 0;
    auto u = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
    while (u > 0 && u * u > x) --u;
    while ((u + 1) * (u + 1) <= x) ++u;
    return u;
}

}  // namespace

// Odometer over the digit tuples of one support interval, minimum-first in
// lexicographic order, pruned by an exact integer norm budget. All scaling is
// by powers of two, so the integer comparisons reproduce the rational norm
// conditions exactly.
struct NetTupleCursor::Impl {
    NetConfig cfg;
    std::size_t n;
    std::vector<unsigned> k;
    NormKind kind;

    Segment seg{0, 0};
    bool segmentOpen = false;
    bool exhausted = false;
    std::vector<unsigned> stepExp;        // E_i = l*(k_i+1), per level
    std::vector<std::int64_t> weight;     // ell1: 2^(S-E_i); ell2: 4^(S-E_i); sup: unused
    std::vector<std::int64_t> supCap;     // sup: 2^(E_i)
    std::int64_t budget = 0;              // ell1: 2^S; ell2: 4^S
    std::vector<std::int64_t> digits;
    std::vector<std::int64_t> remaining;  // remaining[i]: budget before level i

    Impl(std::size_t count, const NetConfig& config) : cfg(config), n(count) {
        kind = cfg.norm().kind();
        k.reserve(n);
        for (std::size_t i = 0; i < n; ++i) k.push_back(cfg.exponent(i));
        if (n == 0) {
            exhausted = true;
        } else {
            seg = {0, 0};
            if (!openSegment()) advanceSegment();
        }
    }

    std::size_t levels() const { return seg.length(); }
    bool isEndpoint(std::size_t level) const { return level == 0 || level + 1 == levels(); }

    std::int64_t cost(std::size_t level, std::int64_t t) const {
        switch (kind) {
            case NormKind::Ell1:
                return (t < 0 ? -t : t) * weight[level];
            case NormKind::Ell2:
                return t * t * weight[level];
            case NormKind::Sup:
                return 0;
        }
        return 0;
    }

    std::int64_t maxDigit(std::size_t level) const {
        switch (kind) {
            case NormKind::Ell1:
                return remaining[level] / weight[level];
            case NormKind::Ell2:
                return isqrt64(remaining[level] / weight[level]);
            case NormKind::Sup:
                return supCap[level];
        }
        return 0;
    }

    // Prepares the current segment's lattice scale and positions the odometer
    // on the segment's first tuple. False when the segment has no members.
    bool openSegment() {
        const std::size_t l = seg.length();
        stepExp.assign(l, 0);
        for (std::size_t off = 0; off < l; ++off) {
            const unsigned long long e =
                static_cast<unsigned long long>(l) * (k[seg.lo + off] + 1ull);
            const unsigned long long cap = kind == NormKind::Ell2 ? 31 : 62;
            if (e > cap)
                throw PreconditionError("net enumeration scale exceeds the supported range");
            stepExp[off] = static_cast<unsigned>(e);
        }
        const unsigned S = stepExp.back();  // exponents increase along the segment
        weight.assign(l, 0);
        supCap.assign(l, 0);
        for (std::size_t off = 0; off < l; ++off) {
            const unsigned shift = S - stepExp[off];
            weight[off] = kind == NormKind::Ell2 ? (std::int64_t{1} << (2 * shift))
                                                 : (std::int64_t{1} << shift);
            supCap[off] = std::int64_t{1} << stepExp[off];
        }
        budget = kind == NormKind::Ell2 ? (std::int64_t{1} << (2 * S)) : (std::int64_t{1} << S);
        digits.assign(l, 0);
        remaining.assign(l + 1, 0);
        remaining[0] = budget;
        segmentOpen = fill(0);
        return segmentOpen;
    }

    // Next digit at `level` in lexicographic order, within budget. False when
    // the level is out of digits for the current prefix.
    bool bump(std::size_t level) {
        std::int64_t t = digits[level] + 1;
        if (t == 0 && isEndpoint(level)) t = 1;
        if (t > maxDigit(level)) return false;
        digits[level] = t;
        remaining[level + 1] = remaining[level] - cost(level, t);
        return true;
    }

    // Positions levels [from, end) at the least feasible completion of the
    // prefix [0, from), backtracking within the range when a greedy minimal
    // digit starves a deeper endpoint. False when no completion exists.
    bool fill(std::size_t from) {
        std::size_t level = from;
        while (level < levels()) {
            const std::int64_t top = maxDigit(level);
            if (top > 0 || !isEndpoint(level)) {
                digits[level] = -top;
                remaining[level + 1] = remaining[level] - cost(level, digits[level]);
                ++level;
                continue;
            }
            // starved endpoint: advance the deepest earlier level that can move
            while (true) {
                if (level == from) return false;
                --level;
                if (bump(level)) break;
            }
            ++level;
        }
        return true;
    }

    // Lexicographic step within the current segment.
    bool advanceDigits() {
        std::size_t level = levels();
        while (level > 0) {
            --level;
            while (bump(level)) {
                if (fill(level + 1)) return true;
            }
        }
        return false;
    }

    bool advanceSegment() {
        while (true) {
            if (seg.hi + 1 < n) {
                ++seg.hi;
            } else if (seg.lo + 1 < n) {
                ++seg.lo;
                seg.hi = seg.lo;
            } else {
                exhausted = true;
                return false;
            }
            if (openSegment()) return true;
        }
    }

    bool next(NetTuple& out) {
        if (exhausted) return false;
        out.segment = seg;
        out.digits = digits;
        if (!advanceDigits()) advanceSegment();
        return true;
    }
};

NetTupleCursor::NetTupleCursor(std::size_t n, const NetConfig& cfg)
    : impl_(std::make_unique<Impl>(n, cfg)) {}
NetTupleCursor::~NetTupleCursor() = default;
NetTupleCursor::NetTupleCursor(NetTupleCursor&&) noexcept = default;
NetTupleCursor& NetTupleCursor::operator=(NetTupleCursor&&) noexcept = default;

bool NetTupleCursor::next(NetTuple& out) {
    return impl_->next(out);
}

std::vector<BlockVector> enumerateNetBelow(std::size_t n, const NetConfig& cfg) {
    if (n == 0) throw PreconditionError("enumeration needs a positive support bound");
    std::vector<BlockVector> result;
    NetTupleCursor cursor(n, cfg);
    NetTuple tuple;
    while (cursor.next(tuple)) result.push_back(netTupleVector(tuple, cfg));
    return result;
}

namespace {

// Largest integer u >= 0 with u*u <= value.
Integer isqrtRational(const RationalScalar& value) {
    if (value < 0) return 0;
    return boost::multiprecision::sqrt(floorRational(value));
}

struct SpanLevel {
    RationalScalar step;    // coefficient lattice step for this board vector
    RationalScalar weight;  // ell1: step*||z||_1; ell2: step^2*||z||_2^2; sup: step*||z||_inf
};

}  // namespace

std::vector<BlockVector> enumerateNetInSpan(const FiniteBlockSequence& board,
                                            const std::optional<BlockVector>& after,
                                            const NetConfig& cfg) {
    for (const auto& z : board) {
        if (!netMember(z, cfg))
            throw PreconditionError("span enumeration requires a board of net members");
    }
    if (after && after->isZero())
        throw PreconditionError("block-after filter needs a nonzero vector");

    const NormKind kind = cfg.norm().kind();
    std::vector<BlockVector> result;

    for (std::size_t j1 = 0; j1 < board.size(); ++j1) {
        if (after && board[j1].minSupport() <= after->maxSupport()) continue;
        for (std::size_t j2 = j1; j2 < board.size(); ++j2) {
            const std::size_t lo = board[j1].minSupport();
            const std::size_t hi = board[j2].maxSupport();
            const std::size_t l = hi - lo + 1;

            std::vector<SpanLevel> levels(j2 - j1 + 1);
            for (std::size_t j = j1; j <= j2; ++j) {
                // c * z_i must land on the interval lattice at every support
                // index i of z: intersect the cyclic groups (q_i/(p_i*2^E_i))Z
                Integer num = 0;
                Integer den = 1;
                for (const auto& [i, zi] : board[j].entries()) {
                    const unsigned e = static_cast<unsigned>(l * (cfg.exponent(i) + 1));
                    // reduce before combining: lcm(a/b, c/d) = lcm(a,c)/gcd(b,d)
                    // holds only for fractions in lowest terms
                    const RationalScalar indexStep(denominator(zi), abs(numerator(zi)) << e);
                    if (num == 0) {
                        num = numerator(indexStep);
                        den = denominator(indexStep);
                    } else {
                        num = lcm(num, numerator(indexStep));
                        den = gcd(den, denominator(indexStep));
                    }
                }
                SpanLevel& level = levels[j - j1];
                level.step = RationalScalar(num, den);
                const ExactNorm zNorm = cfg.norm().norm(board[j]);
                if (kind == NormKind::Ell2) {
                    level.weight = level.step * level.step * zNorm.squared();
                } else {
                    level.weight = level.step * *zNorm.value();
                }
            }

            // depth-first digits u_j with exact rational budget
            std::vector<BlockVector::Entry> acc;
            const RationalScalar unit(1);
            auto emit = [&]() {
                result.push_back(BlockVector(acc));
            };
            auto rec = [&](auto&& self, std::size_t j, const RationalScalar& budget) -> void {
                const SpanLevel& level = levels[j - j1];
                Integer top;
                switch (kind) {
                    case NormKind::Ell1:
                        top = floorRational(budget / level.weight);
                        break;
                    case NormKind::Ell2:
                        top = isqrtRational(budget / level.weight);
                        break;
                    case NormKind::Sup:
                        top = floorRational(unit / level.weight);
                        break;
                }
                const bool endpoint = j == j1 || j == j2;
                for (Integer u = -top; u <= top; ++u) {
                    if (u == 0 && endpoint) continue;
                    const std::size_t mark = acc.size();
                    if (u != 0) {
                        const RationalScalar c = RationalScalar(u) * level.step;
                        for (const auto& [i, zi] : board[j].entries()) acc.emplace_back(i, c * zi);
                    }
                    if (j == j2) {
                        emit();
                    } else {
                        RationalScalar nextBudget = budget;
                        if (kind == NormKind::Ell1) {
                            nextBudget -= abs(RationalScalar(u)) * level.weight;
                        } else if (kind == NormKind::Ell2) {
                            nextBudget -= RationalScalar(u * u) * level.weight;
                        }
                        self(self, j + 1, nextBudget);
                    }
                    acc.resize(mark);
                }
            };
            rec(rec, j1, unit);
        }
    }
    std::sort(result.begin(), result.end(), BlockVector::canonicalLess);
    return result;
}

RoundingResult roundToNet(const BlockVector& w, const FiniteBlockSequence& ztilde,
                          const NetConfig& cfg) {
    for (const auto& z : ztilde) {
        if (!netMember(z, cfg))
            throw PreconditionError("rounding requires a board of net members");
    }
    if (!cfg.norm().normLeq(w, RationalScalar(1)))
        throw PreconditionError("rounding requires norm at most 1");
    const auto mu = expandInSpan(w, ztilde);
    if (!mu) throw PreconditionError("vector lies outside the board's span");

    std::size_t m1 = ztilde.size();
    std::size_t m2 = 0;
    std::size_t cardinality = 0;
    for (std::size_t j = 0; j < mu->size(); ++j) {
        if ((*mu)[j] == 0) continue;
        m1 = std::min(m1, j);
        m2 = std::max(m2, j);
        ++cardinality;
    }
    if (cardinality < 2) throw PreconditionError("claim requires card ≥ 2");

    const RationalScalar shrink = 1 - pow2(-static_cast<long>(cfg.exponent(m1)));
    std::vector<RationalScalar> muTilde(mu->size(), RationalScalar(0));
    BlockVector rounded;
    for (std::size_t j = m1; j <= m2; ++j) {
        if ((*mu)[j] == 0) continue;
        const unsigned kLead = cfg.exponent(ztilde[j].minSupport());
        const RationalScalar scale = pow2(static_cast<long>(kLead) + 1);
        const RationalScalar scaled = shrink * (*mu)[j] * scale;
        const Integer s = (*mu)[j] > 0 ? ceilRational(scaled) : floorRational(scaled);
        muTilde[j] = RationalScalar(s) / scale;
        rounded = rounded + muTilde[j] * ztilde[j];
    }

    // Exact certification of every guarantee, on every call.
    RationalScalar stepSum = 0;
    for (std::size_t j = m1; j <= m2; ++j) {
        const unsigned kLead = cfg.exponent(ztilde[j].minSupport());
        const RationalScalar step = pow2(-(static_cast<long>(kLead) + 1));
        stepSum += step;
        if (((*mu)[j] == 0) != (muTilde[j] == 0))
            throw CertificationError("board support changed at position " + std::to_string(j));
        if ((*mu)[j] == 0) continue;
        if (abs(muTilde[j]) < shrink * abs((*mu)[j]))
            throw CertificationError("coefficient shrank below the floor at position " +
                                     std::to_string(j) + ": " + rationalToString(muTilde[j]) +
                                     " vs " + rationalToString(shrink * (*mu)[j]));
        if (abs(muTilde[j] - shrink * (*mu)[j]) >= step)
            throw CertificationError("coefficient moved a full step at position " +
                                     std::to_string(j));
    }
    const RationalScalar stepBound = pow2(-static_cast<long>(cfg.exponent(ztilde[m1].minSupport())));
    if (stepSum > stepBound)
        throw CertificationError("aggregate step sum " + rationalToString(stepSum) +
                                 " exceeds " + rationalToString(stepBound));

    RoundingResult result{rounded,
                          *mu,
                          std::move(muTilde),
                          m1,
                          m2,
                          cfg.norm().norm(w - rounded),
                          pow2(1 - static_cast<long>(cfg.exponent(m1)))};
    if (!result.error.leq(result.errorBound))
        throw CertificationError("rounding distance exceeds 2^(1-k): squared distance " +
                                 rationalToString(result.error.squared()) + ", bound " +
                                 rationalToString(result.errorBound));
    if (!netMember(result.rounded, cfg))
        throw CertificationError("rounded vector left the net");
    return result;
}

FiniteBlockSequence coveringSequence(const FiniteBlockSequence& ztilde) {
    std::vector<BlockVector> sums;
    sums.reserve(ztilde.size() / 2);
    for (std::size_t j = 0; j + 1 < ztilde.size(); j += 2)
        sums.push_back(ztilde[j] + ztilde[j + 1]);
    return FiniteBlockSequence(std::move(sums));
}

CoveringResult verifyCovering(const FiniteBlockSequence& u, const FiniteBlockSequence& z,
                              const FiniteBlockSequence& ztilde, const NetConfig& cfg) {
    if (z != coveringSequence(ztilde))
        throw PreconditionError("covering board must be the pairwise-sum sequence");
    if (!isBlockSubsequence(u, z))
        throw PreconditionError("sequence must be a block subsequence of the covering board");
    for (const auto& ui : u) {
        if (!cfg.norm().normLeq(ui, RationalScalar(1)))
            throw PreconditionError("covering requires norms at most 1");
    }

    CoveringResult result;
    std::vector<BlockVector> rounded;
    for (std::size_t i = 0; i < u.size(); ++i) {
        RoundingResult r = roundToNet(u[i], ztilde, cfg);
        if (r.m1 < i)
            throw CertificationError("board support starts before the sequence position: " +
                                     std::to_string(r.m1) + " < " + std::to_string(i));
        CoveringRow row{i,
                        r.m1,
                        r.error,
                        r.errorBound,
                        pow2(1 - static_cast<long>(cfg.exponent(i))),
                        cfg.delta().at(i)};
        if (row.claimBound > row.exponentBound || row.exponentBound > row.delta)
            throw CertificationError("distance chain broke at index " + std::to_string(i) + ": " +
                                     rationalToString(row.claimBound) + " <= " +
                                     rationalToString(row.exponentBound) + " <= " +
                                     rationalToString(row.delta));
        rounded.push_back(std::move(r.rounded));
        result.rows.push_back(std::move(row));
    }
    result.rounded = FiniteBlockSequence(std::move(rounded));
    return result;
}

}  // namespace blockgame
