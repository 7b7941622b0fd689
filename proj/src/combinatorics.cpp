// Copyright 2026 The Blockgame Authors
// SPDX-License-Identifier: Apache-2.0

#include "blockgame/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "blockgame/errors.hpp"

namespace blockgame {

namespace {

void requireK(std::size_t k) {
    if (k < 2) throw PreconditionError("k must be at least 2, got " + std::to_string(k));
}

}  // namespace

IndexSet::IndexSet(std::vector<std::size_t> elements) : elements_(std::move(elements)) {
    for (std::size_t i = 1; i < elements_.size(); ++i) {
        if (elements_[i - 1] >= elements_[i])
            throw PreconditionError("index set elements must be strictly increasing");
    }
}

namespace detail {
IndexSet indexSetFromAscending(std::vector<std::size_t> elements) {
    return IndexSet(std::move(elements), IndexSet::AscendingTag{});
}
}  // namespace detail

bool IndexSet::contains(std::size_t value) const {
    return std::binary_search(elements_.begin(), elements_.end(), value);
}

IndexSet baseSetN(std::size_t count, std::size_t k) {
    if (k == 0) throw PreconditionError("the base set needs k >= 1");
    std::vector<std::size_t> elements;
    elements.reserve(count);
    for (std::size_t n = 0; n < count; ++n) elements.push_back((2 * n + 1) * k);
    return IndexSet(std::move(elements));
}

bool baseSetMember(std::size_t value, std::size_t k) {
    if (k == 0) throw PreconditionError("the base set needs k >= 1");
    const std::size_t quotient = value / k;
    return quotient * k == value && quotient % 2 == 1;
}

std::vector<IndexSet> modKClasses(const IndexSet& L, std::size_t k) {
    requireK(k);
    std::vector<std::vector<std::size_t>> buckets(k);
    for (std::size_t pos = 0; pos < L.size(); ++pos) buckets[pos % k].push_back(L[pos]);
    std::vector<IndexSet> classes;
    classes.reserve(k);
    for (auto& bucket : buckets) classes.emplace_back(std::move(bucket));
    return classes;
}

bool modKTupleMember(const std::vector<IndexSet>& tuple, const IndexSet& L, std::size_t k) {
    requireK(k);
    if (tuple.size() != k) return false;
    const std::vector<IndexSet> classes = modKClasses(L, k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t element : tuple[i]) {
            if (!classes[i].contains(element)) return false;
        }
    }
    return true;
}

KTuplePartition disjointify(const std::vector<IndexSet>& M, std::size_t k) {
    KTuplePartition out;
    disjointify(M, k, out);
    return out;
}

namespace {

// Shared body for disjointify. StaticK != 0 bakes the divisor into the code
// for the small k the exhaustive suites hammer; StaticK == 0 reads it from
// runtimeK. Both paths run the identical checks.
template <std::size_t StaticK>
void disjointifyCore(const std::vector<IndexSet>& M, std::size_t runtimeK, KTuplePartition& out) {
    const std::size_t k = StaticK == 0 ? runtimeK : StaticK;
    constexpr std::size_t kNoElement = static_cast<std::size_t>(-1);

    std::size_t count = 0;
    for (const IndexSet& Mi : M) count += Mi.size();

    // Recycle the output's storage before refilling it.
    out.intervals.resize(count);
    std::vector<std::size_t> unionElements = std::move(out.L).release();
    unionElements.resize(k * count);
    if (out.classes.size() != k) out.classes.resize(k);

    // Class i collects the union's positions congruent to i mod k. With a
    // compile-time k the class buckets are filled inline as intervals are
    // emitted; the generic path fills them by a strided pass afterwards.
    // Either way the witness check below reads the finished classes.
    constexpr bool kInlineClassFill = StaticK != 0;
    constexpr std::size_t kBucketSlots = StaticK == 0 ? 1 : StaticK;
    std::array<std::vector<std::size_t>, kBucketSlots> buckets;
    std::size_t* classOut[kBucketSlots] = {};
    if constexpr (kInlineClassFill) {
        for (std::size_t i = 0; i < k; ++i) {
            buckets[i] = std::move(out.classes[i]).release();
            buckets[i].resize(count);
            classOut[i] = buckets[i].data();
        }
    }

    // Walk the k sets in merged ascending order; each is already strictly
    // increasing, so a k-way merge visits every element once and makes
    // overlaps and strays surface immediately. Heads are cached so the inner
    // argmin touches registers, not vector internals.
    constexpr std::size_t kStackSets = 16;
    struct SetCursor {
        const std::size_t* at;
        const std::size_t* end;
        std::size_t head;  // *at, or kNoElement when exhausted
    };
    SetCursor cursorBuffer[kStackSets];
    std::vector<SetCursor> cursorSpill;
    SetCursor* cursor = cursorBuffer;
    if (k > kStackSets) {
        cursorSpill.resize(k);
        cursor = cursorSpill.data();
    }
    for (std::size_t c = 0; c < k; ++c) {
        const std::vector<std::size_t>& elements = M[c].elements();
        cursor[c] = {elements.data(), elements.data() + elements.size(),
                     elements.empty() ? kNoElement : elements.front()};
    }

    std::size_t* unionOut = unionElements.data();
    std::size_t written = 0;
    std::size_t prevHi = 0;
    while (true) {
        // One pass finds the smallest head and the runner-up. Every element
        // below the smallest is already consumed, so a duplicated element
        // shows up as runner-up == smallest -- no separate scan needed.
        std::size_t i = 0;
        std::size_t smallest = cursor[0].head;
        std::size_t runnerUp = kNoElement;
        for (std::size_t c = 1; c < k; ++c) {
            const std::size_t h = cursor[c].head;
            if (h < smallest) {
                runnerUp = smallest;
                smallest = h;
                i = c;
            } else if (h < runnerUp) {
                runnerUp = h;
            }
        }
        const std::size_t m = smallest;
        if (m == kNoElement) break;
        if (runnerUp == m)
            throw PreconditionError("the sets are not pairwise disjoint: element " +
                                    std::to_string(m) + " appears in more than one set");
        SetCursor& owner = cursor[i];
        ++owner.at;
        owner.head = owner.at == owner.end ? kNoElement : *owner.at;
        const std::size_t quotient = m / k;
        if (quotient * k != m || quotient % 2 == 0)
            throw PreconditionError("element " + std::to_string(m) +
                                    " lies outside the base set {(2n+1)k} for k = " +
                                    std::to_string(k));

        // I_m = [m - i_m, m - i_m + k - 1]; base-set elements are 2k apart, so
        // the intervals cannot collide, but the witness is checked, not
        // assumed. I_m does meet the base set exactly in {m}: the k
        // consecutive integers of I_m contain exactly one multiple of k, that
        // multiple is m itself (m = quotient * k sits inside because
        // m - interval.lo = i < k), and quotient is odd -- all established
        // above, so no further scan is needed.
        const Segment interval{m - i, m - i + k - 1};
        if (written != 0 && prevHi >= interval.lo)
            throw CertificationError("generated intervals overlap near element " +
                                     std::to_string(m));
        prevHi = interval.hi;
        for (std::size_t offset = 0; offset < k; ++offset) unionOut[offset] = interval.lo + offset;
        unionOut += k;
        if constexpr (kInlineClassFill) {
            for (std::size_t offset = 0; offset < k; ++offset)
                classOut[offset][written] = interval.lo + offset;
        }
        out.intervals[written] = {m, interval};
        ++written;
    }
    // The merge stops at the sentinel, so an element equal to it would be
    // skipped rather than validated; it is no base-set member either way.
    if (written != count)
        throw PreconditionError("element " + std::to_string(kNoElement) +
                                " lies outside the base set {(2n+1)k} for k = " +
                                std::to_string(k));

    out.k = k;
    // Both the union and the classes are ascending by construction --
    // intervals were emitted in strictly increasing, non-overlapping order --
    // so the validating scan is skipped.
    if constexpr (kInlineClassFill) {
        for (std::size_t i = 0; i < k; ++i)
            out.classes[i] = detail::indexSetFromAscending(std::move(buckets[i]));
    } else {
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<std::size_t> bucket = std::move(out.classes[i]).release();
            bucket.resize(count);
            const std::size_t* source = unionElements.data() + i;
            for (std::size_t pos = 0; pos < count; ++pos, source += k) bucket[pos] = *source;
            out.classes[i] = detail::indexSetFromAscending(std::move(bucket));
        }
    }
    out.L = detail::indexSetFromAscending(std::move(unionElements));

    // Witness: M_i inside class i, checked by a two-pointer subset walk over
    // the two sorted sets.
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t at = 0;
        for (std::size_t m : M[i]) {
            while (at < out.classes[i].size() && out.classes[i][at] < m) ++at;
            if (at == out.classes[i].size() || out.classes[i][at] != m)
                throw CertificationError("witness check failed: element " + std::to_string(m) +
                                         " landed outside class " + std::to_string(i));
            ++at;
        }
    }
}

}  // namespace

void disjointify(const std::vector<IndexSet>& M, std::size_t k, KTuplePartition& out) {
    requireK(k);
    if (M.size() != k)
        throw PreconditionError("disjointification needs exactly " + std::to_string(k) +
                                " sets, got " + std::to_string(M.size()));
    switch (k) {
        case 2: return disjointifyCore<2>(M, k, out);
        case 3: return disjointifyCore<3>(M, k, out);
        case 4: return disjointifyCore<4>(M, k, out);
        default: return disjointifyCore<0>(M, k, out);
    }
}

std::vector<FiniteBlockSequence> blockModKRestriction(const FiniteBlockSequence& Z,
                                                      const IndexSet& L, std::size_t k) {
    requireK(k);
    for (std::size_t index : L) {
        if (index >= Z.size())
            throw PreconditionError("index " + std::to_string(index) +
                                    " is out of range for a sequence of length " +
                                    std::to_string(Z.size()));
    }
    std::vector<FiniteBlockSequence> boards;
    boards.reserve(k);
    for (const IndexSet& cls : modKClasses(L, k)) {
        std::vector<BlockVector> vectors;
        vectors.reserve(cls.size());
        for (std::size_t index : cls) vectors.push_back(Z[index]);
        boards.emplace_back(std::move(vectors));
    }
    return boards;
}

ReconstructionResult reconstructTuple(const FiniteBlockSequence& V, const FiniteBlockSequence& W,
                                      const std::vector<FiniteBlockSequence>& Wtuple,
                                      const ToleranceSequence& innerDelta,
                                      const ToleranceSequence& outerDelta, const NetConfig& cfg) {
    innerDelta.requireSummableTails();
    const NormPlugin& norm = cfg.norm();
    if (!distLeqDelta(V, W, innerDelta, norm))
        throw PreconditionError("V strays from W beyond the inner tolerance");
    for (std::size_t j = 0; j < W.size(); ++j) {
        if (!norm.normEq(W[j], 1))
            throw PreconditionError("every board vector must have norm one; vector " +
                                    std::to_string(j) + " does not");
    }
    const std::size_t k = Wtuple.size();
    if (k == 0) throw PreconditionError("the tuple must have at least one coordinate");

    const RationalScalar lambdaBound = norm.coefficientBound();
    ReconstructionResult result;
    result.tuple.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        const FiniteBlockSequence& Wi = Wtuple[i];
        std::vector<BlockVector> rebuilt;
        rebuilt.reserve(Wi.size());
        for (std::size_t n = 0; n < Wi.size(); ++n) {
            const BlockVector& w = Wi[n];
            const std::string where =
                "tuple vector (" + std::to_string(i) + ", " + std::to_string(n) + ")";
            if (!norm.normLeq(w, 1))
                throw PreconditionError(where + " lies outside the unit ball");
            const auto lambda = expandInSpan(w, W);
            if (!lambda) throw PreconditionError(where + " does not expand exactly over the board");

            BlockVector v;
            RationalScalar lambdaMax(0);
            RationalScalar deltaSum(0);
            for (std::size_t j = 0; j < lambda->size(); ++j) {
                const RationalScalar& coefficient = (*lambda)[j];
                if (coefficient == 0) continue;
                if (j % k != i)
                    throw PreconditionError(where + " uses board position " + std::to_string(j) +
                                            " outside class " + std::to_string(i));
                if (j < n)
                    throw PreconditionError(where + " uses board position " + std::to_string(j) +
                                            " before its own position");
                v = v + coefficient * V[j];
                if (abs(coefficient) > lambdaMax) lambdaMax = abs(coefficient);
                deltaSum += innerDelta.at(j);
            }

            ReconstructionRow row{i,
                                  n,
                                  lambdaMax,
                                  lambdaBound,
                                  norm.norm(v - w),
                                  lambdaBound * deltaSum,
                                  2 * lambdaBound * innerDelta.at(n),
                                  outerDelta.at(n)};

            if (row.lambdaMax > row.lambdaBound)
                throw CertificationError(where + ": expansion coefficient " +
                                         rationalToString(row.lambdaMax) + " exceeds 2C = " +
                                         rationalToString(row.lambdaBound));
            if (!row.error.leq(row.errorBound))
                throw CertificationError(
                    where + " strays from its source: squared distance " +
                    rationalToString(row.error.squared()) + ", bound " +
                    rationalToString(row.errorBound));
            if (row.errorBound > row.tailBound)
                throw CertificationError(where + ": coefficient-weighted tolerance sum " +
                                         rationalToString(row.errorBound) +
                                         " exceeds the tail bound " +
                                         rationalToString(row.tailBound));
            if (row.tailBound > row.delta)
                throw CertificationError(where + ": tail bound " +
                                         rationalToString(row.tailBound) +
                                         " exceeds the outer tolerance " +
                                         rationalToString(row.delta));

            rebuilt.push_back(std::move(v));
            result.rows.push_back(std::move(row));
        }
        result.tuple.emplace_back(std::move(rebuilt));
    }
    return result;
}

bool upwardClosureMember(const std::vector<FiniteBlockSequence>& Utuple,
                         const std::vector<std::vector<FiniteBlockSequence>>& family) {
    for (const auto& member : family) {
        if (member.size() != Utuple.size()) continue;
        bool dominated = true;
        for (std::size_t i = 0; i < member.size() && dominated; ++i) {
            dominated = isBlockSubsequence(member[i], Utuple[i]);
        }
        if (dominated) return true;
    }
    return false;
}

NonHeredityWitness nonHeredityWitness(const IndexSet& L, std::size_t k) {
    requireK(k);
    if (L.size() < k + 1)
        throw PreconditionError("a non-heredity witness needs at least k + 1 = " +
                                std::to_string(k + 1) + " elements, got " +
                                std::to_string(L.size()));

    NonHeredityWitness witness;
    witness.dropped = L[0];
    witness.lPrime =
        IndexSet(std::vector<std::size_t>(L.elements().begin() + 1, L.elements().end()));
    witness.tuple = modKClasses(witness.lPrime, k);
    witness.offender = L[1];
    witness.offenderClassInLPrime = 0;
    witness.offenderClassInL = 1;

    // Verified, not assumed: the tuple lives over the shrunken set but the
    // offender sits one class lower there than in the original.
    if (!modKTupleMember(witness.tuple, witness.lPrime, k))
        throw CertificationError("witness tuple is not a tuple over the shrunken set");
    if (modKTupleMember(witness.tuple, L, k))
        throw CertificationError("witness tuple failed to leave the original set's tuples");
    if (!witness.tuple[0].contains(witness.offender))
        throw CertificationError("witness offender is missing from the first tuple coordinate");
    if (!modKClasses(L, k)[1].contains(witness.offender))
        throw CertificationError("witness offender is not in class 1 of the original set");
    return witness;
}

}  // namespace blockgame
