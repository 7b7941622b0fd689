// Copyright 2026 The Blockgame Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "blockgame/block.hpp"
#include "blockgame/net.hpp"
#include "blockgame/norm.hpp"
#include "blockgame/tolerance.hpp"

namespace blockgame {

class IndexSet;

namespace detail {
// Wraps storage the caller has already arranged in strictly increasing order,
// skipping the validating scan of the public constructor. Reserved for
// construction sites where ascending order is a structural fact, documented
// at the call.
IndexSet indexSetFromAscending(std::vector<std::size_t> elements);
}  // namespace detail

// Finite strictly increasing set of natural numbers, usually a truncation of
// an infinite index set.
class IndexSet {
  public:
    IndexSet() = default;
    // Elements must be strictly increasing.
    explicit IndexSet(std::vector<std::size_t> elements);

    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    std::size_t operator[](std::size_t i) const { return elements_[i]; }
    const std::vector<std::size_t>& elements() const { return elements_; }
    bool contains(std::size_t value) const;
    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

    // Moves the element storage out, leaving this set empty. Lets hot loops
    // recycle capacity through the validating constructor.
    std::vector<std::size_t> release() && { return std::move(elements_); }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

  private:
    struct AscendingTag {};
    IndexSet(std::vector<std::size_t> elements, AscendingTag) : elements_(std::move(elements)) {}
    friend IndexSet detail::indexSetFromAscending(std::vector<std::size_t> elements);

    std::vector<std::size_t> elements_;
};

// First `count` elements of the base set {(2n+1)k : n >= 0}, the arithmetic
// home of every disjointification input.
IndexSet baseSetN(std::size_t count, std::size_t k);

// True iff value = (2n+1)k for some n >= 0.
bool baseSetMember(std::size_t value, std::size_t k);

// Splits L by enumeration position: class i holds {l_{kn+i} : n}, indices
// running 0..k-1. A trailing incomplete block is assigned by the same index
// formula. Requires k >= 2.
std::vector<IndexSet> modKClasses(const IndexSet& L, std::size_t k);

// True iff the tuple has exactly k coordinates and tuple[i] is a subset of
// class i of L's mod-k split for every i.
bool modKTupleMember(const std::vector<IndexSet>& tuple, const IndexSet& L, std::size_t k);

// A set L together with its mod-k split and the generating intervals, the
// verified witness shape returned by disjointify.
struct KTuplePartition {
    std::size_t k = 2;
    IndexSet L;
    std::vector<IndexSet> classes;  // the k sets L_{i mod k}
    // (m, I_m) in increasing m order; intervals pairwise disjoint, length k.
    std::vector<std::pair<std::size_t, Segment>> intervals;

    friend bool operator==(const KTuplePartition&, const KTuplePartition&) = default;
};

// Interval disjointification: given k pairwise disjoint sets M_i inside the
// base set {(2n+1)k}, builds I_m = [m - i_m, m - i_m + k - 1] for each m in
// M_{i_m} and L as the union of the intervals, then verifies exhaustively
// that the intervals are pairwise disjoint, that I_m meets the base set in
// {m} alone, and that M_i lands inside class i of L's mod-k split. Violated
// input preconditions raise PreconditionError; a failed witness check raises
// CertificationError.
KTuplePartition disjointify(const std::vector<IndexSet>& M, std::size_t k);

// Same computation writing into an existing partition, recycling its vector
// capacity; exhaustive enumeration loops stay allocation-free after warmup.
void disjointify(const std::vector<IndexSet>& M, std::size_t k, KTuplePartition& out);

// Generator boards for each tuple coordinate: the subsequence of Z along
// class i of L's mod-k split, for i = 0..k-1. Every element of L must index
// into Z.
std::vector<FiniteBlockSequence> blockModKRestriction(const FiniteBlockSequence& Z,
                                                      const IndexSet& L, std::size_t k);

// Exact certificate for one reconstructed tuple vector: the distance chain
// ||v - w|| <= 2C sum_{j in F} delta'_j <= 4C delta'_n <= delta_n.
struct ReconstructionRow {
    std::size_t coordinate = 0;  // tuple coordinate i
    std::size_t position = 0;    // vector position n inside the coordinate
    RationalScalar lambdaMax;    // max |lambda_j| over the expansion
    RationalScalar lambdaBound;  // 2C
    ExactNorm error;             // ||v^i_n - w^i_n||
    RationalScalar errorBound;   // 2C sum_{j in F} delta'_j
    RationalScalar tailBound;    // 4C delta'_n
    RationalScalar delta;        // delta_n
};

struct ReconstructionResult {
    std::vector<FiniteBlockSequence> tuple;  // the reconstructed (V_i)
    std::vector<ReconstructionRow> rows;     // one row per (i, n), i-major
};

// Transports a tuple of block subsequences of W onto the nearby sequence V:
// each w^i_n = sum_{j in F} lambda_j W_j is reassembled as
// v^i_n = sum_{j in F} lambda_j V_j with the same exact coefficients.
// Preconditions: the inner tolerance has summable tails, V stays within it of
// W index by index, every W_j has norm one, and every tuple vector lies in
// the unit ball, expands exactly over W, uses only positions of its own mod-k
// class (k = |Wtuple|), and none before its own position. Certifies exactly,
// per vector: every |lambda_j| <= 2C and the distance chain of
// ReconstructionRow; violations raise CertificationError with the offending
// quantities.
ReconstructionResult reconstructTuple(const FiniteBlockSequence& V, const FiniteBlockSequence& W,
                                      const std::vector<FiniteBlockSequence>& Wtuple,
                                      const ToleranceSequence& innerDelta,
                                      const ToleranceSequence& outerDelta, const NetConfig& cfg);

// True iff some family member (V_i) has every V_i a block subsequence of the
// matching U_i (exact span checks). Members with a different number of
// coordinates never match; an empty family gives false.
bool upwardClosureMember(const std::vector<FiniteBlockSequence>& Utuple,
                         const std::vector<std::vector<FiniteBlockSequence>>& family);

// Counterexample to heredity of the mod-k tuple membership: dropping the
// first element of L shifts every later element one class down, so the mod-k
// tuple of L' = L minus {l_0} is a tuple over L' but not over L; the second
// element of L witnesses the failure.
struct NonHeredityWitness {
    std::size_t dropped = 0;             // l_0
    IndexSet lPrime;                     // L without l_0
    std::vector<IndexSet> tuple;         // mod-k classes of L'
    std::size_t offender = 0;            // l_1
    std::size_t offenderClassInLPrime = 0;  // always 0
    std::size_t offenderClassInL = 0;       // always 1
};

// Builds and verifies the witness above. Requires k >= 2 and |L| >= k + 1.
NonHeredityWitness nonHeredityWitness(const IndexSet& L, std::size_t k);

}  // namespace blockgame
