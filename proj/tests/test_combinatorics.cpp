// Copyright 2026 The Blockgame Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "blockgame/combinatorics.hpp"
#include "blockgame/errors.hpp"

using namespace blockgame;

namespace {

RationalScalar q(const std::string& text) { return parseRational(text); }

BlockVector vec(std::vector<BlockVector::Entry> entries) { return BlockVector(std::move(entries)); }

FiniteBlockSequence seq(std::vector<BlockVector> vectors) {
    return FiniteBlockSequence(std::move(vectors));
}

IndexSet idx(std::vector<std::size_t> elements) { return IndexSet(std::move(elements)); }

IndexSet range(std::size_t count) {
    std::vector<std::size_t> elements(count);
    for (std::size_t i = 0; i < count; ++i) elements[i] = i;
    return IndexSet(std::move(elements));
}

Segment intervalOf(const KTuplePartition& p, std::size_t m) {
    for (const auto& [generator, interval] : p.intervals) {
        if (generator == m) return interval;
    }
    FAIL("no interval generated by " << m);
    return Segment{0, 0};
}

}  // namespace

TEST_CASE("index sets enforce strict increase and answer membership") {
    const IndexSet L = idx({2, 3, 5, 6});
    CHECK(L.size() == 4);
    CHECK(L[2] == 5);
    CHECK(L.contains(5));
    CHECK_FALSE(L.contains(4));
    CHECK(IndexSet().empty());
    CHECK(L == idx({2, 3, 5, 6}));
    CHECK_THROWS_AS(idx({3, 1}), PreconditionError);
    CHECK_THROWS_AS(idx({1, 1}), PreconditionError);
}

TEST_CASE("the base set runs through the odd multiples of k") {
    CHECK(baseSetN(6, 2) == idx({2, 6, 10, 14, 18, 22}));
    CHECK(baseSetN(4, 3) == idx({3, 9, 15, 21}));
    CHECK(baseSetN(0, 2).empty());
    CHECK(baseSetMember(6, 2));
    CHECK_FALSE(baseSetMember(4, 2));   // even multiple
    CHECK_FALSE(baseSetMember(3, 2));   // not a multiple
    CHECK(baseSetMember(15, 3));
    CHECK_FALSE(baseSetMember(6, 3));
    CHECK_THROWS_AS(baseSetN(3, 0), PreconditionError);
    CHECK_THROWS_AS(baseSetMember(3, 0), PreconditionError);
}

TEST_CASE("mod-k classes split by enumeration position") {
    const auto evensOdds = modKClasses(range(6), 2);
    REQUIRE(evensOdds.size() == 2);
    CHECK(evensOdds[0] == idx({0, 2, 4}));
    CHECK(evensOdds[1] == idx({1, 3, 5}));

    const IndexSet L = idx({2, 3, 5, 6, 10, 11, 13, 14});
    const auto classes = modKClasses(L, 2);
    CHECK(classes[0] == idx({2, 5, 10, 13}));
    CHECK(classes[1] == idx({3, 6, 11, 14}));

    // a trailing incomplete block is assigned by the same position formula
    const auto thirds = modKClasses(idx({1, 2, 3, 4, 5}), 3);
    REQUIRE(thirds.size() == 3);
    CHECK(thirds[0] == idx({1, 4}));
    CHECK(thirds[1] == idx({2, 5}));
    CHECK(thirds[2] == idx({3}));

    // the classes partition L
    std::vector<std::size_t> merged;
    for (const IndexSet& cls : thirds)
        merged.insert(merged.end(), cls.begin(), cls.end());
    std::sort(merged.begin(), merged.end());
    CHECK(IndexSet(merged) == idx({1, 2, 3, 4, 5}));

    const auto emptyClasses = modKClasses(IndexSet(), 4);
    REQUIRE(emptyClasses.size() == 4);
    for (const IndexSet& cls : emptyClasses) CHECK(cls.empty());

    CHECK_THROWS_AS(modKClasses(range(3), 1), PreconditionError);
}

TEST_CASE("mod-k tuple membership compares coordinates against classes") {
    const IndexSet L = idx({2, 3, 5, 6, 10, 11, 13, 14});
    const auto classes = modKClasses(L, 2);
    CHECK(modKTupleMember(classes, L, 2));
    CHECK(modKTupleMember({idx({2, 13}), idx({6})}, L, 2));
    CHECK(modKTupleMember({IndexSet(), IndexSet()}, L, 2));
    CHECK_FALSE(modKTupleMember({idx({3}), IndexSet()}, L, 2));  // 3 sits in class 1
    CHECK_FALSE(modKTupleMember({idx({2})}, L, 2));              // wrong arity
    CHECK_THROWS_AS(modKTupleMember({idx({2})}, L, 1), PreconditionError);
}

TEST_CASE("disjointification builds the interval witness") {
    const KTuplePartition p = disjointify({idx({2, 10}), idx({6, 14})}, 2);
    CHECK(p.k == 2);
    CHECK(p.L == idx({2, 3, 5, 6, 10, 11, 13, 14}));
    REQUIRE(p.classes.size() == 2);
    CHECK(p.classes[0] == idx({2, 5, 10, 13}));
    CHECK(p.classes[1] == idx({3, 6, 11, 14}));
    REQUIRE(p.intervals.size() == 4);
    CHECK(intervalOf(p, 2) == Segment{2, 3});
    CHECK(intervalOf(p, 6) == Segment{5, 6});
    CHECK(intervalOf(p, 10) == Segment{10, 11});
    CHECK(intervalOf(p, 14) == Segment{13, 14});
    CHECK(modKTupleMember({idx({2, 10}), idx({6, 14})}, p.L, 2));

    // each interval meets the base set exactly in its generator
    for (const auto& [m, interval] : p.intervals) {
        CHECK(interval.length() == 2);
        for (std::size_t j = interval.lo; j <= interval.hi; ++j)
            CHECK(baseSetMember(j, 2) == (j == m));
    }
}

TEST_CASE("disjointification handles singletons and empty sets") {
    const KTuplePartition p = disjointify({idx({2}), IndexSet()}, 2);
    CHECK(p.L == idx({2, 3}));
    CHECK(p.classes[0] == idx({2}));
    CHECK(p.classes[1] == idx({3}));
    REQUIRE(p.intervals.size() == 1);
    CHECK(intervalOf(p, 2) == Segment{2, 3});
}

TEST_CASE("disjointification shifts each generator to its class, k = 3") {
    const KTuplePartition p = disjointify({idx({3}), idx({9}), idx({15})}, 3);
    CHECK(intervalOf(p, 3) == Segment{3, 5});
    CHECK(intervalOf(p, 9) == Segment{8, 10});
    CHECK(intervalOf(p, 15) == Segment{13, 15});
    CHECK(p.L == idx({3, 4, 5, 8, 9, 10, 13, 14, 15}));
    CHECK(p.classes[0] == idx({3, 8, 13}));
    CHECK(p.classes[1] == idx({4, 9, 14}));
    CHECK(p.classes[2] == idx({5, 10, 15}));
}

TEST_CASE("disjointification handles large k, including more sets than fit the stack buffer") {
    // k = 17 singletons: M_i = {(2i+1) * 17}, one interval per set.
    const std::size_t k = 17;
    std::vector<IndexSet> M;
    for (std::size_t i = 0; i < k; ++i) M.push_back(idx({(2 * i + 1) * k}));
    const KTuplePartition p = disjointify(M, k);
    REQUIRE(p.intervals.size() == k);
    CHECK(p.L.size() == k * k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t m = (2 * i + 1) * k;
        CHECK(intervalOf(p, m) == Segment{m - i, m - i + k - 1});
        CHECK(p.classes[i].contains(m));
    }

    // k = 5, mixed sizes, exercises the shared-divisor code path.
    const KTuplePartition q = disjointify({idx({5, 25}), idx({15}), IndexSet(), idx({35}), idx({45})}, 5);
    REQUIRE(q.intervals.size() == 5);
    CHECK(q.L.size() == 25);
    CHECK(intervalOf(q, 5) == Segment{5, 9});
    CHECK(intervalOf(q, 15) == Segment{14, 18});
    CHECK(intervalOf(q, 35) == Segment{32, 36});
    CHECK(q.classes[0] == idx({5, 14, 25, 32, 41}));
}

TEST_CASE("disjointification rejects overlaps, strays, and bad shapes") {
    CHECK_THROWS_WITH_AS(disjointify({idx({2}), idx({2})}, 2),
                         "the sets are not pairwise disjoint: element 2 appears in more than "
                         "one set",
                         PreconditionError);
    CHECK_THROWS_WITH_AS(disjointify({idx({4}), IndexSet()}, 2),
                         "element 4 lies outside the base set {(2n+1)k} for k = 2",
                         PreconditionError);
    CHECK_THROWS_AS(disjointify({idx({2})}, 2), PreconditionError);       // one set, k = 2
    CHECK_THROWS_AS(disjointify({idx({2}), IndexSet()}, 1), PreconditionError);
}

TEST_CASE("disjointification verifies for every disjoint pair from the base set") {
    const IndexSet base = baseSetN(6, 2);
    std::size_t cases = 0;
    bool allGood = true;
    // every assignment of the six base elements to M0 / M1 / neither
    for (std::size_t mask = 0; mask < 729; ++mask) {
        std::vector<std::size_t> m0;
        std::vector<std::size_t> m1;
        std::size_t rest = mask;
        for (std::size_t pos = 0; pos < 6; ++pos, rest /= 3) {
            if (rest % 3 == 1) m0.push_back(base[pos]);
            if (rest % 3 == 2) m1.push_back(base[pos]);
        }
        const std::size_t total = m0.size() + m1.size();
        const KTuplePartition p = disjointify({IndexSet(m0), IndexSet(m1)}, 2);
        allGood = allGood && p.intervals.size() == total && p.L.size() == 2 * total;
        ++cases;
    }
    CHECK(cases == 729);
    CHECK(allGood);
}

TEST_CASE("block restrictions slice a sequence along the classes") {
    const auto halves = blockModKRestriction(standardBasis(6), range(6), 2);
    REQUIRE(halves.size() == 2);
    CHECK(halves[0] == seq({BlockVector::unit(0), BlockVector::unit(2), BlockVector::unit(4)}));
    CHECK(halves[1] == seq({BlockVector::unit(1), BlockVector::unit(3), BlockVector::unit(5)}));

    const IndexSet L = idx({2, 3, 5, 6, 10, 11, 13, 14});
    const auto boards = blockModKRestriction(standardBasis(15), L, 2);
    CHECK(boards[0] == seq({BlockVector::unit(2), BlockVector::unit(5), BlockVector::unit(10),
                            BlockVector::unit(13)}));
    CHECK(boards[1] == seq({BlockVector::unit(3), BlockVector::unit(6), BlockVector::unit(11),
                            BlockVector::unit(14)}));

    const auto lone = blockModKRestriction(standardBasis(6), idx({3}), 2);
    CHECK(lone[0] == seq({BlockVector::unit(3)}));
    CHECK(lone[1].empty());

    CHECK_THROWS_WITH_AS(blockModKRestriction(standardBasis(4), idx({1, 7}), 2),
                         "index 7 is out of range for a sequence of length 4", PreconditionError);
}

TEST_CASE("reconstruction is exact when the sequences coincide") {
    const FiniteBlockSequence W = standardBasis(6);
    const auto Wtuple = blockModKRestriction(W, range(6), 2);
    const ToleranceSequence inner = ToleranceSequence::geometric(q("1/10"), q("1/2"));
    const ToleranceSequence outer = ToleranceSequence::geometric(1, q("1/2"));
    const NetConfig cfg(inner, NormPlugin(NormKind::Ell1));

    const ReconstructionResult r = reconstructTuple(W, W, Wtuple, inner, outer, cfg);
    CHECK(r.tuple == Wtuple);
    REQUIRE(r.rows.size() == 6);

    const ReconstructionRow& first = r.rows[0];
    CHECK(first.coordinate == 0);
    CHECK(first.position == 0);
    CHECK(first.lambdaMax == 1);
    CHECK(first.lambdaBound == 2);
    CHECK(first.error.eq(0));
    CHECK(first.errorBound == q("1/5"));
    CHECK(first.tailBound == q("2/5"));
    CHECK(first.delta == 1);

    // coordinate 0, position 1 expands over board position 2
    const ReconstructionRow& second = r.rows[1];
    CHECK(second.errorBound == q("1/20"));
    CHECK(second.tailBound == q("1/5"));
    CHECK(second.delta == q("1/2"));

    CHECK(r.rows[3].coordinate == 1);
    CHECK(r.rows[3].position == 0);
}

TEST_CASE("reconstruction carries a tuple onto a perturbed sequence") {
    const ToleranceSequence inner = ToleranceSequence::geometric(q("1/10"), q("1/2"));
    const ToleranceSequence outer = ToleranceSequence::geometric(1, q("1/2"));
    const NetConfig cfg(inner, NormPlugin(NormKind::Ell1));

    std::vector<BlockVector> wVectors;
    std::vector<BlockVector> vVectors;
    for (std::size_t j = 0; j < 6; ++j) {
        wVectors.push_back(BlockVector::unit(2 * j));
        vVectors.push_back(
            vec({{2 * j, 1}, {2 * j + 1, inner.at(j) / 2}}));
    }
    const FiniteBlockSequence W(wVectors);
    const FiniteBlockSequence V(vVectors);
    const auto Wtuple = blockModKRestriction(W, range(6), 2);

    const ReconstructionResult r = reconstructTuple(V, W, Wtuple, inner, outer, cfg);
    CHECK(r.tuple == blockModKRestriction(V, range(6), 2));
    CHECK(r.tuple[0][1] == vec({{4, 1}, {5, q("1/80")}}));

    REQUIRE(r.rows.size() == 6);
    const ReconstructionRow& row01 = r.rows[1];  // coordinate 0, position 1, board position 2
    CHECK(row01.error.eq(q("1/80")));
    CHECK(row01.errorBound == q("1/20"));
    CHECK(row01.tailBound == q("1/5"));
    CHECK(row01.delta == q("1/2"));
    const ReconstructionRow& row10 = r.rows[3];  // coordinate 1, position 0, board position 1
    CHECK(row10.error.eq(q("1/40")));
    CHECK(row10.errorBound == q("1/10"));
}

TEST_CASE("reconstruction sums tolerances across a two-position expansion") {
    const ToleranceSequence inner = ToleranceSequence::geometric(q("1/10"), q("1/2"));
    const ToleranceSequence outer = ToleranceSequence::geometric(1, q("1/2"));
    const NetConfig cfg(inner, NormPlugin(NormKind::Sup));

    std::vector<BlockVector> wVectors;
    std::vector<BlockVector> vVectors;
    for (std::size_t j = 0; j < 6; ++j) {
        wVectors.push_back(BlockVector::unit(2 * j));
        vVectors.push_back(vec({{2 * j, 1}, {2 * j + 1, inner.at(j) / 2}}));
    }
    const FiniteBlockSequence W(wVectors);
    const FiniteBlockSequence V(vVectors);

    // each tuple vector spans two board positions of its class, lambda = +/-1
    const std::vector<FiniteBlockSequence> Wtuple = {seq({vec({{0, 1}, {4, -1}})}),
                                                     seq({vec({{2, 1}, {6, 1}})})};

    const ReconstructionResult r = reconstructTuple(V, W, Wtuple, inner, outer, cfg);
    REQUIRE(r.rows.size() == 2);
    CHECK(r.tuple[0][0] == vec({{0, 1}, {1, q("1/20")}, {4, -1}, {5, q("-1/80")}}));
    CHECK(r.rows[0].lambdaMax == 1);
    CHECK(r.rows[0].error.eq(q("1/20")));
    CHECK(r.rows[0].errorBound == q("1/4"));  // 2C (delta'_0 + delta'_2)
    CHECK(r.rows[0].tailBound == q("2/5"));
    CHECK(r.rows[1].error.eq(q("1/40")));
    CHECK(r.rows[1].errorBound == q("1/8"));  // 2C (delta'_1 + delta'_3)
}

TEST_CASE("reconstruction rejects inputs that break its preconditions") {
    const FiniteBlockSequence W = standardBasis(6);
    const auto Wtuple = blockModKRestriction(W, range(6), 2);
    const ToleranceSequence inner = ToleranceSequence::geometric(q("1/10"), q("1/2"));
    const ToleranceSequence outer = ToleranceSequence::geometric(1, q("1/2"));
    const NetConfig cfg(inner, NormPlugin(NormKind::Ell1));

    SUBCASE("non-summable inner tolerance") {
        CHECK_THROWS_AS(reconstructTuple(W, W, Wtuple, ToleranceSequence::geometric(1, q("2/3")),
                                         outer, cfg),
                        PreconditionError);
    }
    SUBCASE("length mismatch") {
        CHECK_THROWS_AS(reconstructTuple(standardBasis(5), W, Wtuple, inner, outer, cfg),
                        PreconditionError);
    }
    SUBCASE("distance beyond the inner tolerance") {
        std::vector<BlockVector> shrunk = W.vectors();
        shrunk[0] = q("1/2") * shrunk[0];
        CHECK_THROWS_WITH_AS(
            reconstructTuple(FiniteBlockSequence(shrunk), W, Wtuple, inner, outer, cfg),
            "V strays from W beyond the inner tolerance", PreconditionError);
    }
    SUBCASE("board vector off the unit sphere") {
        std::vector<BlockVector> scaled = W.vectors();
        scaled[2] = q("1/2") * scaled[2];
        const FiniteBlockSequence board(scaled);
        CHECK_THROWS_WITH_AS(reconstructTuple(board, board,
                                              blockModKRestriction(board, range(6), 2), inner,
                                              outer, cfg),
                             "every board vector must have norm one; vector 2 does not",
                             PreconditionError);
    }
    SUBCASE("tuple vector outside the unit ball") {
        const std::vector<FiniteBlockSequence> big = {seq({vec({{0, 1}, {2, 1}})}),
                                                      seq({BlockVector::unit(1)})};
        CHECK_THROWS_WITH_AS(reconstructTuple(W, W, big, inner, outer, cfg),
                             "tuple vector (0, 0) lies outside the unit ball", PreconditionError);
    }
    SUBCASE("tuple vector outside the board span") {
        const std::vector<FiniteBlockSequence> stray = {
            seq({vec({{0, q("1/2")}, {6, q("1/4")}})}), seq({BlockVector::unit(1)})};
        CHECK_THROWS_WITH_AS(reconstructTuple(W, W, stray, inner, outer, cfg),
                             "tuple vector (0, 0) does not expand exactly over the board",
                             PreconditionError);
    }
    SUBCASE("tuple vector in the wrong class") {
        const std::vector<FiniteBlockSequence> wrong = {seq({BlockVector::unit(1)}),
                                                        seq({BlockVector::unit(3)})};
        CHECK_THROWS_WITH_AS(reconstructTuple(W, W, wrong, inner, outer, cfg),
                             "tuple vector (0, 0) uses board position 1 outside class 0",
                             PreconditionError);
    }
    SUBCASE("empty tuple") {
        CHECK_THROWS_AS(reconstructTuple(W, W, {}, inner, outer, cfg), PreconditionError);
    }
}

TEST_CASE("reconstruction refuses an inner tolerance the outer one cannot absorb") {
    const FiniteBlockSequence W = standardBasis(2);
    const auto Wtuple = blockModKRestriction(W, range(2), 2);
    const ToleranceSequence inner = ToleranceSequence::geometric(q("1/2"), q("1/2"));
    const ToleranceSequence outer = ToleranceSequence::geometric(1, q("1/2"));
    const NetConfig cfg(inner, NormPlugin(NormKind::Ell1));
    CHECK_THROWS_WITH_AS(reconstructTuple(W, W, Wtuple, inner, outer, cfg),
                         "tuple vector (0, 0): tail bound 2/1 exceeds the outer tolerance 1/1",
                         CertificationError);
}

TEST_CASE("upward closure membership scans for a dominated family member") {
    const std::vector<FiniteBlockSequence> Utuple = {
        seq({BlockVector::unit(0), BlockVector::unit(2)}),
        seq({BlockVector::unit(1), BlockVector::unit(3)})};

    CHECK(upwardClosureMember(Utuple, {Utuple}));
    CHECK_FALSE(upwardClosureMember(Utuple, {}));

    // summing adjacent board vectors stays inside the span
    const std::vector<FiniteBlockSequence> summed = {seq({vec({{0, 1}, {2, 1}})}),
                                                     seq({vec({{1, 1}, {3, q("-1/2")}})})};
    CHECK(upwardClosureMember(Utuple, {summed}));

    const std::vector<FiniteBlockSequence> outside = {seq({BlockVector::unit(4)}),
                                                      seq({BlockVector::unit(5)})};
    CHECK_FALSE(upwardClosureMember(Utuple, {outside}));

    // arity mismatches never match; adding members never flips true to false
    const std::vector<FiniteBlockSequence> narrow = {seq({BlockVector::unit(0)})};
    CHECK_FALSE(upwardClosureMember(Utuple, {narrow}));
    CHECK(upwardClosureMember(Utuple, {outside, narrow, summed}));
}

TEST_CASE("dropping the first element breaks tuple heredity") {
    const IndexSet L = idx({2, 3, 5, 6, 10, 11, 13, 14});
    const NonHeredityWitness w = nonHeredityWitness(L, 2);
    CHECK(w.dropped == 2);
    CHECK(w.lPrime == idx({3, 5, 6, 10, 11, 13, 14}));
    REQUIRE(w.tuple.size() == 2);
    CHECK(w.tuple[0] == idx({3, 6, 11, 14}));
    CHECK(w.tuple[1] == idx({5, 10, 13}));
    CHECK(w.offender == 3);
    CHECK(w.offenderClassInLPrime == 0);
    CHECK(w.offenderClassInL == 1);
    CHECK(modKTupleMember(w.tuple, w.lPrime, 2));
    CHECK_FALSE(modKTupleMember(w.tuple, L, 2));

    const NonHeredityWitness small = nonHeredityWitness(idx({0, 1, 2, 3}), 3);
    CHECK(small.tuple[0] == idx({1}));
    CHECK(small.offender == 1);
    CHECK_FALSE(modKTupleMember(small.tuple, idx({0, 1, 2, 3}), 3));

    CHECK_THROWS_AS(nonHeredityWitness(idx({0, 1}), 2), PreconditionError);

    // every large enough set admits the witness
    for (std::size_t k = 2; k <= 3; ++k) {
        for (std::size_t extra = 1; extra <= 4; ++extra) {
            CHECK_NOTHROW(nonHeredityWitness(range(k + extra), k));
            CHECK_NOTHROW(nonHeredityWitness(baseSetN(k + extra, k), k));
        }
    }
}
