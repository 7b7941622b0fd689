// Copyright 2026 The Blockgame Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "blockgame/errors.hpp"
#include "blockgame/json_io.hpp"

using namespace blockgame;

namespace {

RationalScalar q(const std::string& text) { return parseRational(text); }

BlockVector vec(std::vector<BlockVector::Entry> entries) { return BlockVector(std::move(entries)); }

FiniteBlockSequence seq(std::vector<BlockVector> vectors) {
    return FiniteBlockSequence(std::move(vectors));
}

IndexSet idx(std::vector<std::size_t> elements) { return IndexSet(std::move(elements)); }

}  // namespace

TEST_CASE("block vectors round-trip through index:p/q entry arrays") {
    const BlockVector x = vec({{0, q("1/2")}, {3, q("-1/4")}});
    const Json j = toJson(x);
    CHECK(j.dump() == R"(["0:1/2","3:-1/4"])");
    CHECK(blockVectorFromJson(j) == x);

    CHECK(sequenceFromJson(toJson(standardBasis(3))) == standardBasis(3));
    CHECK(toJson(FiniteBlockSequence()).dump() == "[]");

    CHECK_THROWS_AS(blockVectorFromJson(Json::parse(R"(["0"])")), ParseError);
    CHECK_THROWS_AS(blockVectorFromJson(Json::parse(R"(["x:1/2"])")), ParseError);
    CHECK_THROWS_AS(blockVectorFromJson(Json::parse(R"(["0:1/0"])")), ParseError);
    CHECK_THROWS_AS(blockVectorFromJson(Json::parse(R"([17])")), ParseError);
    CHECK_THROWS_AS(blockVectorFromJson(Json::parse(R"({})")), ParseError);
    // out-of-order entries normalize; duplicates are invalid vectors
    CHECK(blockVectorFromJson(Json::parse(R"(["3:1/2","0:1/2"])")) ==
          vec({{0, q("1/2")}, {3, q("1/2")}}));
    CHECK_THROWS_AS(blockVectorFromJson(Json::parse(R"(["0:1/2","0:1/2"])")), PreconditionError);
}

TEST_CASE("exact norms serialize their square and exact value when known") {
    const NormPlugin ell1(NormKind::Ell1);
    const NormPlugin ell2(NormKind::Ell2);
    const BlockVector x = vec({{0, 1}, {1, 1}});
    CHECK(toJson(ell1.norm(x)).dump() == R"({"squared":"4/1","value":"2/1"})");
    CHECK(toJson(ell2.norm(x)).dump() == R"({"squared":"2/1","value":null})");
}

TEST_CASE("tolerance rules and norms round-trip with recomputed exponents") {
    const ToleranceSequence geometric = ToleranceSequence::geometric(1, q("1/2"));
    CHECK(toleranceFromJson(toJson(geometric)) == geometric);

    const ToleranceSequence explicitRule =
        ToleranceSequence::explicitPrefixThenGeometric({q("1/3"), q("1/9")}, q("1/4"));
    CHECK(toleranceFromJson(toJson(explicitRule)) == explicitRule);

    const NormPlugin wide(NormKind::Sup, 2);
    CHECK(normFromJson(toJson(wide)) == wide);

    const NetConfig cfg = NetConfig::standard();
    const Json j = toJson(cfg);
    CHECK(j["exponent_prefix"].dump() == "[1,2,3,4,5,6,7,8]");
    const NetConfig back = netConfigFromJson(j);
    CHECK(back.delta() == cfg.delta());
    CHECK(back.norm() == cfg.norm());
    CHECK(back.exponent(5) == cfg.exponent(5));

    Json tampered = j;
    tampered["exponent_prefix"][0] = 4;
    CHECK_THROWS_WITH_AS(netConfigFromJson(tampered),
                         "exponent_prefix disagrees with the tolerance rule at position 0: "
                         "stored 4, derived 1",
                         ParseError);

    CHECK_THROWS_AS(toleranceFromJson(Json::parse(R"({"kind":"linear","params":{}})")),
                    ParseError);
    CHECK_THROWS_AS(normFromJson(Json::parse(R"({"kind":"ell3"})")), ParseError);
    CHECK_THROWS_AS(netConfigFromJson(Json::parse(R"({"norm":{"kind":"ell1"}})")), ParseError);
}

TEST_CASE("game transcripts round-trip with paired moves and optional verdict") {
    GameTranscript t;
    t.board = standardBasis(4);
    t.prefix = seq({vec({{0, q("1/2")}})});
    t.horizon = 2;
    t.rounds.push_back(GameRound{MoveI{seq({BlockVector::unit(1), BlockVector::unit(2)})},
                                 MoveII{vec({{1, q("1/2")}, {2, q("1/2")}})}});
    t.verdict = true;
    CHECK(transcriptFromJson(toJson(t)) == t);

    t.verdict = std::nullopt;
    const Json j = toJson(t);
    CHECK(j["verdict"].is_null());
    CHECK(transcriptFromJson(j) == t);

    Json odd = j;
    odd["moves"].erase(1);
    CHECK_THROWS_WITH_AS(transcriptFromJson(odd),
                         "transcript moves must pair player I with player II", ParseError);
    Json swapped = j;
    swapped["moves"][0]["player"] = "II";
    CHECK_THROWS_AS(transcriptFromJson(swapped), ParseError);
    Json badVerdict = j;
    badVerdict["verdict"] = "in";
    CHECK_THROWS_AS(transcriptFromJson(badVerdict), ParseError);
}

TEST_CASE("index sets and partitions serialize in canonical shapes") {
    const IndexSet L = idx({2, 3, 5, 6});
    CHECK(toJson(L).dump() == "[2,3,5,6]");
    CHECK(indexSetFromJson(toJson(L)) == L);
    CHECK_THROWS_AS(indexSetFromJson(Json::parse("[3,2]")), ParseError);
    CHECK_THROWS_AS(indexSetFromJson(Json::parse(R"(["2"])")), ParseError);

    const KTuplePartition p = disjointify({idx({2, 10}), idx({6, 14})}, 2);
    const Json j = toJson(p);
    CHECK(j["k"] == 2);
    CHECK(j["L"].dump() == "[2,3,5,6,10,11,13,14]");
    CHECK(j["classes"].dump() == "[[2,5,10,13],[3,6,11,14]]");
    CHECK(j["intervals"]["2"].dump() == "[2,3]");
    CHECK(j["intervals"]["14"].dump() == "[13,14]");
    CHECK(j["intervals"].size() == 4);
}

TEST_CASE("round certificates and covering rows serialize exact quantities") {
    const NetConfig cfg = NetConfig::standard();
    const FiniteBlockSequence ztilde = standardBasis(4);
    const FiniteBlockSequence z = coveringSequence(ztilde);
    const CoveringResult covering =
        verifyCovering(seq({q("1/2") * z[0]}), z, ztilde, cfg);
    REQUIRE(covering.rows.size() == 1);
    const Json row = toJson(covering.rows[0]);
    CHECK(row.contains("claim_bound"));
    CHECK(row.contains("exponent_bound"));
    CHECK(row["delta"] == "1/1");
    CHECK(row["index"] == 0);

    const RoundCertificate certificate{1, q("1/2"), 4, NormPlugin(NormKind::Ell1).norm(vec({{0, q("1/64")}})),
                                       q("2/5"), true};
    const Json c = toJson(certificate);
    CHECK(c.dump() ==
          R"({"lambda_bound":"4/1","lambda_max":"1/2","pass":true,)"
          R"("pick_bound":"2/5","pick_error":{"squared":"1/4096","value":"1/64"},"round":1})");
}

TEST_CASE("run configurations default, override, and round-trip") {
    const RunConfig fallback = defaultRunConfig();
    CHECK(fallback.board == standardBasis(8));
    CHECK(fallback.horizon == 3);
    CHECK(fallback.seed == 1);

    const RunConfig partial = runConfigFromJson(Json::parse(R"({"horizon":5,"seed":42})"));
    CHECK(partial.horizon == 5);
    CHECK(partial.seed == 42);
    CHECK(partial.board == standardBasis(8));
    CHECK(partial.net.delta() == NetConfig::standard().delta());

    const RunConfig full = runConfigFromJson(toJson(fallback));
    CHECK(full.board == fallback.board);
    CHECK(full.horizon == fallback.horizon);
    CHECK(full.seed == fallback.seed);
    CHECK(full.net.norm() == fallback.net.norm());

    CHECK_THROWS_AS(runConfigFromJson(Json::parse(R"({"horizon":-1})")), ParseError);
    CHECK_THROWS_AS(runConfigFromJson(Json::parse(R"({"seed":"7"})")), ParseError);
    CHECK_THROWS_AS(runConfigFromJson(Json::parse(R"([1,2])")), ParseError);
}

TEST_CASE("canonical dumps are stable and file loading reports failures") {
    const Json j = toJson(defaultRunConfig());
    const std::string once = canonicalDump(j);
    CHECK(once == canonicalDump(j));
    CHECK(once.back() == '\n');

    const std::string path = "json_io_test_tmp.json";
    {
        std::ofstream out(path);
        out << once;
    }
    CHECK(loadJsonFile(path) == j);
    std::remove(path.c_str());

    CHECK_THROWS_AS(loadJsonFile("does_not_exist_here.json"), ParseError);
    {
        std::ofstream out(path);
        out << "{ not json";
    }
    CHECK_THROWS_AS(loadJsonFile(path), ParseError);
    std::remove(path.c_str());
}
