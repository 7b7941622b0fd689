// Copyright 2026 The Blockgame Authors
// SPDX-License-Identifier: Apache-2.0

#include "blockgame/json_io.hpp"

#include <fstream>
#include <utility>
#include <vector>

#include "blockgame/errors.hpp"

namespace blockgame {

namespace {

// Exponent count emitted with a configuration; load-time verification covers
// whatever length it finds.
constexpr std::size_t kExponentPrefixLength = 8;

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::size_t asIndex(const Json& j, const char* what) {
    if (j.is_number_unsigned()) return j.get<std::size_t>();
    if (j.is_number_integer() && j.get<long long>() >= 0)
        return static_cast<std::size_t>(j.get<long long>());
    throw ParseError(std::string(what) + " must be a nonnegative integer");
}

RationalScalar asRational(const Json& j, const char* what) {
    if (!j.is_string())
        throw ParseError(std::string(what) + " must be a rational encoded as a string");
    return parseRational(j.get<std::string>());
}

std::string entryToString(const BlockVector::Entry& entry) {
    return std::to_string(entry.first) + ":" + rationalToString(entry.second);
}

BlockVector::Entry entryFromString(const std::string& text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw ParseError("malformed vector entry '" + text + "': expected index:p/q");
    const std::string indexPart = text.substr(0, colon);
    if (indexPart.empty() || indexPart.size() > 18 ||
        indexPart.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("malformed vector entry '" + text + "': bad index");
    std::size_t index = 0;
    for (char digit : indexPart) {
        index = index * 10 + static_cast<std::size_t>(digit - '0');
    }
    return {index, parseRational(text.substr(colon + 1))};
}

}  // namespace

std::string canonicalDump(const Json& j) { return j.dump(2) + "\n"; }

Json loadJsonFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
}

Json toJson(const BlockVector& x) {
    Json entries = Json::array();
    for (const auto& entry : x.entries()) entries.push_back(entryToString(entry));
    return entries;
}

Json toJson(const FiniteBlockSequence& xs) {
    Json vectors = Json::array();
    for (const BlockVector& x : xs) vectors.push_back(toJson(x));
    return vectors;
}

Json toJson(const ExactNorm& n) {
    Json j;
    j["squared"] = rationalToString(n.squared());
    j["value"] = n.value() ? Json(rationalToString(*n.value())) : Json(nullptr);
    return j;
}

Json toJson(const ToleranceSequence& delta) {
    Json j;
    Json params;
    if (delta.kind() == ToleranceSequence::Kind::Geometric) {
        j["kind"] = "geometric";
        params["first"] = rationalToString(delta.prefix().front());
    } else {
        j["kind"] = "explicit_prefix_then_geometric";
        Json prefix = Json::array();
        for (const RationalScalar& term : delta.prefix())
            prefix.push_back(rationalToString(term));
        params["prefix"] = prefix;
    }
    params["ratio"] = rationalToString(delta.ratio());
    j["params"] = params;
    return j;
}

Json toJson(const NormPlugin& norm) {
    Json j;
    switch (norm.kind()) {
        case NormKind::Ell1: j["kind"] = "ell1"; break;
        case NormKind::Sup: j["kind"] = "sup"; break;
        case NormKind::Ell2: j["kind"] = "ell2"; break;
    }
    j["basis_constant"] = rationalToString(norm.basisConstant());
    return j;
}

Json toJson(const NetConfig& cfg) {
    Json j;
    j["delta"] = toJson(cfg.delta());
    j["norm"] = toJson(cfg.norm());
    Json exponents = Json::array();
    for (std::size_t n = 0; n < kExponentPrefixLength; ++n) exponents.push_back(cfg.exponent(n));
    j["exponent_prefix"] = exponents;
    return j;
}

Json toJson(const GameTranscript& t) {
    Json j;
    j["board"] = toJson(t.board);
    j["prefix"] = toJson(t.prefix);
    j["horizon"] = t.horizon;
    Json moves = Json::array();
    for (const GameRound& round : t.rounds) {
        Json moveI;
        moveI["player"] = "I";
        moveI["payload"] = toJson(round.i.sequence);
        moves.push_back(std::move(moveI));
        Json moveII;
        moveII["player"] = "II";
        moveII["payload"] = toJson(round.ii.vector);
        moves.push_back(std::move(moveII));
    }
    j["moves"] = moves;
    j["verdict"] = t.verdict ? Json(*t.verdict) : Json(nullptr);
    return j;
}

Json toJson(const RoundCertificate& c) {
    Json j;
    j["round"] = c.round;
    j["lambda_max"] = rationalToString(c.lambdaMax);
    j["lambda_bound"] = rationalToString(c.lambdaBound);
    j["pick_error"] = toJson(c.pickError);
    j["pick_bound"] = rationalToString(c.pickBound);
    j["pass"] = c.pass;
    return j;
}

Json toJson(const CoveringRow& row) {
    Json j;
    j["index"] = row.index;
    j["m1"] = row.m1;
    j["error"] = toJson(row.error);
    j["claim_bound"] = rationalToString(row.claimBound);
    j["exponent_bound"] = rationalToString(row.exponentBound);
    j["delta"] = rationalToString(row.delta);
    return j;
}

Json toJson(const IndexSet& L) {
    Json j = Json::array();
    for (std::size_t element : L) j.push_back(element);
    return j;
}

Json toJson(const KTuplePartition& p) {
    Json j;
    j["k"] = p.k;
    j["L"] = toJson(p.L);
    Json classes = Json::array();
    for (const IndexSet& cls : p.classes) classes.push_back(toJson(cls));
    j["classes"] = classes;
    Json intervals = Json::object();
    for (const auto& [m, interval] : p.intervals)
        intervals[std::to_string(m)] = Json::array({interval.lo, interval.hi});
    j["intervals"] = intervals;
    return j;
}

BlockVector blockVectorFromJson(const Json& j) {
    if (!j.is_array()) throw ParseError("a vector must be an array of index:p/q entries");
    std::vector<BlockVector::Entry> entries;
    entries.reserve(j.size());
    for (const Json& entry : j) {
        if (!entry.is_string())
            throw ParseError("vector entries must be strings of the form index:p/q");
        entries.push_back(entryFromString(entry.get<std::string>()));
    }
    return BlockVector(std::move(entries));
}

FiniteBlockSequence sequenceFromJson(const Json& j) {
    if (!j.is_array()) throw ParseError("a sequence must be an array of vectors");
    std::vector<BlockVector> vectors;
    vectors.reserve(j.size());
    for (const Json& vector : j) vectors.push_back(blockVectorFromJson(vector));
    return FiniteBlockSequence(std::move(vectors));
}

ToleranceSequence toleranceFromJson(const Json& j) {
    const Json& kind = field(j, "kind");
    const Json& params = field(j, "params");
    if (kind == "geometric") {
        return ToleranceSequence::geometric(asRational(field(params, "first"), "params.first"),
                                            asRational(field(params, "ratio"), "params.ratio"));
    }
    if (kind == "explicit_prefix_then_geometric") {
        const Json& prefixJson = field(params, "prefix");
        if (!prefixJson.is_array()) throw ParseError("params.prefix must be an array");
        std::vector<RationalScalar> prefix;
        prefix.reserve(prefixJson.size());
        for (const Json& term : prefixJson) prefix.push_back(asRational(term, "prefix term"));
        return ToleranceSequence::explicitPrefixThenGeometric(
            std::move(prefix), asRational(field(params, "ratio"), "params.ratio"));
    }
    throw ParseError("unknown tolerance kind: " + kind.dump());
}

NormPlugin normFromJson(const Json& j) {
    const Json& kind = field(j, "kind");
    NormKind parsed;
    if (kind == "ell1") {
        parsed = NormKind::Ell1;
    } else if (kind == "sup") {
        parsed = NormKind::Sup;
    } else if (kind == "ell2") {
        parsed = NormKind::Ell2;
    } else {
        throw ParseError("unknown norm kind: " + kind.dump());
    }
    RationalScalar basisConstant(1);
    if (j.contains("basis_constant"))
        basisConstant = asRational(j.at("basis_constant"), "basis_constant");
    return NormPlugin(parsed, std::move(basisConstant));
}

NetConfig netConfigFromJson(const Json& j) {
    NetConfig cfg(toleranceFromJson(field(j, "delta")), normFromJson(field(j, "norm")));
    if (j.contains("exponent_prefix")) {
        const Json& exponents = j.at("exponent_prefix");
        if (!exponents.is_array()) throw ParseError("exponent_prefix must be an array");
        for (std::size_t n = 0; n < exponents.size(); ++n) {
            const std::size_t stored = asIndex(exponents.at(n), "exponent_prefix entry");
            const unsigned derived = cfg.exponent(n);
            if (stored != derived)
                throw ParseError("exponent_prefix disagrees with the tolerance rule at position " +
                                 std::to_string(n) + ": stored " + std::to_string(stored) +
                                 ", derived " + std::to_string(derived));
        }
    }
    return cfg;
}

GameTranscript transcriptFromJson(const Json& j) {
    GameTranscript t;
    t.board = sequenceFromJson(field(j, "board"));
    t.prefix = sequenceFromJson(field(j, "prefix"));
    t.horizon = asIndex(field(j, "horizon"), "horizon");
    const Json& moves = field(j, "moves");
    if (!moves.is_array()) throw ParseError("moves must be an array");
    if (moves.size() % 2 != 0)
        throw ParseError("transcript moves must pair player I with player II");
    for (std::size_t m = 0; m < moves.size(); m += 2) {
        const Json& first = moves.at(m);
        const Json& second = moves.at(m + 1);
        if (field(first, "player") != "I" || field(second, "player") != "II")
            throw ParseError("transcript moves must alternate players I and II");
        GameRound round{MoveI{sequenceFromJson(field(first, "payload"))},
                        MoveII{blockVectorFromJson(field(second, "payload"))}};
        t.rounds.push_back(std::move(round));
    }
    const Json& verdict = field(j, "verdict");
    if (verdict.is_null()) {
        t.verdict = std::nullopt;
    } else if (verdict.is_boolean()) {
        t.verdict = verdict.get<bool>();
    } else {
        throw ParseError("verdict must be true, false, or null");
    }
    return t;
}

IndexSet indexSetFromJson(const Json& j) {
    if (!j.is_array()) throw ParseError("an index set must be a sorted array of integers");
    std::vector<std::size_t> elements;
    elements.reserve(j.size());
    for (const Json& element : j) elements.push_back(asIndex(element, "index set element"));
    try {
        return IndexSet(std::move(elements));
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("invalid index set: ") + e.what());
    }
}

RunConfig defaultRunConfig() {
    return RunConfig{NetConfig::standard(), standardBasis(8), 3, 1};
}

RunConfig runConfigFromJson(const Json& j) {
    if (!j.is_object()) throw ParseError("run configuration must be a JSON object");
    RunConfig config = defaultRunConfig();
    if (j.contains("net")) config.net = netConfigFromJson(j.at("net"));
    if (j.contains("board")) config.board = sequenceFromJson(j.at("board"));
    if (j.contains("horizon")) config.horizon = asIndex(j.at("horizon"), "horizon");
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_unsigned())
            throw ParseError("seed must be a nonnegative integer");
        config.seed = j.at("seed").get<std::uint64_t>();
    }
    return config;
}

Json toJson(const RunConfig& config) {
    Json j;
    j["net"] = toJson(config.net);
    j["board"] = toJson(config.board);
    j["horizon"] = config.horizon;
    j["seed"] = config.seed;
    return j;
}

}  // namespace blockgame
