// Copyright 2026 The Blockgame Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "blockgame/combinatorics.hpp"
#include "blockgame/game.hpp"
#include "blockgame/net.hpp"
#include "blockgame/transfer.hpp"

namespace blockgame {

// nlohmann's default basic_json keeps keys sorted, which makes every dump
// canonical for a given value.
using Json = nlohmann::json;

// Canonical text form: two-space indent plus a trailing newline.
std::string canonicalDump(const Json& j);

// Reads and parses a JSON file; any I/O or syntax failure raises ParseError.
Json loadJsonFile(const std::string& path);

// Vectors serialize as sorted arrays of "index:numerator/denominator"
// entries; rationals always travel as strings, never as floats.
Json toJson(const BlockVector& x);
Json toJson(const FiniteBlockSequence& xs);
Json toJson(const ExactNorm& n);  // {squared, value|null}
Json toJson(const ToleranceSequence& delta);
Json toJson(const NormPlugin& norm);
Json toJson(const NetConfig& cfg);  // includes a derived exponent_prefix
Json toJson(const GameTranscript& t);
Json toJson(const RoundCertificate& c);
Json toJson(const CoveringRow& row);
Json toJson(const IndexSet& L);
Json toJson(const KTuplePartition& p);

BlockVector blockVectorFromJson(const Json& j);
FiniteBlockSequence sequenceFromJson(const Json& j);
ToleranceSequence toleranceFromJson(const Json& j);
NormPlugin normFromJson(const Json& j);
// Rebuilds the configuration and, when an exponent_prefix is present,
// recomputes the exponents and demands agreement (ParseError otherwise).
NetConfig netConfigFromJson(const Json& j);
GameTranscript transcriptFromJson(const Json& j);
IndexSet indexSetFromJson(const Json& j);

// Run parameters for the command-line front end. Every field has a default:
// the standard net configuration, an eight-vector basis board, horizon 3,
// seed 1.
struct RunConfig {
    NetConfig net;
    FiniteBlockSequence board;
    std::size_t horizon = 3;
    std::uint64_t seed = 1;
};

RunConfig defaultRunConfig();
RunConfig runConfigFromJson(const Json& j);
Json toJson(const RunConfig& config);

}  // namespace blockgame
