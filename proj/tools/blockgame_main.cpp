// Copyright 2026 The Blockgame Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "blockgame/errors.hpp"
#include "blockgame/json_io.hpp"

using namespace blockgame;

namespace {

const Json& requireField(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::size_t requireIndex(const Json& j, const char* what) {
    if (j.is_number_unsigned()) return j.get<std::size_t>();
    if (j.is_number_integer() && j.get<long long>() >= 0)
        return static_cast<std::size_t>(j.get<long long>());
    throw ParseError(std::string(what) + " must be a nonnegative integer");
}

// --config beats the BLOCKGAME_CONFIG environment variable; both beat the
// built-in defaults.
RunConfig resolveConfig(const std::string& flagPath) {
    std::string path = flagPath;
    if (path.empty()) {
        if (const char* env = std::getenv("BLOCKGAME_CONFIG")) path = env;
    }
    if (path.empty()) return defaultRunConfig();
    return runConfigFromJson(loadJsonFile(path));
}

void emit(const Json& j, const std::string& outPath) {
    const std::string text = canonicalDump(j);
    if (outPath.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(outPath);
    if (!out) throw ParseError("cannot open output file: " + outPath);
    out << text;
}

FamilyPredicate familyFromJson(const Json& j) {
    const Json& kind = requireField(j, "kind");
    if (kind == "constant") {
        const Json& value = requireField(j, "value");
        if (value == "in") return FamilyPredicate::constant(Determination::In);
        if (value == "out") return FamilyPredicate::constant(Determination::Out);
        if (value == "undetermined")
            return FamilyPredicate::constant(Determination::Undetermined);
        throw ParseError("constant family value must be in, out, or undetermined");
    }
    if (kind == "length_reaches")
        return FamilyPredicate::lengthReaches(requireIndex(requireField(j, "rounds"), "rounds"));
    if (kind == "first_pick_support_card")
        return FamilyPredicate::firstPickSupportCard(
            requireIndex(requireField(j, "cardinality"), "cardinality"));
    if (kind == "prefix_list") {
        const Json& members = requireField(j, "members");
        if (!members.is_array()) throw ParseError("prefix_list members must be an array");
        std::vector<FiniteBlockSequence> parsed;
        parsed.reserve(members.size());
        for (const Json& member : members) parsed.push_back(sequenceFromJson(member));
        return FamilyPredicate::prefixList(std::move(parsed));
    }
    throw ParseError("unknown family kind: " + kind.dump());
}

struct Script {
    std::optional<FamilyPredicate> family;
    std::vector<std::pair<FiniteBlockSequence, BlockVector>> rounds;
};

Script scriptFromJson(const Json& j) {
    Script script;
    if (j.contains("family")) script.family = familyFromJson(j.at("family"));
    if (j.contains("rounds")) {
        const Json& rounds = j.at("rounds");
        if (!rounds.is_array()) throw ParseError("script rounds must be an array");
        for (const Json& round : rounds) {
            script.rounds.emplace_back(sequenceFromJson(requireField(round, "offer")),
                                       blockVectorFromJson(requireField(round, "pick")));
        }
    }
    return script;
}

StrategyI replayOffers(std::vector<FiniteBlockSequence> offers) {
    return [offers = std::move(offers)](const GameTranscript& t) -> MoveI {
        const std::size_t n = t.rounds.size();
        if (n >= offers.size())
            throw PreconditionError("script ran out of offers at round " + std::to_string(n));
        return MoveI{offers[n]};
    };
}

StrategyII replayPicks(std::vector<BlockVector> picks) {
    return [picks = std::move(picks)](const GameTranscript& t, const MoveI&) -> MoveII {
        const std::size_t n = t.rounds.size();
        if (n >= picks.size())
            throw PreconditionError("script ran out of picks at round " + std::to_string(n));
        return MoveII{picks[n]};
    };
}

// Reads the next nonnegative integer from the stream, skipping everything
// else (so "0,1,2", "0 1 2", and one choice per line all work).
std::size_t nextChoice(std::istream& in, std::size_t round) {
    int c = in.get();
    while (c != EOF && (c < '0' || c > '9')) c = in.get();
    if (c == EOF)
        throw PreconditionError("interactive input ended before a choice at round " +
                                std::to_string(round));
    std::size_t value = 0;
    while (c != EOF && c >= '0' && c <= '9') {
        value = value * 10 + static_cast<std::size_t>(c - '0');
        c = in.get();
    }
    return value;
}

// Automatic player I for interactive games: offer the earliest board vector
// strictly block-after player II's previous pick.
StrategyI autoOffer(const FiniteBlockSequence& board) {
    return [&board](const GameTranscript& t) -> MoveI {
        const FiniteBlockSequence played = t.outcome();
        for (const BlockVector& z : board) {
            if (played.empty() || blockLess(played.back(), z))
                return MoveI{FiniteBlockSequence({z})};
        }
        throw PreconditionError("the board is exhausted; no offer is possible at round " +
                                std::to_string(t.rounds.size()));
    };
}

StrategyII promptHuman(const NetConfig& cfg) {
    return [&cfg](const GameTranscript& t, const MoveI& move) -> MoveII {
        const FiniteBlockSequence played = t.outcome();
        const std::optional<BlockVector> after =
            played.empty() ? std::nullopt : std::optional<BlockVector>(played.back());
        const std::vector<BlockVector> menu = enumerateNetInSpan(move.sequence, after, cfg);
        const std::size_t round = t.rounds.size();
        std::cout << "round " << round << "\n";
        std::cout << "offer: " << toJson(move.sequence).dump() << "\n";
        std::cout << "picks:\n";
        for (std::size_t i = 0; i < menu.size(); ++i)
            std::cout << "  " << i << ": " << toJson(menu[i]).dump() << "\n";
        std::cout << "choice? " << std::flush;
        const std::size_t choice = nextChoice(std::cin, round);
        std::cout << choice << "\n";
        if (choice >= menu.size())
            throw PreconditionError("choice " + std::to_string(choice) +
                                    " is out of range at round " + std::to_string(round) +
                                    "; the menu has " + std::to_string(menu.size()) + " picks");
        return MoveII{menu[choice]};
    };
}

int runNetEnum(std::size_t n, const std::string& configPath, const std::string& outPath) {
    const RunConfig config = resolveConfig(configPath);
    Json listing = Json::array();
    for (const BlockVector& x : enumerateNetBelow(n, config.net)) listing.push_back(toJson(x));
    emit(listing, outPath);
    return 0;
}

int runRound(const std::string& inputPath, const std::string& boardPath,
             const std::string& configPath, const std::string& outPath) {
    const RunConfig config = resolveConfig(configPath);
    const BlockVector w = blockVectorFromJson(loadJsonFile(inputPath));
    const FiniteBlockSequence board = sequenceFromJson(loadJsonFile(boardPath));
    const RoundingResult result = roundToNet(w, board, config.net);
    Json j;
    j["rounded"] = toJson(result.rounded);
    j["error_norm"] = toJson(result.error);
    j["bound"] = rationalToString(result.errorBound);
    const bool pass = result.error.leq(result.errorBound);
    j["pass"] = pass;
    emit(j, outPath);
    return pass ? 0 : 3;
}

int runPlay(const std::string& configPath, const std::string& mode,
            const std::string& scriptPath, long long horizonFlag, const std::string& outPath) {
    RunConfig config = resolveConfig(configPath);
    if (horizonFlag >= 0) config.horizon = static_cast<std::size_t>(horizonFlag);

    GameTranscript transcript;
    if (mode == "scripted") {
        if (scriptPath.empty()) {
            std::cerr << "scripted mode requires --script\n";
            return 64;
        }
        Script script = scriptFromJson(loadJsonFile(scriptPath));
        const FamilyPredicate family = script.family
                                           ? std::move(*script.family)
                                           : FamilyPredicate::lengthReaches(config.horizon);
        std::vector<FiniteBlockSequence> offers;
        std::vector<BlockVector> picks;
        offers.reserve(script.rounds.size());
        for (auto& [offer, pick] : script.rounds) {
            offers.push_back(std::move(offer));
            picks.push_back(std::move(pick));
        }
        transcript = playDiscrete(config.board, FiniteBlockSequence(), config.horizon,
                                  replayOffers(std::move(offers)), replayPicks(std::move(picks)),
                                  family, config.net);
    } else if (mode == "interactive") {
        const FamilyPredicate family = FamilyPredicate::lengthReaches(config.horizon);
        transcript = playDiscrete(config.board, FiniteBlockSequence(), config.horizon,
                                  autoOffer(config.board), promptHuman(config.net), family,
                                  config.net);
    } else {
        std::cerr << "unknown mode: " << mode << " (expected scripted or interactive)\n";
        return 64;
    }
    emit(toJson(transcript), outPath);
    return 0;
}

int runReplay(const std::string& transcriptPath, const std::string& configPath,
              const std::string& scriptPath, const std::string& outPath) {
    const RunConfig config = resolveConfig(configPath);
    const GameTranscript recorded = transcriptFromJson(loadJsonFile(transcriptPath));
    FamilyPredicate family = FamilyPredicate::lengthReaches(recorded.horizon);
    if (!scriptPath.empty()) {
        Script script = scriptFromJson(loadJsonFile(scriptPath));
        if (script.family) family = std::move(*script.family);
    }
    std::vector<FiniteBlockSequence> offers;
    std::vector<BlockVector> picks;
    offers.reserve(recorded.rounds.size());
    for (const GameRound& round : recorded.rounds) {
        offers.push_back(round.i.sequence);
        picks.push_back(round.ii.vector);
    }
    const GameTranscript rerun =
        playDiscrete(recorded.board, recorded.prefix, recorded.horizon,
                     replayOffers(std::move(offers)), replayPicks(std::move(picks)), family,
                     config.net);
    Json j;
    j["verdict"] = rerun.verdict ? Json(*rerun.verdict) : Json(nullptr);
    const bool matches = rerun.verdict == recorded.verdict && rerun.rounds == recorded.rounds;
    j["matches"] = matches;
    emit(j, outPath);
    return matches ? 0 : 3;
}

// ---------------------------------------------------------------------------
// verify suites
// ---------------------------------------------------------------------------

class CaseRecorder {
  public:
    void fail(std::size_t caseIndex, const std::string& reason) {
        Json f;
        f["case"] = caseIndex;
        f["reason"] = reason;
        failures_.push_back(std::move(f));
    }
    Json report(const std::string& suite, std::uint64_t seed, std::size_t cases) const {
        Json j;
        j["suite"] = suite;
        j["seed"] = seed;
        j["cases"] = cases;
        j["failures"] = failures_;
        j["pass"] = failures_.empty();
        return j;
    }
    bool pass() const { return failures_.empty(); }

  private:
    Json failures_ = Json::array();
};

std::size_t draw(std::mt19937_64& gen, std::size_t bound) {
    return static_cast<std::size_t>(gen() % bound);
}

// Random net member on one or two adjacent indices: singletons +/- 2^-a e_i
// and pairs +/- 2^-a e_i +/- 2^-b e_{i+1} with a, b >= 1 stay on the interval
// lattice for every config with exponents >= 1 and have norm at most one.
BlockVector randomNetVector(std::mt19937_64& gen, std::size_t index, bool pair) {
    const auto signedPow = [&gen](long exponent) {
        const RationalScalar magnitude = pow2(-exponent);
        return (gen() & 1) ? magnitude : -magnitude;
    };
    if (!pair) return BlockVector({{index, signedPow(static_cast<long>(draw(gen, 3)))}});
    return BlockVector({{index, signedPow(1 + static_cast<long>(draw(gen, 2)))},
                        {index + 1, signedPow(1 + static_cast<long>(draw(gen, 2)))}});
}

// Random block sequence of net members over basis indices < 12, length 2..6.
FiniteBlockSequence randomNetBoard(std::mt19937_64& gen, const NetConfig& cfg) {
    while (true) {
        std::vector<BlockVector> zs;
        std::size_t next = draw(gen, 2);
        const std::size_t target = 2 + draw(gen, 5);
        while (zs.size() < target && next < 12) {
            const bool pair = next + 1 < 12 && (gen() & 1);
            BlockVector z = randomNetVector(gen, next, pair);
            if (!netMember(z, cfg)) throw CertificationError("generated vector left the net");
            next += (pair ? 2 : 1) + draw(gen, 2);
            zs.push_back(std::move(z));
        }
        if (zs.size() >= 2) return FiniteBlockSequence(std::move(zs));
    }
}

// Random rational combination of >= minCard board vectors, scaled to an exact
// norm r in {1/4, 1/2, 3/4, 1}.
BlockVector randomSpanVector(std::mt19937_64& gen, const FiniteBlockSequence& board,
                             std::size_t firstPosition, std::size_t lastPosition,
                             std::size_t minCard, const NormPlugin& norm) {
    while (true) {
        BlockVector w;
        std::size_t card = 0;
        for (std::size_t j = firstPosition; j <= lastPosition; ++j) {
            if (gen() & 1) continue;
            RationalScalar c(1 + static_cast<long>(draw(gen, 9)),
                             1 + static_cast<long>(draw(gen, 9)));
            if (gen() & 1) c = -c;
            w = w + c * board[j];
            ++card;
        }
        if (card < minCard) continue;
        const auto value = norm.norm(w).value();
        if (!value) continue;  // keep the scaling exact
        const RationalScalar target(1 + static_cast<long>(draw(gen, 4)), 4);
        return (target / *value) * w;
    }
}

Json verifyRounding(const RunConfig& config, CaseRecorder& recorder) {
    std::mt19937_64 gen(config.seed);
    const NetConfig& cfg = config.net;
    const std::size_t cases = 500;
    for (std::size_t c = 0; c < cases; ++c) {
        const FiniteBlockSequence board = randomNetBoard(gen, cfg);
        const BlockVector w =
            randomSpanVector(gen, board, 0, board.size() - 1, 2, cfg.norm());
        try {
            const RoundingResult result = roundToNet(w, board, cfg);
            if (!netMember(result.rounded, cfg)) recorder.fail(c, "rounded vector left the net");
            const RationalScalar bound = pow2(1 - static_cast<long>(cfg.exponent(result.m1)));
            if (result.errorBound != bound)
                recorder.fail(c, "bound mismatch: " + rationalToString(result.errorBound) +
                                     " vs " + rationalToString(bound));
            if (!result.error.leq(result.errorBound))
                recorder.fail(c, "distance above bound: squared " +
                                     rationalToString(result.error.squared()));
            for (std::size_t j = 0; j < result.mu.size(); ++j) {
                if ((result.mu[j] != 0) != (result.muTilde[j] != 0))
                    recorder.fail(c, "board support changed at position " + std::to_string(j));
            }
        } catch (const Error& e) {
            recorder.fail(c, e.what());
        }
    }
    return recorder.report("rounding", config.seed, cases);
}

Json verifyCoveringSuite(const RunConfig& config, CaseRecorder& recorder) {
    std::mt19937_64 gen(config.seed);
    const NetConfig& cfg = config.net;
    const FiniteBlockSequence ztilde = standardBasis(12);
    const FiniteBlockSequence z = coveringSequence(ztilde);
    const std::size_t cases = 200;
    for (std::size_t c = 0; c < cases; ++c) {
        // random unit-ball block subsequence of z, length <= 5
        std::vector<BlockVector> us;
        std::size_t nextPosition = draw(gen, 2);
        const std::size_t target = 1 + draw(gen, 5);
        while (us.size() < target && nextPosition < z.size()) {
            const std::size_t segmentEnd =
                std::min(nextPosition + draw(gen, 2), z.size() - 1);
            us.push_back(randomSpanVector(gen, z, nextPosition, segmentEnd, 1, cfg.norm()));
            nextPosition = segmentEnd + 1 + draw(gen, 2);
        }
        const FiniteBlockSequence u(us);
        try {
            const CoveringResult result = verifyCovering(u, z, ztilde, cfg);
            if (!isBlockSubsequence(result.rounded, ztilde))
                recorder.fail(c, "rounded sequence is not a block subsequence of the board");
            for (const CoveringRow& row : result.rows) {
                const bool chain = row.error.leq(row.claimBound) &&
                                   row.claimBound <= row.exponentBound &&
                                   row.exponentBound <= row.delta;
                if (!chain)
                    recorder.fail(c, "distance chain broken at index " +
                                         std::to_string(row.index));
                if (row.delta != cfg.delta().at(row.index))
                    recorder.fail(c, "tolerance mismatch at index " + std::to_string(row.index));
                if (!netMember(result.rounded[row.index], cfg))
                    recorder.fail(c, "rounded vector left the net at index " +
                                         std::to_string(row.index));
            }
        } catch (const Error& e) {
            recorder.fail(c, e.what());
        }
    }
    return recorder.report("covering", config.seed, cases);
}

Json verifyTransfer(const RunConfig& config, CaseRecorder& recorder) {
    std::mt19937_64 gen(config.seed);
    const std::size_t cases = 20;
    const ToleranceSequence outer = ToleranceSequence::geometric(1, RationalScalar(1, 2));
    for (std::size_t c = 0; c < cases; ++c) {
        const std::size_t horizon = 1 + draw(gen, 4);
        // picks may advance two covering positions per round, so give the
        // board two pair-vectors of headroom per round
        const FiniteBlockSequence ztilde = standardBasis(4 * horizon + 2);
        try {
            const TransferContext ctx =
                makeTransferContext(ztilde, outer, config.net.norm());
            const AdaptedStrategy adapted = adaptStrategy(
                [&gen](const GameTranscript&, const MoveI& move) -> MoveII {
                    const std::size_t j = draw(gen, std::min<std::size_t>(2, move.sequence.size()));
                    const RationalScalar half(1, 2);
                    const BlockVector pick = half * move.sequence[j];
                    return MoveII{(gen() & 1) ? pick : -pick};
                },
                ctx);
            // player I offers the whole covering sequence, normalized so every
            // vector sits on the unit sphere
            std::vector<BlockVector> offer;
            for (const BlockVector& zj : ctx.z) {
                const auto value = ctx.cfg.norm().norm(zj).value();
                if (!value)
                    throw PreconditionError(
                        "covering vector has an irrational norm; cannot normalize the offer");
                offer.push_back((RationalScalar(1) / *value) * zj);
            }
            const FiniteBlockSequence everythingOffer(std::move(offer));
            const StrategyI everything = [&everythingOffer](const GameTranscript&) -> MoveI {
                return MoveI{everythingOffer};
            };
            const GameTranscript t =
                playContinuous(ctx.z, FiniteBlockSequence(), horizon, everything,
                               adapted.strategy, FamilyPredicate::lengthReaches(horizon),
                               ctx.cfg);
            if (t.verdict != std::optional<bool>(true))
                recorder.fail(c, "adapted run missed its verdict");
            if (adapted.trace->certificates.size() != horizon)
                recorder.fail(c, "missing per-round certificates");
            for (const RoundCertificate& cert : adapted.trace->certificates) {
                if (!cert.pass || cert.lambdaMax > cert.lambdaBound ||
                    !cert.pickError.leq(cert.pickBound))
                    recorder.fail(c, "certificate bound broken at round " +
                                         std::to_string(cert.round));
            }
            // per-index nearness of the adapted picks to the discrete picks
            std::vector<BlockVector> adaptedPicks;
            std::vector<BlockVector> discretePicks;
            for (const GameRound& round : t.rounds) adaptedPicks.push_back(round.ii.vector);
            for (const GameRound& round : adapted.trace->discrete.rounds)
                discretePicks.push_back(round.ii.vector);
            if (!distLeqDelta(FiniteBlockSequence(adaptedPicks),
                              FiniteBlockSequence(discretePicks), ctx.outerDelta,
                              ctx.cfg.norm()))
                recorder.fail(c, "adapted outcome strays from the discrete outcome");
        } catch (const Error& e) {
            recorder.fail(c, e.what());
        }
    }
    return recorder.report("transfer", config.seed, cases);
}

Json verifyDisjointify(const RunConfig& config, CaseRecorder& recorder) {
    std::size_t cases = 0;
    for (std::size_t k = 2; k <= 3; ++k) {
        const IndexSet base = baseSetN(6, k);
        std::size_t assignments = 1;
        for (std::size_t e = 0; e < base.size(); ++e) assignments *= k + 1;
        for (std::size_t mask = 0; mask < assignments; ++mask) {
            std::vector<std::vector<std::size_t>> sets(k);
            std::size_t rest = mask;
            for (std::size_t pos = 0; pos < base.size(); ++pos, rest /= (k + 1)) {
                const std::size_t owner = rest % (k + 1);
                if (owner > 0) sets[owner - 1].push_back(base[pos]);
            }
            std::vector<IndexSet> M;
            M.reserve(k);
            std::size_t total = 0;
            for (auto& s : sets) {
                total += s.size();
                M.emplace_back(std::move(s));
            }
            try {
                const KTuplePartition p = disjointify(M, k);
                if (p.intervals.size() != total || p.L.size() != k * total)
                    recorder.fail(cases, "partition size mismatch at mask " +
                                             std::to_string(mask) + ", k = " + std::to_string(k));
                for (const auto& [m, interval] : p.intervals) {
                    if (interval.length() != k)
                        recorder.fail(cases, "interval length off at " + std::to_string(m));
                    for (std::size_t j = interval.lo; j <= interval.hi; ++j) {
                        if (baseSetMember(j, k) != (j == m))
                            recorder.fail(cases, "interval base-set overlap at " +
                                                     std::to_string(j));
                    }
                }
                for (std::size_t i = 0; i < k; ++i) {
                    for (std::size_t m : M[i]) {
                        if (!p.classes[i].contains(m))
                            recorder.fail(cases, "witness class missed " + std::to_string(m));
                    }
                }
            } catch (const Error& e) {
                recorder.fail(cases, e.what());
            }
            ++cases;
        }
    }
    // the worked pair, verbatim
    const KTuplePartition worked =
        disjointify({IndexSet({2, 10}), IndexSet({6, 14})}, 2);
    if (worked.L != IndexSet({2, 3, 5, 6, 10, 11, 13, 14}))
        recorder.fail(cases, "worked example union mismatch");
    ++cases;
    return recorder.report("disjointify", config.seed, cases);
}

// Exhaustive minimax over the same tree solveBounded walks, written
// independently: II wins iff the family reaches In within the horizon, with
// stuck positions lost.
bool oracleAccepts(const FiniteBlockSequence& picks, std::size_t depth, std::size_t horizon,
                   const std::vector<FiniteBlockSequence>& menu, const FamilyPredicate& family,
                   const NetConfig& cfg) {
    const Determination d = family.decide(picks);
    if (d == Determination::In) return true;
    if (d == Determination::Out) return false;
    if (depth == horizon) return false;
    for (const FiniteBlockSequence& entry : menu) {
        const std::optional<BlockVector> after =
            picks.empty() ? std::nullopt : std::optional<BlockVector>(picks.back());
        bool answered = false;
        for (const BlockVector& pick : enumerateNetInSpan(entry, after, cfg)) {
            if (oracleAccepts(picks.appended(pick), depth + 1, horizon, menu, family, cfg)) {
                answered = true;
                break;
            }
        }
        if (!answered) return false;
    }
    return true;
}

struct SolverInstance {
    FiniteBlockSequence board;
    std::vector<FiniteBlockSequence> menu;
    std::size_t horizon = 1;
    FamilyPredicate family;
    std::string familyName;
};

SolverInstance randomSolverInstance(std::mt19937_64& gen) {
    SolverInstance instance;
    instance.board = standardBasis(3);
    instance.horizon = 1 + draw(gen, 2);
    if (instance.horizon == 2) {
        // deep trees stay narrow
        instance.menu = {FiniteBlockSequence({BlockVector::unit(0)})};
    } else {
        const std::size_t entries = 1 + draw(gen, 2);
        for (std::size_t e = 0; e < entries; ++e)
            instance.menu.push_back(FiniteBlockSequence({BlockVector::unit(draw(gen, 2))}));
    }
    switch (draw(gen, 4)) {
        case 0:
            instance.family = FamilyPredicate::constant(Determination::In);
            instance.familyName = "constant in";
            break;
        case 1:
            instance.family = FamilyPredicate::constant(Determination::Out);
            instance.familyName = "constant out";
            break;
        case 2:
            instance.family = FamilyPredicate::lengthReaches(instance.horizon);
            instance.familyName = "length reaches horizon";
            break;
        default:
            instance.family = FamilyPredicate::firstPickSupportCard(1);
            instance.familyName = "first pick support card 1";
            break;
    }
    return instance;
}

Json verifySolver(const RunConfig& config, CaseRecorder& recorder) {
    std::mt19937_64 gen(config.seed);
    const NetConfig cfg = NetConfig::standard();
    const std::size_t cases = 20;
    for (std::size_t c = 0; c < cases; ++c) {
        const SolverInstance instance = randomSolverInstance(gen);
        try {
            const SolveResult result = solveBounded(instance.board, FiniteBlockSequence(),
                                                    instance.horizon, instance.menu,
                                                    instance.family, cfg);
            if (result.stats.nodes > 200)
                recorder.fail(c, "tree larger than promised: " +
                                     std::to_string(result.stats.nodes) + " nodes");
            const bool expected =
                oracleAccepts(FiniteBlockSequence(), 0, instance.horizon, instance.menu,
                              instance.family, cfg);
            if (result.accepts != expected) {
                recorder.fail(c, "solver disagrees with the oracle on " + instance.familyName);
                continue;
            }
            if (!result.accepts) continue;
            // replay the witness against every pure menu strategy of player I
            std::size_t plays = 1;
            for (std::size_t r = 0; r < instance.horizon; ++r) plays *= instance.menu.size();
            for (std::size_t code = 0; code < plays; ++code) {
                std::vector<FiniteBlockSequence> offers;
                std::size_t rest = code;
                for (std::size_t r = 0; r < instance.horizon; ++r, rest /= instance.menu.size())
                    offers.push_back(instance.menu[rest % instance.menu.size()]);
                const GameTranscript t = playDiscrete(
                    instance.board, FiniteBlockSequence(), instance.horizon,
                    replayOffers(std::move(offers)),
                    witnessStrategy(result.witness, instance.menu), instance.family, cfg);
                if (t.verdict != std::optional<bool>(true))
                    recorder.fail(c, "witness lost against menu strategy " +
                                         std::to_string(code));
            }
        } catch (const Error& e) {
            recorder.fail(c, e.what());
        }
    }
    return recorder.report("solver", config.seed, cases);
}

int runVerify(const std::string& suite, const std::string& configPath, long long seedFlag,
              const std::string& outPath) {
    RunConfig config = resolveConfig(configPath);
    if (seedFlag >= 0) config.seed = static_cast<std::uint64_t>(seedFlag);
    CaseRecorder recorder;
    Json report;
    if (suite == "rounding") {
        report = verifyRounding(config, recorder);
    } else if (suite == "covering") {
        report = verifyCoveringSuite(config, recorder);
    } else if (suite == "transfer") {
        report = verifyTransfer(config, recorder);
    } else if (suite == "disjointify") {
        report = verifyDisjointify(config, recorder);
    } else if (suite == "solver") {
        report = verifySolver(config, recorder);
    } else {
        std::cerr << "unknown suite: " << suite
                  << " (expected rounding, covering, transfer, disjointify, or solver)\n";
        return 64;
    }
    emit(report, outPath);
    return recorder.pass() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact block-sequence games: nets, rounding, transfer, partitions"};
    app.require_subcommand(1);

    std::string configPath;
    std::string outPath;

    auto* netEnum = app.add_subcommand("net-enum", "list every net vector supported below n");
    std::size_t netEnumN = 0;
    netEnum->add_option("n", netEnumN, "exclusive support bound")->required();
    netEnum->add_option("--config", configPath, "run configuration file");
    netEnum->add_option("--out", outPath, "write JSON here instead of stdout");

    auto* round = app.add_subcommand("round", "round a vector onto the net along a board");
    std::string roundInput;
    std::string roundBoard;
    round->add_option("input", roundInput, "JSON file holding the vector")->required();
    round->add_option("board", roundBoard, "JSON file holding the board sequence")->required();
    round->add_option("--config", configPath, "run configuration file");
    round->add_option("--out", outPath, "write JSON here instead of stdout");

    auto* play = app.add_subcommand("play", "run a game and write its transcript");
    std::string mode = "scripted";
    std::string scriptPath;
    long long horizonFlag = -1;
    play->add_option("--config", configPath, "run configuration file");
    play->add_option("--mode", mode, "scripted or interactive");
    play->add_option("--script", scriptPath, "scripted moves file");
    play->add_option("--horizon", horizonFlag, "override the configured horizon");
    play->add_option("--out", outPath, "write the transcript here instead of stdout");

    auto* replay = app.add_subcommand("replay", "re-run a recorded transcript");
    std::string transcriptPath;
    replay->add_option("transcript", transcriptPath, "transcript JSON file")->required();
    replay->add_option("--config", configPath, "run configuration file");
    replay->add_option("--script", scriptPath, "script file supplying the family");
    replay->add_option("--out", outPath, "write the verdict report here instead of stdout");

    auto* verify = app.add_subcommand("verify", "run a property suite");
    std::string suite;
    long long seedFlag = -1;
    verify->add_option("suite", suite,
                       "one of rounding, covering, transfer, disjointify, solver")
        ->required();
    verify->add_option("--config", configPath, "run configuration file");
    verify->add_option("--seed", seedFlag, "override the configured seed");
    verify->add_option("--out", outPath, "write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }

    try {
        if (netEnum->parsed()) {
            if (netEnumN == 0) {
                std::cerr << "net-enum requires n >= 1\n";
                return 64;
            }
            return runNetEnum(netEnumN, configPath, outPath);
        }
        if (round->parsed()) return runRound(roundInput, roundBoard, configPath, outPath);
        if (play->parsed()) return runPlay(configPath, mode, scriptPath, horizonFlag, outPath);
        if (replay->parsed()) return runReplay(transcriptPath, configPath, scriptPath, outPath);
        if (verify->parsed()) return runVerify(suite, configPath, seedFlag, outPath);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CertificationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 64;
}
