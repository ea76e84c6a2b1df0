#pragma once

// Atomic games over networks and their bounded-depth exact solver.
//
// Variants:
//   F        m pebbles, node reuse allowed (re-placing a pebble first forgets
//            its labels)
//   G        growing board, a fresh node every round
//   GDelete  m pebbles, the witness node of a demand is chosen by the
//            responder; a full board forces a deletion round
//
// Verdict semantics: a ForallWins outcome carries a replayable certificate
// and is definitive. ExistsSurvives(d) claims depth-d survival only, and only
// when every enumeration ran to completion. Truncated searches report
// BudgetExhausted.

#include <memory>
#include <optional>
#include <unordered_map>

#include "pea/network.hpp"

namespace pea {

enum class GameVariant { F, G, GDelete };
std::string variant_label(GameVariant v);

struct GameConfig {
    GameVariant variant = GameVariant::F;
    int pebbles = 0; // board size bound; ignored for G
};

struct CylMove {
    Tuple tuple{};    // node ids (canonical positions inside certificates)
    int coord = 0;    // freed coordinate
    int target = -1;  // node id; kFresh = introduce a new node, kExistsPicks for GDelete
    Atom demand = 0;
    static constexpr int kFresh = -2;
    static constexpr int kExistsPicks = -3;
};

struct DeleteMove {
    int node = 0;
};

struct ForallMove {
    bool is_delete = false;
    CylMove cyl;
    DeleteMove del;
};

struct SolveStats {
    uint64_t search_nodes = 0;
    uint64_t responses = 0;
    uint64_t tt_hits = 0;
    bool truncated = false;
};

struct Certificate {
    int rounds = 0;
    Atom root_atom = 0;
    // canonical position hash -> winning move in canonical coordinates
    std::unordered_map<uint64_t, ForallMove> policy;
};

struct Outcome {
    enum class Kind { ForallWins, ExistsSurvives, BudgetExhausted } kind =
        Kind::BudgetExhausted;
    int rounds = 0; // winning round bound / survived depth
    SolveStats stats;
    std::shared_ptr<Certificate> certificate;
};

struct SolveOptions {
    uint64_t budget = 2'000'000; // search-node budget per root atom
    uint64_t completion_budget = 200'000;
    uint64_t root_cap = 0; // scan at most this many opening atoms (0 = all)
    int jobs = 1;
    bool canonicalize = true; // position quotient by node renaming
};

Outcome solve_game(const StructurePtr& s, const GameConfig& cfg, int depth,
                   const SolveOptions& opt = {});

// all legal responder networks for a move; complete=false when truncated
CompletionStats exists_responses(const Network& net, const GameConfig& cfg, const ForallMove& mv,
                                 uint64_t budget, const std::function<bool(const Network&)>& visit);

// minimal starting networks realizing an atom (node set = the atom's
// diagonal pattern, every completion enumerated)
CompletionStats initial_responses(const StructurePtr& s, Atom a, uint64_t budget,
                                  const std::function<bool(const Network&)>& visit);

// legal moves of the demander at a position (deterministic order)
std::vector<ForallMove> legal_forall_moves(const Network& net, const GameConfig& cfg);

// replays a certificate against a seeded random responder; returns the round
// at which the responder is stuck, or nullopt on failure (err explains)
std::optional<int> replay_certificate(const StructurePtr& s, const GameConfig& cfg,
                                      const Certificate& cert, uint64_t seed,
                                      const SolveOptions& opt, std::string* err = nullptr);

} // namespace pea
