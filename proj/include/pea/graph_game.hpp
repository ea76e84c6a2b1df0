#pragma once

// Amalgamation view of the atomic games, played directly on coloured graphs
// of a rainbow scheme. Positions are graphs; a demand is a one-node extension
// graph over an ordered face; responses complete the colouring. This view
// never materializes the atom structure, so it scales to schemes whose atom
// count is out of reach (large red prefixes of the order variant).

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pea/coloured_graph.hpp"

namespace pea {

struct GraphPosition {
    ColouredGraph g;
    std::vector<int> ids; // internal node index -> stable external id
    int next_id = 0;

    int index_of(int external_id) const {
        for (std::size_t p = 0; p < ids.size(); ++p)
            if (ids[p] == external_id) return static_cast<int>(p);
        return -1;
    }
};

struct GraphMove {
    std::vector<int> face; // external ids, ordered, size n-1
    int reuse_id = -1;     // external id recycled for the new node, -1 = fresh
    ColouredGraph demand;  // n nodes: demand node i = face[i], node n-1 = the target
};

struct GraphGameConfig {
    int pebbles = 0;  // board cap; 0 = unbounded (growing game)
    int rounds = 8;   // total rounds including the opening
    uint64_t response_budget = 200'000;
    bool minimal_shades = true; // responder dominance: shades = forced tints only
};

// demand legality against the current position (face labels must agree)
bool graph_move_legal(const ColourScheme& scheme, const GraphPosition& pos, const GraphMove& mv,
                      std::string* why = nullptr);

// all legal completions after applying the move
std::vector<GraphPosition> graph_responses(const ColourScheme& scheme, const GraphPosition& pos,
                                           const GraphMove& mv, const GraphGameConfig& cfg);

struct ForallGraphStrategy {
    virtual ~ForallGraphStrategy() = default;
    virtual ColouredGraph opening(const ColourScheme& scheme) = 0;
    virtual std::optional<GraphMove> move(const ColourScheme& scheme, const GraphPosition& pos,
                                          int round, const GraphGameConfig& cfg) = 0;
};

struct ExistsGraphStrategy {
    virtual ~ExistsGraphStrategy() = default;
    virtual std::optional<GraphPosition> respond(const ColourScheme& scheme,
                                                 const GraphPosition& pos, const GraphMove& mv,
                                                 const GraphGameConfig& cfg) = 0;
};

// cone bombardment on a fixed base: opening is a cone with a full-shade base,
// demands are fresh-tinted cones on the same base, recycling the oldest apex
// when the board is full
std::unique_ptr<ForallGraphStrategy> make_cones_forall();
// seeded random legal demands
std::unique_ptr<ForallGraphStrategy> make_random_forall(uint64_t seed);

// bookkeeping responder for the order variant: reds between same-order cone
// apexes are chosen through an order-preserving tint-to-index map with
// 3^(rounds-r) gaps; needs red prefix >= 3^rounds
std::unique_ptr<ExistsGraphStrategy> make_rho_exists();
// seeded random legal completion
std::unique_ptr<ExistsGraphStrategy> make_random_exists(uint64_t seed);
// bounded-lookahead responder: picks the completion whose worst-case
// continuation survives longest under a budgeted demand model
std::unique_ptr<ExistsGraphStrategy> make_solver_exists(uint64_t budget);

struct MatchResult {
    enum class Winner { Forall, Exists } winner = Winner::Exists;
    int rounds_played = 0;
    std::string note;
    std::vector<std::string> transcript;
};

MatchResult run_match(const ColourScheme& scheme, const GraphGameConfig& cfg,
                      ForallGraphStrategy& forall, ExistsGraphStrategy& exists);

// exhaustive graph-view solve for tiny schemes (cross-checks the network
// solver); nullopt when the budget is exhausted
std::optional<bool> graph_view_forall_wins(const ColourScheme& scheme, int pebbles, int rounds,
                                           uint64_t budget);

} // namespace pea
