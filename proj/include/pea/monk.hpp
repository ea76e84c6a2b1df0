#pragma once

// Simple graphs, exact chromatic number and girth, named graph families, and
// the graph-based atom structure eta(Gamma) of pairs (K, ~).

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pea/atom_structure.hpp"
#include "pea/rainbow.hpp" // Partition / set_partitions

namespace pea {

struct SimpleGraph {
    int nodes = 0;
    std::vector<uint64_t> adj; // adjacency rows as bitmasks (nodes <= 64)

    explicit SimpleGraph(int k = 0) : nodes(k), adj(k, 0) {}

    void add_edge(int u, int v) {
        if (u == v) throw validation_error("simple graphs are irreflexive");
        adj[u] |= 1ull << v;
        adj[v] |= 1ull << u;
    }
    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
    std::size_t edge_count() const {
        std::size_t c = 0;
        for (auto r : adj) c += static_cast<std::size_t>(__builtin_popcountll(r));
        return c / 2;
    }
};

SimpleGraph cycle_graph(int k);         // k >= 3
SimpleGraph path_graph(int k);          // k >= 1 nodes, edges 1-2-...-k
SimpleGraph complete_graph(int k);      // k >= 1
SimpleGraph edgeless_graph(int k);
SimpleGraph disjoint_union(const std::vector<SimpleGraph>& parts);

// exact chromatic number, branch and bound with a greedy clique lower bound
int chromatic_number(const SimpleGraph& g);

inline constexpr int kGirthInfinite = std::numeric_limits<int>::max();
// length of a shortest cycle; kGirthInfinite for forests
int girth(const SimpleGraph& g);

struct ErdosResult {
    bool found = false;
    SimpleGraph graph;
    int chi = 0;
    int girth_value = 0;
    uint64_t attempts = 0;
};
// randomized search for a graph with girth >= min_girth and chromatic number
// >= min_chi; the returned witness is re-certified by the exact solvers
ErdosResult erdos_search(int min_girth, int min_chi, uint64_t budget, uint64_t seed = 1,
                         int max_nodes = 48);

// ---- eta(Gamma): atoms are pairs (K, ~) --------------------------------

struct EtaStructure {
    StructurePtr structure;
    SimpleGraph gamma;
    int n = 3;
    // per atom: partition id and the K values (value = node * n + copy,
    // kNoValue where undefined)
    static constexpr uint16_t kNoValue = 0xFFFF;
    int stride = 0; // 1 + n
    std::vector<uint16_t> records;
    std::vector<Partition> partitions;

    const uint16_t* record(Atom a) const { return records.data() + static_cast<std::size_t>(a) * stride; }
    std::string describe(Atom a) const;
};

EtaStructure eta(const SimpleGraph& gamma, int n, const BuildLimits& limits = {});

} // namespace pea
