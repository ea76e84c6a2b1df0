#pragma once

// Complete edge-labelled graphs with yellow labels on (n-1)-sets of nodes,
// validation against a colour scheme, cone detection, and isomorphism-reduced
// enumeration.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pea/colour.hpp"

namespace pea {

using NodeSet = uint16_t; // bitmask over graph nodes (node count <= 15)

struct YellowEntry {
    NodeSet nodes = 0; // the (n-1)-set carrying the shade
    Yellow shade;
    bool operator==(const YellowEntry& o) const { return nodes == o.nodes && shade == o.shade; }
};

class ColouredGraph {
public:
    ColouredGraph() = default;
    explicit ColouredGraph(int nodes) : node_count_(nodes), edges_(nodes * (nodes - 1) / 2, 0) {}

    int node_count() const { return node_count_; }

    static std::size_t pair_index(int u, int v) {
        if (u > v) std::swap(u, v);
        return static_cast<std::size_t>(v) * (v - 1) / 2 + u;
    }
    ColourId edge(int u, int v) const { return edges_[pair_index(u, v)]; }
    void set_edge(int u, int v, ColourId c) { edges_[pair_index(u, v)] = c; }

    const std::vector<YellowEntry>& yellows() const { return yellows_; }
    const Yellow* yellow_of(NodeSet s) const;
    void set_yellow(NodeSet s, Yellow y);
    void clear_yellows() { yellows_.clear(); }

    // adds a node, returns its index
    int add_node();

    bool operator==(const ColouredGraph& o) const {
        return node_count_ == o.node_count_ && edges_ == o.edges_ && yellows_ == o.yellows_;
    }

    // value encoding of the labelled graph on its given node order
    std::vector<uint32_t> encode() const;
    // lexicographically least encoding over all node permutations; the scheme
    // supplies converses for direction-sensitive red labels
    std::vector<uint32_t> canonical_encode(const ColourScheme& scheme) const;
    ColouredGraph permuted(const std::vector<int>& perm, const ColourScheme& scheme) const;

    // edge read/write in a chosen direction (stored direction is low -> high)
    ColourId edge_from(const ColourScheme& scheme, int u, int v) const;
    void set_edge_from(const ColourScheme& scheme, int u, int v, ColourId c);

    std::string to_string(const ColourScheme& scheme) const;

private:
    int node_count_ = 0;
    std::vector<ColourId> edges_;
    std::vector<YellowEntry> yellows_; // kept sorted by node set
};

struct GraphViolation {
    std::string rule; // forbidden-triangle | missing-yellow | spurious-yellow | cone | colour-range
    std::vector<int> nodes;
    std::string detail;
};

struct Cone {
    std::vector<int> base; // induced order x_0, ..., x_{n-2}
    int apex = 0;
    int tint = 0;
};

std::vector<GraphViolation> validate_graph(const ColourScheme& scheme, const ColouredGraph& g);

// all cone configurations; purely edge-pattern based
std::vector<Cone> find_cones(const ColourScheme& scheme, const ColouredGraph& g);

// tints of cones whose base is exactly `base` (as universe-index mask)
uint32_t cone_tint_mask(const ColourScheme& scheme, const ColouredGraph& g, NodeSet base);

// Streams every valid completely-labelled graph on exactly `nodes` ordered
// nodes (no isomorphism reduction). Returns false when the visitor aborts.
bool enumerate_labelled_graphs(const ColourScheme& scheme, int nodes, uint64_t budget,
                               const std::function<bool(const ColouredGraph&)>& visit);

// One representative per isomorphism class of valid graphs with <= max_nodes
// nodes, deterministic order. Throws budget_exceeded beyond `budget` graphs.
std::vector<ColouredGraph> enumerate_graphs(const ColourScheme& scheme, int max_nodes,
                                            uint64_t budget = 5'000'000);

} // namespace pea
