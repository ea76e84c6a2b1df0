#pragma once

// Atomic networks: total labelings of n-tuples over a finite node set by
// atoms, respecting diagonal membership, cylindrifier accessibility and (for
// kinds with transpositions) coordinate permutations. Includes the completion
// search used to enumerate every legal way of labelling fresh nodes.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pea/atom_structure.hpp"

namespace pea {

inline constexpr int kMaxDim = 6;
using Tuple = std::array<int8_t, kMaxDim>; // positions into the node list

class Network {
public:
    static constexpr Atom kUnset = UINT32_MAX;

    Network() = default;
    Network(StructurePtr s, std::vector<int> node_ids);

    const StructurePtr& structure() const { return structure_; }
    int dim() const { return n_; }
    int size() const { return static_cast<int>(nodes_.size()); }
    const std::vector<int>& nodes() const { return nodes_; }
    int position_of(int node_id) const; // -1 if absent

    std::size_t tuple_count() const { return labels_.size(); }
    std::size_t index_of(const Tuple& t) const;
    Tuple tuple_at(std::size_t idx) const;

    Atom label(std::size_t idx) const { return labels_[idx]; }
    Atom label(const Tuple& t) const { return labels_[index_of(t)]; }
    void set_label(std::size_t idx, Atom a) { labels_[idx] = a; }
    bool fully_labelled() const;

    // network with node (by id) removed, labels restricted
    Network without_node(int node_id) const;
    // network with a fresh node id appended, old labels kept, new tuples unset
    Network with_node(int node_id) const;

    bool operator==(const Network& o) const {
        return nodes_ == o.nodes_ && labels_ == o.labels_;
    }

    std::string to_string() const;

private:
    StructurePtr structure_;
    int n_ = 0;
    std::vector<int> nodes_; // ascending ids
    std::vector<Atom> labels_;
};

struct NetworkViolation {
    std::string rule; // diagonal | cylindrifier | transposition | unset
    std::vector<int> tuple;
    std::string detail;
};

std::vector<NetworkViolation> validate_network(const Network& net);

struct CompletionStats {
    uint64_t solutions = 0;
    uint64_t steps = 0;
    bool complete = true; // false when the step budget truncated the search
};

// Enumerates all consistent total labelings extending `net` (entries equal to
// kUnset are free). The callback may return false to stop early (stats.complete
// stays true in that case only if the caller asked to stop).
CompletionStats enumerate_completions(const Network& net, uint64_t step_budget,
                                      const std::function<bool(const Network&)>& visit);

// canonical form under node renaming
struct CanonicalNetwork {
    std::vector<uint32_t> enc;
    uint64_t hash = 0;
    std::vector<int> perm; // original position -> canonical position
};
CanonicalNetwork canonicalize(const Network& net);

// coordinate partition forced on an atom by diagonal membership
std::vector<int> atom_pattern(const StructurePtr& s, Atom a); // index -> group id

} // namespace pea
