#pragma once

// n-dimensional basis search: the greatest set of networks on at most ndim
// nodes closed under cylindrifier witnessing (internal witness or a fresh-node
// extension staying in the set, deletions staying in the set on full boards),
// such that every atom is realized at an injective tuple.

#include "pea/network.hpp"

namespace pea {

struct BasisResult {
    bool found = false;
    std::vector<Network> networks; // surviving canonical representatives
    uint64_t enumerated = 0;
    uint64_t iterations = 0;
    bool complete = true; // false when a budget truncated enumeration
};

struct BasisOptions {
    uint64_t network_budget = 200'000;
    uint64_t completion_budget = 500'000;
};

BasisResult basis_search(const StructurePtr& s, int ndim, const BasisOptions& opt = {});

} // namespace pea
