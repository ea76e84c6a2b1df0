#pragma once

// Assignment transfer between two single-index-red rainbow structures that
// differ only in red count. Non-red atoms correspond one to one; the red
// atoms of the smaller structure are distributed over the cells of the
// assignment-induced partition so that small cells keep their exact size and
// large cells stay above the dimension.

#include <unordered_map>

#include "pea/rainbow.hpp"

namespace pea {

using Assignment = std::unordered_map<int, Element>;

struct TransferTrace {
    // cell sizes per subset of variables (index = bitmask over m)
    std::vector<uint64_t> cells_a;
    std::vector<uint64_t> cells_b;
};

Assignment transfer_assignment(const Assignment& h_a, const RainbowStructure& a,
                               const RainbowStructure& b, int vars,
                               TransferTrace* trace = nullptr);

// the atom of `b` corresponding to a non-red atom of `a`, or kNoAtom
Atom nonred_correspondent(const RainbowStructure& a, const RainbowStructure& b, Atom atom_of_a);

} // namespace pea
