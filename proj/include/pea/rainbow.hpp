#pragma once

// Rainbow atom structures: the atoms are surjections from n onto coloured
// graphs, taken up to label-preserving equivalence. The canonical class
// representative is a labelled graph whose nodes are the blocks of the
// surjection's equality pattern, blocks ordered by least index.

#include <cstdint>
#include <memory>
#include <vector>

#include "pea/atom_structure.hpp"
#include "pea/coloured_graph.hpp"

namespace pea {

struct Partition {
    std::vector<uint8_t> block_of; // index < n -> block id (first-appearance order)
    int blocks = 0;
};

std::vector<Partition> set_partitions(int n);

struct BuildLimits {
    uint64_t max_atoms = 24'000'000;
    bool descriptors = true;       // fill descriptor strings on small structures
    uint32_t descriptor_cap = 200'000;
};

class RainbowStructure {
public:
    StructurePtr structure;
    ColourScheme scheme;
    std::vector<Partition> partitions;

    // fixed-stride atom records: [partition][edge slots][yellow slots]
    int stride = 0;
    std::vector<uint16_t> records;

    Bitset red_atoms; // atoms whose graph has at least one red edge

    static constexpr uint16_t kAbsent = 0xFFFF;
    static constexpr uint16_t kFullShade = 0x8000;

    const uint16_t* record(Atom a) const { return records.data() + static_cast<std::size_t>(a) * stride; }
    int partition_of(Atom a) const { return record(a)[0]; }
    bool is_red(Atom a) const { return red_atoms.test(a); }

    ColouredGraph graph_of(Atom a) const;
    std::string describe(Atom a) const;

    // id of the atom with the given record, or kNoAtom
    static constexpr Atom kNoAtom = UINT32_MAX;
    Atom lookup(const uint16_t* rec) const;

    // record of the S_ij image / the T_i class fingerprint of an atom
    std::vector<uint16_t> transposed_record(Atom a, int i, int j) const;
    std::vector<uint16_t> cyl_fingerprint(Atom a, int i) const;

    // number of edge slots (pairs over n) and yellow slots (subsets over n)
    int edge_slots() const;
    int yellow_slots() const;
    static std::size_t subset_slot(int n, NodeSet s);

private:
    friend RainbowStructure build_rainbow(const ColourScheme&, const BuildLimits&);
    std::vector<Atom> sorted_ids_; // atom ids ordered by record content
};

using RainbowPtr = std::shared_ptr<const RainbowStructure>;

RainbowStructure build_rainbow(const ColourScheme& scheme, const BuildLimits& limits = {});
RainbowPtr build_rainbow_ptr(const ColourScheme& scheme, const BuildLimits& limits = {});

} // namespace pea
