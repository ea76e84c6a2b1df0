#pragma once

// Red-splitting transform: each red edge colour of a Std scheme is split into
// superscripted copies, every red atom of the base structure then splits into
// the atoms using its red pattern with synchronized superscripts. The
// originals map erases superscripts; theta sends a base atom to the set of
// its copies and is verified to be an embedding of complex algebras.

#include <string>
#include <vector>

#include "pea/rainbow.hpp"

namespace pea {

struct SplitStructure {
    RainbowStructure base;   // Std scheme
    RainbowStructure split;  // Split scheme, copies superscripts
    int copies = 1;
    std::vector<Atom> originals;            // split atom -> base atom
    std::vector<std::vector<Atom>> fibers;  // base atom -> its copies
};

SplitStructure split_reds(const ColourScheme& base_scheme, int copies,
                          const BuildLimits& limits = {});

Atom original_of(const SplitStructure& ss, Atom split_atom);

struct ThetaCheck {
    std::string name;
    bool pass = true;
    std::string witness;
};

struct ThetaReport {
    std::vector<ThetaCheck> checks;
    uint64_t red_base_atoms = 0;
    uint64_t min_red_fiber = 0;
    bool all_pass() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::string summary() const;
};

// verifies injectivity, the fiber partition, diagonal / transposition
// preservation, and theta(c_i a) = c_i theta(a) over all base atoms and i
ThetaReport theta_embedding(const SplitStructure& ss);

// one-copy split: superscript erasure must be an isomorphism onto the base
bool split_isomorphic_to_base(const SplitStructure& ss);

} // namespace pea
