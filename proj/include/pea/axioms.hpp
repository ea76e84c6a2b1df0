#pragma once

// Exhaustive axiom checking for complex algebras over finite atom structures.
// Additive operators are checked at atom level (with the class-indexed scheme
// below); purely Boolean-shaped instances are checked on elements directly.
// Each report row records which mode established it.

#include <cstdint>
#include <string>
#include <vector>

#include "pea/atom_structure.hpp"

namespace pea {

struct AxiomResult {
    std::string name;      // C1..C7, Q1..Q11 (+ index instance)
    std::string statement; // human-readable schema
    std::string mode;      // structural | atom | atom/hashed | element | sampled
    bool pass = true;
    std::string witness;   // counterexample description when failed
};

struct AxiomReport {
    std::vector<AxiomResult> results;
    bool all_pass() const {
        for (auto& r : results)
            if (!r.pass) return false;
        return true;
    }
    std::size_t fail_count() const {
        std::size_t c = 0;
        for (auto& r : results)
            if (!r.pass) ++c;
        return c;
    }
    std::string summary() const;
};

struct CheckOptions {
    // run element-level sampled checks instead of / in addition to atom-level
    bool sampled_only = false;
    int samples = 0;            // extra random-element samples per axiom (0 = skip)
    uint64_t seed = 1;
    // below this atom count hashed set comparisons are re-done exactly
    uint32_t exact_threshold = 5000;
    int jobs = 1;
};

AxiomReport check_axioms(const StructurePtr& s, const CheckOptions& opt = {});

// true iff c_0 c_1 ... c_{n-1} {a} is the top element for every atom a
// (additivity lifts this to every nonzero element)
bool check_simple(const StructurePtr& s);

} // namespace pea
