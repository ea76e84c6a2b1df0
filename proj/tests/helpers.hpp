#pragma once

// shared hand-built structures for the test suites

#include <vector>

#include "pea/atom_structure.hpp"

namespace pea::testing {

// single atom, every relation total: the one-element board where every
// demand is satisfied by the unique atom
inline StructurePtr one_atom_structure(int n = 3) {
    AtomStructureData d;
    d.kind = SignatureKind(Family::PEA, n);
    d.atom_count = 1;
    d.diag.assign(n, std::vector<Bitset>(n, Bitset(1, true)));
    for (int i = 0; i < n; ++i) d.cyl.push_back(CylRelation::from_classes({0}, 1));
    d.transp.assign(n, std::vector<std::vector<Atom>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) d.transp[i][j] = {0};
    d.descriptors = {"u"};
    return AtomStructure::create(std::move(d));
}

// disjoint union of two copies of a structure; the copy blocks are proper
// ideals, so the complex algebra is never simple
inline StructurePtr block_product(const StructurePtr& s) {
    const int n = s->dim();
    const uint32_t m = s->atom_count();
    AtomStructureData d;
    d.kind = s->kind();
    d.atom_count = 2 * m;
    d.diag.assign(n, std::vector<Bitset>(n, Bitset(2 * m)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            s->diag_set(i, j).for_each([&](std::size_t a) {
                d.diag[i][j].set(a);
                d.diag[i][j].set(a + m);
            });
    for (int i = 0; i < n; ++i) {
        const CylRelation& rel = s->cyl_rel(i);
        std::vector<uint32_t> cls(2 * m);
        for (Atom a = 0; a < m; ++a) {
            cls[a] = rel.class_of(a);
            cls[a + m] = rel.class_of(a) + rel.class_count();
        }
        d.cyl.push_back(CylRelation::from_classes(std::move(cls), 2 * rel.class_count()));
    }
    if (s->kind().has_transpositions()) {
        d.transp.assign(n, std::vector<std::vector<Atom>>(n));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                auto& tmap = d.transp[i][j];
                tmap.resize(2 * m);
                for (Atom a = 0; a < m; ++a) {
                    tmap[a] = s->transp_image(i, j, a);
                    tmap[a + m] = s->transp_image(i, j, a) + m;
                }
            }
    }
    return AtomStructure::create(std::move(d));
}

// two atoms; T_0 listed non-transitively (0-1 and 1-2 missing closure is not
// expressible with two atoms, so use three atoms: 0~1, 1~2, but not 0~2)
inline StructurePtr broken_t0_structure() {
    const int n = 3;
    AtomStructureData d;
    d.kind = SignatureKind(Family::CA, n);
    d.atom_count = 3;
    d.diag.assign(n, std::vector<Bitset>(n, Bitset(3)));
    for (int i = 0; i < n; ++i) d.diag[i][i].fill();
    // off-diagonal E: empty except E_ii
    std::vector<std::pair<Atom, Atom>> t0 = {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 0},
                                             {1, 2}, {2, 1}};
    d.cyl.push_back(CylRelation::from_pairs(3, t0));
    for (int i = 1; i < n; ++i) {
        std::vector<std::pair<Atom, Atom>> ti = {{0, 0}, {1, 1}, {2, 2}};
        d.cyl.push_back(CylRelation::from_pairs(3, ti));
    }
    return AtomStructure::create_unchecked(std::move(d));
}

} // namespace pea::testing
