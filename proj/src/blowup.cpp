#include "pea/blowup.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_set>

namespace pea {

SplitStructure split_reds(const ColourScheme& base_scheme, int copies,
                          const BuildLimits& limits) {
    if (base_scheme.variant() != SchemeVariant::Std)
        throw signature_error("split_reds starts from a Std scheme");
    if (copies < 1) throw signature_error("copies must be positive");

    SplitStructure ss;
    ss.copies = copies;
    ss.base = build_rainbow(base_scheme, limits);
    ColourScheme split_scheme =
        ColourScheme::split(base_scheme.dim(), static_cast<int>(base_scheme.tints().size()),
                            base_scheme.red_base(), copies);
    ss.split = build_rainbow(split_scheme, limits);

    // colour translation: the non-red prefix is shared, red copies erase sup
    std::vector<ColourId> to_base(split_scheme.colour_count());
    for (std::size_t c = 0; c < split_scheme.colour_count(); ++c) {
        const Colour& col = split_scheme.colour(static_cast<ColourId>(c));
        if (col.hue == Hue::Red)
            to_base[c] = base_scheme.red_pair_id(col.a, col.b, -1);
        else
            to_base[c] = static_cast<ColourId>(c);
    }

    const uint32_t scount = ss.split.structure->atom_count();
    ss.originals.resize(scount);
    const int stride = ss.split.stride;
    const int epairs = ss.split.edge_slots();
    std::vector<uint16_t> rec(static_cast<std::size_t>(stride));
    for (Atom x = 0; x < scount; ++x) {
        const uint16_t* r = ss.split.record(x);
        std::copy(r, r + stride, rec.begin());
        for (int e = 0; e < epairs; ++e) {
            uint16_t c = rec[1 + e];
            if (c != RainbowStructure::kAbsent) rec[1 + e] = to_base[c];
        }
        Atom b = ss.base.lookup(rec.data());
        if (b == RainbowStructure::kNoAtom)
            throw validation_error("split atom has no original in the base structure");
        ss.originals[x] = b;
    }

    ss.fibers.assign(ss.base.structure->atom_count(), {});
    for (Atom x = 0; x < scount; ++x) ss.fibers[ss.originals[x]].push_back(x);
    return ss;
}

Atom original_of(const SplitStructure& ss, Atom split_atom) {
    if (split_atom >= ss.originals.size())
        throw mixed_structure_error("atom does not belong to the split structure");
    return ss.originals[split_atom];
}

std::string ThetaReport::summary() const {
    std::ostringstream os;
    std::size_t fails = 0;
    for (auto& c : checks)
        if (!c.pass) ++fails;
    os << checks.size() << " checks, " << (checks.size() - fails) << " passed, " << fails
       << " failed; red base atoms " << red_base_atoms << ", min red fiber " << min_red_fiber;
    return os.str();
}

namespace {

struct Sig {
    uint64_t h0 = 0, h1 = 0, size = 0;
    void add(uint64_t a, uint64_t b) { h0 ^= a; h1 ^= b; ++size; }
    void merge(const Sig& o) { h0 ^= o.h0; h1 ^= o.h1; size += o.size; }
    bool operator==(const Sig& o) const { return h0 == o.h0 && h1 == o.h1 && size == o.size; }
};

} // namespace

ThetaReport theta_embedding(const SplitStructure& ss) {
    ThetaReport rep;
    const auto& base = *ss.base.structure;
    const auto& split = *ss.split.structure;
    const uint32_t nb = base.atom_count();
    const uint32_t nsp = split.atom_count();
    const int n = base.dim();

    // fiber partition / injectivity
    {
        bool ok = true;
        std::string w;
        uint64_t covered = 0;
        uint64_t min_red = UINT64_MAX;
        for (Atom a = 0; a < nb; ++a) {
            const auto& f = ss.fibers[a];
            covered += f.size();
            if (f.empty()) {
                ok = false;
                w = "base atom " + std::to_string(a) + " has no copy";
                break;
            }
            if (ss.base.is_red(a)) {
                ++rep.red_base_atoms;
                min_red = std::min<uint64_t>(min_red, f.size());
            } else if (f.size() != 1) {
                ok = false;
                w = "non-red base atom " + std::to_string(a) + " has " +
                    std::to_string(f.size()) + " copies";
                break;
            }
        }
        if (ok && covered != nsp) {
            ok = false;
            w = "fibers do not partition the split atoms";
        }
        rep.min_red_fiber = min_red == UINT64_MAX ? 0 : min_red;
        rep.checks.push_back({"injective-partition", ok, w});
    }

    // diagonal preservation: x in E^s_ij iff o(x) in E^b_ij
    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                const Bitset& ds = split.diag_set(i, j);
                const Bitset& db = base.diag_set(i, j);
                for (Atom x = 0; x < nsp; ++x)
                    if (ds.test(x) != db.test(ss.originals[x])) {
                        ok = false;
                        w = "E_" + std::to_string(i) + std::to_string(j) +
                            " disagrees at split atom " + std::to_string(x);
                        break;
                    }
            }
        rep.checks.push_back({"diagonals", ok, w});
    }

    // transposition preservation: o(S^s_ij x) = S^b_ij o(x)
    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                for (Atom x = 0; x < nsp; ++x) {
                    if (ss.originals[split.transp_image(i, j, x)] !=
                        base.transp_image(i, j, ss.originals[x])) {
                        ok = false;
                        w = "S_" + std::to_string(i) + std::to_string(j) +
                            " disagrees at split atom " + std::to_string(x);
                        break;
                    }
                }
        rep.checks.push_back({"transpositions", ok, w});
    }

    // cylindrifier preservation: theta(c_i a) = c_i theta(a) for all base atoms
    {
        std::mt19937_64 rng(0x7e46a1c2b9ull);
        std::vector<uint64_t> h0(nsp), h1(nsp);
        for (Atom x = 0; x < nsp; ++x) {
            h0[x] = rng();
            h1[x] = rng();
        }
        std::vector<Sig> fiber_sig(nb);
        for (Atom x = 0; x < nsp; ++x) fiber_sig[ss.originals[x]].add(h0[x], h1[x]);

        bool ok = true;
        std::string w;
        for (int i = 0; i < n && ok; ++i) {
            const CylRelation& tb = base.cyl_rel(i);
            const CylRelation& tsp = split.cyl_rel(i);
            // lhs: union of fibers over the base class
            std::vector<Sig> lhs(tb.class_count());
            for (Atom a = 0; a < nb; ++a) lhs[tb.class_of(a)].merge(fiber_sig[a]);
            // split class signatures
            std::vector<Sig> ssig(tsp.class_count());
            for (Atom x = 0; x < nsp; ++x) ssig[tsp.class_of(x)].add(h0[x], h1[x]);
            // rhs per base atom: union of split classes meeting the fiber
            std::vector<uint32_t> scratch;
            for (Atom a = 0; a < nb && ok; ++a) {
                scratch.clear();
                for (Atom x : ss.fibers[a]) scratch.push_back(tsp.class_of(x));
                std::sort(scratch.begin(), scratch.end());
                scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
                Sig rhs;
                for (uint32_t c : scratch) rhs.merge(ssig[c]);
                if (!(rhs == lhs[tb.class_of(a)])) {
                    ok = false;
                    w = "c_" + std::to_string(i) + " disagrees at base atom " + std::to_string(a);
                }
            }
        }
        rep.checks.push_back({"cylindrifiers", ok, w});
    }

    // T_i transfer on classes holding a copy of a non-red atom: the class is
    // exactly the union of fibers over the base class of the original
    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < n && ok; ++i) {
            const CylRelation& tb = base.cyl_rel(i);
            const CylRelation& tsp = split.cyl_rel(i);
            std::vector<uint32_t> pair_seen(tsp.class_count(), UINT32_MAX);
            for (Atom x = 0; x < nsp && ok; ++x) {
                if (ss.base.is_red(ss.originals[x])) continue;
                uint32_t sc = tsp.class_of(x);
                uint32_t bc = tb.class_of(ss.originals[x]);
                if (pair_seen[sc] == bc) continue;
                if (pair_seen[sc] != UINT32_MAX) {
                    ok = false;
                    w = "split class maps to two base classes at atom " + std::to_string(x);
                    break;
                }
                pair_seen[sc] = bc;
                // sizes must agree: |split class| = sum of fiber sizes over base class
                uint64_t fib = 0;
                for (Atom b : tb.class_members(bc)) fib += ss.fibers[b].size();
                if (fib != tsp.class_members(sc).size()) {
                    ok = false;
                    w = "T_" + std::to_string(i) + " class size mismatch at split atom " +
                        std::to_string(x);
                    break;
                }
                // membership direction: every fiber member of the base class
                // lies in the split class
                for (Atom b : tb.class_members(bc)) {
                    for (Atom y : ss.fibers[b])
                        if (tsp.class_of(y) != sc) {
                            ok = false;
                            w = "fiber atom escapes the split class at base atom " +
                                std::to_string(b);
                            break;
                        }
                    if (!ok) break;
                }
            }
        }
        rep.checks.push_back({"ti-transfer-nonred", ok, w});
    }

    return rep;
}

bool split_isomorphic_to_base(const SplitStructure& ss) {
    const auto& base = *ss.base.structure;
    const auto& split = *ss.split.structure;
    if (base.atom_count() != split.atom_count()) return false;
    const uint32_t N = base.atom_count();
    for (Atom a = 0; a < N; ++a)
        if (ss.fibers[a].size() != 1) return false;
    const int n = base.dim();
    for (int i = 0; i < n; ++i) {
        const CylRelation& tb = base.cyl_rel(i);
        const CylRelation& tsp = split.cyl_rel(i);
        if (tb.class_count() != tsp.class_count()) return false;
        for (Atom x = 0; x < N; ++x)
            for (Atom y : tsp.class_members(tsp.class_of(x)))
                if (!tb.related(ss.originals[x], ss.originals[y])) return false;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Bitset& ds = split.diag_set(i, j);
            const Bitset& db = base.diag_set(i, j);
            for (Atom x = 0; x < N; ++x)
                if (ds.test(x) != db.test(ss.originals[x])) return false;
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (Atom x = 0; x < N; ++x)
                if (ss.originals[split.transp_image(i, j, x)] !=
                    base.transp_image(i, j, ss.originals[x]))
                    return false;
    return true;
}

} // namespace pea
