#include "pea/transfer.hpp"

#include <algorithm>

namespace pea {

Atom nonred_correspondent(const RainbowStructure& a, const RainbowStructure& b, Atom atom_of_a) {
    if (a.is_red(atom_of_a)) return RainbowStructure::kNoAtom;
    // non-red records use the shared colour id prefix, so they coincide
    return b.lookup(a.record(atom_of_a));
}

namespace {

// skeleton of a red atom: its record with the red edge colours replaced by
// placeholders recording only the equality pattern of the red indices; the
// distribution of the target's reds must match the source cell-by-cell and
// skeleton-by-skeleton, otherwise cylindrifiers see the difference
std::string red_skeleton(const RainbowStructure& rs, Atom r) {
    const int epairs = rs.edge_slots();
    const uint16_t* rec = rs.record(r);
    std::string key;
    key.reserve(static_cast<std::size_t>(rs.stride) * 3);
    std::vector<int> red_indices;
    for (int e = 0; e < rs.stride; ++e) {
        uint16_t v = rec[e];
        bool red_slot = false;
        if (e >= 1 && e <= epairs && v != RainbowStructure::kAbsent) {
            const Colour& col = rs.scheme.colour(static_cast<ColourId>(v));
            if (col.hue == Hue::Red) {
                // placeholder: position of the first equal red index seen
                int pat = 0;
                for (int q : red_indices) {
                    if (q == col.a) break;
                    ++pat;
                }
                if (pat == static_cast<int>(red_indices.size())) red_indices.push_back(col.a);
                key += "R" + std::to_string(pat) + ";";
                red_slot = true;
            }
        }
        if (!red_slot) key += std::to_string(v) + ";";
    }
    return key;
}

} // namespace

Assignment transfer_assignment(const Assignment& h_a, const RainbowStructure& a,
                               const RainbowStructure& b, int vars, TransferTrace* trace) {
    if (a.scheme.variant() != SchemeVariant::NonFinAx ||
        b.scheme.variant() != SchemeVariant::NonFinAx)
        throw signature_error("transfer requires single-index-red schemes");
    if (a.scheme.dim() != b.scheme.dim() || a.scheme.tints() != b.scheme.tints())
        throw mixed_structure_error("structures are not a matched pair");
    if (vars < 1 || vars > 20) throw signature_error("variable budget out of range");

    const int n = a.scheme.dim();
    const uint64_t needed = static_cast<uint64_t>(n) << vars; // n * 2^m
    if (a.scheme.red_base() < b.scheme.red_base())
        throw signature_error("transfer goes from the red-richer structure to the poorer one");
    if (static_cast<uint64_t>(b.scheme.red_base()) < needed ||
        b.red_atoms.count() < needed)
        throw signature_error("target structure has only " +
                              std::to_string(b.scheme.red_base()) +
                              " reds, need at least " + std::to_string(needed));

    for (int v = 0; v < vars; ++v) {
        auto it = h_a.find(v);
        if (it == h_a.end())
            throw signature_error("assignment misses variable x" + std::to_string(v));
        a.structure->check_owned(it->second, "transfer");
    }

    const uint32_t count_b = b.structure->atom_count();
    const std::size_t ncells = 1ull << vars;

    // source reds grouped by (cell, skeleton)
    std::unordered_map<std::string, std::vector<uint64_t>> counts_a; // skeleton -> per-cell
    a.red_atoms.for_each([&](std::size_t r) {
        uint32_t s = 0;
        for (int v = 0; v < vars; ++v)
            if (h_a.at(v).bits().test(r)) s |= 1u << v;
        auto& row = counts_a[red_skeleton(a, static_cast<Atom>(r))];
        if (row.empty()) row.assign(ncells, 0);
        ++row[s];
    });

    // target red pools per skeleton, in atom order
    std::unordered_map<std::string, std::vector<Atom>> pools_b;
    b.red_atoms.for_each([&](std::size_t r) {
        pools_b[red_skeleton(b, static_cast<Atom>(r))].push_back(static_cast<Atom>(r));
    });

    // per skeleton: small cells take their exact count, large cells take n,
    // leftovers spread round-robin over the large cells to keep the index
    // supply visible from every variable combination
    std::vector<std::vector<Atom>> cells_b(ncells);
    for (auto& [skel, pool] : pools_b) {
        auto it = counts_a.find(skel);
        if (it == counts_a.end()) {
            // the richer structure has no red of this shape: impossible for a
            // matched pair, since skeletons ignore the index supply
            throw validation_error("target skeleton missing from the source");
        }
        const std::vector<uint64_t>& want_row = it->second;
        std::size_t cursor = 0;
        std::vector<std::size_t> big_cells;
        for (std::size_t s = 0; s < ncells; ++s) {
            if (want_row[s] >= static_cast<uint64_t>(n)) big_cells.push_back(s);
            uint64_t want = std::min<uint64_t>(want_row[s], static_cast<uint64_t>(n));
            for (uint64_t t = 0; t < want && cursor < pool.size(); ++t)
                cells_b[s].push_back(pool[cursor++]);
        }
        if (cursor < pool.size()) {
            if (big_cells.empty()) {
                // all cells small: the pool cannot exceed the source total
                throw validation_error("leftover reds with no large cell");
            }
            std::size_t rr = 0;
            while (cursor < pool.size()) {
                cells_b[big_cells[rr % big_cells.size()]].push_back(pool[cursor++]);
                ++rr;
            }
        }
    }

    if (trace) {
        trace->cells_a.assign(ncells, 0);
        trace->cells_b.assign(ncells, 0);
        for (auto& [skel, row] : counts_a)
            for (std::size_t s = 0; s < ncells; ++s) trace->cells_a[s] += row[s];
        for (std::size_t s = 0; s < ncells; ++s) trace->cells_b[s] = cells_b[s].size();
    }

    // assemble h_b: non-red part through the correspondence, red part by cell
    Assignment h_b;
    std::vector<Bitset> bits(vars, Bitset(count_b));
    for (Atom x = 0; x < count_b; ++x) {
        if (b.is_red(x)) continue;
        Atom y = a.lookup(b.record(x));
        if (y == RainbowStructure::kNoAtom)
            throw mixed_structure_error("non-red atom of the target is missing from the source");
        for (int v = 0; v < vars; ++v)
            if (h_a.at(v).bits().test(y)) bits[v].set(x);
    }
    for (std::size_t s = 0; s < ncells; ++s)
        for (Atom r : cells_b[s])
            for (int v = 0; v < vars; ++v)
                if ((s >> v) & 1) bits[v].set(r);

    for (int v = 0; v < vars; ++v) h_b.emplace(v, Element(b.structure->self(), std::move(bits[v])));
    return h_b;
}

} // namespace pea
