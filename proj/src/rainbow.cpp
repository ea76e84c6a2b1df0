#include "pea/rainbow.hpp"

#include <algorithm>
#include <cstring>
#include <unordered_map>

namespace pea {

std::vector<Partition> set_partitions(int n) {
    // restricted growth strings
    std::vector<Partition> out;
    std::vector<uint8_t> rgs(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int maxb) {
        if (pos == n) {
            Partition p;
            p.block_of = rgs;
            p.blocks = maxb;
            out.push_back(std::move(p));
            return;
        }
        for (int b = 0; b <= maxb; ++b) {
            rgs[pos] = static_cast<uint8_t>(b);
            rec(pos + 1, std::max(maxb, b + 1));
        }
    };
    rec(0, 0);
    return out;
}

int RainbowStructure::edge_slots() const {
    int n = scheme.dim();
    return n * (n - 1) / 2;
}

int RainbowStructure::yellow_slots() const {
    return scheme.dim(); // C(n, n-1)
}

std::size_t RainbowStructure::subset_slot(int n, NodeSet s) {
    // (n-1)-subsets of {0..n-1} indexed by the missing element
    NodeSet full = static_cast<NodeSet>((1u << n) - 1);
    NodeSet missing = full & static_cast<NodeSet>(~s);
    return static_cast<std::size_t>(__builtin_ctz(missing));
}

namespace {

// record layout helpers shared by builder and accessors
struct Layout {
    int n;
    int stride;
    explicit Layout(int dim) : n(dim), stride(1 + dim * (dim - 1) / 2 + dim) {}
    std::size_t edge_slot(int u, int v) const { return 1 + ColouredGraph::pair_index(u, v); }
    std::size_t yellow_slot(NodeSet s) const {
        return 1 + static_cast<std::size_t>(n) * (n - 1) / 2 + RainbowStructure::subset_slot(n, s);
    }
};

void record_from_graph(const Layout& L, int partition_id, const ColouredGraph& g,
                       uint16_t* rec) {
    std::fill(rec, rec + L.stride, RainbowStructure::kAbsent);
    rec[0] = static_cast<uint16_t>(partition_id);
    for (int u = 0; u < g.node_count(); ++u)
        for (int v = u + 1; v < g.node_count(); ++v) rec[L.edge_slot(u, v)] = g.edge(u, v);
    for (auto& y : g.yellows())
        rec[L.yellow_slot(y.nodes)] =
            y.shade.full ? RainbowStructure::kFullShade : static_cast<uint16_t>(y.shade.mask);
}

} // namespace

ColouredGraph RainbowStructure::graph_of(Atom a) const {
    const Layout L(scheme.dim());
    const uint16_t* rec = record(a);
    const Partition& p = partitions[rec[0]];
    ColouredGraph g(p.blocks);
    for (int u = 0; u < p.blocks; ++u)
        for (int v = u + 1; v < p.blocks; ++v)
            g.set_edge(u, v, static_cast<ColourId>(rec[L.edge_slot(u, v)]));
    const int n = scheme.dim();
    if (p.blocks >= n - 1) {
        // reconstruct shades on (n-1)-subsets of blocks (stored via slots over n)
        for (int miss = 0; miss < n; ++miss) {
            NodeSet s = static_cast<NodeSet>(((1u << n) - 1) & ~(1u << miss));
            // slot meaningful only if the subset lies inside the block range
            if ((s >> p.blocks) != 0) continue;
            uint16_t v = rec[L.yellow_slot(s)];
            if (v == kAbsent) continue;
            g.set_yellow(s, v == kFullShade ? Yellow{0, true}
                                            : Yellow{static_cast<uint32_t>(v), false});
        }
    }
    return g;
}

std::string RainbowStructure::describe(Atom a) const {
    const uint16_t* rec = record(a);
    const Partition& p = partitions[rec[0]];
    std::string out = "[";
    for (int i = 0; i < scheme.dim(); ++i) {
        if (i) out += " ";
        out += std::to_string(static_cast<int>(p.block_of[i]));
    }
    out += "] ";
    return out + graph_of(a).to_string(scheme);
}

Atom RainbowStructure::lookup(const uint16_t* rec) const {
    const std::size_t bytes = static_cast<std::size_t>(stride) * sizeof(uint16_t);
    auto cmp = [&](Atom id, const uint16_t* key) {
        return std::memcmp(record(id), key, bytes) < 0;
    };
    auto it = std::lower_bound(sorted_ids_.begin(), sorted_ids_.end(), rec, cmp);
    if (it == sorted_ids_.end()) return kNoAtom;
    if (std::memcmp(record(*it), rec, bytes) != 0) return kNoAtom;
    return *it;
}

std::vector<uint16_t> RainbowStructure::transposed_record(Atom a, int i, int j) const {
    const int n = scheme.dim();
    const Layout L(n);
    const uint16_t* rec = record(a);
    const Partition& p = partitions[rec[0]];

    // index -> old block, with i and j swapped
    std::vector<uint8_t> bl(p.block_of.begin(), p.block_of.end());
    std::swap(bl[i], bl[j]);
    // recanonicalize to first-appearance order
    std::vector<int> old_to_new(p.blocks, -1);
    int next = 0;
    std::vector<uint8_t> nbl(n);
    for (int x = 0; x < n; ++x) {
        if (old_to_new[bl[x]] < 0) old_to_new[bl[x]] = next++;
        nbl[x] = static_cast<uint8_t>(old_to_new[bl[x]]);
    }
    // partition id of nbl
    int pid = -1;
    for (std::size_t q = 0; q < partitions.size(); ++q)
        if (partitions[q].block_of == nbl) {
            pid = static_cast<int>(q);
            break;
        }

    std::vector<uint16_t> out(static_cast<std::size_t>(stride), kAbsent);
    out[0] = static_cast<uint16_t>(pid);
    // new block u' = old_to_new[u]; a flipped pair stores the converse colour
    for (int u = 0; u < p.blocks; ++u)
        for (int v = u + 1; v < p.blocks; ++v) {
            uint16_t c = rec[L.edge_slot(u, v)];
            if (c != kAbsent && old_to_new[u] > old_to_new[v])
                c = scheme.converse(static_cast<ColourId>(c));
            out[L.edge_slot(old_to_new[u], old_to_new[v])] = c;
        }
    for (int miss = 0; miss < n; ++miss) {
        NodeSet s = static_cast<NodeSet>(((1u << n) - 1) & ~(1u << miss));
        if ((s >> p.blocks) != 0) continue;
        uint16_t v = rec[L.yellow_slot(s)];
        if (v == kAbsent) continue;
        NodeSet ns = 0;
        for (int b = 0; b < p.blocks; ++b)
            if ((s >> b) & 1) ns |= static_cast<NodeSet>(1u << old_to_new[b]);
        out[L.yellow_slot(ns)] = v;
    }
    return out;
}

std::vector<uint16_t> RainbowStructure::cyl_fingerprint(Atom a, int i) const {
    const int n = scheme.dim();
    const Layout L(n);
    const uint16_t* rec = record(a);
    const Partition& p = partitions[rec[0]];

    // restriction to J = n \ {i}: first-appearance block relabelling over J
    std::vector<int> old_to_new(p.blocks, -1);
    int next = 0;
    std::vector<uint16_t> fp;
    fp.reserve(static_cast<std::size_t>(stride));
    for (int x = 0; x < n; ++x) {
        if (x == i) continue;
        int b = p.block_of[x];
        if (old_to_new[b] < 0) old_to_new[b] = next++;
        fp.push_back(static_cast<uint16_t>(old_to_new[b])); // restricted pattern
    }
    const int k = next;
    // edges among surviving blocks, in new order (converse on flipped pairs)
    std::vector<uint16_t> edges(static_cast<std::size_t>(k) * (k - 1) / 2, kAbsent);
    for (int u = 0; u < p.blocks; ++u) {
        if (old_to_new[u] < 0) continue;
        for (int v = u + 1; v < p.blocks; ++v) {
            if (old_to_new[v] < 0) continue;
            uint16_t c = rec[L.edge_slot(u, v)];
            if (c != kAbsent && old_to_new[u] > old_to_new[v])
                c = scheme.converse(static_cast<ColourId>(c));
            edges[ColouredGraph::pair_index(old_to_new[u], old_to_new[v])] = c;
        }
    }
    fp.insert(fp.end(), edges.begin(), edges.end());
    // the only (n-1)-tuple inside J: defined iff all J indices in distinct blocks
    uint16_t shade = kAbsent;
    if (k == n - 1) {
        NodeSet s = 0;
        for (int b = 0; b < p.blocks; ++b)
            if (old_to_new[b] >= 0) s |= static_cast<NodeSet>(1u << b);
        shade = rec[L.yellow_slot(s)];
    }
    fp.push_back(shade);
    return fp;
}

RainbowStructure build_rainbow(const ColourScheme& scheme, const BuildLimits& limits) {
    const int n = scheme.dim();
    if (scheme.tints().size() > 14)
        throw budget_exceeded("materializing structures is capped at 14 green tints; "
                              "use the graph-view games for larger schemes");
    RainbowStructure rs;
    rs.scheme = scheme;
    rs.partitions = set_partitions(n);
    const Layout L(n);
    rs.stride = L.stride;

    // enumerate labelled graphs per block count; every labelled graph on an
    // ordered block set is exactly one equivalence class representative
    for (std::size_t pid = 0; pid < rs.partitions.size(); ++pid) {
        const Partition& p = rs.partitions[pid];
        enumerate_labelled_graphs(scheme, p.blocks, limits.max_atoms,
                                  [&](const ColouredGraph& g) {
                                      std::size_t base = rs.records.size();
                                      rs.records.resize(base + L.stride);
                                      record_from_graph(L, static_cast<int>(pid), g,
                                                        rs.records.data() + base);
                                      if (rs.records.size() / L.stride > limits.max_atoms)
                                          throw budget_exceeded("atom budget exceeded");
                                      return true;
                                  });
    }

    const uint32_t count = static_cast<uint32_t>(rs.records.size() / L.stride);

    // sorted id index for record lookup
    rs.sorted_ids_.resize(count);
    for (uint32_t a = 0; a < count; ++a) rs.sorted_ids_[a] = a;
    const std::size_t bytes = static_cast<std::size_t>(L.stride) * sizeof(uint16_t);
    std::sort(rs.sorted_ids_.begin(), rs.sorted_ids_.end(), [&](Atom x, Atom y) {
        return std::memcmp(rs.records.data() + static_cast<std::size_t>(x) * L.stride,
                           rs.records.data() + static_cast<std::size_t>(y) * L.stride,
                           bytes) < 0;
    });

    // red atoms
    rs.red_atoms = Bitset(count);
    for (uint32_t a = 0; a < count; ++a) {
        const uint16_t* rec = rs.records.data() + static_cast<std::size_t>(a) * L.stride;
        for (int e = 0; e < L.n * (L.n - 1) / 2; ++e) {
            uint16_t c = rec[1 + e];
            if (c != RainbowStructure::kAbsent && scheme.is_red(static_cast<ColourId>(c))) {
                rs.red_atoms.set(a);
                break;
            }
        }
    }

    // assemble the atom structure
    AtomStructureData data;
    data.kind = SignatureKind(Family::PEA, n);
    data.atom_count = count;

    data.diag.assign(n, std::vector<Bitset>(n, Bitset(count)));
    for (uint32_t a = 0; a < count; ++a) {
        const Partition& p = rs.partitions[rs.records[static_cast<std::size_t>(a) * L.stride]];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (p.block_of[i] == p.block_of[j]) data.diag[i][j].set(a);
    }

    // cylindrifier classes by restriction fingerprint
    for (int i = 0; i < n; ++i) {
        std::unordered_map<std::string, uint32_t> classes;
        std::vector<uint32_t> class_of(count);
        for (uint32_t a = 0; a < count; ++a) {
            // rebuild a thin view for fingerprinting
            auto fp = [&]() {
                RainbowStructure* self = &rs;
                return self->cyl_fingerprint(a, i);
            }();
            std::string key(reinterpret_cast<const char*>(fp.data()),
                            fp.size() * sizeof(uint16_t));
            auto [it, fresh] = classes.emplace(std::move(key),
                                               static_cast<uint32_t>(classes.size()));
            class_of[a] = it->second;
        }
        data.cyl.push_back(CylRelation::from_classes(std::move(class_of),
                                                     static_cast<uint32_t>(classes.size())));
    }

    // transpositions
    data.transp.assign(n, std::vector<std::vector<Atom>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<Atom>& m = data.transp[i][j];
            m.resize(count);
            for (uint32_t a = 0; a < count; ++a) {
                auto tr = rs.transposed_record(a, i, j);
                Atom b = rs.lookup(tr.data());
                if (b == RainbowStructure::kNoAtom)
                    throw validation_error("transposition image missing from atom set");
                m[a] = b;
            }
        }

    if (limits.descriptors && count <= limits.descriptor_cap) {
        data.descriptors.reserve(count);
        for (uint32_t a = 0; a < count; ++a) data.descriptors.push_back(rs.describe(a));
    }

    // move ordering hint: cone-shaped atoms first, then green- and shade-rich
    data.attack_score.resize(count);
    for (uint32_t a = 0; a < count; ++a) {
        const uint16_t* rec = rs.records.data() + static_cast<std::size_t>(a) * L.stride;
        float score = 0;
        int zeros = 0, graded = 0, whites = 0;
        for (int e = 0; e < L.n * (L.n - 1) / 2; ++e) {
            uint16_t c = rec[1 + e];
            if (c == RainbowStructure::kAbsent) continue;
            const Colour& col = scheme.colour(static_cast<ColourId>(c));
            if (col.hue == Hue::GreenZero) ++zeros;
            else if (col.hue == Hue::GreenGraded) ++graded;
            else if (col.hue == Hue::White) ++whites;
            if (col.is_green()) score += 16;
        }
        if (zeros == 1 && graded == n - 2 && whites == (n - 1) * (n - 2) / 2)
            score += 100; // a cone with a white base
        for (int yslot = 0; yslot < n; ++yslot) {
            uint16_t v = rec[1 + L.n * (L.n - 1) / 2 + yslot];
            if (v == RainbowStructure::kAbsent) continue;
            score += v == RainbowStructure::kFullShade
                         ? static_cast<float>(scheme.tints().size()) + 1.0f
                         : static_cast<float>(__builtin_popcount(v));
        }
        data.attack_score[a] = score;
    }

    rs.structure = AtomStructure::create(std::move(data));
    return rs;
}

RainbowPtr build_rainbow_ptr(const ColourScheme& scheme, const BuildLimits& limits) {
    return std::make_shared<const RainbowStructure>(build_rainbow(scheme, limits));
}

} // namespace pea
