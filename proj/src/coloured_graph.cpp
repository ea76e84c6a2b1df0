#include "pea/coloured_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pea {

const Yellow* ColouredGraph::yellow_of(NodeSet s) const {
    for (auto& e : yellows_)
        if (e.nodes == s) return &e.shade;
    return nullptr;
}

void ColouredGraph::set_yellow(NodeSet s, Yellow y) {
    for (auto& e : yellows_)
        if (e.nodes == s) {
            e.shade = y;
            return;
        }
    yellows_.push_back({s, y});
    std::sort(yellows_.begin(), yellows_.end(),
              [](const YellowEntry& a, const YellowEntry& b) { return a.nodes < b.nodes; });
}

int ColouredGraph::add_node() {
    ++node_count_;
    edges_.resize(static_cast<std::size_t>(node_count_) * (node_count_ - 1) / 2, 0);
    return node_count_ - 1;
}

std::vector<uint32_t> ColouredGraph::encode() const {
    std::vector<uint32_t> out;
    out.reserve(2 + edges_.size() + 2 * yellows_.size());
    out.push_back(static_cast<uint32_t>(node_count_));
    for (ColourId c : edges_) out.push_back(c);
    for (auto& y : yellows_) {
        out.push_back(y.nodes);
        out.push_back(y.shade.full ? 0x80000000u : y.shade.mask);
    }
    return out;
}

ColourId ColouredGraph::edge_from(const ColourScheme& scheme, int u, int v) const {
    ColourId c = edge(u, v);
    return u < v ? c : scheme.converse(c);
}

void ColouredGraph::set_edge_from(const ColourScheme& scheme, int u, int v, ColourId c) {
    set_edge(u, v, u < v ? c : scheme.converse(c));
}

ColouredGraph ColouredGraph::permuted(const std::vector<int>& perm,
                                      const ColourScheme& scheme) const {
    ColouredGraph g(node_count_);
    for (int u = 0; u < node_count_; ++u)
        for (int v = u + 1; v < node_count_; ++v)
            g.set_edge_from(scheme, perm[u], perm[v], edge(u, v));
    for (auto& y : yellows_) {
        NodeSet s = 0;
        for (int u = 0; u < node_count_; ++u)
            if ((y.nodes >> u) & 1) s |= static_cast<NodeSet>(1u << perm[u]);
        g.set_yellow(s, y.shade);
    }
    return g;
}

std::vector<uint32_t> ColouredGraph::canonical_encode(const ColourScheme& scheme) const {
    std::vector<int> perm(node_count_);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<uint32_t> best = encode();
    while (std::next_permutation(perm.begin(), perm.end())) {
        auto enc = permuted(perm, scheme).encode();
        if (enc < best) best = enc;
    }
    return best;
}

std::string ColouredGraph::to_string(const ColourScheme& scheme) const {
    std::ostringstream os;
    os << node_count_ << " nodes;";
    for (int u = 0; u < node_count_; ++u)
        for (int v = u + 1; v < node_count_; ++v)
            os << " (" << u << "," << v << ")=" << scheme.colour_name(edge(u, v));
    for (auto& y : yellows_) {
        os << " y[";
        bool first = true;
        for (int u = 0; u < node_count_; ++u)
            if ((y.nodes >> u) & 1) {
                if (!first) os << ",";
                os << u;
                first = false;
            }
        os << "]=" << scheme.yellow_name(y.shade);
    }
    return os.str();
}

// --------------------------------------------------------------- validation

std::vector<Cone> find_cones(const ColourScheme& scheme, const ColouredGraph& g) {
    std::vector<Cone> cones;
    const int n = scheme.dim();
    const int k = g.node_count();
    if (k < n) return cones;

    // apex z: one node with a green-zero edge to z (x_0) and, for each graded
    // index 1..n-2, one node with that graded green to z; no other green edge
    // inside the configuration
    for (int z = 0; z < k; ++z) {
        std::vector<int> zero_nbrs;
        for (int x = 0; x < k; ++x)
            if (x != z && scheme.colour(g.edge(x, z)).hue == Hue::GreenZero) zero_nbrs.push_back(x);
        if (zero_nbrs.empty()) continue;
        // candidates per graded index
        std::vector<std::vector<int>> graded(n - 1);
        for (int x = 0; x < k; ++x) {
            if (x == z) continue;
            const Colour& c = scheme.colour(g.edge(x, z));
            if (c.hue == Hue::GreenGraded && c.a >= 1 && c.a <= n - 2) graded[c.a].push_back(x);
        }
        for (int x0 : zero_nbrs) {
            std::vector<int> base = {x0};
            // choose one node per graded index, all distinct
            std::function<void(int)> pick = [&](int idx) {
                if (idx > n - 2) {
                    // base-to-base edges must not be green
                    for (std::size_t p = 0; p < base.size(); ++p)
                        for (std::size_t q = p + 1; q < base.size(); ++q)
                            if (scheme.is_green(g.edge(base[p], base[q]))) return;
                    Cone c;
                    c.base = base;
                    c.apex = z;
                    c.tint = scheme.colour(g.edge(x0, z)).a;
                    cones.push_back(c);
                    return;
                }
                for (int x : graded[idx]) {
                    if (std::find(base.begin(), base.end(), x) != base.end()) continue;
                    base.push_back(x);
                    pick(idx + 1);
                    base.pop_back();
                }
            };
            pick(1);
        }
    }
    return cones;
}

uint32_t cone_tint_mask(const ColourScheme& scheme, const ColouredGraph& g, NodeSet base) {
    uint32_t mask = 0;
    for (const Cone& c : find_cones(scheme, g)) {
        NodeSet s = 0;
        for (int x : c.base) s |= static_cast<NodeSet>(1u << x);
        if (s == base) {
            int idx = scheme.tint_index(c.tint);
            if (idx >= 0) mask |= 1u << idx;
        }
    }
    return mask;
}

namespace {

void all_subsets_of_size(int k, int size, const std::function<void(NodeSet)>& f) {
    std::vector<int> idx(size);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == size) {
            NodeSet s = 0;
            for (int i : idx) s |= static_cast<NodeSet>(1u << i);
            f(s);
            return;
        }
        for (int i = start; i < k; ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

} // namespace

std::vector<GraphViolation> validate_graph(const ColourScheme& scheme, const ColouredGraph& g) {
    std::vector<GraphViolation> out;
    const int n = scheme.dim();
    const int k = g.node_count();

    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            if (g.edge(u, v) >= scheme.colour_count()) {
                out.push_back({"colour-range", {u, v}, "edge colour id out of range"});
                return out;
            }

    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            for (int w = v + 1; w < k; ++w)
                if (!scheme.triangle_allowed(g.edge(u, v), g.edge(u, w), g.edge(v, w))) {
                    out.push_back({"forbidden-triangle",
                                   {u, v, w},
                                   scheme.colour_name(g.edge(u, v)) + "," +
                                       scheme.colour_name(g.edge(u, w)) + "," +
                                       scheme.colour_name(g.edge(v, w))});
                }

    // yellow totality: (n-1)-sets with no internal green edge carry exactly
    // one shade, all other sets none
    if (k >= n - 1) {
        all_subsets_of_size(k, n - 1, [&](NodeSet s) {
            bool green_free = true;
            std::vector<int> members;
            for (int u = 0; u < k; ++u)
                if ((s >> u) & 1) members.push_back(u);
            for (std::size_t p = 0; p < members.size() && green_free; ++p)
                for (std::size_t q = p + 1; q < members.size(); ++q)
                    if (scheme.is_green(g.edge(members[p], members[q]))) {
                        green_free = false;
                        break;
                    }
            const Yellow* y = g.yellow_of(s);
            if (green_free && !y)
                out.push_back({"missing-yellow", members, "green-free set lacks a shade"});
            if (!green_free && y)
                out.push_back({"spurious-yellow", members, "set with a green edge is shaded"});
        });
    }
    for (auto& e : g.yellows()) {
        if (__builtin_popcount(static_cast<unsigned>(e.nodes)) != n - 1) {
            out.push_back({"spurious-yellow", {}, "shade on a set of the wrong size"});
        }
        if (!e.shade.full &&
            (e.shade.mask >> scheme.tints().size()) != 0)
            out.push_back({"colour-range", {}, "yellow mask outside tint universe"});
    }

    // cone condition: tint of every cone lies in the shade of its base
    for (const Cone& c : find_cones(scheme, g)) {
        NodeSet s = 0;
        for (int x : c.base) s |= static_cast<NodeSet>(1u << x);
        const Yellow* y = g.yellow_of(s);
        int idx = scheme.tint_index(c.tint);
        if (y && idx >= 0 && !y->contains(idx)) {
            GraphViolation v{"cone", c.base, "tint " + std::to_string(c.tint) + " not in shade"};
            v.nodes.push_back(c.apex);
            out.push_back(v);
        }
    }
    return out;
}

// --------------------------------------------------------------- enumeration

bool enumerate_labelled_graphs(const ColourScheme& scheme, int nodes, uint64_t budget,
                               const std::function<bool(const ColouredGraph&)>& visit) {
    const int n = scheme.dim();
    const std::size_t ncolours = scheme.colour_count();
    ColouredGraph g(nodes);
    uint64_t emitted = 0;

    // eligible (n-1)-sets computed after edges are fixed
    std::vector<NodeSet> bases;

    std::function<bool()> assign_yellows = [&]() -> bool {
        std::vector<uint32_t> required(bases.size());
        for (std::size_t b = 0; b < bases.size(); ++b)
            required[b] = cone_tint_mask(scheme, g, bases[b]);
        const uint32_t universe = static_cast<uint32_t>((1ull << scheme.tints().size()) - 1);
        std::function<bool(std::size_t)> rec = [&](std::size_t b) -> bool {
            if (b == bases.size()) {
                if (++emitted > budget) throw budget_exceeded("labelled graph budget exceeded");
                return visit(g);
            }
            // supersets of required[b]: iterate submasks of the free part
            uint32_t free_part = universe & ~required[b];
            uint32_t sub = free_part;
            while (true) {
                g.set_yellow(bases[b], Yellow{required[b] | sub, false});
                if (!rec(b + 1)) return false;
                if (sub == 0) break;
                sub = (sub - 1) & free_part;
            }
            if (scheme.has_full_marker()) {
                g.set_yellow(bases[b], Yellow{0, true});
                if (!rec(b + 1)) return false;
            }
            return true;
        };
        if (bases.empty()) {
            if (++emitted > budget) throw budget_exceeded("labelled graph budget exceeded");
            return visit(g);
        }
        return rec(0);
    };

    // edge DFS in column order (0,1),(0,2),(1,2),(0,3),...
    std::vector<std::pair<int, int>> order;
    for (int v = 1; v < nodes; ++v)
        for (int u = 0; u < v; ++u) order.push_back({u, v});

    std::function<bool(std::size_t)> rec = [&](std::size_t e) -> bool {
        if (e == order.size()) {
            bases.clear();
            if (nodes >= n - 1)
                all_subsets_of_size(nodes, n - 1, [&](NodeSet s) {
                    std::vector<int> members;
                    for (int u = 0; u < nodes; ++u)
                        if ((s >> u) & 1) members.push_back(u);
                    for (std::size_t p = 0; p < members.size(); ++p)
                        for (std::size_t q = p + 1; q < members.size(); ++q)
                            if (scheme.is_green(g.edge(members[p], members[q]))) return;
                    bases.push_back(s);
                });
            g.clear_yellows();
            return assign_yellows();
        }
        auto [u, v] = order[e];
        for (std::size_t c = 0; c < ncolours; ++c) {
            g.set_edge(u, v, static_cast<ColourId>(c));
            // triangles {w,u,v}, w < u, are complete exactly now
            bool ok = true;
            for (int w = 0; w < u && ok; ++w)
                ok = scheme.triangle_allowed(g.edge(w, u), g.edge(w, v), g.edge(u, v));
            if (ok && !rec(e + 1)) return false;
        }
        return true;
    };

    return rec(0);
}

std::vector<ColouredGraph> enumerate_graphs(const ColourScheme& scheme, int max_nodes,
                                            uint64_t budget) {
    if (max_nodes < 1) throw signature_error("enumeration needs at least one node");
    std::vector<ColouredGraph> out;
    std::vector<std::vector<uint32_t>> seen; // canonical encodings, sorted
    for (int k = 1; k <= max_nodes; ++k) {
        std::vector<std::pair<std::vector<uint32_t>, ColouredGraph>> batch;
        enumerate_labelled_graphs(scheme, k, budget, [&](const ColouredGraph& g) {
            auto canon = g.canonical_encode(scheme);
            batch.push_back({std::move(canon), g});
            if (batch.size() > budget) throw budget_exceeded("graph enumeration budget exceeded");
            return true;
        });
        std::sort(batch.begin(), batch.end(),
                  [](auto& a, auto& b) { return a.first < b.first; });
        for (std::size_t i = 0; i < batch.size(); ++i) {
            if (i > 0 && batch[i].first == batch[i - 1].first) continue;
            // store the canonical representative itself
            std::vector<int> perm(k);
            std::iota(perm.begin(), perm.end(), 0);
            ColouredGraph best = batch[i].second;
            auto best_enc = best.encode();
            do {
                ColouredGraph p = batch[i].second.permuted(perm, scheme);
                auto enc = p.encode();
                if (enc < best_enc) {
                    best_enc = enc;
                    best = p;
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
            out.push_back(best);
            if (out.size() > budget) throw budget_exceeded("graph enumeration budget exceeded");
        }
    }
    return out;
}

} // namespace pea
