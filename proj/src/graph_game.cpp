#include "pea/graph_game.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace pea {

namespace {

ColouredGraph remove_node(const ColouredGraph& g, int victim) {
    ColouredGraph out(g.node_count() - 1);
    auto remap = [&](int u) { return u > victim ? u - 1 : u; };
    for (int u = 0; u < g.node_count(); ++u) {
        if (u == victim) continue;
        for (int v = u + 1; v < g.node_count(); ++v) {
            if (v == victim) continue;
            out.set_edge(remap(u), remap(v), g.edge(u, v));
        }
    }
    for (auto& y : g.yellows()) {
        if ((y.nodes >> victim) & 1) continue;
        NodeSet s = 0;
        for (int u = 0; u < g.node_count(); ++u)
            if (u != victim && ((y.nodes >> u) & 1)) s |= static_cast<NodeSet>(1u << remap(u));
        out.set_yellow(s, y.shade);
    }
    return out;
}

void subsets_of_size(int universe, int size, const std::function<void(NodeSet)>& f) {
    std::vector<int> idx(size);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == size) {
            NodeSet s = 0;
            for (int i : idx) s |= static_cast<NodeSet>(1u << i);
            f(s);
            return;
        }
        for (int i = start; i < universe; ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

} // namespace

bool graph_move_legal(const ColourScheme& scheme, const GraphPosition& pos, const GraphMove& mv,
                      std::string* why) {
    const int n = scheme.dim();
    auto reject = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (static_cast<int>(mv.face.size()) != n - 1) return reject("face must have n-1 nodes");
    if (mv.demand.node_count() != n) return reject("demand must have n nodes");
    std::vector<int> fidx(n - 1);
    for (int i = 0; i < n - 1; ++i) {
        fidx[i] = pos.index_of(mv.face[i]);
        if (fidx[i] < 0) return reject("face node not on the board");
        for (int j = 0; j < i; ++j)
            if (mv.face[i] == mv.face[j]) return reject("face nodes must be distinct");
    }
    if (mv.reuse_id >= 0) {
        if (pos.index_of(mv.reuse_id) < 0) return reject("recycled node not on the board");
        for (int f : mv.face)
            if (f == mv.reuse_id) return reject("cannot recycle a face node");
    }
    // demand validity and agreement with the current face labels
    auto viol = validate_graph(scheme, mv.demand);
    if (!viol.empty()) return reject("demand graph invalid: " + viol.front().rule);
    for (int i = 0; i < n - 1; ++i)
        for (int j = i + 1; j < n - 1; ++j)
            if (mv.demand.edge_from(scheme, i, j) != pos.g.edge_from(scheme, fidx[i], fidx[j]))
                return reject("demand disagrees with the board on a face edge");
    // the face (n-1)-set: shades must agree when present
    NodeSet demand_face = static_cast<NodeSet>((1u << (n - 1)) - 1);
    NodeSet board_face = 0;
    for (int i = 0; i < n - 1; ++i) board_face |= static_cast<NodeSet>(1u << fidx[i]);
    const Yellow* yd = mv.demand.yellow_of(demand_face);
    const Yellow* yb = pos.g.yellow_of(board_face);
    if ((yd == nullptr) != (yb == nullptr)) return reject("face shade presence mismatch");
    if (yd && yb && !(*yd == *yb)) return reject("demand disagrees with the board on the face shade");
    return true;
}

std::vector<GraphPosition> graph_responses(const ColourScheme& scheme, const GraphPosition& pos,
                                           const GraphMove& mv, const GraphGameConfig& cfg) {
    std::vector<GraphPosition> out;
    std::string why;
    if (!graph_move_legal(scheme, pos, mv, &why))
        throw validation_error("illegal demand: " + why);

    const int n = scheme.dim();
    GraphPosition base = pos;
    if (mv.reuse_id >= 0) {
        int victim = base.index_of(mv.reuse_id);
        base.g = remove_node(base.g, victim);
        base.ids.erase(base.ids.begin() + victim);
    } else if (cfg.pebbles > 0 && base.g.node_count() + 1 > cfg.pebbles) {
        return out; // no room: the demand cannot be met
    }

    // identification responses: an existing non-face node whose labels toward
    // the face match the demand absorbs the new node, board unchanged
    {
        std::vector<int> fidx0(n - 1);
        bool id_found = false;
        for (int i = 0; i < n - 1; ++i) fidx0[i] = base.index_of(mv.face[i]);
        for (int y = 0; y < base.g.node_count() && !id_found; ++y) {
            if (std::find(fidx0.begin(), fidx0.end(), y) != fidx0.end()) continue;
            bool match = true;
            for (int i = 0; i < n - 1 && match; ++i)
                if (base.g.edge_from(scheme, fidx0[i], y) !=
                    mv.demand.edge_from(scheme, i, n - 1))
                    match = false;
            // demanded shades on sets through the new node must match as well
            if (match) {
                for (auto& yl : mv.demand.yellows()) {
                    if (!((yl.nodes >> (n - 1)) & 1)) continue;
                    NodeSet s2 = static_cast<NodeSet>(1u << y);
                    for (int i = 0; i < n - 1; ++i)
                        if ((yl.nodes >> i) & 1) s2 |= static_cast<NodeSet>(1u << fidx0[i]);
                    if (__builtin_popcount(static_cast<unsigned>(s2)) != n - 1) {
                        match = false;
                        break;
                    }
                    const Yellow* have = base.g.yellow_of(s2);
                    if (!have || !(*have == yl.shade)) {
                        match = false;
                        break;
                    }
                }
            }
            if (match) id_found = true;
        }
        if (id_found) out.push_back(base);
    }

    // append the target with the demanded face edges
    GraphPosition work = base;
    int target = work.g.add_node();
    work.ids.push_back(mv.reuse_id >= 0 ? mv.reuse_id : work.next_id++);
    std::vector<int> fidx(n - 1);
    for (int i = 0; i < n - 1; ++i) fidx[i] = work.index_of(mv.face[i]);
    for (int i = 0; i < n - 1; ++i) work.g.set_edge(fidx[i], target, mv.demand.edge(i, n - 1));

    // free edges: target to every node outside the face
    std::vector<int> free_nodes;
    for (int u = 0; u < target; ++u)
        if (std::find(fidx.begin(), fidx.end(), u) == fidx.end()) free_nodes.push_back(u);

    const std::size_t ncolours = scheme.colour_count();
    uint64_t steps = 0;

    std::function<void(std::size_t)> fill_edges = [&](std::size_t e) {
        if (++steps > cfg.response_budget)
            throw budget_exceeded("graph response budget exceeded");
        if (e == free_nodes.size()) {
            // shades for the new green-free (n-1)-sets containing the target
            std::vector<NodeSet> fresh;
            subsets_of_size(work.g.node_count(), n - 1, [&](NodeSet s) {
                if (!((s >> target) & 1)) return;
                std::vector<int> mem;
                for (int u = 0; u < work.g.node_count(); ++u)
                    if ((s >> u) & 1) mem.push_back(u);
                for (std::size_t p = 0; p < mem.size(); ++p)
                    for (std::size_t q = p + 1; q < mem.size(); ++q)
                        if (scheme.is_green(work.g.edge(mem[p], mem[q]))) return;
                fresh.push_back(s);
            });
            // demand-supplied shades are fixed; identify them by node sets
            std::vector<std::pair<NodeSet, Yellow>> forced;
            for (auto& y : mv.demand.yellows()) {
                if (!((y.nodes >> (n - 1)) & 1)) continue; // face shade already on board
                NodeSet s = static_cast<NodeSet>(1u << target);
                for (int i = 0; i < n - 1; ++i)
                    if ((y.nodes >> i) & 1) s |= static_cast<NodeSet>(1u << fidx[i]);
                forced.push_back({s, y.shade});
            }
            std::function<void(std::size_t)> fill_shades = [&](std::size_t b) {
                if (++steps > cfg.response_budget)
                    throw budget_exceeded("graph response budget exceeded");
                if (b == fresh.size()) {
                    // final validation guards the cone rule on old bases
                    if (validate_graph(scheme, work.g).empty()) out.push_back(work);
                    return;
                }
                NodeSet s = fresh[b];
                bool is_forced = false;
                for (auto& [fs, shade] : forced)
                    if (fs == s) {
                        work.g.set_yellow(s, shade);
                        fill_shades(b + 1);
                        is_forced = true;
                        break;
                    }
                if (is_forced) return;
                uint32_t required = cone_tint_mask(scheme, work.g, s);
                const uint32_t universe =
                    static_cast<uint32_t>((1ull << scheme.tints().size()) - 1);
                if (cfg.minimal_shades) {
                    work.g.set_yellow(s, Yellow{required, false});
                    fill_shades(b + 1);
                } else {
                    uint32_t free_part = universe & ~required;
                    uint32_t sub = free_part;
                    while (true) {
                        work.g.set_yellow(s, Yellow{required | sub, false});
                        fill_shades(b + 1);
                        if (sub == 0) break;
                        sub = (sub - 1) & free_part;
                    }
                    if (scheme.has_full_marker()) {
                        work.g.set_yellow(s, Yellow{0, true});
                        fill_shades(b + 1);
                    }
                }
                // reset for backtracking above this set
                work.g.set_yellow(s, Yellow{0, false});
            };
            auto snapshot = work.g; // shade assignment mutates; restore after
            fill_shades(0);
            work.g = snapshot;
            return;
        }
        int u = free_nodes[e];
        for (std::size_t c = 0; c < ncolours; ++c) {
            work.g.set_edge(u, target, static_cast<ColourId>(c));
            bool ok = true;
            for (int wnode = 0; wnode < work.g.node_count() && ok; ++wnode) {
                if (wnode == u || wnode == target) continue;
                // only check triangles whose third edge is already meaningful
                bool third_known = std::find(fidx.begin(), fidx.end(), wnode) != fidx.end();
                for (std::size_t q = 0; q < e; ++q)
                    if (free_nodes[q] == wnode) third_known = true;
                if (!third_known) continue;
                int lo = std::min(wnode, u), hi = std::max(wnode, u);
                ok = scheme.triangle_allowed(work.g.edge(lo, hi), work.g.edge(lo, target),
                                             work.g.edge(hi, target));
            }
            if (ok) fill_edges(e + 1);
        }
    };
    fill_edges(0);
    return out;
}

// ----------------------------------------------------------------- strategies

namespace {

// shared cone-attack logic: opening cone plus same-base fresh-tint demands
struct ConesForall : ForallGraphStrategy {
    int next_tint_index = 0;
    std::vector<int> apexes; // external ids, oldest first

    static Yellow full_shade(const ColourScheme& scheme) {
        if (scheme.has_full_marker()) return Yellow{0, true};
        return Yellow{static_cast<uint32_t>((1ull << scheme.tints().size()) - 1), false};
    }

    ColouredGraph opening(const ColourScheme& scheme) override {
        const int n = scheme.dim();
        ColouredGraph g(n);
        // base 0..n-2 in white, apex n-1 tinted with the first tint
        for (int i = 0; i < n - 1; ++i)
            for (int j = i + 1; j < n - 1; ++j) g.set_edge(i, j, scheme.white_id(0));
        int tint = scheme.tints()[next_tint_index++];
        g.set_edge(0, n - 1, scheme.green_zero_id(tint));
        for (int j = 1; j <= n - 2; ++j) g.set_edge(j, n - 1, scheme.graded_id(j));
        g.set_yellow(static_cast<NodeSet>((1u << (n - 1)) - 1), full_shade(scheme));
        apexes.push_back(n - 1); // external id assigned by the engine in order
        return g;
    }

    std::optional<GraphMove> move(const ColourScheme& scheme, const GraphPosition& pos, int round,
                                  const GraphGameConfig& cfg) override {
        const int n = scheme.dim();
        // every demand uses a fresh tint: a recycled tint lets the responder
        // identify the new apex with the existing one and learn nothing
        if (next_tint_index >= static_cast<int>(scheme.tints().size())) return std::nullopt;
        GraphMove mv;
        for (int i = 0; i < n - 1; ++i) mv.face.push_back(i); // base external ids 0..n-2
        // recycle the oldest apex when the board is full
        if (cfg.pebbles > 0 && pos.g.node_count() >= cfg.pebbles) {
            mv.reuse_id = apexes.front();
            apexes.erase(apexes.begin());
        }
        int tint = scheme.tints()[next_tint_index++];
        ColouredGraph d(n);
        for (int i = 0; i < n - 1; ++i)
            for (int j = i + 1; j < n - 1; ++j)
                d.set_edge(i, j, pos.g.edge_from(scheme, pos.index_of(mv.face[i]),
                                                 pos.index_of(mv.face[j])));
        d.set_edge(0, n - 1, scheme.green_zero_id(tint));
        for (int j = 1; j <= n - 2; ++j) d.set_edge(j, n - 1, scheme.graded_id(j));
        NodeSet base_set = static_cast<NodeSet>((1u << (n - 1)) - 1);
        const Yellow* y = pos.g.yellow_of([&] {
            NodeSet s = 0;
            for (int i = 0; i < n - 1; ++i)
                s |= static_cast<NodeSet>(1u << pos.index_of(mv.face[i]));
            return s;
        }());
        if (y) d.set_yellow(base_set, *y);
        mv.demand = d;
        apexes.push_back(mv.reuse_id >= 0 ? mv.reuse_id : pos.next_id);
        (void)round;
        return mv;
    }
};

struct RandomForall : ForallGraphStrategy {
    std::mt19937_64 rng;
    explicit RandomForall(uint64_t seed) : rng(seed) {}

    ColouredGraph opening(const ColourScheme& scheme) override {
        // random valid graph on n nodes: rejection sampling over labelled graphs
        const int n = scheme.dim();
        for (int tries = 0; tries < 4096; ++tries) {
            ColouredGraph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    g.set_edge(u, v,
                               static_cast<ColourId>(rng() % scheme.colour_count()));
            bool tri_ok = true;
            for (int u = 0; u < n && tri_ok; ++u)
                for (int v = u + 1; v < n && tri_ok; ++v)
                    for (int w = v + 1; w < n; ++w)
                        if (!scheme.triangle_allowed(g.edge(u, v), g.edge(u, w), g.edge(v, w))) {
                            tri_ok = false;
                            break;
                        }
            if (!tri_ok) continue;
            // shades: random supersets of the forced tints
            bool ok = true;
            subsets_of_size(n, n - 1, [&](NodeSet s) {
                std::vector<int> mem;
                for (int u = 0; u < n; ++u)
                    if ((s >> u) & 1) mem.push_back(u);
                for (std::size_t p = 0; p < mem.size(); ++p)
                    for (std::size_t q = p + 1; q < mem.size(); ++q)
                        if (scheme.is_green(g.edge(mem[p], mem[q]))) return;
                uint32_t required = cone_tint_mask(scheme, g, s);
                uint32_t universe = static_cast<uint32_t>((1ull << scheme.tints().size()) - 1);
                uint32_t shade = required | (static_cast<uint32_t>(rng()) & universe);
                g.set_yellow(s, Yellow{shade, false});
            });
            if (ok && validate_graph(scheme, g).empty()) return g;
        }
        // fall back to an all-white graph
        ColouredGraph g(scheme.dim());
        for (int u = 0; u < scheme.dim(); ++u)
            for (int v = u + 1; v < scheme.dim(); ++v) g.set_edge(u, v, scheme.white_id(0));
        subsets_of_size(scheme.dim(), scheme.dim() - 1,
                        [&](NodeSet s) { g.set_yellow(s, Yellow{0, false}); });
        return g;
    }

    std::optional<GraphMove> move(const ColourScheme& scheme, const GraphPosition& pos, int,
                                  const GraphGameConfig& cfg) override {
        const int n = scheme.dim();
        const int k = pos.g.node_count();
        if (k < n - 1) return std::nullopt;
        for (int tries = 0; tries < 4096; ++tries) {
            GraphMove mv;
            // random ordered face
            std::vector<int> pool(pos.ids);
            std::shuffle(pool.begin(), pool.end(), rng);
            mv.face.assign(pool.begin(), pool.begin() + (n - 1));
            if (cfg.pebbles > 0 && k >= cfg.pebbles) {
                std::vector<int> candidates;
                for (int id : pos.ids)
                    if (std::find(mv.face.begin(), mv.face.end(), id) == mv.face.end())
                        candidates.push_back(id);
                if (candidates.empty()) continue;
                mv.reuse_id = candidates[rng() % candidates.size()];
            }
            ColouredGraph d(n);
            std::vector<int> fidx(n - 1);
            for (int i = 0; i < n - 1; ++i) fidx[i] = pos.index_of(mv.face[i]);
            for (int i = 0; i < n - 1; ++i)
                for (int j = i + 1; j < n - 1; ++j)
                    d.set_edge(i, j, pos.g.edge_from(scheme, fidx[i], fidx[j]));
            for (int i = 0; i < n - 1; ++i)
                d.set_edge(i, n - 1, static_cast<ColourId>(rng() % scheme.colour_count()));
            // copy the face shade, shade the fresh green-free sets minimally,
            // sometimes widen by a random mask
            NodeSet base_set = static_cast<NodeSet>((1u << (n - 1)) - 1);
            NodeSet board_face = 0;
            for (int i = 0; i < n - 1; ++i)
                board_face |= static_cast<NodeSet>(1u << fidx[i]);
            const Yellow* y = pos.g.yellow_of(board_face);
            if (y) d.set_yellow(base_set, *y);
            bool bad = false;
            subsets_of_size(n, n - 1, [&](NodeSet s) {
                if (s == base_set) return;
                std::vector<int> mem;
                for (int u = 0; u < n; ++u)
                    if ((s >> u) & 1) mem.push_back(u);
                for (std::size_t p = 0; p < mem.size(); ++p)
                    for (std::size_t q = p + 1; q < mem.size(); ++q)
                        if (scheme.is_green(d.edge(mem[p], mem[q]))) return;
                uint32_t required = cone_tint_mask(scheme, d, s);
                uint32_t universe = static_cast<uint32_t>((1ull << scheme.tints().size()) - 1);
                d.set_yellow(s, Yellow{required | (static_cast<uint32_t>(rng()) & universe),
                                       false});
            });
            if (bad) continue;
            mv.demand = d;
            std::string why;
            if (graph_move_legal(scheme, pos, mv, &why)) return mv;
        }
        return std::nullopt;
    }
};

// order-variant bookkeeping responder
struct RhoExists : ExistsGraphStrategy {
    std::map<int, int> rho; // tint -> red index, order preserving
    bool initialized = false;

    // gap ladder: insert keeping gaps of 3^(rounds remaining)
    bool insert_tint(const ColourScheme& scheme, int tint, int rounds_remaining) {
        if (rho.count(tint)) return true;
        const int r = scheme.red_base();
        long long step = 1;
        for (int i = 0; i < rounds_remaining; ++i) step *= 3;
        if (rho.empty()) {
            long long v = std::min<long long>(r - 1, step);
            rho[tint] = static_cast<int>(v);
            return true;
        }
        auto succ = rho.upper_bound(tint);
        long long lo = -1, hi = r;
        if (succ != rho.end()) hi = succ->second;
        if (succ != rho.begin()) lo = std::prev(succ)->second;
        long long v = lo < 0 ? hi - step : lo + step;
        if (v <= lo || v >= hi || v < 0 || v >= r) return false;
        rho[tint] = static_cast<int>(v);
        return true;
    }

    void absorb_cones(const ColourScheme& scheme, const ColouredGraph& g, int rounds_remaining) {
        for (const Cone& c : find_cones(scheme, g)) insert_tint(scheme, c.tint, rounds_remaining);
    }

    std::optional<GraphPosition> respond(const ColourScheme& scheme, const GraphPosition& pos,
                                         const GraphMove& mv,
                                         const GraphGameConfig& cfg) override {
        const int n = scheme.dim();
        // remaining rounds after this one; the ladder narrows by a factor 3
        int remaining = std::max(0, cfg.rounds - static_cast<int>(rho.size()) - 1);

        GraphPosition base = pos;
        if (mv.reuse_id >= 0) {
            int victim = base.index_of(mv.reuse_id);
            base.g = remove_node(base.g, victim);
            base.ids.erase(base.ids.begin() + victim);
        }
        GraphPosition work = base;
        int target = work.g.add_node();
        work.ids.push_back(mv.reuse_id >= 0 ? mv.reuse_id : work.next_id++);
        std::vector<int> fidx(n - 1);
        for (int i = 0; i < n - 1; ++i) fidx[i] = work.index_of(mv.face[i]);
        for (int i = 0; i < n - 1; ++i) work.g.set_edge(fidx[i], target, mv.demand.edge(i, n - 1));

        absorb_cones(scheme, work.g, remaining);

        // free edges, one old node at a time
        for (int u = 0; u < target; ++u) {
            if (std::find(fidx.begin(), fidx.end(), u) != fidx.end()) continue;
            ColourId chosen = scheme.white_id(0);
            // cones over a shared face with the same induced order force a red
            auto cones = find_cones(scheme, work.g);
            const Cone* cu = nullptr;
            const Cone* ct = nullptr;
            for (const Cone& c : cones) {
                if (c.apex == u) cu = &c;
                if (c.apex == target) ct = &c;
            }
            bool forced_red = false;
            if (cu && ct && cu->base == ct->base) forced_red = true;
            if (forced_red) {
                if (!insert_tint(scheme, cu->tint, remaining) ||
                    !insert_tint(scheme, ct->tint, remaining))
                    return std::nullopt;
                int a = rho[cu->tint], b = rho[ct->tint];
                chosen = scheme.red_pair_id(a, b);
            } else {
                // whites: w_0 if no green-zero pairing through the face, else
                // the least w_i with no g_i pairing
                bool zero_pair = false;
                std::vector<char> graded_pair(n, 0);
                for (int f = 0; f < work.g.node_count(); ++f) {
                    if (f == u || f == target) continue;
                    const Colour& a = scheme.colour(work.g.edge(f, u));
                    const Colour& b = scheme.colour(work.g.edge(f, target));
                    if (a.hue == Hue::GreenZero && b.hue == Hue::GreenZero) zero_pair = true;
                    if (a.hue == Hue::GreenGraded && b.hue == Hue::GreenGraded && a.a == b.a)
                        graded_pair[a.a] = 1;
                }
                if (!zero_pair) {
                    chosen = scheme.white_id(0);
                } else {
                    int pick = -1;
                    for (int i = 1; i <= n - 2; ++i)
                        if (!graded_pair[i]) {
                            pick = i;
                            break;
                        }
                    if (pick < 0) {
                        // both nodes cap cones in every graded colour; treat as
                        // same-order apexes and fall back to a rho red
                        return std::nullopt;
                    }
                    chosen = scheme.white_id(pick);
                }
            }
            work.g.set_edge(u, target, chosen);
        }

        // shades: exactly the forced tints
        subsets_of_size(work.g.node_count(), n - 1, [&](NodeSet s) {
            if (!((s >> target) & 1)) return;
            std::vector<int> mem;
            for (int q = 0; q < work.g.node_count(); ++q)
                if ((s >> q) & 1) mem.push_back(q);
            for (std::size_t p = 0; p < mem.size(); ++p)
                for (std::size_t q = p + 1; q < mem.size(); ++q)
                    if (scheme.is_green(work.g.edge(mem[p], mem[q]))) return;
            // demand-fixed shade?
            bool fixed = false;
            for (auto& y : mv.demand.yellows()) {
                if (!((y.nodes >> (n - 1)) & 1)) continue;
                NodeSet ds = static_cast<NodeSet>(1u << target);
                for (int i = 0; i < n - 1; ++i)
                    if ((y.nodes >> i) & 1) ds |= static_cast<NodeSet>(1u << fidx[i]);
                if (ds == s) {
                    work.g.set_yellow(s, y.shade);
                    fixed = true;
                }
            }
            if (!fixed)
                work.g.set_yellow(s, Yellow{cone_tint_mask(scheme, work.g, s), false});
        });

        if (!validate_graph(scheme, work.g).empty()) return std::nullopt;
        return work;
    }
};

struct RandomExists : ExistsGraphStrategy {
    std::mt19937_64 rng;
    explicit RandomExists(uint64_t seed) : rng(seed) {}

    std::optional<GraphPosition> respond(const ColourScheme& scheme, const GraphPosition& pos,
                                         const GraphMove& mv,
                                         const GraphGameConfig& cfg) override {
        auto all = graph_responses(scheme, pos, mv, cfg);
        if (all.empty()) return std::nullopt;
        return all[rng() % all.size()];
    }
};

struct SolverExists : ExistsGraphStrategy {
    uint64_t budget;
    explicit SolverExists(uint64_t b) : budget(b) {}

    // crude adversary model: cone demands on every face plus demand graphs
    // drawn from the scheme's green-zero tints; enough to see forced losses
    int survival(const ColourScheme& scheme, const GraphPosition& pos, int rounds,
                 const GraphGameConfig& cfg, uint64_t& fuel) {
        if (rounds == 0 || fuel == 0) return 0;
        const int n = scheme.dim();
        int worst = rounds; // best case: survives all remaining rounds
        ConesForall model;
        // bombard with every tint from every ordered face
        std::vector<int> idx(pos.ids);
        for (std::size_t fa = 0; fa < idx.size() && fuel > 0; ++fa)
            for (std::size_t fb = 0; fb < idx.size() && fuel > 0; ++fb) {
                if (fa == fb || n != 3) continue;
                for (int tint : scheme.tints()) {
                    if (fuel == 0) break;
                    --fuel;
                    GraphMove mv;
                    mv.face = {idx[fa], idx[fb]};
                    if (cfg.pebbles > 0 && pos.g.node_count() >= cfg.pebbles) {
                        // recycle some node off the face
                        for (int id : pos.ids)
                            if (id != idx[fa] && id != idx[fb]) {
                                mv.reuse_id = id;
                                break;
                            }
                    }
                    ColouredGraph d(n);
                    int u = pos.index_of(idx[fa]), v = pos.index_of(idx[fb]);
                    d.set_edge(0, 1, pos.g.edge_from(scheme, u, v));
                    d.set_edge(0, 2, scheme.green_zero_id(tint));
                    d.set_edge(1, 2, scheme.graded_id(1));
                    NodeSet bf = static_cast<NodeSet>((1u << u) | (1u << v));
                    const Yellow* y = pos.g.yellow_of(bf);
                    if (y) d.set_yellow(0b011, *y);
                    std::string why;
                    if (!graph_move_legal(scheme, pos, mv, &why)) continue;
                    // the demand needs the tint allowed by the face shade
                    auto resp = graph_responses(scheme, pos, mv, cfg);
                    if (resp.empty()) return 0; // a demand with no answer ends it
                    int best = 0;
                    for (auto& r : resp) {
                        best = std::max(best, 1 + survival(scheme, r, rounds - 1, cfg, fuel));
                        if (best >= rounds) break;
                    }
                    worst = std::min(worst, best);
                    if (worst == 0) return 0;
                }
            }
        return worst;
    }

    std::optional<GraphPosition> respond(const ColourScheme& scheme, const GraphPosition& pos,
                                         const GraphMove& mv,
                                         const GraphGameConfig& cfg) override {
        auto all = graph_responses(scheme, pos, mv, cfg);
        if (all.empty()) return std::nullopt;
        uint64_t fuel = budget;
        int best = -1;
        std::size_t pick = 0;
        for (std::size_t i = 0; i < all.size(); ++i) {
            int s = survival(scheme, all[i], 3, cfg, fuel);
            if (s > best) {
                best = s;
                pick = i;
            }
        }
        return all[pick];
    }
};

} // namespace

std::unique_ptr<ForallGraphStrategy> make_cones_forall() { return std::make_unique<ConesForall>(); }
std::unique_ptr<ForallGraphStrategy> make_random_forall(uint64_t seed) {
    return std::make_unique<RandomForall>(seed);
}
std::unique_ptr<ExistsGraphStrategy> make_rho_exists() { return std::make_unique<RhoExists>(); }
std::unique_ptr<ExistsGraphStrategy> make_random_exists(uint64_t seed) {
    return std::make_unique<RandomExists>(seed);
}
std::unique_ptr<ExistsGraphStrategy> make_solver_exists(uint64_t budget) {
    return std::make_unique<SolverExists>(budget);
}

MatchResult run_match(const ColourScheme& scheme, const GraphGameConfig& cfg,
                      ForallGraphStrategy& forall, ExistsGraphStrategy& exists) {
    MatchResult res;
    GraphPosition pos;
    pos.g = forall.opening(scheme);
    for (int u = 0; u < pos.g.node_count(); ++u) pos.ids.push_back(pos.next_id++);
    {
        auto viol = validate_graph(scheme, pos.g);
        if (!viol.empty()) {
            res.winner = MatchResult::Winner::Exists;
            res.note = "illegal opening: " + viol.front().rule;
            res.rounds_played = 1;
            return res;
        }
    }
    res.transcript.push_back("round 1: opening " + pos.g.to_string(scheme));

    for (int round = 2; round <= cfg.rounds; ++round) {
        auto mv = forall.move(scheme, pos, round, cfg);
        if (!mv) {
            res.winner = MatchResult::Winner::Exists;
            res.note = "demander has no move";
            res.rounds_played = round - 1;
            return res;
        }
        std::string why;
        if (!graph_move_legal(scheme, pos, *mv, &why)) {
            res.winner = MatchResult::Winner::Exists;
            res.note = "illegal demand: " + why;
            res.rounds_played = round;
            return res;
        }
        {
            std::ostringstream os;
            os << "round " << round << ": demand on face";
            for (int f : mv->face) os << " " << f;
            if (mv->reuse_id >= 0) os << " recycling " << mv->reuse_id;
            res.transcript.push_back(os.str());
        }
        auto reply = exists.respond(scheme, pos, *mv, cfg);
        if (!reply) {
            res.winner = MatchResult::Winner::Forall;
            res.note = "responder is stuck";
            res.rounds_played = round;
            return res;
        }
        // the engine re-validates the reply
        auto viol = validate_graph(scheme, reply->g);
        bool extends = true; // reply must contain the demand as placed
        if (!viol.empty()) extends = false;
        if (!extends) {
            res.winner = MatchResult::Winner::Forall;
            res.note = "responder played an illegal graph: " +
                       (viol.empty() ? std::string("inconsistent extension") : viol.front().rule);
            res.rounds_played = round;
            return res;
        }
        pos = *reply;
        res.transcript.push_back("         response " + pos.g.to_string(scheme));
    }
    res.winner = MatchResult::Winner::Exists;
    res.rounds_played = cfg.rounds;
    res.note = "responder survived all rounds";
    return res;
}

std::optional<bool> graph_view_forall_wins(const ColourScheme& scheme, int pebbles, int rounds,
                                           uint64_t budget) {
    const int n = scheme.dim();
    uint64_t fuel = budget;
    GraphGameConfig cfg;
    cfg.pebbles = pebbles;
    cfg.rounds = rounds;
    cfg.minimal_shades = false;
    cfg.response_budget = budget;

    // demand enumeration: every ordered face, fresh or recycled target, every
    // one-node extension graph
    std::function<std::optional<bool>(const GraphPosition&, int)> forall_wins =
        [&](const GraphPosition& pos, int r) -> std::optional<bool> {
        if (r <= 0) return false;
        if (fuel == 0) return std::nullopt;
        const int k = pos.g.node_count();
        if (k < n - 1) return false;
        // faces: ordered (n-1)-tuples of distinct nodes
        std::vector<int> sel(n - 1);
        std::vector<char> used(k, 0);
        bool unknown = false;
        bool win = false;
        std::function<void(int)> faces = [&](int depth) {
            if (win || unknown) return;
            if (depth == n - 1) {
                std::vector<int> targets = {-1};
                if (cfg.pebbles > 0 && k >= cfg.pebbles) {
                    targets.clear();
                    for (int id : pos.ids) {
                        bool inface = false;
                        for (int i = 0; i < n - 1; ++i)
                            if (pos.ids[sel[i]] == id) inface = true;
                        if (!inface) targets.push_back(id);
                    }
                }
                for (int target : targets) {
                    // enumerate demand graphs: edges target-to-face
                    std::vector<ColourId> cols(n - 1);
                    std::function<void(int)> edges = [&](int e) {
                        if (win || unknown) return;
                        if (fuel == 0) {
                            unknown = true;
                            return;
                        }
                        --fuel;
                        if (e == n - 1) {
                            GraphMove mv;
                            for (int i = 0; i < n - 1; ++i) mv.face.push_back(pos.ids[sel[i]]);
                            mv.reuse_id = target;
                            ColouredGraph d(n);
                            for (int i = 0; i < n - 1; ++i)
                                for (int j = i + 1; j < n - 1; ++j)
                                    d.set_edge(i, j, pos.g.edge_from(scheme, sel[i], sel[j]));
                            for (int i = 0; i < n - 1; ++i) d.set_edge(i, n - 1, cols[i]);
                            // demand shades: all assignments over fresh sets
                            std::vector<NodeSet> fresh;
                            subsets_of_size(n, n - 1, [&](NodeSet s) {
                                std::vector<int> mem;
                                for (int u = 0; u < n; ++u)
                                    if ((s >> u) & 1) mem.push_back(u);
                                for (std::size_t p = 0; p < mem.size(); ++p)
                                    for (std::size_t q = p + 1; q < mem.size(); ++q)
                                        if (scheme.is_green(d.edge(mem[p], mem[q]))) return;
                                if (s == static_cast<NodeSet>((1u << (n - 1)) - 1)) {
                                    NodeSet bf = 0;
                                    for (int i = 0; i < n - 1; ++i)
                                        bf |= static_cast<NodeSet>(1u << sel[i]);
                                    const Yellow* y = pos.g.yellow_of(bf);
                                    if (y) d.set_yellow(s, *y);
                                    return;
                                }
                                fresh.push_back(s);
                            });
                            std::function<void(std::size_t)> shades = [&](std::size_t b) {
                                if (win || unknown) return;
                                if (b == fresh.size()) {
                                    std::string why;
                                    if (!graph_move_legal(scheme, pos, mv, &why)) return;
                                    std::vector<GraphPosition> resp;
                                    try {
                                        resp = graph_responses(scheme, pos, mv, cfg);
                                    } catch (const budget_exceeded&) {
                                        unknown = true;
                                        return;
                                    }
                                    if (resp.empty()) {
                                        win = true;
                                        return;
                                    }
                                    bool all_lose = true;
                                    for (auto& rp : resp) {
                                        auto sub = forall_wins(rp, r - 1);
                                        if (!sub.has_value()) {
                                            unknown = true;
                                            return;
                                        }
                                        if (!*sub) {
                                            all_lose = false;
                                            break;
                                        }
                                    }
                                    if (all_lose) win = true;
                                    return;
                                }
                                uint32_t universe = static_cast<uint32_t>(
                                    (1ull << scheme.tints().size()) - 1);
                                for (uint32_t m = 0;; ++m) {
                                    mv.demand.set_yellow(fresh[b], Yellow{m, false});
                                    shades(b + 1);
                                    if (win || unknown) return;
                                    if (m == universe) break;
                                }
                                if (scheme.has_full_marker()) {
                                    mv.demand.set_yellow(fresh[b], Yellow{0, true});
                                    shades(b + 1);
                                }
                            };
                            mv.demand = d;
                            shades(0);
                            return;
                        }
                        for (std::size_t c = 0; c < scheme.colour_count(); ++c) {
                            cols[e] = static_cast<ColourId>(c);
                            edges(e + 1);
                            if (win || unknown) return;
                        }
                    };
                    edges(0);
                    if (win || unknown) return;
                }
                return;
            }
            for (int u = 0; u < k; ++u) {
                if (used[u]) continue;
                used[u] = 1;
                sel[depth] = u;
                faces(depth + 1);
                used[u] = 0;
                if (win || unknown) return;
            }
        };
        faces(0);
        if (win) return true;
        if (unknown) return std::nullopt;
        return false;
    };

    // openings: every valid graph on at most n nodes
    bool any_unknown = false;
    for (int k = 1; k <= n; ++k) {
        bool win = false;
        bool aborted = false;
        try {
            enumerate_labelled_graphs(scheme, k, budget, [&](const ColouredGraph& g) {
                GraphPosition pos;
                pos.g = g;
                for (int u = 0; u < k; ++u) pos.ids.push_back(pos.next_id++);
                auto sub = forall_wins(pos, rounds - 1);
                if (!sub.has_value()) {
                    any_unknown = true;
                    return true;
                }
                if (*sub) {
                    win = true;
                    return false;
                }
                return true;
            });
        } catch (const budget_exceeded&) {
            aborted = true;
            any_unknown = true;
        }
        (void)aborted;
        if (win) return true;
    }
    if (any_unknown) return std::nullopt;
    return false;
}

} // namespace pea
