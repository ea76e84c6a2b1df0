#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "pea/axioms.hpp"
#include "pea/monk.hpp"

using namespace pea;

namespace {

// exhaustive k-colouring oracle
int chromatic_oracle(const SimpleGraph& g) {
    if (g.nodes == 0) return 0;
    for (int k = 1; k <= g.nodes; ++k) {
        std::vector<int> colour(g.nodes, 0);
        std::function<bool(int)> rec = [&](int v) -> bool {
            if (v == g.nodes) return true;
            for (int c = 0; c < k; ++c) {
                bool ok = true;
                for (int u = 0; u < v && ok; ++u)
                    if (g.has_edge(u, v) && colour[u] == c) ok = false;
                if (!ok) continue;
                colour[v] = c;
                if (rec(v + 1)) return true;
            }
            return false;
        };
        if (rec(0)) return k;
    }
    return g.nodes;
}

// shortest-cycle oracle by DFS over all simple cycles up to length n
int girth_oracle(const SimpleGraph& g) {
    int best = kGirthInfinite;
    std::vector<int> path;
    std::vector<char> used(g.nodes, 0);
    std::function<void(int, int)> rec = [&](int start, int v) {
        for (int u = 0; u < g.nodes; ++u) {
            if (!g.has_edge(v, u)) continue;
            if (u == start && path.size() >= 3) {
                best = std::min<int>(best, static_cast<int>(path.size()));
                continue;
            }
            if (used[u] || u < start) continue;
            if (static_cast<int>(path.size()) + 1 >= best) continue;
            used[u] = 1;
            path.push_back(u);
            rec(start, u);
            path.pop_back();
            used[u] = 0;
        }
    };
    for (int s = 0; s < g.nodes; ++s) {
        used.assign(g.nodes, 0);
        used[s] = 1;
        path = {s};
        rec(s, s);
    }
    return best;
}

SimpleGraph random_graph(std::mt19937_64& rng, int max_nodes) {
    int k = 1 + static_cast<int>(rng() % max_nodes);
    SimpleGraph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            if (rng() % 3 == 0) g.add_edge(u, v);
    return g;
}

} // namespace

TEST_CASE("named graph families") {
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(path_graph(3).edge_count() == 2);
    CHECK(complete_graph(4).edge_count() == 6);
    auto u = disjoint_union({path_graph(3), path_graph(3), cycle_graph(4)});
    CHECK(u.nodes == 10);
    CHECK(u.edge_count() == 2 + 2 + 4);
}

TEST_CASE("chromatic number: examples and oracle agreement") {
    CHECK(chromatic_number(complete_graph(4)) == 4);
    CHECK(chromatic_number(cycle_graph(5)) == 3);
    CHECK(chromatic_number(cycle_graph(6)) == 2);
    CHECK(chromatic_number(edgeless_graph(5)) == 1);
    CHECK(chromatic_number(disjoint_union({complete_graph(3), cycle_graph(5)})) == 3);
    CHECK(chromatic_number(disjoint_union({complete_graph(4), path_graph(2)})) == 4);
    std::mt19937_64 rng(41);
    for (int round = 0; round < 120; ++round) {
        SimpleGraph g = random_graph(rng, 9);
        CHECK(chromatic_number(g) == chromatic_oracle(g));
    }
}

TEST_CASE("girth: examples and oracle agreement") {
    CHECK(girth(cycle_graph(5)) == 5);
    CHECK(girth(complete_graph(4)) == 3);
    CHECK(girth(path_graph(6)) == kGirthInfinite);
    CHECK(girth(edgeless_graph(3)) == kGirthInfinite);
    std::mt19937_64 rng(43);
    for (int round = 0; round < 120; ++round) {
        SimpleGraph g = random_graph(rng, 9);
        CHECK(girth(g) == girth_oracle(g));
    }
}

TEST_CASE("chromatic properties") {
    std::mt19937_64 rng(47);
    for (int round = 0; round < 40; ++round) {
        SimpleGraph g = random_graph(rng, 8);
        int chi = chromatic_number(g);
        CHECK((chi == 1) == (g.edge_count() == 0));
        // chi <= 2 iff no odd cycle: cross-check with girth parity by removing
        // edges until bipartite witness emerges is heavy; use the direct oracle
        bool bipartite = chromatic_oracle(g) <= 2;
        CHECK((chi <= 2) == bipartite);
        // monotone under subgraph: drop one edge
        if (g.edge_count() > 0) {
            SimpleGraph h = g;
            for (int u = 0; u < g.nodes; ++u) {
                bool done = false;
                for (int v = u + 1; v < g.nodes; ++v)
                    if (g.has_edge(u, v)) {
                        h.adj[u] &= ~(1ull << v);
                        h.adj[v] &= ~(1ull << u);
                        done = true;
                        break;
                    }
                if (done) break;
            }
            CHECK(chromatic_number(h) <= chi);
        }
    }
}

TEST_CASE("eta atom counts match the (K,~) enumeration oracle") {
    // oracle: enumerate pairs directly by the three clauses
    auto oracle = [&](const SimpleGraph& gamma, int n) -> uint64_t {
        uint64_t total = 0;
        auto parts = set_partitions(n);
        const int values = gamma.nodes * n;
        auto adjacent = [&](int a, int b) { return gamma.has_edge(a / n, b / n); };
        for (auto& p : parts) {
            if (p.blocks == n) {
                // K total with a dependent range
                std::vector<int> val(n, 0);
                std::function<void(int)> rec = [&](int pos) {
                    if (pos == n) {
                        for (int i = 0; i < n; ++i)
                            for (int j = i + 1; j < n; ++j)
                                if (adjacent(val[i], val[j])) {
                                    ++total;
                                    return;
                                }
                        return;
                    }
                    for (int v = 0; v < values; ++v) {
                        val[pos] = v;
                        rec(pos + 1);
                    }
                };
                rec(0);
            } else if (p.blocks == n - 1) {
                total += static_cast<uint64_t>(values);
            } else {
                total += 1;
            }
        }
        return total;
    };
    for (auto gamma : {complete_graph(2), path_graph(3), cycle_graph(5)}) {
        auto es = eta(gamma, 3);
        CHECK(es.structure->atom_count() == oracle(gamma, 3));
    }
    // edgeless graph: no total-K atoms at all
    auto e2 = eta(edgeless_graph(2), 3);
    uint64_t nblock = 0;
    for (Atom a = 0; a < e2.structure->atom_count(); ++a)
        if (e2.partitions[e2.record(a)[0]].blocks == 3) ++nblock;
    CHECK(nblock == 0);
}

TEST_CASE("eta structures pass the axiom suite and atom separation") {
    for (auto gamma : {complete_graph(2), path_graph(3)}) {
        auto es = eta(gamma, 3);
        auto s = es.structure;
        CHECK(check_axioms(s).all_pass());
        CHECK(check_simple(s));
        // {a} = prod_i c_i {a}
        for (Atom a = 0; a < s->atom_count(); ++a) {
            Element meet = s->top();
            for (int i = 0; i < 3; ++i) meet = s->bool_and(meet, s->cyl(i, s->singleton(a)));
            CHECK(meet == s->singleton(a));
        }
    }
}

TEST_CASE("randomized search certifies its witnesses") {
    // the easy corner: girth >= 4 (triangle-free), chi >= 4
    ErdosResult res = erdos_search(4, 4, 4000, 7, 24);
    if (res.found) {
        CHECK(res.chi == chromatic_number(res.graph));
        CHECK(res.chi >= 4);
        CHECK(girth(res.graph) >= 4);
    }
    // an impossible demand exhausts its budget honestly
    ErdosResult none = erdos_search(12, 12, 5, 7, 20);
    CHECK_FALSE(none.found);
    CHECK(none.attempts == 5);
}
