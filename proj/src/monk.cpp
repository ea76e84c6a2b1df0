#include "pea/monk.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <functional>
#include <unordered_map>

namespace pea {

SimpleGraph cycle_graph(int k) {
    if (k < 3) throw signature_error("cycle needs at least 3 nodes");
    SimpleGraph g(k);
    for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    return g;
}

SimpleGraph path_graph(int k) {
    if (k < 1) throw signature_error("path needs at least 1 node");
    SimpleGraph g(k);
    for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    return g;
}

SimpleGraph complete_graph(int k) {
    if (k < 1) throw signature_error("complete graph needs at least 1 node");
    SimpleGraph g(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
    return g;
}

SimpleGraph edgeless_graph(int k) {
    if (k < 1) throw signature_error("graph needs at least 1 node");
    return SimpleGraph(k);
}

SimpleGraph disjoint_union(const std::vector<SimpleGraph>& parts) {
    int total = 0;
    for (auto& p : parts) total += p.nodes;
    if (total > 64) throw budget_exceeded("graphs are capped at 64 nodes");
    SimpleGraph g(total);
    int off = 0;
    for (auto& p : parts) {
        for (int u = 0; u < p.nodes; ++u)
            for (int v = u + 1; v < p.nodes; ++v)
                if (p.has_edge(u, v)) g.add_edge(off + u, off + v);
        off += p.nodes;
    }
    return g;
}

namespace {

int greedy_clique(const SimpleGraph& g) {
    // greedy from each vertex in degree order
    std::vector<int> order(g.nodes);
    for (int i = 0; i < g.nodes; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return __builtin_popcountll(g.adj[a]) > __builtin_popcountll(g.adj[b]);
    });
    int best = g.nodes > 0 ? 1 : 0;
    for (int s : order) {
        uint64_t cand = g.adj[s];
        int size = 1;
        uint64_t clique = 1ull << s;
        while (cand) {
            int v = __builtin_ctzll(cand);
            clique |= 1ull << v;
            ++size;
            cand &= g.adj[v];
        }
        best = std::max(best, size);
        (void)clique;
    }
    return best;
}

bool colourable(const SimpleGraph& g, int k, const std::vector<int>& order) {
    std::vector<int> colour(g.nodes, -1);
    std::function<bool(int)> rec = [&](int idx) -> bool {
        if (idx == g.nodes) return true;
        int v = order[idx];
        uint64_t used = 0;
        for (int u = 0; u < g.nodes; ++u)
            if (colour[u] >= 0 && g.has_edge(u, v)) used |= 1ull << colour[u];
        int fresh_used = 0;
        for (int c = 0; c < k; ++c) {
            if ((used >> c) & 1) continue;
            // symmetry breaking: use at most one previously unused colour
            bool fresh = true;
            for (int u = 0; u < g.nodes; ++u)
                if (colour[u] == c) { fresh = false; break; }
            if (fresh && fresh_used++) continue;
            colour[v] = c;
            if (rec(idx + 1)) return true;
            colour[v] = -1;
        }
        return false;
    };
    return rec(0);
}

} // namespace

int chromatic_number(const SimpleGraph& g) {
    if (g.nodes == 0) return 0;
    if (g.edge_count() == 0) return 1;
    std::vector<int> order(g.nodes);
    for (int i = 0; i < g.nodes; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return __builtin_popcountll(g.adj[a]) > __builtin_popcountll(g.adj[b]);
    });
    int lo = greedy_clique(g);
    for (int k = lo; k <= g.nodes; ++k)
        if (colourable(g, k, order)) return k;
    return g.nodes;
}

int girth(const SimpleGraph& g) {
    int best = kGirthInfinite;
    // shortest cycle through edge (u,v): remove edge, BFS distance u->v
    for (int u = 0; u < g.nodes; ++u) {
        for (int v = u + 1; v < g.nodes; ++v) {
            if (!g.has_edge(u, v)) continue;
            std::vector<int> dist(g.nodes, -1);
            std::deque<int> q;
            dist[u] = 0;
            q.push_back(u);
            while (!q.empty()) {
                int x = q.front();
                q.pop_front();
                if (x == v) break;
                uint64_t nb = g.adj[x];
                while (nb) {
                    int y = __builtin_ctzll(nb);
                    nb &= nb - 1;
                    if (x == u && y == v) continue; // skip the removed edge
                    if (dist[y] < 0) {
                        dist[y] = dist[x] + 1;
                        q.push_back(y);
                    }
                }
            }
            if (dist[v] > 0 && dist[v] + 1 < best) best = dist[v] + 1;
        }
    }
    return best;
}

ErdosResult erdos_search(int min_girth, int min_chi, uint64_t budget, uint64_t seed,
                         int max_nodes) {
    ErdosResult res;
    std::mt19937_64 rng(seed);
    max_nodes = std::min(max_nodes, 64);
    for (uint64_t attempt = 0; attempt < budget; ++attempt) {
        res.attempts = attempt + 1;
        int k = std::min(max_nodes, 12 + static_cast<int>(rng() % std::max(1, max_nodes - 11)));
        SimpleGraph g(k);
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < k; ++u)
            for (int v = u + 1; v < k; ++v) pairs.push_back({u, v});
        std::shuffle(pairs.begin(), pairs.end(), rng);
        for (auto [u, v] : pairs) {
            // adding (u,v) creates a cycle of length dist(u,v)+1
            std::vector<int> dist(k, -1);
            std::deque<int> q;
            dist[u] = 0;
            q.push_back(u);
            while (!q.empty()) {
                int x = q.front();
                q.pop_front();
                uint64_t nb = g.adj[x];
                while (nb) {
                    int y = __builtin_ctzll(nb);
                    nb &= nb - 1;
                    if (dist[y] < 0) {
                        dist[y] = dist[x] + 1;
                        q.push_back(y);
                    }
                }
            }
            if (dist[v] < 0 || dist[v] + 1 >= min_girth) g.add_edge(u, v);
        }
        int chi = chromatic_number(g);
        if (chi >= min_chi) {
            int gr = girth(g);
            if (gr >= min_girth || (gr == kGirthInfinite)) {
                res.found = true;
                res.graph = g;
                res.chi = chi;
                res.girth_value = gr;
                return res;
            }
        }
    }
    return res;
}

// ------------------------------------------------------------------ eta

std::string EtaStructure::describe(Atom a) const {
    const uint16_t* rec = record(a);
    const Partition& p = partitions[rec[0]];
    std::string out = "(K:";
    for (int i = 0; i < n; ++i) {
        out += " ";
        uint16_t v = rec[1 + i];
        if (v == kNoValue)
            out += "_";
        else
            out += std::to_string(v / n) + "." + std::to_string(v % n);
    }
    out += " | ~:";
    for (int i = 0; i < n; ++i) out += " " + std::to_string(static_cast<int>(p.block_of[i]));
    return out + ")";
}

EtaStructure eta(const SimpleGraph& gamma, int n, const BuildLimits& limits) {
    if (n <= 2) throw signature_error("eta needs dimension > 2");
    if (gamma.nodes < 1) throw signature_error("eta needs a nonempty graph");
    EtaStructure es;
    es.gamma = gamma;
    es.n = n;
    es.partitions = set_partitions(n);
    es.stride = 1 + n;
    const int values = gamma.nodes * n; // carrier Gamma x n

    auto adjacent = [&](uint16_t a, uint16_t b) {
        return gamma.has_edge(static_cast<int>(a) / n, static_cast<int>(b) / n);
    };

    for (std::size_t pid = 0; pid < es.partitions.size(); ++pid) {
        const Partition& p = es.partitions[pid];
        if (p.blocks == n) {
            // K total, rng(K) not independent in Gamma x n
            std::vector<uint16_t> val(n, 0);
            std::function<void(int)> rec = [&](int pos) {
                if (pos == n) {
                    bool has_edge = false;
                    for (int i = 0; i < n && !has_edge; ++i)
                        for (int j = i + 1; j < n; ++j)
                            if (adjacent(val[i], val[j])) {
                                has_edge = true;
                                break;
                            }
                    if (!has_edge) return;
                    es.records.push_back(static_cast<uint16_t>(pid));
                    es.records.insert(es.records.end(), val.begin(), val.end());
                    if (es.records.size() / es.stride > limits.max_atoms)
                        throw budget_exceeded("eta atom budget exceeded");
                    return;
                }
                for (int v = 0; v < values; ++v) {
                    val[pos] = static_cast<uint16_t>(v);
                    rec(pos + 1);
                }
            };
            rec(0);
        } else if (p.blocks == n - 1) {
            // K defined exactly on the unique 2-element block, equal values
            int bi = -1, bj = -1;
            for (int b = 0; b < p.blocks; ++b) {
                int sz = 0, first = -1, second = -1;
                for (int i = 0; i < n; ++i)
                    if (p.block_of[i] == b) {
                        ++sz;
                        (first < 0 ? first : second) = i;
                    }
                if (sz == 2) {
                    bi = first;
                    bj = second;
                }
            }
            for (int v = 0; v < values; ++v) {
                es.records.push_back(static_cast<uint16_t>(pid));
                for (int i = 0; i < n; ++i)
                    es.records.push_back((i == bi || i == bj) ? static_cast<uint16_t>(v)
                                                              : EtaStructure::kNoValue);
            }
        } else {
            // K nowhere defined
            es.records.push_back(static_cast<uint16_t>(pid));
            for (int i = 0; i < n; ++i) es.records.push_back(EtaStructure::kNoValue);
        }
    }

    const uint32_t count = static_cast<uint32_t>(es.records.size() / es.stride);
    if (count == 0) throw validation_error("eta produced no atoms");

    // record lookup table
    std::vector<Atom> sorted(count);
    for (uint32_t a = 0; a < count; ++a) sorted[a] = a;
    const std::size_t bytes = static_cast<std::size_t>(es.stride) * sizeof(uint16_t);
    auto rec_ptr = [&](Atom a) { return es.records.data() + static_cast<std::size_t>(a) * es.stride; };
    std::sort(sorted.begin(), sorted.end(),
              [&](Atom x, Atom y) { return std::memcmp(rec_ptr(x), rec_ptr(y), bytes) < 0; });
    auto lookup = [&](const uint16_t* key) -> Atom {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), key, [&](Atom id, const uint16_t* k) {
            return std::memcmp(rec_ptr(id), k, bytes) < 0;
        });
        if (it == sorted.end() || std::memcmp(rec_ptr(*it), key, bytes) != 0)
            return RainbowStructure::kNoAtom;
        return *it;
    };

    AtomStructureData data;
    data.kind = SignatureKind(Family::PEA, n);
    data.atom_count = count;
    data.diag.assign(n, std::vector<Bitset>(n, Bitset(count)));
    for (uint32_t a = 0; a < count; ++a) {
        const Partition& p = es.partitions[rec_ptr(a)[0]];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (p.block_of[i] == p.block_of[j]) data.diag[i][j].set(a);
    }

    // T_i: (K, ~) ~_i (K', ~') iff K(i) = K'(i) and the patterns agree off i
    for (int i = 0; i < n; ++i) {
        std::unordered_map<std::string, uint32_t> classes;
        std::vector<uint32_t> class_of(count);
        for (uint32_t a = 0; a < count; ++a) {
            const uint16_t* rec = rec_ptr(a);
            const Partition& p = es.partitions[rec[0]];
            std::vector<uint16_t> fp;
            fp.push_back(rec[1 + i]); // K(i), possibly undefined
            int next = 0;
            std::vector<int> remap(p.blocks, -1);
            for (int x = 0; x < n; ++x) {
                if (x == i) continue;
                int b = p.block_of[x];
                if (remap[b] < 0) remap[b] = next++;
                fp.push_back(static_cast<uint16_t>(remap[b]));
            }
            std::string key(reinterpret_cast<const char*>(fp.data()), fp.size() * sizeof(uint16_t));
            auto [it, fresh] = classes.emplace(std::move(key), static_cast<uint32_t>(classes.size()));
            class_of[a] = it->second;
        }
        data.cyl.push_back(
            CylRelation::from_classes(std::move(class_of), static_cast<uint32_t>(classes.size())));
    }

    // S_ij: swap K values and the pattern at i, j
    data.transp.assign(n, std::vector<std::vector<Atom>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto& m = data.transp[i][j];
            m.resize(count);
            for (uint32_t a = 0; a < count; ++a) {
                const uint16_t* rec = rec_ptr(a);
                const Partition& p = es.partitions[rec[0]];
                std::vector<uint8_t> bl(p.block_of.begin(), p.block_of.end());
                std::swap(bl[i], bl[j]);
                std::vector<int> remap(p.blocks, -1);
                int next = 0;
                std::vector<uint16_t> key(static_cast<std::size_t>(es.stride));
                std::vector<uint8_t> nbl(n);
                for (int x = 0; x < n; ++x) {
                    if (remap[bl[x]] < 0) remap[bl[x]] = next++;
                    nbl[x] = static_cast<uint8_t>(remap[bl[x]]);
                }
                int pid = -1;
                for (std::size_t q = 0; q < es.partitions.size(); ++q)
                    if (es.partitions[q].block_of == nbl) {
                        pid = static_cast<int>(q);
                        break;
                    }
                key[0] = static_cast<uint16_t>(pid);
                for (int x = 0; x < n; ++x) {
                    int src = x == i ? j : (x == j ? i : x);
                    key[1 + x] = rec[1 + src];
                }
                Atom b = lookup(key.data());
                if (b == RainbowStructure::kNoAtom)
                    throw validation_error("eta transposition image missing");
                m[a] = b;
            }
        }

    if (limits.descriptors && count <= limits.descriptor_cap) {
        data.descriptors.reserve(count);
        for (uint32_t a = 0; a < count; ++a) data.descriptors.push_back(es.describe(a));
    }

    es.structure = AtomStructure::create(std::move(data));
    return es;
}

} // namespace pea
