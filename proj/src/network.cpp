#include "pea/network.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pea {

Network::Network(StructurePtr s, std::vector<int> node_ids)
    : structure_(std::move(s)), n_(structure_->dim()), nodes_(std::move(node_ids)) {
    if (n_ > kMaxDim) throw signature_error("network dimension exceeds the supported bound");
    std::sort(nodes_.begin(), nodes_.end());
    std::size_t count = 1;
    for (int i = 0; i < n_; ++i) count *= nodes_.size();
    labels_.assign(count, kUnset);
}

int Network::position_of(int node_id) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), node_id);
    if (it == nodes_.end() || *it != node_id) return -1;
    return static_cast<int>(it - nodes_.begin());
}

std::size_t Network::index_of(const Tuple& t) const {
    std::size_t idx = 0;
    const std::size_t k = nodes_.size();
    for (int i = n_ - 1; i >= 0; --i) idx = idx * k + static_cast<std::size_t>(t[i]);
    return idx;
}

Tuple Network::tuple_at(std::size_t idx) const {
    Tuple t{};
    const std::size_t k = nodes_.size();
    for (int i = 0; i < n_; ++i) {
        t[i] = static_cast<int8_t>(idx % k);
        idx /= k;
    }
    return t;
}

bool Network::fully_labelled() const {
    for (Atom a : labels_)
        if (a == kUnset) return false;
    return true;
}

Network Network::without_node(int node_id) const {
    int gone = position_of(node_id);
    std::vector<int> rest;
    for (int id : nodes_)
        if (id != node_id) rest.push_back(id);
    Network out(structure_, rest);
    for (std::size_t idx = 0; idx < out.labels_.size(); ++idx) {
        Tuple t = out.tuple_at(idx);
        Tuple src{};
        for (int i = 0; i < n_; ++i) src[i] = static_cast<int8_t>(t[i] >= gone ? t[i] + 1 : t[i]);
        out.labels_[idx] = labels_[index_of(src)];
    }
    return out;
}

Network Network::with_node(int node_id) const {
    std::vector<int> ids = nodes_;
    ids.push_back(node_id);
    Network out(structure_, ids);
    int fresh = out.position_of(node_id);
    for (std::size_t idx = 0; idx < labels_.size(); ++idx) {
        Tuple t = tuple_at(idx);
        Tuple dst{};
        for (int i = 0; i < n_; ++i) dst[i] = static_cast<int8_t>(t[i] >= fresh ? t[i] + 1 : t[i]);
        out.labels_[out.index_of(dst)] = labels_[idx];
    }
    return out;
}

std::string Network::to_string() const {
    std::ostringstream os;
    os << "nodes{";
    for (std::size_t i = 0; i < nodes_.size(); ++i) os << (i ? "," : "") << nodes_[i];
    os << "}";
    for (std::size_t idx = 0; idx < labels_.size(); ++idx) {
        Tuple t = tuple_at(idx);
        os << " (";
        for (int i = 0; i < n_; ++i) os << (i ? "," : "") << nodes_[t[i]];
        os << ")=";
        if (labels_[idx] == kUnset)
            os << "?";
        else
            os << labels_[idx];
    }
    return os.str();
}

std::vector<NetworkViolation> validate_network(const Network& net) {
    std::vector<NetworkViolation> out;
    const auto& s = *net.structure();
    const int n = net.dim();
    const int k = net.size();

    auto tuple_ids = [&](const Tuple& t) {
        std::vector<int> ids(n);
        for (int i = 0; i < n; ++i) ids[i] = net.nodes()[t[i]];
        return ids;
    };

    for (std::size_t idx = 0; idx < net.tuple_count(); ++idx) {
        Atom a = net.label(idx);
        Tuple t = net.tuple_at(idx);
        if (a == Network::kUnset) {
            out.push_back({"unset", tuple_ids(t), "tuple not labelled"});
            continue;
        }
        // diagonal constraints at repeated nodes; a diagonal label on distinct
        // nodes is legal and identifies them (the board may name one point twice)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (t[i] == t[j] && !s.diag_set(i, j).test(a))
                    out.push_back({"diagonal", tuple_ids(t),
                                   "label outside E_" + std::to_string(i) + std::to_string(j)});
        // cylindrifier accessibility against every i-variant
        for (int i = 0; i < n; ++i)
            for (int d = 0; d < k; ++d) {
                Tuple u = t;
                u[i] = static_cast<int8_t>(d);
                Atom b = net.label(u);
                if (b == Network::kUnset) continue;
                if (!s.cyl_related(i, b, a))
                    out.push_back({"cylindrifier", tuple_ids(t),
                                   "label of the " + std::to_string(i) +
                                       "-variant not T_" + std::to_string(i) + "-related"});
            }
        // transpositions
        if (s.kind().has_transpositions()) {
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    Tuple u = t;
                    std::swap(u[i], u[j]);
                    Atom b = net.label(u);
                    if (b == Network::kUnset) continue;
                    if (b != s.transp_image(i, j, a))
                        out.push_back({"transposition", tuple_ids(t),
                                       "swapped tuple not labelled by S_" + std::to_string(i) +
                                           std::to_string(j) + " image"});
                }
        }
    }
    return out;
}

namespace {

// orbit representative under coordinate permutations: non-decreasing position
// tuple (meaningful only for kinds with transpositions)
bool is_sorted_tuple(const Tuple& t, int n) {
    for (int i = 0; i + 1 < n; ++i)
        if (t[i] > t[i + 1]) return false;
    return true;
}

} // namespace

CompletionStats enumerate_completions(const Network& net, uint64_t step_budget,
                                      const std::function<bool(const Network&)>& visit) {
    CompletionStats stats;
    const auto& s = *net.structure();
    const int n = net.dim();
    const int k = net.size();
    const bool transp = s.kind().has_transpositions();
    Network work = net;

    // close the given labels under coordinate permutations first; an
    // inconsistent seed has no completions at all
    if (transp) {
        std::vector<std::size_t> queue;
        for (std::size_t idx = 0; idx < work.tuple_count(); ++idx)
            if (work.label(idx) != Network::kUnset) queue.push_back(idx);
        while (!queue.empty()) {
            std::size_t cur = queue.back();
            queue.pop_back();
            Tuple t = work.tuple_at(cur);
            Atom lab = work.label(cur);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    if (t[i] == t[j]) continue;
                    Tuple u = t;
                    std::swap(u[i], u[j]);
                    std::size_t v = work.index_of(u);
                    Atom expect = s.transp_image(i, j, lab);
                    Atom existing = work.label(v);
                    if (existing == Network::kUnset) {
                        work.set_label(v, expect);
                        queue.push_back(v);
                    } else if (existing != expect) {
                        return stats; // inconsistent seed
                    }
                }
        }
    }

    // the seed itself must be consistent (demands against old labels)
    for (std::size_t idx = 0; idx < work.tuple_count(); ++idx) {
        Atom a = work.label(idx);
        if (a == Network::kUnset) continue;
        Tuple t = work.tuple_at(idx);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (t[i] == t[j] && !s.diag_set(i, j).test(a)) return stats;
        for (int i = 0; i < n; ++i)
            for (int d = 0; d < k; ++d) {
                Tuple u = t;
                u[i] = static_cast<int8_t>(d);
                Atom b = work.label(u);
                if (b != Network::kUnset && !s.cyl_related(i, b, a)) return stats;
            }
    }

    // unknowns: orbit representatives among unset tuples
    std::vector<std::size_t> unknowns;
    for (std::size_t idx = 0; idx < work.tuple_count(); ++idx) {
        if (work.label(idx) != Network::kUnset) continue;
        Tuple t = work.tuple_at(idx);
        if (transp && !is_sorted_tuple(t, n)) continue;
        unknowns.push_back(idx);
    }
    // order unknowns in BFS layers from the initially-set tuples so that each
    // one is placed with at least one labelled cylindrifier neighbour
    {
        std::vector<char> seen(work.tuple_count(), 0);
        std::vector<std::size_t> frontier;
        for (std::size_t idx = 0; idx < work.tuple_count(); ++idx)
            if (work.label(idx) != Network::kUnset) {
                seen[idx] = 1;
                frontier.push_back(idx);
            }
        std::vector<std::size_t> ordered;
        auto orbit_rep = [&](std::size_t idx) {
            if (!transp) return idx;
            Tuple t = work.tuple_at(idx);
            std::sort(t.begin(), t.begin() + n);
            return work.index_of(t);
        };
        while (!frontier.empty()) {
            std::vector<std::size_t> next;
            for (std::size_t idx : frontier) {
                Tuple t = work.tuple_at(idx);
                for (int i = 0; i < n; ++i)
                    for (int d = 0; d < k; ++d) {
                        Tuple u = t;
                        u[i] = static_cast<int8_t>(d);
                        std::size_t v = work.index_of(u);
                        if (seen[v]) continue;
                        seen[v] = 1;
                        next.push_back(v);
                        std::size_t rep = orbit_rep(v);
                        if (std::find(ordered.begin(), ordered.end(), rep) == ordered.end())
                            ordered.push_back(rep);
                    }
            }
            frontier = std::move(next);
        }
        // append any unreachable reps in index order (empty starting networks)
        for (std::size_t idx : unknowns)
            if (std::find(ordered.begin(), ordered.end(), idx) == ordered.end())
                ordered.push_back(idx);
        // keep only genuine unknowns, in BFS order
        std::vector<std::size_t> filtered;
        for (std::size_t idx : ordered)
            if (work.label(idx) == Network::kUnset &&
                std::find(unknowns.begin(), unknowns.end(), idx) != unknowns.end())
                filtered.push_back(idx);
        unknowns = std::move(filtered);
    }

    // place a label and its whole coordinate-permutation orbit, with incident
    // checks; returns placed indices for undo, empty + false on conflict
    auto check_incident = [&](std::size_t idx, Atom a) -> bool {
        Tuple t = work.tuple_at(idx);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (t[i] == t[j] && !s.diag_set(i, j).test(a)) return false;
        for (int i = 0; i < n; ++i)
            for (int d = 0; d < k; ++d) {
                Tuple u = t;
                u[i] = static_cast<int8_t>(d);
                Atom b = work.label(u);
                if (b == Network::kUnset) continue;
                if (!s.cyl_related(i, b, a) || !s.cyl_related(i, a, b)) return false;
            }
        if (transp) {
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    Tuple u = t;
                    std::swap(u[i], u[j]);
                    Atom b = work.label(u);
                    if (b == Network::kUnset) continue;
                    if (b != s.transp_image(i, j, a)) return false;
                }
        }
        return true;
    };

    std::vector<std::size_t> placed_stack;
    auto place_orbit = [&](std::size_t idx, Atom a, std::size_t& placed_from) -> bool {
        placed_from = placed_stack.size();
        // enumerate the orbit by applying adjacent transpositions (or just the
        // tuple itself without transpositions)
        std::vector<std::pair<std::size_t, Atom>> todo = {{idx, a}};
        std::size_t head = 0;
        while (head < todo.size()) {
            auto [cur, lab] = todo[head++];
            Atom existing = work.label(cur);
            if (existing != Network::kUnset) {
                if (existing != lab) return false;
                continue;
            }
            if (!check_incident(cur, lab)) return false;
            work.set_label(cur, lab);
            placed_stack.push_back(cur);
            if (transp) {
                Tuple t = work.tuple_at(cur);
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) {
                        if (t[i] == t[j]) continue;
                        Tuple u = t;
                        std::swap(u[i], u[j]);
                        todo.push_back({work.index_of(u), s.transp_image(i, j, lab)});
                    }
            }
        }
        return true;
    };
    auto undo_to = [&](std::size_t mark) {
        while (placed_stack.size() > mark) {
            work.set_label(placed_stack.back(), Network::kUnset);
            placed_stack.pop_back();
        }
    };

    bool aborted = false;
    std::function<bool(std::size_t)> rec = [&](std::size_t u) -> bool {
        if (++stats.steps > step_budget) {
            stats.complete = false;
            return false;
        }
        if (u == unknowns.size()) {
            ++stats.solutions;
            if (!visit(work)) {
                aborted = true;
                return false;
            }
            return true;
        }
        std::size_t idx = unknowns[u];
        if (work.label(idx) != Network::kUnset) return rec(u + 1); // set via an orbit
        Tuple t = work.tuple_at(idx);
        // candidate domain from the first labelled cylindrifier neighbour
        const std::vector<Atom>* domain = nullptr;
        int dom_i = -1;
        Atom dom_anchor = 0;
        for (int i = 0; i < n && !domain; ++i)
            for (int d = 0; d < k; ++d) {
                Tuple v = t;
                v[i] = static_cast<int8_t>(d);
                Atom b = work.label(v);
                if (b == Network::kUnset) continue;
                const CylRelation& rel = s.cyl_rel(i);
                if (rel.is_equivalence()) {
                    domain = &rel.class_members(rel.class_of(b));
                    dom_i = i;
                    dom_anchor = b;
                    break;
                }
            }
        if (domain) {
            for (Atom cand : *domain) {
                std::size_t mark;
                if (place_orbit(idx, cand, mark)) {
                    if (!rec(u + 1)) {
                        undo_to(mark);
                        return false;
                    }
                }
                undo_to(mark);
            }
            (void)dom_i;
            (void)dom_anchor;
        } else {
            for (Atom cand = 0; cand < s.atom_count(); ++cand) {
                std::size_t mark;
                if (place_orbit(idx, cand, mark)) {
                    if (!rec(u + 1)) {
                        undo_to(mark);
                        return false;
                    }
                }
                undo_to(mark);
            }
        }
        return true;
    };
    rec(0);
    if (aborted) stats.complete = true;
    return stats;
}

CanonicalNetwork canonicalize(const Network& net) {
    const int k = net.size();
    const int n = net.dim();
    CanonicalNetwork out;

    // node invariants cut the permutation group
    std::vector<uint64_t> inv(k, 1469598103934665603ull);
    for (std::size_t idx = 0; idx < net.tuple_count(); ++idx) {
        Tuple t = net.tuple_at(idx);
        uint64_t h = 0x100000001b3ull * (net.label(idx) + 1);
        // contribution: which positions the label sits at, order-free per node
        for (int i = 0; i < n; ++i) inv[t[i]] ^= h * (0x9e3779b97f4a7c15ull + i);
    }
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return inv[a] < inv[b]; });

    // permutations respecting the invariant groups
    std::vector<std::pair<int, int>> groups; // [from, to) in `order`
    for (int i = 0; i < k;) {
        int j = i;
        while (j < k && inv[order[j]] == inv[order[i]]) ++j;
        groups.push_back({i, j});
        i = j;
    }

    std::vector<int> perm(k); // original position -> canonical position
    std::vector<uint32_t> best;
    std::vector<int> best_perm;
    std::vector<uint32_t> enc(net.tuple_count() + 1);

    std::function<void(std::size_t)> try_perm = [&](std::size_t gi) {
        if (gi == groups.size()) {
            enc[0] = static_cast<uint32_t>(k);
            // encode labels with positions renamed by perm
            for (std::size_t idx = 0; idx < net.tuple_count(); ++idx) {
                Tuple t = net.tuple_at(idx);
                Tuple c{};
                for (int i = 0; i < n; ++i) c[i] = static_cast<int8_t>(perm[t[i]]);
                enc[1 + net.index_of(c)] = net.label(idx) + 1;
            }
            if (best.empty() || enc < best) {
                best = enc;
                best_perm = perm;
            }
            return;
        }
        auto [from, to] = groups[gi];
        std::vector<int> slice(order.begin() + from, order.begin() + to);
        std::sort(slice.begin(), slice.end());
        do {
            for (int p = from; p < to; ++p) perm[slice[p - from]] = p;
            try_perm(gi + 1);
        } while (std::next_permutation(slice.begin(), slice.end()));
    };
    try_perm(0);

    out.enc = std::move(best);
    out.perm = std::move(best_perm);
    uint64_t h = 1469598103934665603ull;
    for (uint32_t v : out.enc) {
        h ^= v;
        h *= 0x100000001b3ull;
    }
    out.hash = h;
    return out;
}

std::vector<int> atom_pattern(const StructurePtr& s, Atom a) {
    const int n = s->dim();
    std::vector<int> group(n);
    std::iota(group.begin(), group.end(), 0);
    // union coordinates i,j whenever the atom lies in E_ij
    std::function<int(int)> find = [&](int x) { return group[x] == x ? x : group[x] = find(group[x]); };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (s->diag_set(i, j).test(a)) group[find(i)] = find(j);
    std::vector<int> out(n);
    std::vector<int> remap(n, -1);
    int next = 0;
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        if (remap[r] < 0) remap[r] = next++;
        out[i] = remap[r];
    }
    return out;
}

} // namespace pea
