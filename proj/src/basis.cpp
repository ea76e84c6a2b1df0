#include "pea/basis.hpp"

#include "pea/game.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace pea {

namespace {

struct Pool {
    std::vector<Network> nets;
    std::unordered_map<uint64_t, std::size_t> by_hash;
    std::vector<char> alive;

    bool add(const Network& n, uint64_t h) {
        if (by_hash.count(h)) return false;
        by_hash.emplace(h, nets.size());
        nets.push_back(n);
        alive.push_back(1);
        return true;
    }
    bool contains_alive(uint64_t h) const {
        auto it = by_hash.find(h);
        return it != by_hash.end() && alive[it->second];
    }
};

} // namespace

BasisResult basis_search(const StructurePtr& s, int ndim, const BasisOptions& opt) {
    if (ndim <= s->dim()) throw signature_error("basis dimension must exceed the algebra dimension");
    BasisResult res;
    const int n = s->dim();
    const uint32_t atoms = s->atom_count();

    Pool pool;

    // seeds: one-node networks; the unique tuple label must sit below every d_ij
    {
        Bitset core(atoms, true);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) core &= s->diag_set(i, j);
        core.for_each([&](std::size_t a) {
            Network net(s, {0});
            net.set_label(0, static_cast<Atom>(a));
            if (validate_network(net).empty()) {
                CanonicalNetwork cn = canonicalize(net);
                pool.add(net, cn.hash);
            }
        });
    }

    // breadth-first closure: every network arises by extending its restriction
    for (std::size_t head = 0; head < pool.nets.size(); ++head) {
        if (pool.nets[head].size() >= ndim) continue;
        Network base = pool.nets[head];
        int fresh = 0;
        while (base.position_of(fresh) >= 0) ++fresh;
        Network ext = base.with_node(fresh);
        CompletionStats cs = enumerate_completions(ext, opt.completion_budget,
                                                   [&](const Network& m) {
                                                       CanonicalNetwork cn = canonicalize(m);
                                                       pool.add(m, cn.hash);
                                                       return pool.nets.size() <=
                                                              opt.network_budget;
                                                   });
        if (!cs.complete || pool.nets.size() > opt.network_budget) {
            res.complete = false;
            break;
        }
    }
    res.enumerated = pool.nets.size();
    if (!res.complete) return res;

    // greatest fixed point: drop networks with an unwitnessable demand or an
    // unsafe forced deletion
    GameConfig cfg;
    cfg.variant = GameVariant::GDelete;
    cfg.pebbles = ndim;
    bool changed = true;
    while (changed) {
        changed = false;
        ++res.iterations;
        for (std::size_t q = 0; q < pool.nets.size(); ++q) {
            if (!pool.alive[q]) continue;
            const Network& net = pool.nets[q];
            bool safe = true;
            if (net.size() == ndim) {
                // deletions are forced; every result must stay in the pool
                for (int id : net.nodes()) {
                    CanonicalNetwork cn = canonicalize(net.without_node(id));
                    if (!pool.contains_alive(cn.hash)) {
                        safe = false;
                        break;
                    }
                }
            } else {
                for (const ForallMove& mv : legal_forall_moves(net, cfg)) {
                    bool witnessed = false;
                    exists_responses(net, cfg, mv, opt.completion_budget, [&](const Network& m) {
                        CanonicalNetwork cn = canonicalize(m);
                        if (pool.contains_alive(cn.hash)) {
                            witnessed = true;
                            return false;
                        }
                        return true;
                    });
                    if (!witnessed) {
                        safe = false;
                        break;
                    }
                }
            }
            if (!safe) {
                pool.alive[q] = 0;
                changed = true;
            }
        }
    }

    // clause 1: every atom realized at an injective tuple of a survivor
    std::vector<char> hit(atoms, 0);
    for (std::size_t q = 0; q < pool.nets.size(); ++q) {
        if (!pool.alive[q]) continue;
        const Network& net = pool.nets[q];
        if (net.size() < n) continue;
        for (std::size_t idx = 0; idx < net.tuple_count(); ++idx) {
            Tuple t = net.tuple_at(idx);
            bool inj = true;
            for (int i = 0; i < n && inj; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (t[i] == t[j]) {
                        inj = false;
                        break;
                    }
            if (inj) hit[net.label(idx)] = 1;
        }
    }
    bool all = true;
    for (uint32_t a = 0; a < atoms; ++a)
        if (!hit[a]) {
            all = false;
            break;
        }

    res.found = all;
    for (std::size_t q = 0; q < pool.nets.size(); ++q)
        if (pool.alive[q]) res.networks.push_back(pool.nets[q]);
    if (pool.nets.empty() || res.networks.empty()) res.found = false;
    return res;
}

} // namespace pea
