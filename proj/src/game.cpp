#include "pea/game.hpp"

#include <algorithm>
#include <random>

namespace pea {

std::string variant_label(GameVariant v) {
    switch (v) {
        case GameVariant::F: return "F";
        case GameVariant::G: return "G";
        case GameVariant::GDelete: return "Gdelete";
    }
    return "?";
}

namespace {

// demand lists per cylindrifier class, most attacking first; built once per solve
struct ScoredClasses {
    std::vector<std::vector<std::vector<Atom>>> ordered;

    void build(const StructurePtr& s) {
        const int n = s->dim();
        const auto& score = s->attack_score();
        ordered.resize(n);
        for (int i = 0; i < n; ++i) {
            const CylRelation& rel = s->cyl_rel(i);
            if (!rel.is_equivalence()) continue;
            ordered[i].resize(rel.class_count());
            for (uint32_t c = 0; c < rel.class_count(); ++c) {
                ordered[i][c] = rel.class_members(c);
                if (!score.empty())
                    std::stable_sort(ordered[i][c].begin(), ordered[i][c].end(),
                                     [&](Atom a, Atom b) { return score[a] > score[b]; });
            }
        }
    }
};

int fresh_node_id(const Network& net, const GameConfig& cfg) {
    if (cfg.variant == GameVariant::G) {
        int mx = -1;
        for (int id : net.nodes()) mx = std::max(mx, id);
        return mx + 1;
    }
    for (int id = 0; id < cfg.pebbles; ++id)
        if (net.position_of(id) < 0) return id;
    return -1;
}

std::vector<int> move_targets(const Network& net, const GameConfig& cfg) {
    std::vector<int> targets;
    if (cfg.variant == GameVariant::GDelete) {
        targets.push_back(CylMove::kExistsPicks);
    } else if (cfg.variant == GameVariant::G) {
        targets.push_back(fresh_node_id(net, cfg));
    } else {
        int fresh = fresh_node_id(net, cfg);
        if (fresh >= 0) targets.push_back(fresh);
        for (int id : net.nodes()) targets.push_back(id);
    }
    return targets;
}

// streams cylindrifier moves; pass 0 yields the top-ranked demand per
// (tuple, coordinate, target) group, pass 1 the remainder
template <typename F>
bool for_each_cyl_move(const Network& net, const GameConfig& cfg, const ScoredClasses* classes,
                       int pass, F&& f) {
    const auto& s = net.structure();
    const int n = net.dim();
    const int k = net.size();
    const bool transp = s->kind().has_transpositions();
    std::vector<int> targets = move_targets(net, cfg);

    for (std::size_t idx = 0; idx < net.tuple_count(); ++idx) {
        Tuple t = net.tuple_at(idx);
        if (transp) {
            bool sorted = true;
            for (int i = 0; i + 1 < n; ++i)
                if (t[i] > t[i + 1]) sorted = false;
            if (!sorted) continue;
        }
        Atom anchor = net.label(idx);
        for (int l = 0; l < n; ++l) {
            if (t[l] != 0) continue; // the freed column is arbitrary
            const CylRelation& rel = s->cyl_rel(l);
            if (rel.is_equivalence()) {
                uint32_t c0 = rel.class_of(anchor);
                for (int d = 0; d < k; ++d) {
                    Tuple u = t;
                    u[l] = static_cast<int8_t>(d);
                    if (rel.class_of(net.label(u)) != c0)
                        throw validation_error("cylindrifier demand depends on the freed column");
                }
            }
            std::vector<Atom> raw_demands;
            const std::vector<Atom>* demands = nullptr;
            if (rel.is_equivalence()) {
                demands = classes ? &classes->ordered[l][rel.class_of(anchor)]
                                  : &rel.class_members(rel.class_of(anchor));
            } else {
                Bitset img(s->atom_count());
                s->cyl_atom_into(l, anchor, img);
                raw_demands = img.to_vector();
                demands = &raw_demands;
            }
            for (int target : targets) {
                bool in_face = false;
                for (int i = 0; i < n; ++i)
                    if (i != l && net.nodes()[t[i]] == target) in_face = true;
                if (in_face) continue;
                std::size_t from = pass == 0 ? 0 : 1;
                std::size_t to = pass == 0 ? std::min<std::size_t>(1, demands->size())
                                           : demands->size();
                for (std::size_t q = from; q < to; ++q) {
                    ForallMove mv;
                    for (int i = 0; i < n; ++i)
                        mv.cyl.tuple[i] = static_cast<int8_t>(net.nodes()[t[i]]);
                    mv.cyl.coord = l;
                    mv.cyl.target = target;
                    mv.cyl.demand = (*demands)[q];
                    if (!f(mv)) return false;
                }
            }
        }
    }
    return true;
}

} // namespace

std::vector<ForallMove> legal_forall_moves(const Network& net, const GameConfig& cfg) {
    std::vector<ForallMove> out;
    if (cfg.variant == GameVariant::GDelete && net.size() == cfg.pebbles) {
        for (int id : net.nodes()) {
            ForallMove mv;
            mv.is_delete = true;
            mv.del.node = id;
            out.push_back(mv);
        }
        return out;
    }
    for (int pass = 0; pass < 2; ++pass)
        for_each_cyl_move(net, cfg, nullptr, pass, [&](const ForallMove& mv) {
            out.push_back(mv);
            return true;
        });
    return out;
}

CompletionStats initial_responses(const StructurePtr& s, Atom a, uint64_t budget,
                                  const std::function<bool(const Network&)>& visit) {
    std::vector<int> pattern = atom_pattern(s, a);
    int q = 1 + *std::max_element(pattern.begin(), pattern.end());
    std::vector<int> ids(q);
    for (int i = 0; i < q; ++i) ids[i] = i;
    Network net(s, ids);
    Tuple d{};
    for (int i = 0; i < s->dim(); ++i) d[i] = static_cast<int8_t>(pattern[i]);
    net.set_label(net.index_of(d), a);
    return enumerate_completions(net, budget, visit);
}

CompletionStats exists_responses(const Network& net, const GameConfig& cfg, const ForallMove& mv,
                                 uint64_t budget, const std::function<bool(const Network&)>& visit) {
    CompletionStats stats;
    const auto& s = net.structure();
    const int n = net.dim();

    if (mv.is_delete) {
        Network trimmed = net.without_node(mv.del.node);
        stats.solutions = 1;
        stats.steps = 1;
        visit(trimmed);
        return stats;
    }

    const CylMove& cm = mv.cyl;
    int target = cm.target;
    if (target == CylMove::kFresh) target = fresh_node_id(net, cfg);

    if (target == CylMove::kExistsPicks) {
        // internal witnesses first: the unchanged network when a column works
        bool internal = false;
        for (int pos = 0; pos < net.size() && !internal; ++pos) {
            Tuple u{};
            for (int i = 0; i < n; ++i)
                u[i] = static_cast<int8_t>(net.position_of(cm.tuple[i]));
            u[cm.coord] = static_cast<int8_t>(pos);
            if (net.label(u) == cm.demand) internal = true;
        }
        if (internal) {
            ++stats.solutions;
            ++stats.steps;
            if (!visit(net)) return stats;
        }
        if (net.size() < cfg.pebbles) {
            int mx = -1;
            for (int id : net.nodes()) mx = std::max(mx, id);
            int fresh = mx + 1;
            Network work = net.with_node(fresh);
            Tuple u{};
            for (int i = 0; i < n; ++i)
                u[i] = static_cast<int8_t>(work.position_of(cm.tuple[i]));
            u[cm.coord] = static_cast<int8_t>(work.position_of(fresh));
            work.set_label(work.index_of(u), cm.demand);
            CompletionStats inner = enumerate_completions(work, budget, visit);
            stats.solutions += inner.solutions;
            stats.steps += inner.steps;
            stats.complete = inner.complete;
        }
        return stats;
    }

    // F / G: the target node is imposed; reuse forgets the old labels first
    Network work = net;
    if (net.position_of(target) >= 0) {
        int pos = net.position_of(target);
        for (std::size_t idx = 0; idx < work.tuple_count(); ++idx) {
            Tuple t = work.tuple_at(idx);
            for (int i = 0; i < n; ++i)
                if (t[i] == pos) {
                    work.set_label(idx, Network::kUnset);
                    break;
                }
        }
    } else {
        work = net.with_node(target);
    }
    Tuple u{};
    for (int i = 0; i < n; ++i) u[i] = static_cast<int8_t>(work.position_of(cm.tuple[i]));
    u[cm.coord] = static_cast<int8_t>(work.position_of(target));
    std::size_t didx = work.index_of(u);
    if (work.label(didx) != Network::kUnset && work.label(didx) != cm.demand) return stats;
    work.set_label(didx, cm.demand);
    return enumerate_completions(work, budget, visit);
}

namespace {

struct TtEntry {
    int win_rounds = 0;  // > 0: win within that many rounds
    int nowin_depth = 0; // refuted when searched this deep
};

struct Solver {
    StructurePtr s;
    GameConfig cfg;
    SolveOptions opt;
    SolveStats stats;
    const ScoredClasses* classes = nullptr;
    Certificate* cert = nullptr;
    std::unordered_map<uint64_t, TtEntry> tt;
    uint64_t budget_left = 0;
    bool truncated = false; // reporting flag, not a poison pill

    int search(const Network& net, int depth) {
        if (depth <= 0) return 0;
        if (!net.fully_labelled())
            throw validation_error("search reached a partially labelled network");
        if (budget_left == 0) {
            truncated = true;
            return -1;
        }
        --budget_left;
        ++stats.search_nodes;

        uint64_t key = 0;
        std::vector<int> perm;
        if (opt.canonicalize) {
            CanonicalNetwork cn = canonicalize(net);
            key = cn.hash;
            perm = std::move(cn.perm);
            auto it = tt.find(key);
            if (it != tt.end()) {
                if (it->second.win_rounds > 0 && it->second.win_rounds <= depth) {
                    ++stats.tt_hits;
                    return it->second.win_rounds;
                }
                if (it->second.nowin_depth >= depth) {
                    ++stats.tt_hits;
                    return 0;
                }
            }
        }

        bool any_unknown = false;
        int result = 0;

        auto try_move = [&](const ForallMove& mv) -> bool {
            // cheap probe: is the responder stuck at all?
            uint64_t seen = 0;
            CompletionStats probe =
                exists_responses(net, cfg, mv, opt.completion_budget, [&](const Network&) {
                    ++seen;
                    return false; // one witness suffices
                });
            budget_left -= std::min(budget_left, probe.steps);
            if (budget_left == 0) {
                truncated = true;
                any_unknown = true;
                return false;
            }
            if (!probe.complete && seen == 0) {
                truncated = true;
                any_unknown = true;
                return true;
            }
            if (seen == 0) {
                record(net, key, perm, mv);
                store_win(key, 1);
                result = 1;
                return false;
            }
            if (depth < 2) return true; // some response exists, no time to refute

            std::vector<Network> responses;
            std::unordered_map<uint64_t, char> dedupe;
            bool overflow = false;
            CompletionStats cs =
                exists_responses(net, cfg, mv, opt.completion_budget, [&](const Network& m) {
                    if (opt.canonicalize) {
                        uint64_t h = canonicalize(m).hash;
                        if (dedupe.emplace(h, 1).second) responses.push_back(m);
                    } else {
                        responses.push_back(m);
                    }
                    if (responses.size() > opt.completion_budget) {
                        overflow = true;
                        return false;
                    }
                    return true;
                });
            stats.responses += cs.solutions;
            budget_left -= std::min(budget_left, cs.steps);
            if (!cs.complete || overflow || budget_left == 0) {
                truncated = true;
                any_unknown = true;
                return budget_left != 0;
            }
            int worst = 0;
            bool refuted = false, unknown = false;
            for (const Network& m : responses) {
                int r = search(m, depth - 1);
                if (r < 0) {
                    unknown = true;
                    break;
                }
                if (r == 0) {
                    refuted = true;
                    break;
                }
                worst = std::max(worst, r);
            }
            if (unknown) {
                any_unknown = true;
                return true;
            }
            if (!refuted) {
                record(net, key, perm, mv);
                store_win(key, 1 + worst);
                result = 1 + worst;
                return false;
            }
            return true;
        };

        if (cfg.variant == GameVariant::GDelete && net.size() == cfg.pebbles) {
            for (const ForallMove& mv : legal_forall_moves(net, cfg))
                if (!try_move(mv)) break;
        } else {
            // order demands: unrealized atoms first (a demand already witnessed
            // on the board invites an identification response and teaches
            // nothing), then by attack score
            std::vector<ForallMove> moves;
            for (int pass = 0; pass < 2; ++pass)
                for_each_cyl_move(net, cfg, classes, pass, [&](const ForallMove& mv) {
                    moves.push_back(mv);
                    return true;
                });
            auto realized = [&](const ForallMove& mv) {
                Tuple u{};
                for (int i = 0; i < net.dim(); ++i) {
                    int p = net.position_of(mv.cyl.tuple[i]);
                    if (p < 0) return false;
                    u[i] = static_cast<int8_t>(p);
                }
                for (int d = 0; d < net.size(); ++d) {
                    u[mv.cyl.coord] = static_cast<int8_t>(d);
                    if (net.label(u) == mv.cyl.demand) return true;
                }
                return false;
            };
            const auto& score = s->attack_score();
            std::stable_sort(moves.begin(), moves.end(),
                             [&](const ForallMove& a, const ForallMove& b) {
                                 bool ra = realized(a), rb = realized(b);
                                 if (ra != rb) return !ra;
                                 if (score.empty()) return false;
                                 return score[a.cyl.demand] > score[b.cyl.demand];
                             });
            for (const ForallMove& mv : moves)
                if (!try_move(mv)) break;
        }

        if (result > 0) return result;
        if (any_unknown) return -1;
        if (opt.canonicalize) {
            TtEntry& e = tt[key];
            e.nowin_depth = std::max(e.nowin_depth, depth);
        }
        return 0;
    }

    void store_win(uint64_t key, int rounds) {
        if (!opt.canonicalize) return;
        TtEntry& e = tt[key];
        if (e.win_rounds == 0 || rounds < e.win_rounds) e.win_rounds = rounds;
    }

    void record(const Network& net, uint64_t key, const std::vector<int>& perm,
                const ForallMove& mv) {
        if (!cert || !opt.canonicalize) return;
        ForallMove canon = mv;
        if (mv.is_delete) {
            canon.del.node = perm[net.position_of(mv.del.node)];
        } else {
            for (int i = 0; i < net.dim(); ++i) {
                int pos = net.position_of(mv.cyl.tuple[i]);
                canon.cyl.tuple[i] = static_cast<int8_t>(perm[pos]);
            }
            if (mv.cyl.target >= 0) {
                int pos = net.position_of(mv.cyl.target);
                canon.cyl.target = pos >= 0 ? perm[pos] : CylMove::kFresh;
            }
        }
        cert->policy.emplace(key, canon);
    }
};

} // namespace

Outcome solve_game(const StructurePtr& s, const GameConfig& cfg, int depth,
                   const SolveOptions& opt) {
    Outcome out;
    if (cfg.variant != GameVariant::G && cfg.pebbles <= s->dim())
        throw signature_error("the game needs more pebbles than the dimension");

    ScoredClasses classes;
    classes.build(s);

    std::vector<Atom> roots(s->atom_count());
    for (Atom a = 0; a < s->atom_count(); ++a) roots[a] = a;
    const auto& score = s->attack_score();
    if (!score.empty())
        std::stable_sort(roots.begin(), roots.end(),
                         [&](Atom a, Atom b) { return score[a] > score[b]; });

    bool truncated_any = false;
    const uint64_t root_count =
        opt.root_cap > 0 ? std::min<uint64_t>(opt.root_cap, roots.size()) : roots.size();
    if (root_count < roots.size()) truncated_any = true;

    struct RootState {
        Atom atom = 0;
        std::unique_ptr<Solver> solver;
        std::shared_ptr<Certificate> cert;
        std::vector<Network> responses;
        bool dead = false; // initial enumeration failed
    };
    std::vector<RootState> states(root_count);
    for (uint64_t q = 0; q < root_count; ++q) {
        RootState& st = states[q];
        st.atom = roots[q];
        st.solver = std::make_unique<Solver>();
        st.solver->s = s;
        st.solver->cfg = cfg;
        st.solver->opt = opt;
        st.solver->classes = &classes;
        st.cert = std::make_shared<Certificate>();
        st.cert->root_atom = st.atom;
        st.solver->cert = st.cert.get();
        bool overflow = false;
        CompletionStats cs = initial_responses(s, st.atom, opt.completion_budget,
                                               [&](const Network& m) {
                                                   st.responses.push_back(m);
                                                   if (st.responses.size() >
                                                       opt.completion_budget) {
                                                       overflow = true;
                                                       return false;
                                                   }
                                                   return true;
                                               });
        if (!cs.complete || overflow) {
            st.dead = true;
            truncated_any = true;
            continue;
        }
        if (st.responses.empty()) {
            out.kind = Outcome::Kind::ForallWins;
            out.rounds = 1;
            st.cert->rounds = 1;
            out.certificate = st.cert;
            return out;
        }
    }

    // depth-major scan: shallow wins surface before deep refutations start
    for (int d = 1; d <= depth - 1; ++d) {
        for (RootState& st : states) {
            if (st.dead) continue;
            st.solver->budget_left = opt.budget; // fresh budget per level
            int worst = 0;
            bool refuted = false, unknown = false;
            for (const Network& m : st.responses) {
                int r = st.solver->search(m, d);
                if (r < 0) {
                    unknown = true;
                    break;
                }
                if (r == 0) {
                    refuted = true;
                    break;
                }
                worst = std::max(worst, r);
            }
            if (st.solver->truncated) truncated_any = true;
            if (!refuted && !unknown) {
                out.kind = Outcome::Kind::ForallWins;
                out.rounds = 1 + worst;
                st.cert->rounds = 1 + worst;
                out.certificate = st.cert;
                for (RootState& other : states)
                    if (other.solver) {
                        out.stats.search_nodes += other.solver->stats.search_nodes;
                        out.stats.responses += other.solver->stats.responses;
                        out.stats.tt_hits += other.solver->stats.tt_hits;
                    }
                out.stats.truncated = truncated_any;
                return out;
            }
        }
    }
    for (RootState& st : states)
        if (st.solver) {
            out.stats.search_nodes += st.solver->stats.search_nodes;
            out.stats.responses += st.solver->stats.responses;
            out.stats.tt_hits += st.solver->stats.tt_hits;
            if (st.solver->truncated) truncated_any = true;
        }

    out.stats.truncated = truncated_any;
    if (truncated_any) {
        out.kind = Outcome::Kind::BudgetExhausted;
        out.rounds = 0;
    } else {
        out.kind = Outcome::Kind::ExistsSurvives;
        out.rounds = depth;
    }
    return out;
}

std::optional<int> replay_certificate(const StructurePtr& s, const GameConfig& cfg,
                                      const Certificate& cert, uint64_t seed,
                                      const SolveOptions& opt, std::string* err) {
    std::mt19937_64 rng(seed);
    auto fail = [&](const std::string& m) -> std::optional<int> {
        if (err) *err = m;
        return std::nullopt;
    };

    std::vector<Network> responses;
    initial_responses(s, cert.root_atom, opt.completion_budget, [&](const Network& m) {
        responses.push_back(m);
        return true;
    });
    if (responses.empty()) return 1;
    Network net = responses[rng() % responses.size()];
    int round = 1;

    while (round < cert.rounds) {
        CanonicalNetwork cn = canonicalize(net);
        auto it = cert.policy.find(cn.hash);
        if (it == cert.policy.end()) return fail("no policy entry for reached position");
        std::vector<int> inv(cn.perm.size());
        for (std::size_t p = 0; p < cn.perm.size(); ++p) inv[cn.perm[p]] = static_cast<int>(p);
        ForallMove mv = it->second;
        if (mv.is_delete) {
            mv.del.node = net.nodes()[inv[mv.del.node]];
        } else {
            for (int i = 0; i < net.dim(); ++i)
                mv.cyl.tuple[i] = static_cast<int8_t>(net.nodes()[inv[mv.cyl.tuple[i]]]);
            if (mv.cyl.target >= 0) {
                mv.cyl.target = net.nodes()[inv[mv.cyl.target]];
            } else if (mv.cyl.target == CylMove::kFresh) {
                int fresh = fresh_node_id(net, cfg);
                if (fresh < 0) return fail("no pebble available for a fresh node");
                mv.cyl.target = fresh;
            }
        }
        responses.clear();
        exists_responses(net, cfg, mv, opt.completion_budget, [&](const Network& m) {
            responses.push_back(m);
            return true;
        });
        ++round;
        if (responses.empty()) return round;
        net = responses[rng() % responses.size()];
    }
    return fail("responder survived beyond the certificate bound");
}

} // namespace pea
