// Command-line workbench: builds rainbow and graph-based atom structures,
// runs the axiom checker, solves bounded atomic games, plays scripted
// strategy matches, and performs the splitting and transfer constructions.
//
// Exit codes: 0 success, 1 check failure, 2 usage error, 3 budget exhausted.

#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "pea/axioms.hpp"
#include "pea/basis.hpp"
#include "pea/blowup.hpp"
#include "pea/game.hpp"
#include "pea/graph_game.hpp"
#include "pea/json_io.hpp"
#include "pea/monk.hpp"
#include "pea/rainbow.hpp"
#include "pea/term.hpp"
#include "pea/transfer.hpp"

using namespace pea;

namespace {

uint64_t default_budget() {
    if (const char* env = std::getenv("PEAWB_BUDGET")) return std::strtoull(env, nullptr, 10);
    return 2'000'000;
}

struct SchemeArgs {
    std::string named;   // pea_finite | file.json
    std::string variant; // std | split | order | nonfinax
    int n = 3;
    int greens = 0, reds = 0, copies = 1;
    int mu = 0, kappa = 0;
    int green_prefix = 0, red_prefix = 0;

    ColourScheme resolve() const {
        if (!named.empty()) {
            if (named == "pea_finite") return ColourScheme::std_rainbow(n, n + 1, n);
            if (named.size() > 5 && named.substr(named.size() - 5) == ".json")
                return scheme_from_json(read_file(named));
            throw parse_error("unknown scheme name '" + named + "'");
        }
        if (variant == "std")
            return ColourScheme::std_rainbow(n, greens ? greens : n + 1, reds ? reds : n);
        if (variant == "split")
            return ColourScheme::split(n, greens ? greens : n + 1, reds ? reds : n, copies);
        if (variant == "order") return ColourScheme::order(n, green_prefix, red_prefix);
        if (variant == "nonfinax") return ColourScheme::nonfinax(n, mu, kappa);
        throw parse_error("scheme required: --scheme or --variant");
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("--scheme", named, "named scheme (pea_finite) or scheme JSON file");
        cmd->add_option("--variant", variant, "std | split | order | nonfinax");
        cmd->add_option("--n", n, "dimension");
        cmd->add_option("--greens", greens, "green tint count (std/split)");
        cmd->add_option("--reds", reds, "red index base (std/split)");
        cmd->add_option("--copies", copies, "red copies (split)");
        cmd->add_option("--mu", mu, "green count (nonfinax)");
        cmd->add_option("--kappa", kappa, "red count (nonfinax)");
        cmd->add_option("--green-prefix", green_prefix, "green prefix (order)");
        cmd->add_option("--red-prefix", red_prefix, "red prefix (order)");
    }
};

SimpleGraph resolve_graph(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        std::string kind = spec.substr(0, colon);
        int k = std::stoi(spec.substr(colon + 1));
        if (kind == "cycle") return cycle_graph(k);
        if (kind == "path") return path_graph(k);
        if (kind == "complete") return complete_graph(k);
        if (kind == "edgeless") return edgeless_graph(k);
        throw parse_error("unknown graph kind '" + kind + "'");
    }
    return simple_graph_from_json(read_file(spec));
}

void emit(const std::string& out, const std::string& content) {
    if (out.empty())
        std::cout << content << "\n";
    else
        write_file(out, content);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"atom-structure workbench"};
    app.require_subcommand(1);
    uint64_t budget = default_budget();
    app.add_option("--budget", budget, "global search/enumeration budget");
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker cap for parallel checks");
    uint64_t seed = 1;
    app.add_option("--seed", seed, "seed for randomized strategies");

    std::string out;

    auto* cmd_build = app.add_subcommand("build", "build a rainbow structure, dump JSON");
    SchemeArgs build_scheme;
    build_scheme.attach(cmd_build);
    cmd_build->add_option("--out", out, "output file (default stdout)");

    auto* cmd_axioms = app.add_subcommand("axioms", "exhaustive axiom + simplicity check");
    SchemeArgs ax_scheme;
    ax_scheme.attach(cmd_axioms);
    std::string ax_structure;
    cmd_axioms->add_option("--structure", ax_structure, "structure JSON file instead of a scheme");
    cmd_axioms->add_option("--out", out, "report file (default stdout)");

    auto* cmd_solve = app.add_subcommand("solve", "bounded-depth game solve with certificate");
    SchemeArgs solve_scheme;
    solve_scheme.attach(cmd_solve);
    std::string solve_structure, solve_variant = "F";
    int pebbles = 6, depth = 8;
    uint64_t root_cap = 64;
    cmd_solve->add_option("--structure", solve_structure, "structure JSON file");
    cmd_solve->add_option("--game", solve_variant, "F | G | Gdelete");
    cmd_solve->add_option("--pebbles", pebbles, "node budget");
    cmd_solve->add_option("--depth", depth, "round bound");
    cmd_solve->add_option("--root-cap", root_cap, "opening atoms scanned (0 = all)");
    cmd_solve->add_option("--out", out, "verdict file (default stdout)");

    auto* cmd_match = app.add_subcommand("match", "scripted strategy match (graph view)");
    SchemeArgs match_scheme;
    match_scheme.attach(cmd_match);
    std::string forall_name = "cones", exists_name = "random";
    int match_pebbles = 6, match_rounds = 8;
    cmd_match->add_option("--forall", forall_name, "cones | random");
    cmd_match->add_option("--exists", exists_name, "rho | random | solver");
    cmd_match->add_option("--pebbles", match_pebbles, "board cap (0 = growing)");
    cmd_match->add_option("--rounds", match_rounds, "round count");
    cmd_match->add_option("--out", out, "transcript file (default stdout)");

    auto* cmd_split = app.add_subcommand("split", "red-splitting transform + verification");
    int split_n = 3, split_copies = 2;
    cmd_split->add_option("--n", split_n, "dimension");
    cmd_split->add_option("--copies", split_copies, "copies per red");
    cmd_split->add_option("--out", out, "report file (default stdout)");

    auto* cmd_transfer = app.add_subcommand("transfer", "assignment transfer between red counts");
    int tr_n = 3, tr_mu = 4, tr_ka = 10, tr_kb = 6, tr_m = 1, tr_eqs = 20;
    cmd_transfer->add_option("--n", tr_n, "dimension");
    cmd_transfer->add_option("--mu", tr_mu, "green count");
    cmd_transfer->add_option("--kappa-a", tr_ka, "red count of the source");
    cmd_transfer->add_option("--kappa-b", tr_kb, "red count of the target");
    cmd_transfer->add_option("--vars", tr_m, "variable budget m");
    cmd_transfer->add_option("--equations", tr_eqs, "random equations to compare");
    cmd_transfer->add_option("--out", out, "report file (default stdout)");

    auto* cmd_chrom = app.add_subcommand("chromatic", "exact chromatic number");
    std::string graph_spec;
    cmd_chrom->add_option("--graph", graph_spec, "graph JSON file or cycle:k|path:k|complete:k")
        ->required();
    auto* cmd_girth = app.add_subcommand("girth", "shortest cycle length");
    cmd_girth->add_option("--graph", graph_spec, "graph JSON file or named")->required();
    auto* cmd_eta = app.add_subcommand("eta", "graph-based atom structure");
    int eta_n = 3;
    cmd_eta->add_option("--graph", graph_spec, "graph JSON file or named")->required();
    cmd_eta->add_option("--n", eta_n, "dimension");
    cmd_eta->add_option("--out", out, "structure dump file (default stdout)");

    auto* cmd_erdos = app.add_subcommand("erdos", "search for a high-girth high-chi witness");
    int erdos_girth = 5, erdos_chi = 4;
    cmd_erdos->add_option("--girth", erdos_girth, "minimum girth");
    cmd_erdos->add_option("--chi", erdos_chi, "minimum chromatic number");
    cmd_erdos->add_option("--out", out, "witness file (default stdout)");

    auto* cmd_basis = app.add_subcommand("basis", "n-dimensional basis search");
    SchemeArgs basis_scheme;
    basis_scheme.attach(cmd_basis);
    std::string basis_structure;
    int basis_dim = 4;
    cmd_basis->add_option("--structure", basis_structure, "structure JSON file");
    cmd_basis->add_option("--ndim", basis_dim, "basis dimension");

    auto* cmd_exp = app.add_subcommand("experiment", "run a pipeline description");
    std::string exp_file;
    cmd_exp->add_option("--pipeline", exp_file, "pipeline JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_build) {
            auto rs = build_rainbow(build_scheme.resolve(), BuildLimits{budget});
            emit(out, structure_to_json(rs.structure));
            return 0;
        }
        if (*cmd_axioms) {
            StructurePtr s;
            if (!ax_structure.empty())
                s = structure_from_json(read_file(ax_structure));
            else
                s = build_rainbow(ax_scheme.resolve(), BuildLimits{budget}).structure;
            CheckOptions copt;
            copt.jobs = jobs;
            AxiomReport rep = check_axioms(s, copt);
            bool simple = rep.all_pass() ? check_simple(s) : false;
            emit(out, axiom_report_to_json(rep));
            std::cerr << rep.summary() << "; simple=" << (simple ? "yes" : "no") << "\n";
            return rep.all_pass() && simple ? 0 : 1;
        }
        if (*cmd_solve) {
            StructurePtr s;
            if (!solve_structure.empty())
                s = structure_from_json(read_file(solve_structure));
            else
                s = build_rainbow(solve_scheme.resolve(), BuildLimits{budget}).structure;
            GameConfig cfg;
            if (solve_variant == "F")
                cfg.variant = GameVariant::F;
            else if (solve_variant == "G")
                cfg.variant = GameVariant::G;
            else if (solve_variant == "Gdelete")
                cfg.variant = GameVariant::GDelete;
            else
                throw parse_error("unknown game variant '" + solve_variant + "'");
            cfg.pebbles = pebbles;
            SolveOptions sopt;
            sopt.budget = budget;
            sopt.root_cap = root_cap;
            Outcome oc = solve_game(s, cfg, depth, sopt);
            std::string verdict = oc.kind == Outcome::Kind::ForallWins ? "ForallWins"
                                  : oc.kind == Outcome::Kind::ExistsSurvives ? "ExistsSurvives"
                                                                             : "BudgetExhausted";
            std::ostringstream os;
            os << "{\n \"variant\": \"" << solve_variant << "\",\n \"pebbles\": " << pebbles
               << ",\n \"verdict\": \"" << verdict << "\",\n \"rounds\": " << oc.rounds
               << ",\n \"searchNodes\": " << oc.stats.search_nodes << "\n}";
            emit(out, os.str());
            if (oc.kind == Outcome::Kind::BudgetExhausted) return 3;
            return 0;
        }
        if (*cmd_match) {
            ColourScheme scheme = match_scheme.resolve();
            GraphGameConfig cfg;
            cfg.pebbles = match_pebbles;
            cfg.rounds = match_rounds;
            cfg.response_budget = budget;
            std::unique_ptr<ForallGraphStrategy> fs;
            if (forall_name == "cones")
                fs = make_cones_forall();
            else if (forall_name == "random")
                fs = make_random_forall(seed);
            else
                throw parse_error("unknown strategy '" + forall_name + "'");
            std::unique_ptr<ExistsGraphStrategy> es;
            if (exists_name == "rho")
                es = make_rho_exists();
            else if (exists_name == "random")
                es = make_random_exists(seed + 1);
            else if (exists_name == "solver")
                es = make_solver_exists(budget);
            else
                throw parse_error("unknown strategy '" + exists_name + "'");
            MatchResult res = run_match(scheme, cfg, *fs, *es);
            emit(out, match_to_json("F", match_pebbles, res));
            return 0;
        }
        if (*cmd_split) {
            auto base = ColourScheme::std_rainbow(split_n, split_n + 1, split_n);
            SplitStructure ss = split_reds(base, split_copies, BuildLimits{budget});
            ThetaReport rep = theta_embedding(ss);
            std::ostringstream os;
            os << "{\n \"copies\": " << split_copies << ",\n \"baseAtoms\": "
               << ss.base.structure->atom_count()
               << ",\n \"splitAtoms\": " << ss.split.structure->atom_count() << ",\n \"checks\": [";
            for (std::size_t i = 0; i < rep.checks.size(); ++i) {
                os << (i ? "," : "") << "\n  {\"name\": \"" << rep.checks[i].name
                   << "\", \"pass\": " << (rep.checks[i].pass ? "true" : "false") << "}";
            }
            os << "\n ],\n \"summary\": \"" << rep.summary() << "\"\n}";
            emit(out, os.str());
            return rep.all_pass() ? 0 : 1;
        }
        if (*cmd_transfer) {
            auto A = build_rainbow(ColourScheme::nonfinax(tr_n, tr_mu, tr_ka), BuildLimits{budget});
            auto B = build_rainbow(ColourScheme::nonfinax(tr_n, tr_mu, tr_kb), BuildLimits{budget});
            std::mt19937_64 rng(seed);
            TermGen gen(SignatureKind(Family::Df, tr_n), tr_m, seed);
            int agree = 0;
            for (int e = 0; e < tr_eqs; ++e) {
                Assignment hA;
                for (int v = 0; v < tr_m; ++v) {
                    Bitset bits(A.structure->atom_count());
                    for (uint32_t a = 0; a < A.structure->atom_count(); ++a)
                        if (rng() & 1) bits.set(a);
                    hA.emplace(v, Element(A.structure->self(), std::move(bits)));
                }
                Assignment hB = transfer_assignment(hA, A, B, tr_m);
                auto [sL, tR] = gen.equation(4);
                bool inA = sL->eval(A.structure->self(), hA) == tR->eval(A.structure->self(), hA);
                bool inB = sL->eval(B.structure->self(), hB) == tR->eval(B.structure->self(), hB);
                if (inA == inB) ++agree;
            }
            std::ostringstream os;
            os << "{\n \"equations\": " << tr_eqs << ",\n \"agreeing\": " << agree << "\n}";
            emit(out, os.str());
            return agree == tr_eqs ? 0 : 1;
        }
        if (*cmd_chrom) {
            std::cout << chromatic_number(resolve_graph(graph_spec)) << "\n";
            return 0;
        }
        if (*cmd_girth) {
            int g = girth(resolve_graph(graph_spec));
            if (g == kGirthInfinite)
                std::cout << "infinity\n";
            else
                std::cout << g << "\n";
            return 0;
        }
        if (*cmd_eta) {
            EtaStructure es = eta(resolve_graph(graph_spec), eta_n, BuildLimits{budget});
            emit(out, structure_to_json(es.structure));
            return 0;
        }
        if (*cmd_erdos) {
            ErdosResult res = erdos_search(erdos_girth, erdos_chi, budget, seed);
            if (!res.found) {
                std::cerr << "budget exhausted after " << res.attempts << " attempts\n";
                return 3;
            }
            emit(out, simple_graph_to_json(res.graph));
            std::cerr << "chi=" << res.chi << " girth=" << res.girth_value << "\n";
            return 0;
        }
        if (*cmd_basis) {
            StructurePtr s;
            if (!basis_structure.empty())
                s = structure_from_json(read_file(basis_structure));
            else
                s = build_rainbow(basis_scheme.resolve(), BuildLimits{budget}).structure;
            BasisOptions bopt;
            bopt.network_budget = budget;
            BasisResult res = basis_search(s, basis_dim, bopt);
            std::cout << (res.found ? "basis found" : "no basis") << " (" << res.networks.size()
                      << " networks, " << res.iterations << " rounds)\n";
            if (!res.complete) return 3;
            return 0;
        }
        if (*cmd_exp) {
            ColourScheme scheme = scheme_from_json(read_file(exp_file));
            auto rs = build_rainbow(scheme, BuildLimits{budget});
            AxiomReport rep = check_axioms(rs.structure);
            bool simple = check_simple(rs.structure);
            std::cout << rep.summary() << "; simple=" << (simple ? "yes" : "no") << "\n";
            return rep.all_pass() && simple ? 0 : 1;
        }
    } catch (const budget_exceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
