#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "pea/basis.hpp"
#include "pea/game.hpp"
#include "pea/graph_game.hpp"
#include "pea/monk.hpp"
#include "pea/rainbow.hpp"

using namespace pea;
using namespace pea::testing;

TEST_CASE("network validation") {
    auto rs = build_rainbow(ColourScheme::nonfinax(3, 1, 1));
    auto s = rs.structure;
    // a valid single-node network from the all-merged atom
    Atom diag_atom = RainbowStructure::kNoAtom;
    for (Atom a = 0; a < s->atom_count(); ++a) {
        bool all = true;
        for (int i = 0; i < 3 && all; ++i)
            for (int j = 0; j < 3; ++j)
                if (!s->diag_set(i, j).test(a)) { all = false; break; }
        if (all) { diag_atom = a; break; }
    }
    REQUIRE(diag_atom != RainbowStructure::kNoAtom);
    Network net(s, {0});
    net.set_label(0, diag_atom);
    CHECK(validate_network(net).empty());

    // breaking the label with a non-diagonal atom trips the diagonal rule
    Atom other = diag_atom == 0 ? 1 : 0;
    Network bad(s, {0});
    bad.set_label(0, other);
    bool saw_diag = false, saw_transp = false, saw_cyl = false;
    for (auto& v : validate_network(bad)) {
        if (v.rule == "diagonal") saw_diag = true;
    }
    CHECK(saw_diag);

    // a two-node network with mismatched variant labels trips the cylindrifier rule
    std::vector<Network> inits;
    initial_responses(s, diag_atom, 100000, [&](const Network& m) {
        inits.push_back(m);
        return false;
    });
    // hand-build: copy a valid 2-node completion, then corrupt one entry
    Network seed(s, {0, 1});
    Tuple t{};
    t[0] = 0; t[1] = 0; t[2] = 0;
    seed.set_label(seed.index_of(t), diag_atom);
    std::vector<Network> comps;
    enumerate_completions(seed, 200000, [&](const Network& m) {
        comps.push_back(m);
        return comps.size() < 3;
    });
    REQUIRE(!comps.empty());
    Network good = comps.front();
    CHECK(validate_network(good).empty());
    Network corrupt = good;
    Tuple u{};
    u[0] = 1; u[1] = 0; u[2] = 0;
    corrupt.set_label(corrupt.index_of(u), other);
    for (auto& v : validate_network(corrupt)) {
        if (v.rule == "cylindrifier") saw_cyl = true;
        if (v.rule == "transposition") saw_transp = true;
    }
    CHECK((saw_cyl || saw_transp));
}

TEST_CASE("legal moves per variant") {
    auto s = one_atom_structure();
    Network net(s, {0, 1, 2});
    for (std::size_t i = 0; i < net.tuple_count(); ++i) net.set_label(i, 0);
    REQUIRE(validate_network(net).empty());

    SUBCASE("F with all pebbles used still offers reuse") {
        GameConfig cfg{GameVariant::F, 3};
        auto moves = legal_forall_moves(net, cfg);
        CHECK(!moves.empty());
        for (auto& mv : moves) {
            CHECK_FALSE(mv.is_delete);
            // the target is one of the used nodes (no pebble left)
            CHECK(net.position_of(mv.cyl.target) >= 0);
        }
    }
    SUBCASE("F with spare pebbles offers a fresh node first") {
        GameConfig cfg{GameVariant::F, 5};
        auto moves = legal_forall_moves(net, cfg);
        bool fresh = false;
        for (auto& mv : moves)
            if (net.position_of(mv.cyl.target) < 0) fresh = true;
        CHECK(fresh);
    }
    SUBCASE("GDelete on a full board only deletes") {
        GameConfig cfg{GameVariant::GDelete, 3};
        auto moves = legal_forall_moves(net, cfg);
        CHECK(!moves.empty());
        for (auto& mv : moves) CHECK(mv.is_delete);
    }
    SUBCASE("GDelete below the cap issues responder-chooses demands") {
        GameConfig cfg{GameVariant::GDelete, 4};
        auto moves = legal_forall_moves(net, cfg);
        CHECK(!moves.empty());
        for (auto& mv : moves) {
            CHECK_FALSE(mv.is_delete);
            CHECK(mv.cyl.target == CylMove::kExistsPicks);
        }
    }
}

TEST_CASE("solver: the one-atom structure survives any depth") {
    auto s = one_atom_structure();
    GameConfig cfg{GameVariant::F, 5};
    SolveOptions opt;
    Outcome oc = solve_game(s, cfg, 6, opt);
    CHECK(oc.kind == Outcome::Kind::ExistsSurvives);
    CHECK(oc.rounds == 6);
    CHECK_FALSE(oc.stats.truncated);
}

TEST_CASE("solver: a red-starved scheme is beaten, certificate replays") {
    // three tints against one red: three pairwise-red apexes cannot be
    // edge-coloured, and fresh tints block identification
    auto rs = build_rainbow(ColourScheme::nonfinax(3, 3, 1));
    GameConfig cfg{GameVariant::F, 6};
    SolveOptions opt;
    opt.root_cap = 24;
    Outcome oc = solve_game(rs.structure, cfg, 5, opt);
    REQUIRE(oc.kind == Outcome::Kind::ForallWins);
    CHECK(oc.rounds <= 4);
    REQUIRE(oc.certificate);

    // replay against 100 random responders
    for (uint64_t seed = 1; seed <= 100; ++seed) {
        std::string err;
        auto rounds = replay_certificate(rs.structure, cfg, *oc.certificate, seed, opt, &err);
        REQUIRE_MESSAGE(rounds.has_value(), err);
        CHECK(*rounds <= oc.rounds);
    }

    SUBCASE("round monotonicity: deeper searches report the same bound") {
        Outcome deeper = solve_game(rs.structure, cfg, 8, opt);
        REQUIRE(deeper.kind == Outcome::Kind::ForallWins);
        CHECK(deeper.rounds == oc.rounds);
    }

    SUBCASE("the growing game reaches the same verdict") {
        GameConfig g{GameVariant::G, 0};
        Outcome og = solve_game(rs.structure, g, 5, opt);
        CHECK(og.kind == Outcome::Kind::ForallWins);
        CHECK(og.rounds <= 4);
    }

    SUBCASE("one tint cannot beat one red: identification saves the responder") {
        auto safe = build_rainbow(ColourScheme::nonfinax(3, 1, 1));
        SolveOptions full;
        full.root_cap = 0;
        full.budget = 1'500'000;
        Outcome os = solve_game(safe.structure, GameConfig{GameVariant::F, 6}, 3, full);
        CHECK(os.kind != Outcome::Kind::ForallWins);
    }
}

TEST_CASE("solving with and without position canonicalization agrees") {
    auto es = eta(edgeless_graph(2), 3); // 19 atoms
    GameConfig cfg{GameVariant::F, 4};
    SolveOptions with, without;
    with.canonicalize = true;
    without.canonicalize = false;
    without.budget = 8'000'000;
    Outcome a = solve_game(es.structure, cfg, 3, with);
    Outcome b = solve_game(es.structure, cfg, 3, without);
    CHECK(a.kind == b.kind);
    if (a.kind == Outcome::Kind::ForallWins) CHECK(a.rounds == b.rounds);
}

TEST_CASE("basis search: fixed point and agreement with the game verdict") {
    SUBCASE("one-atom structure has a basis") {
        auto s = one_atom_structure();
        BasisResult res = basis_search(s, 4);
        CHECK(res.complete);
        CHECK(res.found);
        for (auto& net : res.networks) CHECK(validate_network(net).empty());
    }
    SUBCASE("agreement on small structures") {
        std::vector<StructurePtr> corpus = {one_atom_structure(),
                                            eta(edgeless_graph(1), 3).structure,
                                            eta(edgeless_graph(2), 3).structure,
                                            block_product(one_atom_structure())};
        for (auto& s : corpus) {
            BasisResult res = basis_search(s, 4);
            REQUIRE(res.complete);
            GameConfig cfg{GameVariant::GDelete, 4};
            SolveOptions opt;
            opt.budget = 4'000'000;
            Outcome oc = solve_game(s, cfg, 12, opt);
            bool forall_wins = oc.kind == Outcome::Kind::ForallWins;
            CHECK(res.found == !forall_wins);
        }
    }
}

TEST_CASE("graph view: cone bombardment beats the finite rainbow board") {
    auto scheme = ColourScheme::std_rainbow(3, 4, 3);
    GraphGameConfig cfg;
    cfg.pebbles = 6;
    cfg.rounds = 8;
    auto cones = make_cones_forall();
    auto rnd = make_random_exists(9);
    MatchResult res = run_match(scheme, cfg, *cones, *rnd);
    CHECK(res.winner == MatchResult::Winner::Forall);
    CHECK(res.rounds_played <= 5);

    auto cones2 = make_cones_forall();
    auto clever = make_solver_exists(20000);
    MatchResult res2 = run_match(scheme, cfg, *cones2, *clever);
    CHECK(res2.winner == MatchResult::Winner::Forall);
    CHECK(res2.rounds_played <= 5);

    // with too few tints the responder identifies apexes and survives
    auto starved = ColourScheme::std_rainbow(3, 2, 3);
    auto cones3 = make_cones_forall();
    auto rnd3 = make_random_exists(11);
    MatchResult res3 = run_match(starved, cfg, *cones3, *rnd3);
    CHECK(res3.winner == MatchResult::Winner::Exists);
}

TEST_CASE("graph view: bookkeeping responder survives the order game") {
    auto scheme = ColourScheme::order(3, 3, 9); // red prefix 9 = 3^2 covers 2 demand rounds
    GraphGameConfig cfg;
    cfg.pebbles = 6;
    cfg.rounds = 3;
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        auto forall = make_random_forall(seed);
        auto rho = make_rho_exists();
        MatchResult res = run_match(scheme, cfg, *forall, *rho);
        CHECK(res.winner == MatchResult::Winner::Exists);
    }
}

TEST_CASE("graph view: the order attack defeats the lookahead responder") {
    auto scheme = ColourScheme::order(3, 6, 3); // three reds, attack within 6 rounds
    GraphGameConfig cfg;
    cfg.pebbles = 6;
    cfg.rounds = 6;
    auto attack = make_cones_forall();
    auto clever = make_solver_exists(20000);
    MatchResult res = run_match(scheme, cfg, *attack, *clever);
    CHECK(res.winner == MatchResult::Winner::Forall);
    CHECK(res.rounds_played <= 6);
}

TEST_CASE("graph view and network game agree on tiny schemes") {
    // a scheme the demander wins: both solvers must see the win
    auto scheme = ColourScheme::nonfinax(3, 3, 1);
    auto rs = build_rainbow(scheme);
    GameConfig cfg{GameVariant::F, 6};
    SolveOptions opt;
    opt.root_cap = 24;
    Outcome oc = solve_game(rs.structure, cfg, 4, opt);
    auto gv = graph_view_forall_wins(scheme, 6, 4, 120'000'000);
    REQUIRE(oc.kind == Outcome::Kind::ForallWins);
    REQUIRE(gv.has_value());
    CHECK(*gv);
}
