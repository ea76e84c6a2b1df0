#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pea/coloured_graph.hpp"

using namespace pea;

TEST_CASE("forbidden triples per variant") {
    auto std3 = ColourScheme::std_rainbow(3, 4, 3); // greens g0^1..g0^4, reds over {0,1,2}
    ColourId g1 = std3.graded_id(1);
    ColourId w0 = std3.white_id(0), w1 = std3.white_id(1);
    ColourId gz1 = std3.green_zero_id(1), gz2 = std3.green_zero_id(2);
    ColourId r01 = std3.red_pair_id(0, 1), r02 = std3.red_pair_id(0, 2), r12 = std3.red_pair_id(1, 2);

    CHECK_FALSE(std3.triangle_allowed(g1, g1, w1));    // (g_i, g_i, w_i)
    CHECK(std3.triangle_allowed(w0, w0, w0));          // no other triple forbidden
    CHECK_FALSE(std3.triangle_allowed(r01, r01, r01)); // match rule needs j = j'
    CHECK(std3.triangle_allowed(r01, r12, r02));       // composable triple
    CHECK(std3.triangle_allowed(r01, r02, r12));       // any arrangement of it
    CHECK_FALSE(std3.triangle_allowed(gz1, gz2, w0));  // two green-zeros over w_0
    CHECK_FALSE(std3.triangle_allowed(g1, gz1, gz2));  // all green
    CHECK(std3.triangle_allowed(gz1, gz2, r01));       // greens over red are fine here
    CHECK(std3.triangle_allowed(g1, g1, w0));
    CHECK(std3.triangle_allowed(r01, r01, w0));

    auto order = ColourScheme::order(3, 4, 4); // tints -1..-4, reds over {0..3}
    ColourId gm1 = order.green_zero_id(-1), gm2 = order.green_zero_id(-2);
    // {(-2,0),(-1,1)} is order preserving, {(-2,1),(-1,0)} is not
    CHECK(order.triangle_allowed(gm2, gm1, order.red_pair_id(0, 1)));
    CHECK_FALSE(order.triangle_allowed(gm2, gm1, order.red_pair_id(1, 0)));
    // equal tints need equal indices
    CHECK(order.triangle_allowed(gm1, gm1, order.red_pair_id(2, 2)));
    CHECK_FALSE(order.triangle_allowed(gm1, gm1, order.red_pair_id(1, 2)));
    // red matching is directional composition along x -> b -> d: arguments
    // are the (x,b), (x,d), (b,d) labels, so the composite sits in the middle
    CHECK(order.triangle_allowed(order.red_pair_id(0, 1), order.red_pair_id(0, 2),
                                 order.red_pair_id(1, 2)));
    CHECK_FALSE(order.triangle_allowed(order.red_pair_id(0, 1), order.red_pair_id(0, 2),
                                       order.red_pair_id(2, 1)));
    CHECK_FALSE(order.triangle_allowed(order.red_pair_id(0, 1), order.red_pair_id(1, 2),
                                       order.red_pair_id(0, 2)));
    CHECK(order.triangle_allowed(order.red_pair_id(2, 2), order.red_pair_id(2, 2),
                                 order.red_pair_id(2, 2)));

    auto nf = ColourScheme::nonfinax(3, 2, 3);
    CHECK_FALSE(nf.triangle_allowed(nf.red_single_id(0), nf.red_single_id(0), nf.red_single_id(1)));
    CHECK_FALSE(nf.triangle_allowed(nf.red_single_id(2), nf.red_single_id(2), nf.red_single_id(2)));
    CHECK(nf.triangle_allowed(nf.red_single_id(0), nf.red_single_id(1), nf.red_single_id(2)));

    auto split = ColourScheme::split(3, 4, 3, 2);
    // copies must share one superscript
    CHECK(split.triangle_allowed(split.red_pair_id(0, 1, 0), split.red_pair_id(1, 2, 0),
                                 split.red_pair_id(0, 2, 0)));
    CHECK_FALSE(split.triangle_allowed(split.red_pair_id(0, 1, 0), split.red_pair_id(1, 2, 1),
                                       split.red_pair_id(0, 2, 0)));
}

TEST_CASE("triangle_allowed is permutation invariant (orientation-free variants)") {
    std::mt19937_64 rng(5);
    for (auto scheme : {ColourScheme::std_rainbow(3, 4, 3), ColourScheme::nonfinax(3, 3, 3),
                        ColourScheme::split(3, 3, 3, 2)}) {
        for (int round = 0; round < 500; ++round) {
            ColourId a = static_cast<ColourId>(rng() % scheme.colour_count());
            ColourId b = static_cast<ColourId>(rng() % scheme.colour_count());
            ColourId c = static_cast<ColourId>(rng() % scheme.colour_count());
            bool ref = scheme.triangle_allowed(a, b, c);
            CHECK(scheme.triangle_allowed(a, c, b) == ref);
            CHECK(scheme.triangle_allowed(b, a, c) == ref);
            CHECK(scheme.triangle_allowed(b, c, a) == ref);
            CHECK(scheme.triangle_allowed(c, a, b) == ref);
            CHECK(scheme.triangle_allowed(c, b, a) == ref);
        }
    }
}

TEST_CASE("order-variant rule is invariant under node relabelling with converses") {
    // geometric arguments: (x,b), (x,d), (b,d); renaming the triangle's nodes
    // permutes the slots and converses direction-sensitive labels
    auto scheme = ColourScheme::order(3, 3, 3);
    std::mt19937_64 rng(17);
    for (int round = 0; round < 1000; ++round) {
        ColourId c1 = static_cast<ColourId>(rng() % scheme.colour_count());
        ColourId c2 = static_cast<ColourId>(rng() % scheme.colour_count());
        ColourId c3 = static_cast<ColourId>(rng() % scheme.colour_count());
        bool ref = scheme.triangle_allowed(c1, c2, c3);
        // swap the two apexes b and d
        CHECK(scheme.triangle_allowed(c2, c1, scheme.converse(c3)) == ref);
        // swap x and b
        CHECK(scheme.triangle_allowed(scheme.converse(c1), c3, c2) == ref);
        // relabel roles (x', b', d') = (b, d, x)
        CHECK(scheme.triangle_allowed(c3, scheme.converse(c1), scheme.converse(c2)) == ref);
        // relabel roles (x', b', d') = (d, x, b)
        CHECK(scheme.triangle_allowed(scheme.converse(c2), scheme.converse(c3), c1) == ref);
    }
}

TEST_CASE("graph validation: shades, triangles, cones") {
    auto scheme = ColourScheme::std_rainbow(3, 4, 3);
    SUBCASE("missing shade on a white pair") {
        ColouredGraph g(2);
        g.set_edge(0, 1, scheme.white_id(0));
        auto v = validate_graph(scheme, g);
        REQUIRE(v.size() == 1);
        CHECK(v[0].rule == "missing-yellow");
        g.set_yellow(0b11, Yellow{0, false});
        CHECK(validate_graph(scheme, g).empty());
    }
    SUBCASE("forbidden triangle is reported") {
        ColouredGraph g(3);
        g.set_edge(0, 1, scheme.graded_id(1));
        g.set_edge(0, 2, scheme.graded_id(1));
        g.set_edge(1, 2, scheme.white_id(1));
        bool found = false;
        for (auto& v : validate_graph(scheme, g))
            if (v.rule == "forbidden-triangle") found = true;
        CHECK(found);
    }
    SUBCASE("cone with a tint outside the base shade") {
        ColouredGraph g(3);
        g.set_edge(0, 2, scheme.green_zero_id(2)); // apex 2, tint 2
        g.set_edge(1, 2, scheme.graded_id(1));
        g.set_edge(0, 1, scheme.white_id(0));
        g.set_yellow(0b011, Yellow{0b0001, false}); // shade {1}, tint 2 missing
        bool cone_violation = false;
        for (auto& v : validate_graph(scheme, g))
            if (v.rule == "cone") cone_violation = true;
        CHECK(cone_violation);
        g.set_yellow(0b011, Yellow{0b0010, false}); // shade {2}
        CHECK(validate_graph(scheme, g).empty());
    }
}

TEST_CASE("cone detection") {
    auto scheme = ColourScheme::std_rainbow(3, 4, 3);
    ColouredGraph g(3);
    g.set_edge(0, 2, scheme.green_zero_id(1));
    g.set_edge(1, 2, scheme.graded_id(1));
    g.set_edge(0, 1, scheme.white_id(0));
    g.set_yellow(0b011, Yellow{0b0001, false});
    auto cones = find_cones(scheme, g);
    REQUIRE(cones.size() == 1);
    CHECK(cones[0].apex == 2);
    CHECK(cones[0].tint == 1);
    CHECK(cones[0].base == std::vector<int>{0, 1});

    // all-white graph: no cones
    ColouredGraph w(3);
    w.set_edge(0, 1, scheme.white_id(0));
    w.set_edge(0, 2, scheme.white_id(0));
    w.set_edge(1, 2, scheme.white_id(0));
    CHECK(find_cones(scheme, w).empty());

    // two apexes over the shared base {0,1}
    ColouredGraph two(4);
    two.set_edge(0, 1, scheme.white_id(0));
    two.set_edge(0, 2, scheme.green_zero_id(1));
    two.set_edge(1, 2, scheme.graded_id(1));
    two.set_edge(0, 3, scheme.green_zero_id(2));
    two.set_edge(1, 3, scheme.graded_id(1));
    two.set_edge(2, 3, scheme.red_pair_id(0, 1));
    auto cc = find_cones(scheme, two);
    int with_base01 = 0;
    for (auto& c : cc)
        if (c.base == std::vector<int>{0, 1}) ++with_base01;
    CHECK(with_base01 == 2);
}

namespace {

// brute-force isomorphism oracle for small graphs
bool brute_isomorphic(const ColourScheme& scheme, const ColouredGraph& a, const ColouredGraph& b) {
    if (a.node_count() != b.node_count()) return false;
    std::vector<int> perm(a.node_count());
    for (int i = 0; i < a.node_count(); ++i) perm[i] = i;
    do {
        if (a.permuted(perm, scheme) == b) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace

TEST_CASE("enumeration: counts vs filter-and-dedupe oracle") {
    auto scheme = ColourScheme::std_rainbow(3, 4, 3);
    SUBCASE("single node") {
        auto one = enumerate_graphs(scheme, 1);
        CHECK(one.size() == 1);
    }
    SUBCASE("two nodes vs oracle") {
        auto up_to_two = enumerate_graphs(scheme, 2);
        // oracle: enumerate all labellings, filter by the validator, dedupe by
        // the brute-force matcher
        std::vector<ColouredGraph> keep;
        enumerate_labelled_graphs(scheme, 2, 1'000'000, [&](const ColouredGraph& g) {
            if (!validate_graph(scheme, g).empty()) return true;
            for (auto& h : keep)
                if (brute_isomorphic(scheme, g, h)) return true;
            keep.push_back(g);
            return true;
        });
        CHECK(up_to_two.size() == 1 + keep.size());
        // every enumerated graph is valid
        for (auto& g : up_to_two) CHECK(validate_graph(scheme, g).empty());
    }
}

TEST_CASE("canonical encodings coincide exactly for isomorphic graphs") {
    auto scheme = ColourScheme::nonfinax(3, 2, 2);
    std::mt19937_64 rng(3);
    std::vector<ColouredGraph> sample;
    enumerate_labelled_graphs(scheme, 3, 50'000, [&](const ColouredGraph& g) {
        if (rng() % 37 == 0 && validate_graph(scheme, g).empty()) sample.push_back(g);
        return sample.size() < 60;
    });
    REQUIRE(sample.size() >= 2);
    for (std::size_t i = 0; i < sample.size(); ++i)
        for (std::size_t j = i; j < sample.size(); ++j) {
            bool iso = brute_isomorphic(scheme, sample[i], sample[j]);
            bool canon_eq = sample[i].canonical_encode(scheme) == sample[j].canonical_encode(scheme);
            CHECK(iso == canon_eq);
        }
    // permuting a graph never changes its canonical encoding
    for (auto& g : sample) {
        std::vector<int> perm = {2, 0, 1};
        CHECK(g.permuted(perm, scheme).canonical_encode(scheme) == g.canonical_encode(scheme));
    }
}
