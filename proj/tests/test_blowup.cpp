#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pea/axioms.hpp"
#include "pea/blowup.hpp"

using namespace pea;

TEST_CASE("single-copy split is isomorphic to the base") {
    auto base = ColourScheme::std_rainbow(3, 2, 3);
    SplitStructure ss = split_reds(base, 1);
    CHECK(ss.split.structure->atom_count() == ss.base.structure->atom_count());
    CHECK(split_isomorphic_to_base(ss));
    CHECK(theta_embedding(ss).all_pass());
}

TEST_CASE("split scheme forbids mixed superscripts") {
    auto split_scheme = ColourScheme::split(3, 2, 3, 2);
    CHECK_FALSE(split_scheme.triangle_allowed(split_scheme.red_pair_id(0, 1, 0),
                                              split_scheme.red_pair_id(0, 2, 1),
                                              split_scheme.red_pair_id(1, 2, 0)));
    CHECK(split_scheme.triangle_allowed(split_scheme.red_pair_id(0, 1, 1),
                                        split_scheme.red_pair_id(0, 2, 1),
                                        split_scheme.red_pair_id(1, 2, 1)));
}

TEST_CASE("two-copy split: fibers, originals, theta verification") {
    auto base = ColourScheme::std_rainbow(3, 2, 3);
    SplitStructure ss = split_reds(base, 2);
    const auto& b = ss.base;
    for (Atom a = 0; a < b.structure->atom_count(); ++a) {
        if (b.is_red(a))
            CHECK(ss.fibers[a].size() >= 2);
        else
            CHECK(ss.fibers[a].size() == 1);
    }
    // originals invert copies
    for (Atom x = 0; x < ss.split.structure->atom_count(); ++x)
        CHECK(original_of(ss, x) < b.structure->atom_count());
    CHECK_THROWS_AS(original_of(ss, ss.split.structure->atom_count()), mixed_structure_error);

    ThetaReport rep = theta_embedding(ss);
    for (auto& c : rep.checks)
        if (!c.pass) MESSAGE(c.name, ": ", c.witness);
    CHECK(rep.all_pass());
    CHECK(rep.red_base_atoms > 0);
    CHECK(rep.min_red_fiber >= 2);

    // both sides satisfy the axiom suite
    CHECK(check_axioms(ss.base.structure).all_pass());
    CHECK(check_axioms(ss.split.structure).all_pass());
}
