#include <doctest.h>

#include "common.hpp"

#include <modhom/canonical.hpp>
#include <modhom/check.hpp>
#include <modhom/cq.hpp>
#include <modhom/enumerate.hpp>
#include <modhom/fo.hpp>
#include <modhom/hom.hpp>
#include <modhom/transforms.hpp>

#include <random>

using namespace modhom;
using namespace testutil;

TEST_CASE("standard translation frozen shapes") {
    // <>p becomes exists y (R(x,y) and P(y)).
    CHECK(standard_translation(f_diamond(0, 1, f_prop(0))) ==
          fo_exists(1, fo_and({fo_edge_atom(0, 0, 1), fo_prop_atom(0, 1)})));
    // p becomes P(x).
    CHECK(standard_translation(f_prop(0)) == fo_prop_atom(0, 0));
    // [R]p becomes forall y (!R(x,y) or P(y)).
    CHECK(standard_translation(f_box(0, f_prop(0))) ==
          fo_forall(1, fo_or({fo_not(fo_edge_atom(0, 0, 1)), fo_prop_atom(0, 1)})));
    CHECK(standard_translation(f_true()) == fo_true());

    CHECK_THROWS_AS(standard_translation(f_diamond(0, 2, f_true())), std::invalid_argument);
    CHECK_THROWS_AS(standard_translation(f_back_diamond(0, 1, f_true())), std::invalid_argument);
    CHECK_THROWS_AS(standard_translation(f_global(1, f_true())), std::invalid_argument);
    CHECK_THROWS_AS(standard_translation(f_down("x", f_var("x"))), std::invalid_argument);
}

TEST_CASE("box on an edgeless structure is vacuously true") {
    const PointedStructure m = lts1({0, 1}, {});
    const FOFormula psi = standard_translation(f_box(0, f_prop(0)));
    CHECK(eval_fo(m, psi, {{0, 0}}));
    CHECK(check(m, f_box(0, f_prop(0))));
}

TEST_CASE("eval_fo basics") {
    const PointedStructure m = lts1({1, 0}, {{0, 1}, {1, 0}});
    CHECK(eval_fo(m, fo_prop_atom(0, 0), {{0, 0}}));
    CHECK(!eval_fo(m, fo_prop_atom(0, 0), {{0, 1}}));
    CHECK(eval_fo(m, fo_edge_atom(0, 0, 1), {{0, 0}, {1, 1}}));
    CHECK(eval_fo(m, fo_equal(0, 1), {{0, 1}, {1, 1}}));
    CHECK(!eval_fo(m, fo_equal(0, 1), {{0, 0}, {1, 1}}));
    CHECK(eval_fo(m, fo_exists(0, fo_prop_atom(0, 0)), {}));
    CHECK(!eval_fo(m, fo_forall(0, fo_prop_atom(0, 0)), {}));
    // The inner quantifier shadows and the binding is restored afterwards.
    CHECK(eval_fo(m, fo_and({fo_exists(0, fo_not(fo_prop_atom(0, 0))), fo_prop_atom(0, 0)}),
                  {{0, 0}}));
    CHECK_THROWS_AS(eval_fo(m, fo_prop_atom(0, 0), {}), std::invalid_argument);
    CHECK_THROWS_AS(eval_fo(m, fo_edge_atom(0, 0, 1), {{0, 0}}), std::invalid_argument);
}

TEST_CASE("check agrees with the standard translation") {
    const Signature sig = sig2();
    std::mt19937 rng(20260825);
    int disagreements = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const PointedStructure m = random_lts(rng, n, sig);
        const Formula phi = random_ml_formula(rng, 3, sig);
        const bool direct = check(m, phi);
        const bool via_fo = eval_fo(m, standard_translation(phi), {{0, m.distinguished}});
        if (direct != via_fo) ++disagreements;
    }
    CHECK(disagreements == 0);
}

TEST_CASE("fo_to_cq accepts exactly the conjunctive fragment") {
    const Signature sig = sig1();
    const FOFormula conj =
        fo_exists(1, fo_and({fo_edge_atom(0, 0, 1), fo_prop_atom(0, 1), fo_true()}));
    const ConjunctiveQuery q = fo_to_cq(conj, sig);
    CHECK(q.num_vars == 2);
    CHECK(q.atoms.size() == 2);

    CHECK_THROWS_AS(fo_to_cq(fo_not(fo_true()), sig), std::invalid_argument);
    CHECK_THROWS_AS(fo_to_cq(fo_forall(1, fo_true()), sig), std::invalid_argument);
    CHECK_THROWS_AS(fo_to_cq(fo_equal(0, 0), sig), std::invalid_argument);
    CHECK_THROWS_AS(fo_to_cq(fo_or({fo_true(), fo_true()}), sig), std::invalid_argument);
    // Atoms over unquantified variables other than the free one are rejected.
    CHECK_THROWS_AS(fo_to_cq(fo_prop_atom(0, 3), sig), std::invalid_argument);
}

TEST_CASE("tree description round trip through instances") {
    const Signature sig = sig1();
    const ClassSlice trees = enumerate_class(ClassTag::Tree, sig, 5, 4);
    REQUIRE(trees.structures.size() > 10);
    for (const PointedStructure& t : trees.structures) {
        const Formula phi = tree_to_pml(t);
        const ConjunctiveQuery q = fo_to_cq(standard_translation(phi), sig);
        CHECK(isomorphic(canonical_instance(q), t));
    }
}

TEST_CASE("tree description satisfaction matches hom existence") {
    const Signature sig = sig1();
    const ClassSlice trees = enumerate_class(ClassTag::Tree, sig, 3, 2);
    int pairs = 0;
    for_each_structure(2, [&](const PointedStructure& m) {
        for (const PointedStructure& t : trees.structures) {
            const bool sat = check(m, tree_to_pml(t));
            const bool hom = hom_exists(t, m);
            CHECK(sat == hom);
            ++pairs;
        }
    });
    CHECK(pairs > 100);
}

TEST_CASE("generated submodel descriptions") {
    const Signature sig = sig1();
    const PointedStructure single = lts1({0}, {});
    const PointedStructure self_loop = lts1({0}, {{0, 0}});
    const PointedStructure two_chain = lts1({0, 0}, {{0, 1}});
    const PointedStructure two_cycle = lts1({0, 0}, {{0, 1}, {1, 0}});
    const PointedStructure three_chain = lts1({0, 0, 0}, {{0, 1}, {1, 2}});

    const FOFormula psi_single = gsub_description_fo(single);
    const FOFormula psi_loop = gsub_description_fo(self_loop);
    const FOFormula psi_chain = gsub_description_fo(two_chain);

    CHECK(eval_fo(single, psi_single, {{0, 0}}));
    CHECK(!eval_fo(self_loop, psi_single, {{0, 0}}));
    CHECK(eval_fo(self_loop, psi_loop, {{0, 0}}));
    CHECK(!eval_fo(two_cycle, psi_loop, {{0, 0}}));
    CHECK(eval_fo(two_chain, psi_chain, {{0, 0}}));
    CHECK(!eval_fo(three_chain, psi_chain, {{0, 0}}));

    for (const PointedStructure* n : {&single, &self_loop, &two_chain}) {
        const FOFormula psi = gsub_description_fo(*n);
        for (int states = 1; states <= 3; ++states)
            for_each_structure(states, [&](const PointedStructure& m) {
                const bool via_psi = eval_fo(m, psi, {{0, m.distinguished}});
                const bool via_iso = isomorphic(gsub(m), *n);
                CHECK(via_psi == via_iso);
            });
    }

    CHECK_THROWS_AS(gsub_description_fo(lts1({0, 0}, {})), std::invalid_argument);
}
