#include "common.hpp"

#include <modhom/canonical.hpp>
#include <modhom/structure.hpp>

#include <doctest.h>

#include <stdexcept>

using namespace modhom;
using testutil::lts1;

TEST_CASE("signature validation") {
    CHECK_THROWS_AS(make_signature({"p", "p"}, {"R"}), std::invalid_argument);
    CHECK_THROWS_AS(make_signature({"p"}, {"p"}), std::invalid_argument);
    CHECK_THROWS_AS(make_signature({}, {"~R"}), std::invalid_argument);
    CHECK_THROWS_AS(make_signature({""}, {}), std::invalid_argument);
    Signature s = testutil::sig2();
    CHECK(s.prop_index("q") == 1);
    CHECK(s.action_index("S") == 1);
    CHECK(s.prop_index("missing") == -1);
}

TEST_CASE("expanded signatures and their reducts") {
    Signature base = testutil::sig2();
    Signature back = backward_signature(base);
    CHECK(back.actions == std::vector<std::string>{"R", "S", "~R", "~S"});
    CHECK(back.base_action_count == 2);
    CHECK(back.expansion == ExpansionMode::Backward);
    CHECK(base_signature(back) == base);

    Signature glob = global_signature(base);
    CHECK(glob.actions == std::vector<std::string>{"R", "S", "~G"});
    CHECK(base_signature(glob) == base);
    CHECK_THROWS_AS(backward_signature(back), std::invalid_argument);
}

TEST_CASE("structure validation and edge queries") {
    CHECK_THROWS_AS(lts1({0, 0}, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(lts1({4}, {}), std::invalid_argument);
    CHECK_THROWS_AS(make_structure(testutil::sig1(), {0}, {}, 3), std::invalid_argument);

    auto m = lts1({0, 1, 0}, {{0, 1}, {0, 2}, {1, 2}, {0, 1}});
    CHECK(m.num_edges() == 3);
    CHECK(m.has_edge(0, 0, 1));
    CHECK_FALSE(m.has_edge(0, 2, 0));
    CHECK(m.out_degree(0, 0) == 2);
    CHECK(m.in_edges(0, 2).size() == 2);
    CHECK(m.in_degree_all_actions(2) == 2);
}

TEST_CASE("one-point structure satisfies every class") {
    auto m = lts1({0}, {});
    auto c = classify(m);
    for (ClassTag t : {ClassTag::Tree, ClassTag::ConnectedAcyclic, ClassTag::Forest,
                       ClassTag::PointGenerated, ClassTag::Connected})
        CHECK(c.satisfies(t));
    CHECK(c.directed_depth == 0);
    CHECK(c.sigma_depth == 0);
    CHECK(c.forest_depth == 0);
    CHECK(c.tags().size() == 5);
}

TEST_CASE("edge against the point direction keeps connectivity only") {
    // Point c = state 0, with the single edge R(s, c).
    auto m = lts1({0, 0}, {{1, 0}});
    auto c = classify(m);
    CHECK(c.satisfies(ClassTag::ConnectedAcyclic));
    CHECK(c.satisfies(ClassTag::Connected));
    CHECK_FALSE(c.satisfies(ClassTag::Tree));
    CHECK_FALSE(c.satisfies(ClassTag::PointGenerated));
    CHECK_FALSE(c.satisfies(ClassTag::Forest));
    CHECK(c.sigma_depth == 1);
    CHECK_FALSE(c.directed_depth.has_value());
}

TEST_CASE("self-loop is point-generated but cyclic") {
    auto m = lts1({0}, {{0, 0}});
    auto c = classify(m);
    CHECK(c.satisfies(ClassTag::PointGenerated));
    CHECK(c.satisfies(ClassTag::Connected));
    CHECK_FALSE(c.acyclic);
    CHECK_FALSE(c.satisfies(ClassTag::Tree));
    CHECK_FALSE(c.satisfies(ClassTag::Forest));
    CHECK(c.directed_depth == 0);
    CHECK(c.sigma_depth == 0);
}

TEST_CASE("two-sided and parallel facts count as cycles") {
    CHECK_FALSE(classify(lts1({0, 0}, {{0, 1}, {1, 0}})).acyclic);
    auto s = testutil::sig2();
    auto parallel = testutil::lts(s, {0, 0}, {{0, 0, 1}, {1, 0, 1}});
    CHECK_FALSE(classify(parallel).acyclic);
    CHECK(classify(testutil::lts(s, {0, 0}, {{0, 0, 1}})).acyclic);
}

TEST_CASE("two-component forest") {
    // Rooted 6-state tree plus a rooted 4-state tree, point at the big root.
    auto m = lts1({0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                  {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {6, 7}, {7, 8}, {7, 9}});
    auto c = classify(m);
    CHECK(c.satisfies(ClassTag::Forest));
    CHECK_FALSE(c.satisfies(ClassTag::Tree));
    CHECK_FALSE(c.satisfies(ClassTag::Connected));
    CHECK(c.forest_depth == 2);
    auto blocks = connected_components(m);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0] == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(blocks[1] == std::vector<int>{6, 7, 8, 9});
}

TEST_CASE("edgeless states are singleton components and a forest") {
    auto m = lts1({0, 1, 0}, {});
    CHECK(connected_components(m).size() == 3);
    auto c = classify(m);
    CHECK(c.satisfies(ClassTag::Forest));
    CHECK(c.forest_depth == 0);
    CHECK_FALSE(c.satisfies(ClassTag::Connected));
}

TEST_CASE("point must head its forest component") {
    // Same shape as a valid 2-chain tree, but pointed at the child.
    auto m = lts1({0, 0}, {{0, 1}}, 1);
    CHECK_FALSE(classify(m).satisfies(ClassTag::Forest));
    CHECK(classify(lts1({0, 0}, {{0, 1}}, 0)).satisfies(ClassTag::Tree));
}

namespace {

// All structures over 1 prop / 1 action with the given number of states.
template <typename F> void for_all_structures(int n, F&& f) {
    int edge_slots = n * n;
    for (int labels = 0; labels < (1 << n); ++labels) {
        for (int mask = 0; mask < (1 << edge_slots); ++mask) {
            std::vector<modhom::LabelSet> ls(n);
            for (int s = 0; s < n; ++s) ls[s] = (labels >> s) & 1;
            std::vector<modhom::Edge> edges;
            for (int e = 0; e < edge_slots; ++e)
                if ((mask >> e) & 1) edges.push_back({0, e / n, e % n});
            f(testutil::lts(testutil::sig1(), std::move(ls), std::move(edges), 0));
        }
    }
}

} // namespace

TEST_CASE("classification invariants on all structures up to 3 states") {
    for (int n = 1; n <= 3; ++n) {
        for_all_structures(n, [](const PointedStructure& m) {
            auto c = classify(m);
            if (c.tree) {
                CHECK(c.satisfies(ClassTag::ConnectedAcyclic));
                CHECK(c.point_generated);
                CHECK(c.forest);
            }
            if (c.satisfies(ClassTag::ConnectedAcyclic)) CHECK(c.connected);
            if (c.point_generated) CHECK(c.connected);

            // Trees are exactly the point-generated structures whose point
            // has no incoming fact and every other state exactly one.
            bool indeg_form = c.point_generated;
            for (int s = 0; s < m.num_states() && indeg_form; ++s) {
                int d = m.in_degree_all_actions(s);
                indeg_form = (s == m.distinguished) ? (d == 0) : (d == 1);
            }
            CHECK(c.tree == indeg_form);
            if (c.tree) CHECK(c.directed_depth == c.sigma_depth);

            auto blocks = connected_components(m);
            CHECK(c.connected == (blocks.size() == 1));
            size_t covered = 0;
            for (auto& b : blocks) covered += b.size();
            CHECK(covered == static_cast<size_t>(m.num_states()));
        });
    }
}

TEST_CASE("canonical encoding is permutation invariant") {
    auto m = lts1({0, 1, 0}, {{0, 1}, {1, 2}, {2, 1}});
    auto p = permute_states(m, {2, 0, 1});
    CHECK(canonical_encoding(m) == canonical_encoding(p));
    CHECK(isomorphic(m, p));

    auto other = lts1({0, 1, 0}, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(canonical_encoding(m) != canonical_encoding(other));
    CHECK_FALSE(isomorphic(m, other));
}

TEST_CASE("isomorphism respects the distinguished state and labels") {
    auto chain_p = lts1({0, 1}, {{0, 1}});
    auto chain_q = lts1({1, 0}, {{0, 1}});
    CHECK_FALSE(isomorphic(chain_p, chain_q));
    CHECK(isomorphic(chain_p, lts1({1, 0}, {{1, 0}}, 1)));

    auto at_root = lts1({0, 0}, {{0, 1}}, 0);
    auto at_leaf = lts1({0, 0}, {{0, 1}}, 1);
    CHECK_FALSE(isomorphic(at_root, at_leaf));
}

TEST_CASE("tree encoding ignores sibling order") {
    auto left = lts1({0, 1, 0}, {{0, 1}, {0, 2}});
    auto right = lts1({0, 0, 1}, {{0, 1}, {0, 2}});
    CHECK(tree_encoding(left) == tree_encoding(right));
    CHECK(isomorphic(left, right));
    auto deeper = lts1({0, 1, 0}, {{0, 1}, {1, 2}});
    CHECK(tree_encoding(left) != tree_encoding(deeper));
}
