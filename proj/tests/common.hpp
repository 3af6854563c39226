#pragma once

#include <modhom/formula.hpp>
#include <modhom/structure.hpp>
#include <modhom/semiring.hpp>

#include <random>
#include <string>
#include <vector>

namespace testutil {

inline modhom::Signature sig1() { return modhom::make_signature({"p"}, {"R"}); }
inline modhom::Signature sig2() { return modhom::make_signature({"p", "q"}, {"R", "S"}); }

inline modhom::PointedStructure lts(modhom::Signature sig, std::vector<modhom::LabelSet> labels,
                                    std::vector<modhom::Edge> edges, int point = 0) {
    return modhom::make_structure(std::move(sig), std::move(labels), std::move(edges), point);
}

// One-action shorthand: every pair is an R edge.
inline modhom::PointedStructure lts1(std::vector<modhom::LabelSet> labels,
                                     std::vector<std::pair<int, int>> pairs, int point = 0) {
    std::vector<modhom::Edge> edges;
    for (auto [f, t] : pairs) edges.push_back({0, f, t});
    return lts(sig1(), std::move(labels), std::move(edges), point);
}

// Every structure over 1 prop / 1 action with n states, pointed at 0.
template <typename F> void for_each_structure(int n, F&& f) {
    int edge_slots = n * n;
    for (int labels = 0; labels < (1 << n); ++labels) {
        for (int mask = 0; mask < (1 << edge_slots); ++mask) {
            std::vector<modhom::LabelSet> ls(n);
            for (int s = 0; s < n; ++s) ls[s] = (labels >> s) & 1;
            std::vector<modhom::Edge> edges;
            for (int e = 0; e < edge_slots; ++e)
                if ((mask >> e) & 1) edges.push_back({0, e / n, e % n});
            f(lts(sig1(), std::move(ls), std::move(edges), 0));
        }
    }
}

// Uniform labels, each edge present with probability 1/2.
inline modhom::PointedStructure random_lts(std::mt19937& rng, int n, modhom::Signature sig) {
    std::uniform_int_distribution<int> bit(0, 1);
    std::vector<modhom::LabelSet> labels(n, 0);
    for (auto& l : labels)
        for (int p = 0; p < sig.num_props(); ++p)
            l |= static_cast<modhom::LabelSet>(bit(rng)) << p;
    std::vector<modhom::Edge> edges;
    for (int a = 0; a < sig.num_actions(); ++a)
        for (int f = 0; f < n; ++f)
            for (int t = 0; t < n; ++t)
                if (bit(rng)) edges.push_back({a, f, t});
    return lts(std::move(sig), std::move(labels), std::move(edges), 0);
}

// Random leaf: a constant or a proposition.
inline modhom::Formula random_leaf(std::mt19937& rng, const modhom::Signature& sig) {
    std::uniform_int_distribution<int> leaf(0, 1 + sig.num_props());
    const int choice = leaf(rng);
    if (choice == 0) return modhom::f_true();
    if (choice == 1) return modhom::f_false();
    return modhom::f_prop(choice - 2);
}

// Random basic formula; every operator consumes one unit of depth, so the
// modal depth is at most `depth`.
inline modhom::Formula random_ml_formula(std::mt19937& rng, int depth,
                                         const modhom::Signature& sig) {
    if (depth == 0) return random_leaf(rng, sig);
    std::uniform_int_distribution<int> node(0, 5);
    std::uniform_int_distribution<int> act(0, sig.num_actions() - 1);
    switch (node(rng)) {
    case 0: return random_leaf(rng, sig);
    case 1: return modhom::f_not(random_ml_formula(rng, depth - 1, sig));
    case 2: return modhom::f_and({random_ml_formula(rng, depth - 1, sig),
                                  random_ml_formula(rng, depth - 1, sig)});
    case 3: return modhom::f_or({random_ml_formula(rng, depth - 1, sig),
                                 random_ml_formula(rng, depth - 1, sig)});
    case 4: return modhom::f_diamond(act(rng), 1, random_ml_formula(rng, depth - 1, sig));
    default: return modhom::f_box(act(rng), random_ml_formula(rng, depth - 1, sig));
    }
}

// Same shape with graded diamonds of grade 1..3.
inline modhom::Formula random_graded_formula(std::mt19937& rng, int depth,
                                             const modhom::Signature& sig) {
    if (depth == 0) return random_leaf(rng, sig);
    std::uniform_int_distribution<int> node(0, 5);
    std::uniform_int_distribution<int> act(0, sig.num_actions() - 1);
    std::uniform_int_distribution<int> grade(1, 3);
    switch (node(rng)) {
    case 0: return random_leaf(rng, sig);
    case 1: return modhom::f_not(random_graded_formula(rng, depth - 1, sig));
    case 2: return modhom::f_and({random_graded_formula(rng, depth - 1, sig),
                                  random_graded_formula(rng, depth - 1, sig)});
    case 3: return modhom::f_or({random_graded_formula(rng, depth - 1, sig),
                                 random_graded_formula(rng, depth - 1, sig)});
    case 4:
        return modhom::f_diamond(act(rng), grade(rng), random_graded_formula(rng, depth - 1, sig));
    default: return modhom::f_box(act(rng), random_graded_formula(rng, depth - 1, sig));
    }
}

// Random hybrid sentence: basic connectives plus binders and jumps over the
// variables bound so far, so the result is closed.
inline modhom::Formula random_hl_formula(std::mt19937& rng, int depth, int bound,
                                         const modhom::Signature& sig) {
    const int var_moves = bound > 0 ? 2 : 0;
    std::uniform_int_distribution<int> leaf(0, 1 + sig.num_props() + (bound > 0 ? 1 : 0));
    std::uniform_int_distribution<int> node(0, 7 + var_moves);
    std::uniform_int_distribution<int> act(0, sig.num_actions() - 1);
    if (depth == 0) {
        const int choice = leaf(rng);
        if (choice == 0) return modhom::f_true();
        if (choice == 1) return modhom::f_false();
        if (choice <= 1 + sig.num_props()) return modhom::f_prop(choice - 2);
        return modhom::f_var("x" + std::to_string(std::uniform_int_distribution<int>(0, bound - 1)(rng)));
    }
    switch (node(rng)) {
    case 0: return modhom::f_true();
    case 1: return modhom::f_not(random_hl_formula(rng, depth - 1, bound, sig));
    case 2: return modhom::f_and({random_hl_formula(rng, depth - 1, bound, sig),
                                  random_hl_formula(rng, depth - 1, bound, sig)});
    case 3: return modhom::f_or({random_hl_formula(rng, depth - 1, bound, sig),
                                 random_hl_formula(rng, depth - 1, bound, sig)});
    case 4: return modhom::f_diamond(act(rng), 1, random_hl_formula(rng, depth - 1, bound, sig));
    case 5: return modhom::f_box(act(rng), random_hl_formula(rng, depth - 1, bound, sig));
    case 6:
    case 7:
        return modhom::f_down("x" + std::to_string(bound),
                              random_hl_formula(rng, depth - 1, bound + 1, sig));
    case 8:
        return modhom::f_var("x" + std::to_string(std::uniform_int_distribution<int>(0, bound - 1)(rng)));
    default:
        return modhom::f_at("x" + std::to_string(std::uniform_int_distribution<int>(0, bound - 1)(rng)),
                            random_hl_formula(rng, depth - 1, bound, sig));
    }
}

// Carrier {0,1,2} where counting cycles between 1 and 2: the periodic
// segment has period 2 and contains the multiplicative unit.
inline modhom::Semiring parity_semiring() {
    return modhom::Semiring::from_table(
        "parity", {"0", "1", "2"},
        {{0, 1, 2}, {1, 2, 1}, {2, 1, 2}},
        {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}}, 0, 1);
}

// Carrier {0,1,top} with saturating addition: counting stabilizes at top,
// so the periodic segment misses the multiplicative unit.
inline modhom::Semiring saturating_semiring() {
    return modhom::Semiring::from_table(
        "sat", {"0", "1", "top"},
        {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}},
        {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}}, 0, 1);
}

} // namespace testutil
