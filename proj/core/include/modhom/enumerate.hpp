#pragma once

#include "modhom/structure.hpp"

#include <cstdint>
#include <vector>

namespace modhom {

struct EnumerationBudget {
    // Trees and forests are built constructively and stay cheap longer.
    int max_tree_states = 7;
    // Other classes filter every labeled digraph of each size.
    int max_filter_states = 5;
    long long max_raw_candidates = 1LL << 31;
};

// One class of structures cut to finite size: every member satisfies the
// tag within the bounds, no two members are isomorphic, and the order is
// the canonical one (state count, then canonical code).
struct ClassSlice {
    ClassTag tag = ClassTag::Tree;
    Signature sig;
    int max_states = 0;
    int max_depth = 0;
    std::vector<PointedStructure> structures;
};

ClassSlice enumerate_class(ClassTag tag, const Signature& sig, int max_states, int max_depth,
                           const EnumerationBudget& budget = {});

// Every pointed structure up to isomorphism, no class filter, ordered by
// (state count, canonical encoding).
std::vector<PointedStructure> enumerate_structures(const Signature& sig, int max_states,
                                                   const EnumerationBudget& budget = {});

struct RandomParams {
    int num_states = 3;
    double edge_density = 0.3;
};

// Deterministic per seed; the same call always returns the same structure.
PointedStructure random_structure(ClassTag tag, const Signature& sig, const RandomParams& params,
                                  std::uint64_t seed);

} // namespace modhom
