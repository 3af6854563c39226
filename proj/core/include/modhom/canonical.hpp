#pragma once

#include "modhom/structure.hpp"

#include <string>
#include <vector>

namespace modhom {

// perm maps old state index -> new state index.
PointedStructure permute_states(const PointedStructure& m, const std::vector<int>& perm);

// Minimal serialization over all permutations sending the distinguished
// state to 0. Equal encodings <=> isomorphic. Brute force, meant for small
// structures; throws beyond kCanonicalStateLimit states.
inline constexpr int kCanonicalStateLimit = 9;
std::string canonical_encoding(const PointedStructure& m);

// Recursive sorted-children code rooted at the distinguished state. Linear
// up to sorting, works at any size, but requires a tree-tagged input
// (unchecked; callers guarantee it).
std::string tree_encoding(const PointedStructure& tree);

// Exact isomorphism test: invariant screening, then tree codes when both
// sides are trees, else a backtracking search over invariant-compatible
// state mappings.
bool isomorphic(const PointedStructure& m, const PointedStructure& n);

} // namespace modhom
