#pragma once

#include "modhom/structure.hpp"

#include <optional>
#include <utility>

namespace modhom {

// Substructure on the states within depth k of the point, under the chosen
// depth notion (Directed requires point-generated input, SigmaPath requires
// connected input).
PointedStructure restrict_depth(const PointedStructure& m, int k, DepthNotion notion);

// Tree of action-recorded directed walks from the point, truncated at
// depth k. State order is breadth-first.
PointedStructure unravel(const PointedStructure& m, int k);

// Substructure generated by the point: all directedly reachable states, or
// only those within depth k when given.
PointedStructure gsub(const PointedStructure& m, std::optional<int> k = std::nullopt);

// Adds the inverse relation ~R per action R (signature becomes backward-expanded).
PointedStructure backward_expansion(const PointedStructure& m);

// Adds the complete fresh relation ~G (signature becomes global-expanded).
PointedStructure global_expansion(const PointedStructure& m);

// Reorients depth-decreasing edges R(m,n) into ~R(n,m), turning a connected
// acyclic structure into a backward-signature tree of the same depth.
PointedStructure down_transform(const PointedStructure& m);

// Replaces every ~R edge by the R edge in the opposite direction and drops
// the backward relations; exact inverse of down_transform on its range.
PointedStructure flip(const PointedStructure& m);

// One expansion round: base-action edges crossing from point-unreachable
// into point-reachable territory become backward edges the other way.
// Accepts base-signature input by treating it as backward-expanded with
// empty backward relations.
PointedStructure exp_step(const PointedStructure& m);

// Iterates exp_step until everything is reachable; the result is a
// point-generated backward-signature structure whose base reduct only
// removed edges that reappear inverted.
PointedStructure pg_augment(const PointedStructure& m);

// Connects a forest into a global-signature tree: one ~G edge from the
// point to the root of every other component.
PointedStructure rg_connect(const PointedStructure& m);

// n states, complete edge relation (self-loops included), optionally all
// labeled with proposition 0.
PointedStructure make_clique(const Signature& sig, int n, bool with_p);

// The standard 1-prop/1-action pair that is homomorphically equivalent yet
// neither bisimilar nor mutually directed-similar: a branching point with
// one labeled and one unlabeled successor, versus a single labeled successor.
std::pair<PointedStructure, PointedStructure> hom_equivalent_non_bisimilar_pair();

} // namespace modhom
