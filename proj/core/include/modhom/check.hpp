#pragma once

#include "modhom/formula.hpp"
#include "modhom/structure.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace modhom {

// Partial map from world-variable names to states.
using Assignment = std::map<std::string, int>;

// Kripke semantics at the distinguished state. Graded diamonds count
// successors, backward diamonds count predecessors, E counts the whole
// domain; down rebinds to the current state, @ jumps to the bound state.
// Unbound world variables throw std::invalid_argument.
bool check(const PointedStructure& m, const Assignment& g, const Formula& f);
bool check(const PointedStructure& m, const Formula& f);

// Disjunction-free positive diamond description of a tree: the conjunction
// of the root's propositions (empty conjunction rendered as true) and one
// diamond per child edge. Its conjunctive-query instance rebuilds the tree.
Formula tree_to_pml(const PointedStructure& t);

// Graded description of a tree up to depth k: full literal marks, a
// successor-count cap per action, and exact counts per (action, child
// isomorphism class). For every tree M over the same signature,
// check(M, phi) holds iff restrict_depth(M, k) is isomorphic to T.
Formula tree_to_gml(const PointedStructure& t, int k);

enum class SimulationKind { Simulation, DirectedSimulation, Bisimulation };

const char* simulation_kind_name(SimulationKind kind);

struct SimulationResult {
    bool related = false;
    std::vector<std::pair<int, int>> relation;
};

// Greatest-fixpoint refinement. The initial relation keeps pairs whose
// labels are contained (equal for bisimulation); refinement deletes pairs
// violating forth, and also back for directed simulation and bisimulation.
// related reports whether the distinguished pair survives.
SimulationResult simulation_fixpoint(const PointedStructure& m, const PointedStructure& n,
                                     SimulationKind kind);

// Forth-only simulation refined for k rounds from label containment.
bool bounded_simulation(const PointedStructure& m, const PointedStructure& n, int k);

// Exact counting color refinement over structures sharing one signature,
// interned jointly so colors are comparable across the batch. rounds >= 0
// runs exactly that many rounds; rounds < 0 refines to stability. Returns
// the color of each structure's distinguished state.
std::vector<int> graded_refinement_classes(const std::vector<const PointedStructure*>& batch,
                                           int rounds = -1);

// Structural equivalence oracles per language; k is the depth bound for the
// bounded languages and ignored otherwise. Throws std::invalid_argument on
// signature mismatch or a missing bound.
bool equivalent(const PointedStructure& m, const PointedStructure& n, Language lang, int k = -1);

} // namespace modhom
