#pragma once

#include "modhom/cq.hpp"
#include "modhom/formula.hpp"
#include "modhom/structure.hpp"

#include <map>
#include <vector>

namespace modhom {

enum class FOKind {
    True,
    False,
    PropAtom,
    EdgeAtom,
    Equal,
    Not,
    And,
    Or,
    Exists,
    Forall,
};

// First-order AST over a modal signature. Variables are nonnegative ids;
// the conventional free variable of a translation is 0.
struct FOFormula {
    FOKind kind = FOKind::True;
    int symbol = -1; // prop index (PropAtom), action index (EdgeAtom)
    int v = -1;      // first variable of an atom / the quantified variable
    int w = -1;      // second variable of a binary atom
    std::vector<FOFormula> children;

    bool operator==(const FOFormula&) const = default;
};

FOFormula fo_true();
FOFormula fo_false();
FOFormula fo_prop_atom(int prop, int v);
FOFormula fo_edge_atom(int action, int v, int w);
FOFormula fo_equal(int v, int w);
FOFormula fo_not(FOFormula f);
FOFormula fo_and(std::vector<FOFormula> conjuncts);
FOFormula fo_or(std::vector<FOFormula> disjuncts);
FOFormula fo_exists(int var, FOFormula f);
FOFormula fo_forall(int var, FOFormula f);

using FOAssignment = std::map<int, int>;

// Naive recursive evaluation, quantifiers ranging over all states.
bool eval_fo(const PointedStructure& m, const FOFormula& f, const FOAssignment& assignment);

// The standard translation with free variable 0. Accepts exactly the basic
// language (grade-1 diamonds, boxes, booleans); anything else throws.
FOFormula standard_translation(const Formula& f);

// Converts a positive existential conjunctive formula (atoms, true, and,
// exists) into a conjunctive query with free variable 0. Other connectives
// throw std::invalid_argument.
ConjunctiveQuery fo_to_cq(const FOFormula& f, const Signature& sig);

// The formula psi(x_1) describing N up to generated-submodel isomorphism:
// existentially lists the states of N, pins their full atomic diagram, and
// forces them to exhaust everything reachable from x_1. For point-generated
// M: eval_fo(M, psi, {0 -> point}) holds iff gsub(M) is isomorphic to N.
FOFormula gsub_description_fo(const PointedStructure& n);

} // namespace modhom
