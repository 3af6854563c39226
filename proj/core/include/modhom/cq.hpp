#pragma once

#include "modhom/semiring.hpp"
#include "modhom/structure.hpp"

#include <string>
#include <vector>

namespace modhom {

struct CQAtom {
    bool binary = false;
    int symbol = 0; // prop index when unary, action index when binary
    int v = 0;
    int w = 0; // unused for unary atoms
    friend auto operator<=>(const CQAtom&, const CQAtom&) = default;
};

// Variable 0 is the single free variable; the rest are existential.
struct ConjunctiveQuery {
    Signature sig;
    int num_vars = 1;
    std::vector<CQAtom> atoms;
};

ConjunctiveQuery make_cq(Signature sig, int num_vars, std::vector<CQAtom> atoms);

// Domain = variables, point = the free variable, facts = atoms.
PointedStructure canonical_instance(const ConjunctiveQuery& q);

// The inverse view: every state a variable, every fact an atom.
ConjunctiveQuery query_of_structure(const PointedStructure& m);

// Satisfying assignments with the free variable pinned to the point,
// counted by brute force over all total maps. Independent of the
// homomorphism search by construction.
BigCount satisfying_assignment_count(const ConjunctiveQuery& q, const PointedStructure& m);

std::string cq_to_string(const ConjunctiveQuery& q);

} // namespace modhom
