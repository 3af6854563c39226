#pragma once

#include "modhom/semiring.hpp"
#include "modhom/structure.hpp"

#include <optional>
#include <vector>

namespace modhom {

struct HomMap {
    // assignment[s] = image of source state s.
    std::vector<int> assignment;
    bool operator==(const HomMap&) const = default;
};

// All homomorphisms source -> target (point to point, facts preserved), in
// a deterministic order: backtracking over source states (distinguished
// first, then fact-adjacency BFS), candidates in ascending target index.
std::vector<HomMap> enumerate_homs(const PointedStructure& source,
                                   const PointedStructure& target);

// |Hom(source, target)|. Forest sources use a bottom-up tree count per
// component (pointed factor for the point's component, free-root factors
// for the rest); everything else falls back to backtracking.
BigCount count_hom_maps(const PointedStructure& source, const PointedStructure& target);

// count_S(|Hom(source, target)|).
SemiringValue count_homs(const Semiring& s, const PointedStructure& source,
                         const PointedStructure& target);

bool hom_exists(const PointedStructure& source, const PointedStructure& target);

enum class MorphismKind { InjectiveHomExists, FullySurjectiveHomExists, Isomorphic, HomEquivalent };

const char* morphism_kind_name(MorphismKind kind);
std::optional<MorphismKind> morphism_kind_from_name(std::string_view name);

bool morphism_check(MorphismKind kind, const PointedStructure& a, const PointedStructure& b);

} // namespace modhom
