#pragma once

#include "modhom/semiring.hpp"
#include "modhom/structure.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace modhom {

struct VerifyBounds {
    // Corpus structures use at most this many states; below 4 the corpus is
    // exhaustive up to isomorphism, otherwise seeded-random pairs.
    int max_states = 3;
    // Depth parameter k for the depth-parameterized equivalences; those
    // drivers run every k from 1 to this value.
    int max_depth = 2;
    // Random-corpus cap.
    int max_pairs = 200;
};

struct Disagreement {
    PointedStructure left;
    PointedStructure right;
    std::string profile_verdict;
    std::string oracle_verdict;
    std::optional<PointedStructure> witness;
};

struct TheoremReport {
    std::string theorem;
    std::string corpus;
    VerifyBounds bounds;
    std::uint64_t seed = 0;
    long long pairs_tested = 0;
    long long agreements = 0;
    std::vector<Disagreement> disagreements;

    bool ok() const { return disagreements.empty() && agreements == pairs_tested; }
};

// The identifiers verify_theorem accepts.
std::vector<std::string> verify_theorem_ids();

// Runs one verification experiment: biconditional equivalences compare the
// profile side against the structural or logical oracle over every corpus
// pair; counting identities check their equation for every (source, target)
// pair in range. Reproducible bit-for-bit from (id, bounds, seed).
TheoremReport verify_theorem(const std::string& id, const VerifyBounds& bounds,
                             std::uint64_t seed);

nlohmann::json theorem_report_to_json(const TheoremReport& report);
std::string theorem_report_to_text(const TheoremReport& report);

struct NegativeDemoReport {
    std::string semiring;

    // Pointed hom counts from trees into cliques follow n^(states-1).
    bool clique_counts_exact = false;
    std::vector<std::string> clique_count_lines;

    // Cliques of different sizes are pairwise bisimilar.
    bool cliques_bisimilar = false;

    // The hom-equivalent non-bisimilar pair and its verdicts.
    bool pair_hom_equivalent = false;
    bool pair_tree_profiles_equal = false;
    bool pair_bisimilar = true;
    bool pair_mutually_directed_similar = true;

    // Counting-collapse analysis and the separating example it yields.
    PeriodicityReport periodicity;
    std::string case_name;
    std::vector<std::string> separation;
    int separating_tree_states = 0;
    int separating_clique = 0;
    std::string count_left;
    std::string count_right;
    bool separation_verified = false;

    bool ok() const {
        return clique_counts_exact && cliques_bisimilar && pair_hom_equivalent &&
               pair_tree_profiles_equal && !pair_bisimilar && !pair_mutually_directed_similar &&
               separation_verified;
    }
};

// Assembles the ingredients showing why no class of structures can make
// semiring-valued profiles characterize modal equivalence once counting
// collapses: exact clique counts, bisimilar cliques with distinct counts,
// the hom-equivalent non-bisimilar pair, and the periodicity case analysis
// with a concrete separating example.
NegativeDemoReport negative_demo(const Semiring& s);

nlohmann::json negative_demo_to_json(const NegativeDemoReport& report);
std::string negative_demo_to_text(const NegativeDemoReport& report);

} // namespace modhom
