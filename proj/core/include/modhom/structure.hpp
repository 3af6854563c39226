#pragma once

#include "modhom/signature.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace modhom {

// Bit i set <=> proposition i holds at the state.
using LabelSet = std::uint32_t;

struct Edge {
    int action = 0;
    int from = 0;
    int to = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A finite pointed structure over a modal signature: unary proposition
// labels, binary action relations, one distinguished state. States are
// indexed 0..n-1. Edges are kept sorted and duplicate-free; a mirror copy
// sorted by target serves predecessor queries.
struct PointedStructure {
    Signature sig;
    std::vector<LabelSet> labels;
    std::vector<Edge> edges;
    int distinguished = 0;

    int num_states() const { return static_cast<int>(labels.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }
    bool has_prop(int state, int prop) const { return (labels[state] >> prop) & 1u; }

    // Sorts and deduplicates edges, rebuilds the target-sorted mirror,
    // validates all indices. Throws std::invalid_argument on bad input.
    void normalize();

    bool has_edge(int action, int from, int to) const;
    std::span<const Edge> out_edges(int action, int from) const;
    std::span<const Edge> in_edges(int action, int to) const;
    int out_degree(int action, int from) const;
    int in_degree_all_actions(int to) const;

    bool operator==(const PointedStructure& other) const {
        return sig == other.sig && labels == other.labels && edges == other.edges &&
               distinguished == other.distinguished;
    }

  private:
    std::vector<Edge> edges_by_target_;
};

PointedStructure make_structure(Signature sig, std::vector<LabelSet> labels,
                                std::vector<Edge> edges, int distinguished);

enum class ClassTag { Tree, ConnectedAcyclic, Forest, PointGenerated, Connected };

const char* class_tag_name(ClassTag tag);
std::optional<ClassTag> class_tag_from_name(std::string_view name);

// Which depth notion bounds membership in the depth-parameterized class.
enum class DepthNotion { Directed, SigmaPath };

struct Classification {
    bool connected = false;
    bool acyclic = false;
    bool point_generated = false;
    bool forest = false;
    bool tree = false;

    // Max over states of the shortest directed walk from the point; defined
    // iff point-generated.
    std::optional<int> directed_depth;
    // Same with undirected fact-paths; defined iff connected.
    std::optional<int> sigma_depth;
    // Max over components of the component tree's depth; defined iff forest.
    std::optional<int> forest_depth;

    bool satisfies(ClassTag tag) const;
    std::optional<int> depth_for(ClassTag tag) const;
    bool in_class(ClassTag tag, std::optional<int> max_depth) const;
    std::vector<ClassTag> tags() const;
};

Classification classify(const PointedStructure& m);

// Blocks of the undirected fact-reachability partition, each sorted,
// ordered by smallest member state.
std::vector<std::vector<int>> connected_components(const PointedStructure& m);

// Shortest-walk distances from the given state; -1 for unreachable states.
std::vector<int> directed_distances(const PointedStructure& m, int source);
std::vector<int> undirected_distances(const PointedStructure& m, int source);

} // namespace modhom
