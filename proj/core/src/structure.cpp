#include "modhom/structure.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace modhom {

int Signature::prop_index(std::string_view name) const {
    for (int i = 0; i < num_props(); ++i)
        if (props[i] == name) return i;
    return -1;
}

int Signature::action_index(std::string_view name) const {
    for (int i = 0; i < num_actions(); ++i)
        if (actions[i] == name) return i;
    return -1;
}

const std::string kGlobalActionName = "~G";

std::string backward_action_name(const std::string& base_action) {
    return "~" + base_action;
}

Signature make_signature(std::vector<std::string> props, std::vector<std::string> actions) {
    Signature sig;
    sig.props = std::move(props);
    sig.actions = std::move(actions);
    sig.base_action_count = sig.num_actions();
    auto check_names = [](const std::vector<std::string>& names, const char* kind) {
        for (const auto& n : names) {
            if (n.empty()) throw std::invalid_argument(std::string(kind) + " name is empty");
            if (n.front() == '~')
                throw std::invalid_argument(std::string(kind) + " name '" + n +
                                            "' uses the reserved '~' prefix");
        }
    };
    check_names(sig.props, "prop");
    check_names(sig.actions, "action");
    std::vector<std::string> all = sig.props;
    all.insert(all.end(), sig.actions.begin(), sig.actions.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw std::invalid_argument("duplicate name across props/actions");
    return sig;
}

Signature backward_signature(const Signature& base) {
    if (base.expansion != ExpansionMode::None)
        throw std::invalid_argument("backward_signature expects an unexpanded signature");
    Signature sig = base;
    sig.expansion = ExpansionMode::Backward;
    sig.base_action_count = base.num_actions();
    for (const auto& a : base.actions) sig.actions.push_back(backward_action_name(a));
    return sig;
}

Signature global_signature(const Signature& base) {
    if (base.expansion != ExpansionMode::None)
        throw std::invalid_argument("global_signature expects an unexpanded signature");
    Signature sig = base;
    sig.expansion = ExpansionMode::Global;
    sig.base_action_count = base.num_actions();
    sig.actions.push_back(kGlobalActionName);
    return sig;
}

Signature base_signature(const Signature& expanded) {
    Signature sig = expanded;
    sig.actions.resize(expanded.expansion == ExpansionMode::None
                           ? expanded.actions.size()
                           : static_cast<size_t>(expanded.base_action_count));
    sig.expansion = ExpansionMode::None;
    sig.base_action_count = sig.num_actions();
    return sig;
}

void PointedStructure::normalize() {
    const int n = num_states();
    if (n <= 0) throw std::invalid_argument("structure needs at least one state");
    if (distinguished < 0 || distinguished >= n)
        throw std::invalid_argument("distinguished state out of range");
    const LabelSet prop_mask =
        sig.num_props() >= 32 ? ~LabelSet{0} : ((LabelSet{1} << sig.num_props()) - 1);
    for (LabelSet l : labels)
        if ((l & ~prop_mask) != 0) throw std::invalid_argument("label uses unknown proposition");
    for (const Edge& e : edges) {
        if (e.action < 0 || e.action >= sig.num_actions())
            throw std::invalid_argument("edge action out of range");
        if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n)
            throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_by_target_ = edges;
    std::sort(edges_by_target_.begin(), edges_by_target_.end(),
              [](const Edge& a, const Edge& b) {
                  return std::tie(a.action, a.to, a.from) < std::tie(b.action, b.to, b.from);
              });
}

bool PointedStructure::has_edge(int action, int from, int to) const {
    return std::binary_search(edges.begin(), edges.end(), Edge{action, from, to});
}

std::span<const Edge> PointedStructure::out_edges(int action, int from) const {
    auto lo = std::lower_bound(edges.begin(), edges.end(), Edge{action, from, 0});
    auto hi = std::lower_bound(edges.begin(), edges.end(), Edge{action, from + 1, 0});
    return {lo, hi};
}

std::span<const Edge> PointedStructure::in_edges(int action, int to) const {
    auto key = [](const Edge& e) { return std::tuple(e.action, e.to, e.from); };
    auto lo = std::lower_bound(edges_by_target_.begin(), edges_by_target_.end(),
                               std::tuple(action, to, 0),
                               [&](const Edge& e, const auto& t) { return key(e) < t; });
    auto hi = std::lower_bound(edges_by_target_.begin(), edges_by_target_.end(),
                               std::tuple(action, to + 1, 0),
                               [&](const Edge& e, const auto& t) { return key(e) < t; });
    return {lo, hi};
}

int PointedStructure::out_degree(int action, int from) const {
    return static_cast<int>(out_edges(action, from).size());
}

int PointedStructure::in_degree_all_actions(int to) const {
    int total = 0;
    for (int a = 0; a < sig.num_actions(); ++a)
        total += static_cast<int>(in_edges(a, to).size());
    return total;
}

PointedStructure make_structure(Signature sig, std::vector<LabelSet> labels,
                                std::vector<Edge> edges, int distinguished) {
    PointedStructure m;
    m.sig = std::move(sig);
    m.labels = std::move(labels);
    m.edges = std::move(edges);
    m.distinguished = distinguished;
    m.normalize();
    return m;
}

const char* class_tag_name(ClassTag tag) {
    switch (tag) {
        case ClassTag::Tree: return "tree";
        case ClassTag::ConnectedAcyclic: return "acyclic";
        case ClassTag::Forest: return "forest";
        case ClassTag::PointGenerated: return "pg";
        case ClassTag::Connected: return "connected";
    }
    return "?";
}

std::optional<ClassTag> class_tag_from_name(std::string_view name) {
    if (name == "tree") return ClassTag::Tree;
    if (name == "acyclic") return ClassTag::ConnectedAcyclic;
    if (name == "forest") return ClassTag::Forest;
    if (name == "pg") return ClassTag::PointGenerated;
    if (name == "connected") return ClassTag::Connected;
    return std::nullopt;
}

bool Classification::satisfies(ClassTag tag) const {
    switch (tag) {
        case ClassTag::Tree: return tree;
        case ClassTag::ConnectedAcyclic: return connected && acyclic;
        case ClassTag::Forest: return forest;
        case ClassTag::PointGenerated: return point_generated;
        case ClassTag::Connected: return connected;
    }
    return false;
}

std::optional<int> Classification::depth_for(ClassTag tag) const {
    switch (tag) {
        case ClassTag::Tree:
        case ClassTag::PointGenerated: return directed_depth;
        case ClassTag::ConnectedAcyclic:
        case ClassTag::Connected: return sigma_depth;
        case ClassTag::Forest: return forest_depth;
    }
    return std::nullopt;
}

bool Classification::in_class(ClassTag tag, std::optional<int> max_depth) const {
    if (!satisfies(tag)) return false;
    if (!max_depth) return true;
    auto d = depth_for(tag);
    return d && *d <= *max_depth;
}

std::vector<ClassTag> Classification::tags() const {
    std::vector<ClassTag> out;
    for (ClassTag t : {ClassTag::Tree, ClassTag::ConnectedAcyclic, ClassTag::Forest,
                       ClassTag::PointGenerated, ClassTag::Connected})
        if (satisfies(t)) out.push_back(t);
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // Returns false when the edge closes a cycle.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

std::vector<int> bfs(int n, int source, auto&& neighbors) {
    std::vector<int> dist(n, -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        neighbors(s, [&](int t) {
            if (dist[t] < 0) {
                dist[t] = dist[s] + 1;
                queue.push_back(t);
            }
        });
    }
    return dist;
}

} // namespace

std::vector<int> directed_distances(const PointedStructure& m, int source) {
    return bfs(m.num_states(), source, [&](int s, auto&& visit) {
        for (int a = 0; a < m.sig.num_actions(); ++a)
            for (const Edge& e : m.out_edges(a, s)) visit(e.to);
    });
}

std::vector<int> undirected_distances(const PointedStructure& m, int source) {
    return bfs(m.num_states(), source, [&](int s, auto&& visit) {
        for (int a = 0; a < m.sig.num_actions(); ++a) {
            for (const Edge& e : m.out_edges(a, s)) visit(e.to);
            for (const Edge& e : m.in_edges(a, s)) visit(e.from);
        }
    });
}

std::vector<std::vector<int>> connected_components(const PointedStructure& m) {
    UnionFind uf(m.num_states());
    for (const Edge& e : m.edges) uf.unite(e.from, e.to);
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of(m.num_states(), -1);
    for (int s = 0; s < m.num_states(); ++s) {
        int root = uf.find(s);
        if (block_of[root] < 0) {
            block_of[root] = static_cast<int>(blocks.size());
            blocks.emplace_back();
        }
        blocks[block_of[root]].push_back(s);
    }
    return blocks;
}

Classification classify(const PointedStructure& m) {
    const int n = m.num_states();
    Classification c;

    // A cycle in the undirected fact multigraph is exactly a redundant fact:
    // a self-loop or an edge joining two already-joined states.
    UnionFind uf(n);
    c.acyclic = true;
    for (const Edge& e : m.edges)
        if (e.from == e.to || !uf.unite(e.from, e.to)) c.acyclic = false;

    auto udist = undirected_distances(m, m.distinguished);
    c.connected = std::none_of(udist.begin(), udist.end(), [](int d) { return d < 0; });
    if (c.connected) c.sigma_depth = *std::max_element(udist.begin(), udist.end());

    auto ddist = directed_distances(m, m.distinguished);
    c.point_generated = std::none_of(ddist.begin(), ddist.end(), [](int d) { return d < 0; });
    if (c.point_generated) c.directed_depth = *std::max_element(ddist.begin(), ddist.end());

    std::vector<int> indeg(n, 0);
    for (const Edge& e : m.edges) ++indeg[e.to];
    bool indeg_ok = std::all_of(indeg.begin(), indeg.end(), [](int d) { return d <= 1; });
    c.forest = indeg_ok && indeg[m.distinguished] == 0;
    if (c.forest) {
        for (const auto& block : connected_components(m)) {
            int roots = 0;
            for (int s : block) roots += (indeg[s] == 0);
            if (roots != 1) {
                c.forest = false;
                break;
            }
        }
    }
    if (c.forest) {
        int depth = 0;
        std::vector<int> indeg0;
        for (int s = 0; s < n; ++s)
            if (indeg[s] == 0) indeg0.push_back(s);
        for (int root : indeg0) {
            auto dist = directed_distances(m, root);
            for (int d : dist) depth = std::max(depth, d);
        }
        c.forest_depth = depth;
    }
    c.tree = c.forest && c.connected;
    return c;
}

} // namespace modhom
