#include "modhom/transforms.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace modhom {

namespace {

PointedStructure induced(const PointedStructure& m, const std::vector<char>& keep) {
    std::vector<int> remap(m.num_states(), -1);
    std::vector<LabelSet> labels;
    for (int i = 0; i < m.num_states(); ++i) {
        if (keep[i]) {
            remap[i] = static_cast<int>(labels.size());
            labels.push_back(m.labels[i]);
        }
    }
    std::vector<Edge> edges;
    for (const Edge& e : m.edges) {
        if (keep[e.from] && keep[e.to]) {
            edges.push_back({e.action, remap[e.from], remap[e.to]});
        }
    }
    return make_structure(m.sig, std::move(labels), std::move(edges), remap[m.distinguished]);
}

PointedStructure lift_to_backward(const PointedStructure& m) {
    if (m.sig.expansion == ExpansionMode::Backward) return m;
    if (m.sig.expansion != ExpansionMode::None) {
        throw std::invalid_argument("expected a base or backward signature");
    }
    return make_structure(backward_signature(m.sig), m.labels, m.edges, m.distinguished);
}

// One expansion round. Pre: backward signature, connected.
PointedStructure exp_once(const PointedStructure& m, bool& changed) {
    const int base = m.sig.base_action_count;
    std::vector<int> dist = directed_distances(m, m.distinguished);
    std::vector<Edge> edges;
    edges.reserve(m.edges.size());
    changed = false;
    for (const Edge& e : m.edges) {
        if (dist[e.from] >= 0 || dist[e.to] < 0) {
            edges.push_back(e);
            continue;
        }
        if (e.action >= base) {
            throw std::invalid_argument("backward edge crosses into the reachable part");
        }
        edges.push_back({base + e.action, e.to, e.from});
        changed = true;
    }
    return make_structure(m.sig, m.labels, std::move(edges), m.distinguished);
}

} // namespace

PointedStructure restrict_depth(const PointedStructure& m, int k, DepthNotion notion) {
    if (k < 0) throw std::invalid_argument("depth bound must be nonnegative");
    Classification cls = classify(m);
    std::vector<int> dist;
    if (notion == DepthNotion::Directed) {
        if (!cls.point_generated) {
            throw std::invalid_argument(
                "directed depth restriction requires a point-generated structure");
        }
        dist = directed_distances(m, m.distinguished);
    } else {
        if (!cls.connected) {
            throw std::invalid_argument("path depth restriction requires a connected structure");
        }
        dist = undirected_distances(m, m.distinguished);
    }
    std::vector<char> keep(m.num_states(), 0);
    for (int i = 0; i < m.num_states(); ++i) {
        keep[i] = dist[i] >= 0 && dist[i] <= k;
    }
    return induced(m, keep);
}

PointedStructure unravel(const PointedStructure& m, int k) {
    if (k < 0) throw std::invalid_argument("depth bound must be nonnegative");
    constexpr int kStateLimit = 2000000;
    std::vector<LabelSet> labels{m.labels[m.distinguished]};
    std::vector<int> state{m.distinguished};
    std::vector<int> depth{0};
    std::vector<Edge> edges;
    for (int v = 0; v < static_cast<int>(labels.size()); ++v) {
        if (depth[v] == k) continue;
        for (int a = 0; a < m.sig.num_actions(); ++a) {
            for (const Edge& e : m.out_edges(a, state[v])) {
                if (static_cast<int>(labels.size()) >= kStateLimit) {
                    throw std::runtime_error("unraveling exceeds the state limit");
                }
                int child = static_cast<int>(labels.size());
                labels.push_back(m.labels[e.to]);
                state.push_back(e.to);
                depth.push_back(depth[v] + 1);
                edges.push_back({a, v, child});
            }
        }
    }
    return make_structure(m.sig, std::move(labels), std::move(edges), 0);
}

PointedStructure gsub(const PointedStructure& m, std::optional<int> k) {
    if (k && *k < 0) throw std::invalid_argument("depth bound must be nonnegative");
    std::vector<int> dist = directed_distances(m, m.distinguished);
    std::vector<char> keep(m.num_states(), 0);
    for (int i = 0; i < m.num_states(); ++i) {
        keep[i] = dist[i] >= 0 && (!k || dist[i] <= *k);
    }
    return induced(m, keep);
}

PointedStructure backward_expansion(const PointedStructure& m) {
    if (m.sig.expansion != ExpansionMode::None) {
        throw std::invalid_argument("backward_expansion expects a base-signature structure");
    }
    const int base = m.sig.num_actions();
    std::vector<Edge> edges = m.edges;
    edges.reserve(2 * m.edges.size());
    for (const Edge& e : m.edges) {
        edges.push_back({base + e.action, e.to, e.from});
    }
    return make_structure(backward_signature(m.sig), m.labels, std::move(edges),
                          m.distinguished);
}

PointedStructure global_expansion(const PointedStructure& m) {
    if (m.sig.expansion != ExpansionMode::None) {
        throw std::invalid_argument("global_expansion expects a base-signature structure");
    }
    const int g = m.sig.num_actions();
    const int n = m.num_states();
    std::vector<Edge> edges = m.edges;
    edges.reserve(m.edges.size() + static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            edges.push_back({g, i, j});
        }
    }
    return make_structure(global_signature(m.sig), m.labels, std::move(edges), m.distinguished);
}

PointedStructure down_transform(const PointedStructure& m) {
    if (m.sig.expansion != ExpansionMode::None) {
        throw std::invalid_argument("down_transform expects a base-signature structure");
    }
    Classification cls = classify(m);
    if (!cls.connected || !cls.acyclic) {
        throw std::invalid_argument("down_transform requires a connected acyclic structure");
    }
    std::vector<int> depth = undirected_distances(m, m.distinguished);
    const int base = m.sig.num_actions();
    std::vector<Edge> edges;
    edges.reserve(m.edges.size());
    for (const Edge& e : m.edges) {
        if (depth[e.to] == depth[e.from] + 1) {
            edges.push_back(e);
        } else if (depth[e.to] == depth[e.from] - 1) {
            edges.push_back({base + e.action, e.to, e.from});
        } else {
            throw std::logic_error("adjacent depths differ by more than one");
        }
    }
    return make_structure(backward_signature(m.sig), m.labels, std::move(edges),
                          m.distinguished);
}

PointedStructure flip(const PointedStructure& m) {
    if (m.sig.expansion != ExpansionMode::Backward) {
        throw std::invalid_argument("flip expects a backward-signature structure");
    }
    const int base = m.sig.base_action_count;
    std::vector<Edge> edges;
    edges.reserve(m.edges.size());
    for (const Edge& e : m.edges) {
        if (e.action < base) {
            edges.push_back(e);
        } else {
            edges.push_back({e.action - base, e.to, e.from});
        }
    }
    return make_structure(base_signature(m.sig), m.labels, std::move(edges), m.distinguished);
}

PointedStructure exp_step(const PointedStructure& m) {
    PointedStructure lifted = lift_to_backward(m);
    if (!classify(lifted).connected) {
        throw std::invalid_argument("exp_step requires a connected structure");
    }
    bool changed = false;
    return exp_once(lifted, changed);
}

PointedStructure pg_augment(const PointedStructure& m) {
    if (m.sig.expansion != ExpansionMode::None) {
        throw std::invalid_argument("pg_augment expects a base-signature structure");
    }
    PointedStructure cur = lift_to_backward(m);
    if (!classify(cur).connected) {
        throw std::invalid_argument("pg_augment requires a connected structure");
    }
    for (int round = 0; round <= m.num_states(); ++round) {
        bool changed = false;
        PointedStructure next = exp_once(cur, changed);
        if (!changed) return next;
        cur = std::move(next);
    }
    throw std::logic_error("expansion failed to converge");
}

PointedStructure rg_connect(const PointedStructure& m) {
    if (m.sig.expansion != ExpansionMode::None) {
        throw std::invalid_argument("rg_connect expects a base-signature structure");
    }
    if (!classify(m).forest) {
        throw std::invalid_argument("rg_connect requires a forest");
    }
    const int g = m.sig.num_actions();
    std::vector<Edge> edges = m.edges;
    for (const std::vector<int>& comp : connected_components(m)) {
        int root = -1;
        for (int s : comp) {
            if (m.in_degree_all_actions(s) == 0) {
                root = s;
                break;
            }
        }
        if (root == m.distinguished) continue;
        edges.push_back({g, m.distinguished, root});
    }
    return make_structure(global_signature(m.sig), m.labels, std::move(edges), m.distinguished);
}

PointedStructure make_clique(const Signature& sig, int n, bool with_p) {
    if (sig.expansion != ExpansionMode::None) {
        throw std::invalid_argument("make_clique expects a base signature");
    }
    if (n < 1) throw std::invalid_argument("clique needs at least one state");
    if (with_p && sig.num_props() < 1) {
        throw std::invalid_argument("with_p needs a proposition in the signature");
    }
    std::vector<LabelSet> labels(n, with_p ? LabelSet{1} : LabelSet{0});
    std::vector<Edge> edges;
    for (int a = 0; a < sig.num_actions(); ++a) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                edges.push_back({a, i, j});
            }
        }
    }
    return make_structure(sig, std::move(labels), std::move(edges), 0);
}

std::pair<PointedStructure, PointedStructure> hom_equivalent_non_bisimilar_pair() {
    Signature sig = make_signature({"p"}, {"R"});
    PointedStructure m = make_structure(sig, {0, 0, 1}, {{0, 0, 1}, {0, 0, 2}}, 0);
    PointedStructure n = make_structure(sig, {0, 1}, {{0, 0, 1}}, 0);
    return {m, n};
}

} // namespace modhom
