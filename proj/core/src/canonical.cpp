#include "modhom/canonical.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace modhom {

PointedStructure permute_states(const PointedStructure& m, const std::vector<int>& perm) {
    std::vector<LabelSet> labels(m.num_states());
    for (int s = 0; s < m.num_states(); ++s) labels[perm[s]] = m.labels[s];
    std::vector<Edge> edges;
    edges.reserve(m.edges.size());
    for (const Edge& e : m.edges) edges.push_back({e.action, perm[e.from], perm[e.to]});
    return make_structure(m.sig, std::move(labels), std::move(edges), perm[m.distinguished]);
}

namespace {

std::string encode_permuted(const PointedStructure& m, const std::vector<int>& perm) {
    std::ostringstream out;
    out << m.num_states() << ';';
    std::vector<LabelSet> labels(m.num_states());
    for (int s = 0; s < m.num_states(); ++s) labels[perm[s]] = m.labels[s];
    for (LabelSet l : labels) out << l << ',';
    out << ';';
    std::vector<Edge> edges;
    edges.reserve(m.edges.size());
    for (const Edge& e : m.edges) edges.push_back({e.action, perm[e.from], perm[e.to]});
    std::sort(edges.begin(), edges.end());
    for (const Edge& e : edges) out << e.action << ':' << e.from << '>' << e.to << ',';
    return std::move(out).str();
}

} // namespace

std::string canonical_encoding(const PointedStructure& m) {
    const int n = m.num_states();
    if (n > kCanonicalStateLimit)
        throw std::invalid_argument("canonical_encoding limited to small structures");
    std::vector<int> rest;
    for (int s = 0; s < n; ++s)
        if (s != m.distinguished) rest.push_back(s);
    std::vector<int> perm(n);
    perm[m.distinguished] = 0;
    std::string best;
    do {
        for (int i = 0; i < static_cast<int>(rest.size()); ++i) perm[rest[i]] = i + 1;
        std::string enc = encode_permuted(m, perm);
        if (best.empty() || enc < best) best = std::move(enc);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return best;
}

namespace {

std::string tree_code_at(const PointedStructure& t, int s) {
    std::vector<std::string> kids;
    for (int a = 0; a < t.sig.num_actions(); ++a)
        for (const Edge& e : t.out_edges(a, s))
            kids.push_back(std::to_string(a) + tree_code_at(t, e.to));
    std::sort(kids.begin(), kids.end());
    std::string code = "[" + std::to_string(t.labels[s]);
    for (const auto& k : kids) code += "," + k;
    code += "]";
    return code;
}

} // namespace

std::string tree_encoding(const PointedStructure& tree) {
    return std::to_string(tree.sig.num_actions()) + "#" + tree_code_at(tree, tree.distinguished);
}

namespace {

using Invariant = std::tuple<LabelSet, std::vector<int>, std::vector<int>>;

Invariant state_invariant(const PointedStructure& m, int s) {
    std::vector<int> outdeg(m.sig.num_actions()), indeg(m.sig.num_actions());
    for (int a = 0; a < m.sig.num_actions(); ++a) {
        outdeg[a] = static_cast<int>(m.out_edges(a, s).size());
        indeg[a] = static_cast<int>(m.in_edges(a, s).size());
    }
    return {m.labels[s], std::move(outdeg), std::move(indeg)};
}

bool extend_mapping(const PointedStructure& m, const PointedStructure& n,
                    std::vector<int>& map_mn, std::vector<char>& used, int next) {
    const int size = m.num_states();
    if (next == size) return true;
    // Skip states already pinned (the distinguished pair).
    if (map_mn[next] >= 0) return extend_mapping(m, n, map_mn, used, next + 1);
    Invariant inv = state_invariant(m, next);
    for (int cand = 0; cand < size; ++cand) {
        if (used[cand] || state_invariant(n, cand) != inv) continue;
        bool ok = true;
        for (int prev = 0; prev < size && ok; ++prev) {
            if (map_mn[prev] < 0) continue;
            for (int a = 0; a < m.sig.num_actions() && ok; ++a) {
                if (m.has_edge(a, next, prev) != n.has_edge(a, cand, map_mn[prev])) ok = false;
                if (m.has_edge(a, prev, next) != n.has_edge(a, map_mn[prev], cand)) ok = false;
                if (m.has_edge(a, next, next) != n.has_edge(a, cand, cand)) ok = false;
            }
        }
        if (!ok) continue;
        map_mn[next] = cand;
        used[cand] = 1;
        if (extend_mapping(m, n, map_mn, used, next + 1)) return true;
        map_mn[next] = -1;
        used[cand] = 0;
    }
    return false;
}

} // namespace

bool isomorphic(const PointedStructure& m, const PointedStructure& n) {
    if (m.sig != n.sig) return false;
    if (m.num_states() != n.num_states() || m.num_edges() != n.num_edges()) return false;
    std::vector<Invariant> im, in_;
    for (int s = 0; s < m.num_states(); ++s) im.push_back(state_invariant(m, s));
    for (int s = 0; s < n.num_states(); ++s) in_.push_back(state_invariant(n, s));
    if (im[m.distinguished] != in_[n.distinguished]) return false;
    std::sort(im.begin(), im.end());
    std::sort(in_.begin(), in_.end());
    if (im != in_) return false;

    Classification cm = classify(m);
    if (cm.tree) {
        Classification cn = classify(n);
        if (!cn.tree) return false;
        return tree_encoding(m) == tree_encoding(n);
    }

    std::vector<int> map_mn(m.num_states(), -1);
    std::vector<char> used(n.num_states(), 0);
    map_mn[m.distinguished] = n.distinguished;
    used[n.distinguished] = 1;
    return extend_mapping(m, n, map_mn, used, 0);
}

} // namespace modhom
