#include "modhom/enumerate.hpp"

#include "modhom/canonical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace modhom {

namespace {

struct TreeNode {
    LabelSet label = 0;
    // (action, index into the previous level), non-decreasing.
    std::vector<std::pair<int, int>> children;
    int size = 1;
};

// levels[d] holds one representative per iso class of tree with depth <= d
// and at most max_states states; children reference levels[d-1].
std::vector<std::vector<TreeNode>> build_tree_levels(const Signature& sig, int max_states,
                                                     int max_depth) {
    if (sig.num_props() > 16) {
        throw std::invalid_argument("too many propositions to enumerate");
    }
    const int num_labels = 1 << sig.num_props();
    const int depth_cap = std::min(max_depth, max_states - 1);
    std::vector<std::vector<TreeNode>> levels(depth_cap + 1);
    for (int l = 0; l < num_labels; ++l) {
        levels[0].push_back({static_cast<LabelSet>(l), {}, 1});
    }
    for (int d = 1; d <= depth_cap; ++d) {
        const auto& prev = levels[d - 1];
        auto& cur = levels[d];
        std::vector<std::pair<int, int>> acc;
        int total = 0;
        std::function<void(int, int)> rec = [&](int min_a, int min_c) {
            for (int l = 0; l < num_labels; ++l) {
                cur.push_back({static_cast<LabelSet>(l), acc, total + 1});
            }
            for (int a = min_a; a < sig.num_actions(); ++a) {
                for (int c = (a == min_a) ? min_c : 0; c < static_cast<int>(prev.size()); ++c) {
                    if (total + 1 + prev[c].size > max_states) continue;
                    acc.push_back({a, c});
                    total += prev[c].size;
                    rec(a, c);
                    total -= prev[c].size;
                    acc.pop_back();
                }
            }
        };
        rec(0, 0);
    }
    return levels;
}

int add_subtree(const std::vector<std::vector<TreeNode>>& levels, int level, int idx,
                std::vector<LabelSet>& labels, std::vector<Edge>& edges) {
    const TreeNode& t = levels[level][idx];
    int me = static_cast<int>(labels.size());
    labels.push_back(t.label);
    for (auto [a, c] : t.children) {
        int child = add_subtree(levels, level - 1, c, labels, edges);
        edges.push_back({a, me, child});
    }
    return me;
}

PointedStructure materialize_tree(const Signature& sig,
                                  const std::vector<std::vector<TreeNode>>& levels, int idx) {
    std::vector<LabelSet> labels;
    std::vector<Edge> edges;
    add_subtree(levels, static_cast<int>(levels.size()) - 1, idx, labels, edges);
    return make_structure(sig, std::move(labels), std::move(edges), 0);
}

void sort_slice(std::vector<std::pair<std::string, PointedStructure>>& keyed) {
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.second.num_states() != b.second.num_states()) {
            return a.second.num_states() < b.second.num_states();
        }
        return a.first < b.first;
    });
}

std::vector<PointedStructure> enumerate_trees(const Signature& sig, int max_states,
                                              int max_depth) {
    auto levels = build_tree_levels(sig, max_states, max_depth);
    const auto& final_level = levels.back();
    std::vector<std::pair<std::string, PointedStructure>> keyed;
    keyed.reserve(final_level.size());
    for (int i = 0; i < static_cast<int>(final_level.size()); ++i) {
        auto m = materialize_tree(sig, levels, i);
        keyed.emplace_back(tree_encoding(m), std::move(m));
    }
    sort_slice(keyed);
    std::vector<PointedStructure> out;
    out.reserve(keyed.size());
    for (auto& [key, m] : keyed) out.push_back(std::move(m));
    return out;
}

std::vector<PointedStructure> enumerate_forests(const Signature& sig, int max_states,
                                                int max_depth) {
    auto levels = build_tree_levels(sig, max_states, max_depth);
    const auto& comps = levels.back();
    std::vector<PointedStructure> built;
    std::vector<std::string> enc;
    built.reserve(comps.size());
    for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
        built.push_back(materialize_tree(sig, levels, i));
        enc.push_back(tree_encoding(built.back()));
    }

    std::vector<std::pair<std::string, PointedStructure>> keyed;
    std::vector<int> free_comps;
    for (int p = 0; p < static_cast<int>(comps.size()); ++p) {
        int used = comps[p].size;
        std::function<void(int)> rec = [&](int min_c) {
            std::vector<LabelSet> labels = built[p].labels;
            std::vector<Edge> edges = built[p].edges;
            std::vector<std::string> parts;
            for (int c : free_comps) {
                int offset = static_cast<int>(labels.size());
                labels.insert(labels.end(), built[c].labels.begin(), built[c].labels.end());
                for (const Edge& e : built[c].edges) {
                    edges.push_back({e.action, e.from + offset, e.to + offset});
                }
                parts.push_back(enc[c]);
            }
            std::sort(parts.begin(), parts.end());
            std::string key = enc[p] + "|";
            for (const auto& s : parts) key += s + ",";
            keyed.emplace_back(std::move(key),
                               make_structure(sig, std::move(labels), std::move(edges), 0));

            for (int c = min_c; c < static_cast<int>(comps.size()); ++c) {
                if (used + comps[c].size > max_states) continue;
                free_comps.push_back(c);
                used += comps[c].size;
                rec(c);
                used -= comps[c].size;
                free_comps.pop_back();
            }
        };
        rec(0);
    }
    sort_slice(keyed);
    std::vector<PointedStructure> out;
    out.reserve(keyed.size());
    for (auto& [key, m] : keyed) out.push_back(std::move(m));
    return out;
}

std::vector<PointedStructure> filter_enumerate(
    const Signature& sig, int max_states, const EnumerationBudget& budget,
    const std::function<bool(const PointedStructure&)>& keep) {
    if (max_states > budget.max_filter_states) {
        std::ostringstream msg;
        msg << "refusing enumeration: " << max_states << " states exceeds the filter budget of "
            << budget.max_filter_states;
        throw std::invalid_argument(msg.str());
    }
    const int props = sig.num_props();
    const int actions = sig.num_actions();
    long long raw_total = 0;
    for (int n = 1; n <= max_states; ++n) {
        long long bits = static_cast<long long>(props) * n +
                         static_cast<long long>(actions) * n * n;
        if (bits >= 62 || (raw_total += 1LL << bits) > budget.max_raw_candidates) {
            std::ostringstream msg;
            msg << "refusing enumeration: raw search space exceeds the budget of "
                << budget.max_raw_candidates << " candidates";
            throw std::invalid_argument(msg.str());
        }
    }

    std::vector<PointedStructure> out;
    for (int n = 1; n <= max_states; ++n) {
        const int label_bits = props * n;
        const int edge_slots = actions * n * n;
        std::map<std::string, PointedStructure> reps;
        for (long long lmask = 0; lmask < (1LL << label_bits); ++lmask) {
            std::vector<LabelSet> labels(n);
            for (int s = 0; s < n; ++s) {
                labels[s] = static_cast<LabelSet>((lmask >> (s * props)) & ((1 << props) - 1));
            }
            for (long long emask = 0; emask < (1LL << edge_slots); ++emask) {
                std::vector<Edge> edges;
                for (int e = 0; e < edge_slots; ++e) {
                    if ((emask >> e) & 1) {
                        edges.push_back({e / (n * n), (e / n) % n, e % n});
                    }
                }
                auto m = make_structure(sig, labels, std::move(edges), 0);
                if (!keep(m)) continue;
                auto code = canonical_encoding(m);
                reps.emplace(std::move(code), std::move(m));
            }
        }
        for (auto& [code, m] : reps) out.push_back(std::move(m));
    }
    return out;
}

int rand_below(std::mt19937_64& rng, int n) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

bool rand_chance(std::mt19937_64& rng, double p) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

} // namespace

ClassSlice enumerate_class(ClassTag tag, const Signature& sig, int max_states, int max_depth,
                           const EnumerationBudget& budget) {
    if (max_states < 1) throw std::invalid_argument("need at least one state");
    if (max_depth < 0) throw std::invalid_argument("depth bound must be nonnegative");

    ClassSlice slice{tag, sig, max_states, max_depth, {}};
    if (tag == ClassTag::Tree || tag == ClassTag::Forest) {
        if (max_states > budget.max_tree_states) {
            std::ostringstream msg;
            msg << "refusing enumeration: " << max_states
                << " states exceeds the tree budget of " << budget.max_tree_states;
            throw std::invalid_argument(msg.str());
        }
        slice.structures = tag == ClassTag::Tree ? enumerate_trees(sig, max_states, max_depth)
                                                 : enumerate_forests(sig, max_states, max_depth);
    } else {
        slice.structures = filter_enumerate(sig, max_states, budget,
                                            [&](const PointedStructure& m) {
                                                return classify(m).in_class(tag, max_depth);
                                            });
    }
    return slice;
}

std::vector<PointedStructure> enumerate_structures(const Signature& sig, int max_states,
                                                   const EnumerationBudget& budget) {
    if (max_states < 1) throw std::invalid_argument("need at least one state");
    return filter_enumerate(sig, max_states, budget,
                            [](const PointedStructure&) { return true; });
}

PointedStructure random_structure(ClassTag tag, const Signature& sig, const RandomParams& params,
                                  std::uint64_t seed) {
    if (params.num_states < 1) throw std::invalid_argument("need at least one state");
    const int n = params.num_states;
    const int actions = sig.num_actions();
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<LabelSet> labels(n, 0);
        for (auto& l : labels) {
            for (int p = 0; p < sig.num_props(); ++p) {
                if (rand_chance(rng, 0.5)) l |= 1u << p;
            }
        }
        std::vector<Edge> edges;
        auto skeleton = [&](bool oriented_down, bool allow_roots) {
            for (int i = 1; i < n; ++i) {
                if (allow_roots && rand_below(rng, 3) == 0) continue;
                int parent = rand_below(rng, i);
                int a = rand_below(rng, actions);
                if (oriented_down || rand_below(rng, 2) == 0) {
                    edges.push_back({a, parent, i});
                } else {
                    edges.push_back({a, i, parent});
                }
            }
        };
        auto extras = [&] {
            for (int a = 0; a < actions; ++a) {
                for (int f = 0; f < n; ++f) {
                    for (int t = 0; t < n; ++t) {
                        if (rand_chance(rng, params.edge_density)) edges.push_back({a, f, t});
                    }
                }
            }
        };
        switch (tag) {
        case ClassTag::Tree: skeleton(true, false); break;
        case ClassTag::Forest: skeleton(true, true); break;
        case ClassTag::ConnectedAcyclic: skeleton(false, false); break;
        case ClassTag::PointGenerated:
            skeleton(true, false);
            extras();
            break;
        case ClassTag::Connected:
            skeleton(false, false);
            extras();
            break;
        }
        auto m = make_structure(sig, std::move(labels), std::move(edges), 0);
        if (classify(m).in_class(tag, std::nullopt)) return m;
    }
    throw std::runtime_error("random_structure gave up after 10000 attempts");
}

} // namespace modhom
