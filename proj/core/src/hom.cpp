#include "modhom/hom.hpp"

#include "modhom/canonical.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace modhom {

namespace {

struct PlanConstraint {
    int action;
    int earlier_pos;
    bool outgoing; // current -> earlier when true, earlier -> current otherwise
};

struct PlanStep {
    int state;
    LabelSet label;
    std::vector<int> self_loop_actions;
    std::vector<PlanConstraint> constraints;
};

// Variable order: distinguished first, then fact-adjacency BFS, restarting
// at the lowest unvisited index for further components. Each edge becomes a
// constraint at its later endpoint.
std::vector<PlanStep> build_plan(const PointedStructure& src) {
    const int n = src.num_states();
    std::vector<int> pos_of(n, -1);
    std::vector<int> order;
    order.reserve(n);
    auto visit = [&](int start) {
        if (pos_of[start] >= 0) return;
        std::deque<int> queue{start};
        pos_of[start] = static_cast<int>(order.size());
        order.push_back(start);
        while (!queue.empty()) {
            int s = queue.front();
            queue.pop_front();
            auto push = [&](int t) {
                if (pos_of[t] < 0) {
                    pos_of[t] = static_cast<int>(order.size());
                    order.push_back(t);
                    queue.push_back(t);
                }
            };
            for (int a = 0; a < src.sig.num_actions(); ++a) {
                for (const Edge& e : src.out_edges(a, s)) push(e.to);
                for (const Edge& e : src.in_edges(a, s)) push(e.from);
            }
        }
    };
    visit(src.distinguished);
    for (int s = 0; s < n; ++s) visit(s);

    std::vector<PlanStep> plan(n);
    for (int i = 0; i < n; ++i) {
        PlanStep& step = plan[i];
        step.state = order[i];
        step.label = src.labels[order[i]];
    }
    for (const Edge& e : src.edges) {
        if (e.from == e.to) {
            plan[pos_of[e.from]].self_loop_actions.push_back(e.action);
        } else if (pos_of[e.from] < pos_of[e.to]) {
            plan[pos_of[e.to]].constraints.push_back({e.action, pos_of[e.from], false});
        } else {
            plan[pos_of[e.from]].constraints.push_back({e.action, pos_of[e.to], true});
        }
    }
    return plan;
}

// Walks all extensions of img[0..pos); emit(img) returns false to abort.
template <typename Emit>
bool backtrack(const std::vector<PlanStep>& plan, const PointedStructure& tgt,
               std::vector<int>& img, size_t pos, bool injective, std::vector<char>& used,
               Emit&& emit) {
    if (pos == plan.size()) return emit(img);
    const PlanStep& step = plan[pos];
    const int first = pos == 0 ? tgt.distinguished : 0;
    const int last = pos == 0 ? tgt.distinguished : tgt.num_states() - 1;
    for (int t = first; t <= last; ++t) {
        if (injective && used[t]) continue;
        if ((step.label & ~tgt.labels[t]) != 0) continue;
        bool ok = true;
        for (int a : step.self_loop_actions)
            if (!tgt.has_edge(a, t, t)) {
                ok = false;
                break;
            }
        for (const PlanConstraint& c : step.constraints) {
            if (!ok) break;
            if (c.outgoing ? !tgt.has_edge(c.action, t, img[c.earlier_pos])
                           : !tgt.has_edge(c.action, img[c.earlier_pos], t))
                ok = false;
        }
        if (!ok) continue;
        img[pos] = t;
        if (injective) used[t] = 1;
        bool keep_going = backtrack(plan, tgt, img, pos + 1, injective, used, emit);
        if (injective) used[t] = 0;
        if (!keep_going) return false;
    }
    return true;
}

template <typename Emit>
void search_homs(const PointedStructure& src, const PointedStructure& tgt, bool injective,
                 Emit&& emit) {
    if (src.sig != tgt.sig)
        throw std::invalid_argument("homomorphism endpoints must share a signature");
    auto plan = build_plan(src);
    std::vector<int> img(plan.size());
    std::vector<char> used(tgt.num_states(), 0);
    backtrack(plan, tgt, img, 0, injective, used, emit);
}

// Per-component bottom-up counts for forest sources: counts[s][t] =
// #homs of the subtree rooted at s that send s to t.
std::vector<BigCount> tree_root_counts(const PointedStructure& src, int root,
                                       const PointedStructure& tgt) {
    std::vector<int> order{root};
    for (size_t i = 0; i < order.size(); ++i)
        for (int a = 0; a < src.sig.num_actions(); ++a)
            for (const Edge& e : src.out_edges(a, order[i])) order.push_back(e.to);

    std::vector<std::vector<BigCount>> counts(src.num_states());
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int s = *it;
        auto& row = counts[s];
        row.assign(tgt.num_states(), BigCount(0));
        for (int t = 0; t < tgt.num_states(); ++t) {
            if ((src.labels[s] & ~tgt.labels[t]) != 0) continue;
            BigCount total = 1;
            for (int a = 0; a < src.sig.num_actions() && total != 0; ++a) {
                for (const Edge& e : src.out_edges(a, s)) {
                    BigCount sum = 0;
                    for (const Edge& te : tgt.out_edges(a, t)) sum += counts[e.to][te.to];
                    total *= sum;
                    if (total == 0) break;
                }
            }
            row[t] = std::move(total);
        }
    }
    return counts[root];
}

} // namespace

std::vector<HomMap> enumerate_homs(const PointedStructure& source,
                                   const PointedStructure& target) {
    auto plan = build_plan(source);
    std::vector<HomMap> homs;
    search_homs(source, target, false, [&](const std::vector<int>& img) {
        HomMap h;
        h.assignment.resize(source.num_states());
        for (size_t pos = 0; pos < plan.size(); ++pos) h.assignment[plan[pos].state] = img[pos];
        homs.push_back(std::move(h));
        return true;
    });
    return homs;
}

BigCount count_hom_maps(const PointedStructure& source, const PointedStructure& target) {
    if (source.sig != target.sig)
        throw std::invalid_argument("homomorphism endpoints must share a signature");
    Classification c = classify(source);
    if (c.forest) {
        std::vector<int> indeg(source.num_states(), 0);
        for (const Edge& e : source.edges) ++indeg[e.to];
        BigCount product = 1;
        for (const auto& block : connected_components(source)) {
            int root = -1;
            for (int s : block)
                if (indeg[s] == 0) root = s;
            auto root_counts = tree_root_counts(source, root, target);
            if (root == source.distinguished) {
                product *= root_counts[target.distinguished];
            } else {
                BigCount sum = 0;
                for (const BigCount& v : root_counts) sum += v;
                product *= sum;
            }
            if (product == 0) break;
        }
        return product;
    }
    BigCount count = 0;
    search_homs(source, target, false, [&](const std::vector<int>&) {
        ++count;
        return true;
    });
    return count;
}

SemiringValue count_homs(const Semiring& s, const PointedStructure& source,
                         const PointedStructure& target) {
    return s.count(count_hom_maps(source, target));
}

bool hom_exists(const PointedStructure& source, const PointedStructure& target) {
    bool found = false;
    search_homs(source, target, false, [&](const std::vector<int>&) {
        found = true;
        return false;
    });
    return found;
}

const char* morphism_kind_name(MorphismKind kind) {
    switch (kind) {
        case MorphismKind::InjectiveHomExists: return "injective";
        case MorphismKind::FullySurjectiveHomExists: return "fully-surjective";
        case MorphismKind::Isomorphic: return "isomorphic";
        case MorphismKind::HomEquivalent: return "hom-equivalent";
    }
    return "?";
}

std::optional<MorphismKind> morphism_kind_from_name(std::string_view name) {
    if (name == "injective") return MorphismKind::InjectiveHomExists;
    if (name == "fully-surjective") return MorphismKind::FullySurjectiveHomExists;
    if (name == "isomorphic") return MorphismKind::Isomorphic;
    if (name == "hom-equivalent") return MorphismKind::HomEquivalent;
    return std::nullopt;
}

namespace {

bool fully_surjective_hom_exists(const PointedStructure& a, const PointedStructure& b) {
    if (a.num_states() < b.num_states() || a.num_edges() < b.num_edges()) return false;
    auto plan = build_plan(a);
    bool found = false;
    search_homs(a, b, false, [&](const std::vector<int>& img) {
        std::vector<int> assignment(a.num_states());
        for (size_t pos = 0; pos < plan.size(); ++pos) assignment[plan[pos].state] = img[pos];
        std::vector<char> hit(b.num_states(), 0);
        for (int s = 0; s < a.num_states(); ++s) hit[assignment[s]] = 1;
        if (std::find(hit.begin(), hit.end(), 0) != hit.end()) return true;
        // Every target fact must be the image of a source fact.
        for (int t = 0; t < b.num_states(); ++t) {
            LabelSet covered = 0;
            for (int s = 0; s < a.num_states(); ++s)
                if (assignment[s] == t) covered |= a.labels[s];
            if ((b.labels[t] & ~covered) != 0) return true;
        }
        for (const Edge& te : b.edges) {
            bool covered = false;
            for (const Edge& se : a.edges)
                if (se.action == te.action && assignment[se.from] == te.from &&
                    assignment[se.to] == te.to) {
                    covered = true;
                    break;
                }
            if (!covered) return true;
        }
        found = true;
        return false;
    });
    return found;
}

} // namespace

bool morphism_check(MorphismKind kind, const PointedStructure& a, const PointedStructure& b) {
    switch (kind) {
        case MorphismKind::InjectiveHomExists: {
            if (a.num_states() > b.num_states()) return false;
            bool found = false;
            search_homs(a, b, true, [&](const std::vector<int>&) {
                found = true;
                return false;
            });
            return found;
        }
        case MorphismKind::FullySurjectiveHomExists: return fully_surjective_hom_exists(a, b);
        case MorphismKind::Isomorphic: return isomorphic(a, b);
        case MorphismKind::HomEquivalent: return hom_exists(a, b) && hom_exists(b, a);
    }
    return false;
}

} // namespace modhom
