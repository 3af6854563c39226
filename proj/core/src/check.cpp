#include "modhom/check.hpp"

#include "modhom/canonical.hpp"
#include "modhom/transforms.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace modhom {

namespace {

void require(bool cond, const char* message) {
    if (!cond) throw std::invalid_argument(message);
}

bool check_rec(const PointedStructure& m, int state, const Formula& f, Assignment& env) {
    switch (f.kind) {
    case FormulaKind::True:
        return true;
    case FormulaKind::False:
        return false;
    case FormulaKind::Prop:
        require(f.symbol < m.sig.num_props(), "proposition index out of range for the signature");
        return m.has_prop(state, f.symbol);
    case FormulaKind::WorldVar: {
        auto it = env.find(f.var);
        if (it == env.end()) throw std::invalid_argument("unbound world variable: " + f.var);
        return it->second == state;
    }
    case FormulaKind::Not:
        return !check_rec(m, state, f.children.front(), env);
    case FormulaKind::And:
        for (const Formula& c : f.children)
            if (!check_rec(m, state, c, env)) return false;
        return true;
    case FormulaKind::Or:
        for (const Formula& c : f.children)
            if (check_rec(m, state, c, env)) return true;
        return false;
    case FormulaKind::Diamond: {
        require(f.symbol < m.sig.num_actions(), "action index out of range for the signature");
        int count = 0;
        for (const Edge& e : m.out_edges(f.symbol, state))
            if (check_rec(m, e.to, f.children.front(), env) && ++count >= f.grade) return true;
        return false;
    }
    case FormulaKind::Box: {
        require(f.symbol < m.sig.num_actions(), "action index out of range for the signature");
        for (const Edge& e : m.out_edges(f.symbol, state))
            if (!check_rec(m, e.to, f.children.front(), env)) return false;
        return true;
    }
    case FormulaKind::BackDiamond: {
        require(f.symbol < m.sig.num_actions(), "action index out of range for the signature");
        int count = 0;
        for (const Edge& e : m.in_edges(f.symbol, state))
            if (check_rec(m, e.from, f.children.front(), env) && ++count >= f.grade) return true;
        return false;
    }
    case FormulaKind::Global: {
        int count = 0;
        for (int s = 0; s < m.num_states(); ++s)
            if (check_rec(m, s, f.children.front(), env) && ++count >= f.grade) return true;
        return false;
    }
    case FormulaKind::Down: {
        auto it = env.find(f.var);
        const bool had = it != env.end();
        const int old = had ? it->second : -1;
        env[f.var] = state;
        const bool result = check_rec(m, state, f.children.front(), env);
        if (had)
            env[f.var] = old;
        else
            env.erase(f.var);
        return result;
    }
    case FormulaKind::At: {
        auto it = env.find(f.var);
        if (it == env.end()) throw std::invalid_argument("unbound world variable: " + f.var);
        return check_rec(m, it->second, f.children.front(), env);
    }
    }
    return false;
}

} // namespace

bool check(const PointedStructure& m, const Assignment& g, const Formula& f) {
    for (const auto& [name, s] : g)
        require(s >= 0 && s < m.num_states(), "assignment maps a variable outside the structure");
    Assignment env = g;
    return check_rec(m, m.distinguished, f, env);
}

bool check(const PointedStructure& m, const Formula& f) { return check(m, Assignment{}, f); }

namespace {

Formula pml_rec(const PointedStructure& t, int s) {
    std::vector<Formula> marks;
    for (int p = 0; p < t.sig.num_props(); ++p)
        if (t.has_prop(s, p)) marks.push_back(f_prop(p));
    std::vector<Formula> conjuncts;
    conjuncts.push_back(f_and(std::move(marks)));
    for (int a = 0; a < t.sig.num_actions(); ++a)
        for (const Edge& e : t.out_edges(a, s))
            conjuncts.push_back(f_diamond(a, 1, pml_rec(t, e.to)));
    return f_and(std::move(conjuncts));
}

} // namespace

Formula tree_to_pml(const PointedStructure& t) {
    require(classify(t).tree, "tree input required");
    return pml_rec(t, t.distinguished);
}

namespace {

PointedStructure subtree_truncated(const PointedStructure& t, int root, int depth) {
    std::vector<int> order{root};
    std::vector<int> dist{0};
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (dist[i] == depth) continue;
        for (int a = 0; a < t.sig.num_actions(); ++a)
            for (const Edge& e : t.out_edges(a, order[i])) {
                const int j = static_cast<int>(order.size());
                edges.push_back(Edge{a, static_cast<int>(i), j});
                order.push_back(e.to);
                dist.push_back(dist[i] + 1);
            }
    }
    std::vector<LabelSet> labels;
    labels.reserve(order.size());
    for (int u : order) labels.push_back(t.labels[u]);
    return make_structure(t.sig, std::move(labels), std::move(edges), 0);
}

Formula gml_rec(const PointedStructure& t, int s, int rem) {
    std::vector<Formula> conjuncts;
    for (int p = 0; p < t.sig.num_props(); ++p) {
        Formula lit = f_prop(p);
        conjuncts.push_back(t.has_prop(s, p) ? std::move(lit) : f_not(std::move(lit)));
    }
    if (rem > 0) {
        for (int a = 0; a < t.sig.num_actions(); ++a) {
            const auto kids = t.out_edges(a, s);
            const int n = static_cast<int>(kids.size());
            if (n >= 1) conjuncts.push_back(f_diamond(a, n, f_true()));
            conjuncts.push_back(f_not(f_diamond(a, n + 1, f_true())));
            std::map<std::string, std::pair<int, int>> classes; // code -> (representative, count)
            for (const Edge& e : kids) {
                std::string code = tree_encoding(subtree_truncated(t, e.to, rem - 1));
                auto [it, inserted] = classes.try_emplace(std::move(code), e.to, 0);
                ++it->second.second;
            }
            for (const auto& [code, rep_count] : classes) {
                Formula body = gml_rec(t, rep_count.first, rem - 1);
                conjuncts.push_back(f_diamond(a, rep_count.second, body));
                conjuncts.push_back(f_not(f_diamond(a, rep_count.second + 1, std::move(body))));
            }
        }
    }
    return f_and(std::move(conjuncts));
}

} // namespace

Formula tree_to_gml(const PointedStructure& t, int k) {
    require(k >= 0, "depth bound must be nonnegative");
    const Classification cls = classify(t);
    require(cls.tree, "tree input required");
    require(cls.directed_depth.value() <= k, "tree is deeper than the bound");
    return gml_rec(t, t.distinguished, k);
}

const char* simulation_kind_name(SimulationKind kind) {
    switch (kind) {
    case SimulationKind::Simulation:
        return "simulation";
    case SimulationKind::DirectedSimulation:
        return "directed-simulation";
    case SimulationKind::Bisimulation:
        return "bisimulation";
    }
    return "";
}

namespace {

bool same_signature(const Signature& a, const Signature& b) {
    return a.props == b.props && a.actions == b.actions;
}

} // namespace

SimulationResult simulation_fixpoint(const PointedStructure& m, const PointedStructure& n,
                                     SimulationKind kind) {
    require(same_signature(m.sig, n.sig), "structures must share a signature");
    const int nm = m.num_states();
    const int nn = n.num_states();
    std::vector<char> z(static_cast<std::size_t>(nm) * nn, 0);
    auto at = [&](int s, int t) -> char& { return z[static_cast<std::size_t>(s) * nn + t]; };
    for (int s = 0; s < nm; ++s)
        for (int t = 0; t < nn; ++t)
            at(s, t) = kind == SimulationKind::Bisimulation ? m.labels[s] == n.labels[t]
                                                            : (m.labels[s] & ~n.labels[t]) == 0;
    const bool back = kind != SimulationKind::Simulation;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int s = 0; s < nm; ++s)
            for (int t = 0; t < nn; ++t) {
                if (!at(s, t)) continue;
                bool ok = true;
                for (int a = 0; ok && a < m.sig.num_actions(); ++a) {
                    for (const Edge& e : m.out_edges(a, s)) {
                        bool found = false;
                        for (const Edge& e2 : n.out_edges(a, t))
                            if (at(e.to, e2.to)) {
                                found = true;
                                break;
                            }
                        if (!found) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok || !back) continue;
                    for (const Edge& e2 : n.out_edges(a, t)) {
                        bool found = false;
                        for (const Edge& e : m.out_edges(a, s))
                            if (at(e.to, e2.to)) {
                                found = true;
                                break;
                            }
                        if (!found) {
                            ok = false;
                            break;
                        }
                    }
                }
                if (!ok) {
                    at(s, t) = 0;
                    changed = true;
                }
            }
    }
    SimulationResult result;
    result.related = at(m.distinguished, n.distinguished) != 0;
    for (int s = 0; s < nm; ++s)
        for (int t = 0; t < nn; ++t)
            if (at(s, t)) result.relation.emplace_back(s, t);
    return result;
}

bool bounded_simulation(const PointedStructure& m, const PointedStructure& n, int k) {
    require(same_signature(m.sig, n.sig), "structures must share a signature");
    require(k >= 0, "depth bound must be nonnegative");
    const int nm = m.num_states();
    const int nn = n.num_states();
    std::vector<char> z(static_cast<std::size_t>(nm) * nn, 0);
    auto at = [&](std::vector<char>& rel, int s, int t) -> char& {
        return rel[static_cast<std::size_t>(s) * nn + t];
    };
    for (int s = 0; s < nm; ++s)
        for (int t = 0; t < nn; ++t) at(z, s, t) = (m.labels[s] & ~n.labels[t]) == 0;
    for (int round = 0; round < k; ++round) {
        std::vector<char> next = z;
        bool changed = false;
        for (int s = 0; s < nm; ++s)
            for (int t = 0; t < nn; ++t) {
                if (!at(z, s, t)) continue;
                bool ok = true;
                for (int a = 0; ok && a < m.sig.num_actions(); ++a)
                    for (const Edge& e : m.out_edges(a, s)) {
                        bool found = false;
                        for (const Edge& e2 : n.out_edges(a, t))
                            if (at(z, e.to, e2.to)) {
                                found = true;
                                break;
                            }
                        if (!found) {
                            ok = false;
                            break;
                        }
                    }
                if (!ok) {
                    at(next, s, t) = 0;
                    changed = true;
                }
            }
        z = std::move(next);
        if (!changed) break;
    }
    return at(z, m.distinguished, n.distinguished) != 0;
}

std::vector<int> graded_refinement_classes(const std::vector<const PointedStructure*>& batch,
                                           int rounds) {
    if (batch.empty()) return {};
    for (const PointedStructure* s : batch) {
        require(s != nullptr, "null structure in the batch");
        require(same_signature(s->sig, batch.front()->sig), "batch must share a signature");
    }
    std::vector<std::vector<int>> colors(batch.size());
    int distinct = 0;
    {
        std::map<long long, int> intern;
        for (std::size_t i = 0; i < batch.size(); ++i) {
            colors[i].resize(batch[i]->num_states());
            for (int s = 0; s < batch[i]->num_states(); ++s) {
                auto [it, inserted] =
                    intern.try_emplace(static_cast<long long>(batch[i]->labels[s]), distinct);
                if (inserted) ++distinct;
                colors[i][s] = it->second;
            }
        }
    }
    long long total_states = 0;
    for (const PointedStructure* s : batch) total_states += s->num_states();
    int round = 0;
    while (rounds < 0 || round < rounds) {
        std::map<std::vector<long long>, int> intern;
        std::vector<std::vector<int>> next(batch.size());
        int next_distinct = 0;
        for (std::size_t i = 0; i < batch.size(); ++i) {
            const PointedStructure& st = *batch[i];
            next[i].resize(st.num_states());
            for (int s = 0; s < st.num_states(); ++s) {
                std::vector<std::pair<int, int>> kids;
                for (int a = 0; a < st.sig.num_actions(); ++a)
                    for (const Edge& e : st.out_edges(a, s)) kids.emplace_back(a, colors[i][e.to]);
                std::sort(kids.begin(), kids.end());
                std::vector<long long> key{colors[i][s]};
                for (std::size_t j = 0; j < kids.size();) {
                    std::size_t j2 = j;
                    while (j2 < kids.size() && kids[j2] == kids[j]) ++j2;
                    key.push_back(kids[j].first);
                    key.push_back(kids[j].second);
                    key.push_back(static_cast<long long>(j2 - j));
                    j = j2;
                }
                auto [it, inserted] = intern.try_emplace(std::move(key), next_distinct);
                if (inserted) ++next_distinct;
                next[i][s] = it->second;
            }
        }
        const bool stable = next_distinct == distinct;
        colors = std::move(next);
        distinct = next_distinct;
        ++round;
        if (rounds < 0 && (stable || round > total_states)) break;
    }
    std::vector<int> out;
    out.reserve(batch.size());
    for (std::size_t i = 0; i < batch.size(); ++i) out.push_back(colors[i][batch[i]->distinguished]);
    return out;
}

bool equivalent(const PointedStructure& m, const PointedStructure& n, Language lang, int k) {
    require(same_signature(m.sig, n.sig), "structures must share a signature");
    if (language_is_bounded(lang)) require(k >= 0, "language requires a depth bound k");
    switch (lang) {
    case Language::ML:
        return simulation_fixpoint(m, n, SimulationKind::Bisimulation).related;
    case Language::MLPlus:
        return simulation_fixpoint(m, n, SimulationKind::DirectedSimulation).related &&
               simulation_fixpoint(n, m, SimulationKind::DirectedSimulation).related;
    case Language::MLPlusDia:
        return bounded_simulation(m, n, k) && bounded_simulation(n, m, k);
    case Language::MLPlusDiaB: {
        const PointedStructure bm = backward_expansion(m);
        const PointedStructure bn = backward_expansion(n);
        return bounded_simulation(bm, bn, k) && bounded_simulation(bn, bm, k);
    }
    case Language::MLPlusDiaG: {
        const PointedStructure gm = global_expansion(m);
        const PointedStructure gn = global_expansion(n);
        return simulation_fixpoint(gm, gn, SimulationKind::Simulation).related &&
               simulation_fixpoint(gn, gm, SimulationKind::Simulation).related;
    }
    case Language::MLSharp:
        return isomorphic(unravel(m, k), unravel(n, k));
    case Language::MLSharpB:
        return isomorphic(unravel(backward_expansion(m), k), unravel(backward_expansion(n), k));
    case Language::MLSharpG: {
        const PointedStructure gm = global_expansion(m);
        const PointedStructure gn = global_expansion(n);
        const std::vector<int> classes = graded_refinement_classes({&gm, &gn}, -1);
        return classes[0] == classes[1];
    }
    case Language::HL:
        return isomorphic(gsub(m), gsub(n));
    case Language::HLB:
        return isomorphic(gsub(backward_expansion(m)), gsub(backward_expansion(n)));
    }
    return false;
}

} // namespace modhom
