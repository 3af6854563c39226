#include "modhom/fo.hpp"

#include <stdexcept>
#include <utility>

namespace modhom {

namespace {

void require(bool cond, const char* message) {
    if (!cond) throw std::invalid_argument(message);
}

} // namespace

FOFormula fo_true() { return FOFormula{FOKind::True, -1, -1, -1, {}}; }

FOFormula fo_false() { return FOFormula{FOKind::False, -1, -1, -1, {}}; }

FOFormula fo_prop_atom(int prop, int v) {
    require(prop >= 0 && v >= 0, "proposition atom needs a prop index and a variable");
    return FOFormula{FOKind::PropAtom, prop, v, -1, {}};
}

FOFormula fo_edge_atom(int action, int v, int w) {
    require(action >= 0 && v >= 0 && w >= 0, "edge atom needs an action index and two variables");
    return FOFormula{FOKind::EdgeAtom, action, v, w, {}};
}

FOFormula fo_equal(int v, int w) {
    require(v >= 0 && w >= 0, "equality needs two variables");
    return FOFormula{FOKind::Equal, -1, v, w, {}};
}

FOFormula fo_not(FOFormula f) {
    FOFormula out{FOKind::Not, -1, -1, -1, {}};
    out.children.push_back(std::move(f));
    return out;
}

FOFormula fo_and(std::vector<FOFormula> conjuncts) {
    if (conjuncts.empty()) return fo_true();
    if (conjuncts.size() == 1) return std::move(conjuncts.front());
    return FOFormula{FOKind::And, -1, -1, -1, std::move(conjuncts)};
}

FOFormula fo_or(std::vector<FOFormula> disjuncts) {
    if (disjuncts.empty()) return fo_false();
    if (disjuncts.size() == 1) return std::move(disjuncts.front());
    return FOFormula{FOKind::Or, -1, -1, -1, std::move(disjuncts)};
}

FOFormula fo_exists(int var, FOFormula f) {
    require(var >= 0, "quantified variable must be nonnegative");
    FOFormula out{FOKind::Exists, -1, var, -1, {}};
    out.children.push_back(std::move(f));
    return out;
}

FOFormula fo_forall(int var, FOFormula f) {
    require(var >= 0, "quantified variable must be nonnegative");
    FOFormula out{FOKind::Forall, -1, var, -1, {}};
    out.children.push_back(std::move(f));
    return out;
}

namespace {

int lookup(const FOAssignment& env, int var) {
    auto it = env.find(var);
    if (it == env.end()) throw std::invalid_argument("unbound first-order variable");
    return it->second;
}

bool eval_rec(const PointedStructure& m, const FOFormula& f, FOAssignment& env) {
    switch (f.kind) {
    case FOKind::True:
        return true;
    case FOKind::False:
        return false;
    case FOKind::PropAtom: {
        require(f.symbol < m.sig.num_props(), "proposition index out of range for the signature");
        return m.has_prop(lookup(env, f.v), f.symbol);
    }
    case FOKind::EdgeAtom: {
        require(f.symbol < m.sig.num_actions(), "action index out of range for the signature");
        return m.has_edge(f.symbol, lookup(env, f.v), lookup(env, f.w));
    }
    case FOKind::Equal:
        return lookup(env, f.v) == lookup(env, f.w);
    case FOKind::Not:
        return !eval_rec(m, f.children.front(), env);
    case FOKind::And:
        for (const FOFormula& c : f.children)
            if (!eval_rec(m, c, env)) return false;
        return true;
    case FOKind::Or:
        for (const FOFormula& c : f.children)
            if (eval_rec(m, c, env)) return true;
        return false;
    case FOKind::Exists:
    case FOKind::Forall: {
        const bool universal = f.kind == FOKind::Forall;
        auto it = env.find(f.v);
        const bool had = it != env.end();
        const int old = had ? it->second : -1;
        bool result = universal;
        for (int s = 0; s < m.num_states(); ++s) {
            env[f.v] = s;
            const bool sub = eval_rec(m, f.children.front(), env);
            if (universal && !sub) {
                result = false;
                break;
            }
            if (!universal && sub) {
                result = true;
                break;
            }
        }
        if (had)
            env[f.v] = old;
        else
            env.erase(f.v);
        return result;
    }
    }
    return false;
}

} // namespace

bool eval_fo(const PointedStructure& m, const FOFormula& f, const FOAssignment& assignment) {
    FOAssignment env = assignment;
    return eval_rec(m, f, env);
}

namespace {

FOFormula st_rec(const Formula& f, int var, int& next_var) {
    switch (f.kind) {
    case FormulaKind::True:
        return fo_true();
    case FormulaKind::False:
        return fo_false();
    case FormulaKind::Prop:
        return fo_prop_atom(f.symbol, var);
    case FormulaKind::Not:
        return fo_not(st_rec(f.children.front(), var, next_var));
    case FormulaKind::And:
    case FormulaKind::Or: {
        std::vector<FOFormula> parts;
        parts.reserve(f.children.size());
        for (const Formula& c : f.children) parts.push_back(st_rec(c, var, next_var));
        return FOFormula{f.kind == FormulaKind::And ? FOKind::And : FOKind::Or, -1, -1, -1,
                         std::move(parts)};
    }
    case FormulaKind::Diamond: {
        if (f.grade != 1)
            throw std::invalid_argument(
                "standard translation is defined for the basic modal language only");
        const int y = next_var++;
        std::vector<FOFormula> parts;
        parts.push_back(fo_edge_atom(f.symbol, var, y));
        parts.push_back(st_rec(f.children.front(), y, next_var));
        return fo_exists(y, fo_and(std::move(parts)));
    }
    case FormulaKind::Box: {
        const int y = next_var++;
        std::vector<FOFormula> parts;
        parts.push_back(fo_not(fo_edge_atom(f.symbol, var, y)));
        parts.push_back(st_rec(f.children.front(), y, next_var));
        return fo_forall(y, fo_or(std::move(parts)));
    }
    default:
        throw std::invalid_argument(
            "standard translation is defined for the basic modal language only");
    }
}

} // namespace

FOFormula standard_translation(const Formula& f) {
    int next_var = 1;
    return st_rec(f, 0, next_var);
}

namespace {

void collect_cq(const FOFormula& f, std::map<int, int>& var_map, int& num_vars,
                std::vector<CQAtom>& atoms, const Signature& sig) {
    switch (f.kind) {
    case FOKind::True:
        return;
    case FOKind::PropAtom: {
        auto it = var_map.find(f.v);
        if (it == var_map.end()) throw std::invalid_argument("free variable in a quantified atom");
        if (f.symbol >= sig.num_props())
            throw std::invalid_argument("proposition index out of range for the signature");
        atoms.push_back(CQAtom{false, f.symbol, it->second, 0});
        return;
    }
    case FOKind::EdgeAtom: {
        auto itv = var_map.find(f.v);
        auto itw = var_map.find(f.w);
        if (itv == var_map.end() || itw == var_map.end())
            throw std::invalid_argument("free variable in a quantified atom");
        if (f.symbol >= sig.num_actions())
            throw std::invalid_argument("action index out of range for the signature");
        atoms.push_back(CQAtom{true, f.symbol, itv->second, itw->second});
        return;
    }
    case FOKind::And:
        for (const FOFormula& c : f.children) collect_cq(c, var_map, num_vars, atoms, sig);
        return;
    case FOKind::Exists: {
        auto it = var_map.find(f.v);
        const bool had = it != var_map.end();
        const int old = had ? it->second : -1;
        var_map[f.v] = num_vars++;
        collect_cq(f.children.front(), var_map, num_vars, atoms, sig);
        if (had)
            var_map[f.v] = old;
        else
            var_map.erase(f.v);
        return;
    }
    default:
        throw std::invalid_argument("not a conjunctive formula");
    }
}

} // namespace

ConjunctiveQuery fo_to_cq(const FOFormula& f, const Signature& sig) {
    std::map<int, int> var_map;
    var_map[0] = 0;
    int num_vars = 1;
    std::vector<CQAtom> atoms;
    collect_cq(f, var_map, num_vars, atoms, sig);
    return make_cq(sig, num_vars, std::move(atoms));
}

namespace {

// Some action connects u to v.
FOFormula any_edge(const Signature& sig, int u, int v) {
    std::vector<FOFormula> parts;
    for (int a = 0; a < sig.num_actions(); ++a) parts.push_back(fo_edge_atom(a, u, v));
    return fo_or(std::move(parts));
}

// y is reachable from variable 0 by a directed path of length at most cap.
FOFormula reachable_within(const Signature& sig, int y, int cap, int first_scratch) {
    std::vector<FOFormula> cases;
    cases.push_back(fo_equal(0, y));
    for (int len = 1; len <= cap; ++len) {
        std::vector<int> mids;
        for (int j = 1; j < len; ++j) mids.push_back(first_scratch + j - 1);
        std::vector<FOFormula> chain;
        for (int j = 0; j < len; ++j) {
            const int from = j == 0 ? 0 : mids[j - 1];
            const int to = j == len - 1 ? y : mids[j];
            chain.push_back(any_edge(sig, from, to));
        }
        FOFormula body = fo_and(std::move(chain));
        for (auto it = mids.rbegin(); it != mids.rend(); ++it) body = fo_exists(*it, std::move(body));
        cases.push_back(std::move(body));
    }
    return fo_or(std::move(cases));
}

} // namespace

FOFormula gsub_description_fo(const PointedStructure& n) {
    if (!classify(n).point_generated)
        throw std::invalid_argument("point-generated input required");

    const int states = n.num_states();
    // Variable i stands for the state var_state[i]; the point comes first.
    std::vector<int> var_state;
    var_state.push_back(n.distinguished);
    for (int s = 0; s < states; ++s)
        if (s != n.distinguished) var_state.push_back(s);

    std::vector<FOFormula> body;
    for (int i = 0; i < states; ++i)
        for (int j = i + 1; j < states; ++j) body.push_back(fo_not(fo_equal(i, j)));

    for (int i = 0; i < states; ++i) {
        const int s = var_state[i];
        for (int p = 0; p < n.sig.num_props(); ++p) {
            FOFormula atom = fo_prop_atom(p, i);
            body.push_back(n.has_prop(s, p) ? std::move(atom) : fo_not(std::move(atom)));
        }
    }
    for (int a = 0; a < n.sig.num_actions(); ++a)
        for (int i = 0; i < states; ++i)
            for (int j = 0; j < states; ++j) {
                FOFormula atom = fo_edge_atom(a, i, j);
                body.push_back(n.has_edge(a, var_state[i], var_state[j]) ? std::move(atom)
                                                                         : fo_not(std::move(atom)));
            }

    // forall y: reachable within |N| steps <-> y is one of the listed states.
    const int y = states;
    const int scratch = states + 1;
    FOFormula reach = reachable_within(n.sig, y, states, scratch);
    std::vector<FOFormula> listed;
    for (int i = 0; i < states; ++i) listed.push_back(fo_equal(y, i));
    FOFormula is_listed = fo_or(std::move(listed));

    std::vector<FOFormula> forward;
    forward.push_back(fo_not(reach));
    forward.push_back(is_listed);
    std::vector<FOFormula> backward;
    backward.push_back(fo_not(is_listed));
    backward.push_back(reach);
    std::vector<FOFormula> iff;
    iff.push_back(fo_or(std::move(forward)));
    iff.push_back(fo_or(std::move(backward)));
    body.push_back(fo_forall(y, fo_and(std::move(iff))));

    FOFormula psi = fo_and(std::move(body));
    for (int i = states - 1; i >= 1; --i) psi = fo_exists(i, std::move(psi));
    return psi;
}

} // namespace modhom
