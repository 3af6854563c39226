#include "modhom/cq.hpp"

#include <sstream>
#include <stdexcept>

namespace modhom {

ConjunctiveQuery make_cq(Signature sig, int num_vars, std::vector<CQAtom> atoms) {
    if (num_vars < 1) throw std::invalid_argument("a query needs its free variable");
    for (const CQAtom& a : atoms) {
        int symbols = a.binary ? sig.num_actions() : sig.num_props();
        if (a.symbol < 0 || a.symbol >= symbols)
            throw std::invalid_argument("atom symbol outside the signature");
        if (a.v < 0 || a.v >= num_vars || (a.binary && (a.w < 0 || a.w >= num_vars)))
            throw std::invalid_argument("atom variable out of range");
    }
    ConjunctiveQuery q;
    q.sig = std::move(sig);
    q.num_vars = num_vars;
    q.atoms = std::move(atoms);
    return q;
}

PointedStructure canonical_instance(const ConjunctiveQuery& q) {
    std::vector<LabelSet> labels(q.num_vars, 0);
    std::vector<Edge> edges;
    for (const CQAtom& a : q.atoms) {
        if (a.binary) edges.push_back({a.symbol, a.v, a.w});
        else labels[a.v] |= LabelSet{1} << a.symbol;
    }
    return make_structure(q.sig, std::move(labels), std::move(edges), 0);
}

ConjunctiveQuery query_of_structure(const PointedStructure& m) {
    std::vector<CQAtom> atoms;
    for (int s = 0; s < m.num_states(); ++s)
        for (int p = 0; p < m.sig.num_props(); ++p)
            if (m.has_prop(s, p)) atoms.push_back({false, p, s, 0});
    for (const Edge& e : m.edges) atoms.push_back({true, e.action, e.from, e.to});

    // Renumber so the point becomes variable 0.
    std::vector<int> var_of(m.num_states());
    var_of[m.distinguished] = 0;
    int next = 1;
    for (int s = 0; s < m.num_states(); ++s)
        if (s != m.distinguished) var_of[s] = next++;
    for (CQAtom& a : atoms) {
        a.v = var_of[a.v];
        if (a.binary) a.w = var_of[a.w];
    }
    return make_cq(m.sig, m.num_states(), std::move(atoms));
}

BigCount satisfying_assignment_count(const ConjunctiveQuery& q, const PointedStructure& m) {
    const int n = m.num_states();
    std::vector<int> assign(q.num_vars, 0);
    assign[0] = m.distinguished;
    BigCount count = 0;
    // Odometer over the existential variables 1..num_vars-1.
    while (true) {
        bool sat = true;
        for (const CQAtom& a : q.atoms) {
            if (a.binary ? !m.has_edge(a.symbol, assign[a.v], assign[a.w])
                         : !m.has_prop(assign[a.v], a.symbol)) {
                sat = false;
                break;
            }
        }
        if (sat) ++count;
        int i = q.num_vars - 1;
        while (i >= 1 && assign[i] == n - 1) assign[i--] = 0;
        if (i < 1) break;
        ++assign[i];
    }
    return count;
}

std::string cq_to_string(const ConjunctiveQuery& q) {
    std::ostringstream out;
    for (int v = 1; v < q.num_vars; ++v) out << "Ex" << v << " ";
    out << "(";
    for (size_t i = 0; i < q.atoms.size(); ++i) {
        if (i) out << " & ";
        const CQAtom& a = q.atoms[i];
        if (a.binary) out << q.sig.actions[a.symbol] << "(x" << a.v << ",x" << a.w << ")";
        else out << q.sig.props[a.symbol] << "(x" << a.v << ")";
    }
    if (q.atoms.empty()) out << "true";
    out << ")";
    return out.str();
}

} // namespace modhom
