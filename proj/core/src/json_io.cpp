#include "modhom/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace modhom {

using nlohmann::json;

nlohmann::json structure_to_json(const PointedStructure& m) {
    json j;
    j["props"] = m.sig.props;
    j["actions"] = m.sig.actions;
    if (m.sig.expansion != ExpansionMode::None) {
        j["derivedFrom"] = {
            {"mode", m.sig.expansion == ExpansionMode::Backward ? "backward" : "global"},
            {"baseActions", m.sig.base_action_count},
        };
    }
    j["states"] = m.num_states();
    j["distinguished"] = m.distinguished;
    json labels = json::object();
    for (int s = 0; s < m.num_states(); ++s) {
        json names = json::array();
        for (int p = 0; p < m.sig.num_props(); ++p)
            if (m.has_prop(s, p)) names.push_back(m.sig.props[p]);
        labels[std::to_string(s)] = std::move(names);
    }
    j["labels"] = std::move(labels);
    json edges = json::array();
    for (const Edge& e : m.edges)
        edges.push_back({{"action", m.sig.actions[e.action]}, {"from", e.from}, {"to", e.to}});
    j["edges"] = std::move(edges);
    return j;
}

PointedStructure structure_from_json(const nlohmann::json& j) {
    Signature sig;
    if (j.contains("derivedFrom")) {
        // Bypass make_signature's '~' validation: derived names are trusted
        // to have been produced by the expansion constructors.
        sig.props = j.at("props").get<std::vector<std::string>>();
        sig.actions = j.at("actions").get<std::vector<std::string>>();
        const auto& d = j.at("derivedFrom");
        std::string mode = d.at("mode").get<std::string>();
        if (mode == "backward") sig.expansion = ExpansionMode::Backward;
        else if (mode == "global") sig.expansion = ExpansionMode::Global;
        else throw std::invalid_argument("unknown derivedFrom.mode: " + mode);
        sig.base_action_count = d.at("baseActions").get<int>();
        if (sig.base_action_count < 0 || sig.base_action_count > sig.num_actions())
            throw std::invalid_argument("derivedFrom.baseActions out of range");
    } else {
        sig = make_signature(j.at("props").get<std::vector<std::string>>(),
                             j.at("actions").get<std::vector<std::string>>());
    }

    const int n = j.at("states").get<int>();
    if (n <= 0) throw std::invalid_argument("states must be positive");
    std::vector<LabelSet> labels(n, 0);
    if (j.contains("labels")) {
        for (const auto& [key, names] : j.at("labels").items()) {
            int s = std::stoi(key);
            if (s < 0 || s >= n) throw std::invalid_argument("label key out of range: " + key);
            for (const auto& name : names) {
                int p = sig.prop_index(name.template get<std::string>());
                if (p < 0)
                    throw std::invalid_argument("unknown proposition: " +
                                                name.template get<std::string>());
                labels[s] |= LabelSet{1} << p;
            }
        }
    }
    std::vector<Edge> edges;
    for (const auto& je : j.value("edges", json::array())) {
        int a = sig.action_index(je.at("action").get<std::string>());
        if (a < 0)
            throw std::invalid_argument("unknown action: " + je.at("action").get<std::string>());
        edges.push_back({a, je.at("from").get<int>(), je.at("to").get<int>()});
    }
    return make_structure(std::move(sig), std::move(labels), std::move(edges),
                          j.at("distinguished").get<int>());
}

PointedStructure load_structure_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return structure_from_json(j);
}

void save_structure_file(const PointedStructure& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << structure_to_json(m).dump(2) << '\n';
}

std::string to_dot(const PointedStructure& m) {
    std::ostringstream out;
    out << "digraph lts {\n";
    for (int s = 0; s < m.num_states(); ++s) {
        std::string props;
        for (int p = 0; p < m.sig.num_props(); ++p) {
            if (!m.has_prop(s, p)) continue;
            if (!props.empty()) props += ",";
            props += m.sig.props[p];
        }
        out << "  " << s << " [label=\"" << s << ":{" << props << "}\"";
        if (s == m.distinguished) out << ", shape=doublecircle";
        out << "];\n";
    }
    for (const Edge& e : m.edges)
        out << "  " << e.from << " -> " << e.to << " [label=\"" << m.sig.actions[e.action]
            << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace modhom
