#include <CLI11.hpp>

#include <modhom/canonical.hpp>
#include <modhom/check.hpp>
#include <modhom/enumerate.hpp>
#include <modhom/hom.hpp>
#include <modhom/json_io.hpp>
#include <modhom/profiles.hpp>
#include <modhom/semiring.hpp>
#include <modhom/transforms.hpp>
#include <modhom/verify.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace modhom;

std::vector<std::string> split_names(const std::string& csv) {
    std::vector<std::string> out;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

void emit_structure(const PointedStructure& m, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << structure_to_json(m).dump(2) << "\n";
    } else {
        save_structure_file(m, out_path);
    }
}

ClassTag parse_tag(const std::string& name) {
    const auto tag = class_tag_from_name(name);
    if (!tag) throw std::invalid_argument("unknown class '" + name + "'");
    return *tag;
}

int run_classify(const std::string& in, bool dot) {
    const PointedStructure m = load_structure_file(in);
    if (dot) {
        std::cout << to_dot(m);
        return 0;
    }
    const Classification c = classify(m);
    nlohmann::json j{{"states", m.num_states()}, {"edges", m.num_edges()},
                     {"connected", c.connected}, {"acyclic", c.acyclic},
                     {"pointGenerated", c.point_generated}, {"forest", c.forest},
                     {"tree", c.tree}};
    if (c.directed_depth) j["directedDepth"] = *c.directed_depth;
    if (c.sigma_depth) j["sigmaDepth"] = *c.sigma_depth;
    if (c.forest_depth) j["forestDepth"] = *c.forest_depth;
    auto tags = nlohmann::json::array();
    for (ClassTag tag : c.tags()) tags.push_back(class_tag_name(tag));
    j["tags"] = std::move(tags);
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_transform(const std::string& kind, const std::string& in, int k,
                  const std::string& out) {
    const PointedStructure m = load_structure_file(in);
    PointedStructure result;
    if (kind == "unravel") {
        if (k < 0) throw std::invalid_argument("unravel needs --k >= 0");
        result = unravel(m, k);
    } else if (kind == "gsub") {
        result = k >= 0 ? gsub(m, k) : gsub(m);
    } else if (kind == "backexp") {
        result = backward_expansion(m);
    } else if (kind == "globexp") {
        result = global_expansion(m);
    } else if (kind == "down") {
        result = down_transform(m);
    } else if (kind == "flip") {
        result = flip(m);
    } else if (kind == "pgaug") {
        result = pg_augment(m);
    } else if (kind == "rgconnect") {
        result = rg_connect(m);
    } else {
        throw std::invalid_argument("unknown transform '" + kind + "'");
    }
    emit_structure(result, out);
    return 0;
}

int run_hom_count(const std::string& source, const std::string& target,
                  const std::string& semiring) {
    const Semiring s = Semiring::from_selector(semiring);
    const PointedStructure src = load_structure_file(source);
    const PointedStructure tgt = load_structure_file(target);
    std::cout << s.render(count_homs(s, src, tgt)) << "\n";
    return 0;
}

int run_profile_compare(const std::string& left, const std::string& right,
                        const std::string& tag_name, const std::string& semiring, int max_states,
                        int depth) {
    const Semiring s = Semiring::from_selector(semiring);
    const PointedStructure l = load_structure_file(left);
    const PointedStructure r = load_structure_file(right);
    const ClassTag tag = parse_tag(tag_name);
    if (depth < 0) depth = max_states - 1;
    const ProfileVerdict verdict = compare_profiles(l, r, tag, s, {max_states, depth});
    std::cout << profile_verdict_to_json(verdict, s).dump(2) << "\n";
    return verdict.status == ProfileStatus::EqualUpToBound ? 0 : 1;
}

int run_check(const std::string& in, const std::string& formula_text) {
    const PointedStructure m = load_structure_file(in);
    const Formula f = parse_formula(formula_text, m.sig);
    const bool holds = check(m, f);
    std::cout << (holds ? "true" : "false") << "\n";
    return holds ? 0 : 1;
}

int run_equiv(const std::string& logic, const std::string& left, const std::string& right,
              int k) {
    const Language lang = language_from_name(logic);
    const PointedStructure l = load_structure_file(left);
    const PointedStructure r = load_structure_file(right);
    const bool eq = equivalent(l, r, lang, k);
    std::cout << (eq ? "equivalent" : "not equivalent") << "\n";
    return eq ? 0 : 1;
}

int run_enumerate(const std::string& tag_name, int max_states, int depth,
                  const std::string& props, const std::string& actions) {
    const Signature sig = make_signature(split_names(props), split_names(actions));
    if (depth < 0) depth = max_states - 1;
    nlohmann::json j{{"maxStates", max_states}};
    auto list = nlohmann::json::array();
    if (tag_name == "all") {
        const auto all = enumerate_structures(sig, max_states);
        for (const auto& m : all) list.push_back(structure_to_json(m));
        j["class"] = "all";
    } else {
        const auto slice = enumerate_class(parse_tag(tag_name), sig, max_states, depth);
        for (const auto& m : slice.structures) list.push_back(structure_to_json(m));
        j["class"] = tag_name;
        j["maxDepth"] = depth;
    }
    j["count"] = list.size();
    j["structures"] = std::move(list);
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_verify(const std::string& theorem, int max_states, int depth, int max_pairs,
               std::uint64_t seed, bool as_json) {
    const TheoremReport report =
        verify_theorem(theorem, VerifyBounds{max_states, depth, max_pairs}, seed);
    if (as_json) {
        std::cout << theorem_report_to_json(report).dump(2) << "\n";
    } else {
        std::cout << theorem_report_to_text(report);
    }
    return report.ok() ? 0 : 1;
}

int run_negative_demo(const std::string& semiring, bool as_json) {
    const NegativeDemoReport report = negative_demo(Semiring::from_selector(semiring));
    if (as_json) {
        std::cout << negative_demo_to_json(report).dump(2) << "\n";
    } else {
        std::cout << negative_demo_to_text(report);
    }
    return report.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"homomorphism-profile workbench for pointed labeled transition systems"};
    app.require_subcommand(1);

    auto* classify_cmd = app.add_subcommand("classify", "classify a structure");
    std::string classify_in;
    bool classify_dot = false;
    classify_cmd->add_option("--in", classify_in, "structure JSON file")->required();
    classify_cmd->add_flag("--dot", classify_dot, "emit GraphViz DOT instead of JSON");

    auto* transform_cmd = app.add_subcommand("transform", "apply a structure transform");
    std::string transform_kind, transform_in, transform_out;
    int transform_k = -1;
    transform_cmd
        ->add_option("kind", transform_kind,
                     "one of unravel, gsub, backexp, globexp, down, flip, pgaug, rgconnect")
        ->required();
    transform_cmd->add_option("--in", transform_in, "structure JSON file")->required();
    transform_cmd->add_option("--k", transform_k, "depth bound (unravel; optional for gsub)");
    transform_cmd->add_option("--out", transform_out, "output file (default stdout)");

    auto* hom_cmd = app.add_subcommand("hom-count", "count homomorphisms source -> target");
    std::string hom_source, hom_target, hom_semiring = "nat";
    hom_cmd->add_option("--source", hom_source, "source structure JSON file")->required();
    hom_cmd->add_option("--target", hom_target, "target structure JSON file")->required();
    hom_cmd->add_option("--semiring", hom_semiring, "bool | nat | modp:<p> | minplus:<cap>");

    auto* profile_cmd =
        app.add_subcommand("profile-compare", "compare hom-count profiles over a class slice");
    std::string profile_left, profile_right, profile_class = "tree", profile_semiring = "nat";
    int profile_states = 4, profile_depth = -1;
    profile_cmd->add_option("--left", profile_left, "left structure JSON file")->required();
    profile_cmd->add_option("--right", profile_right, "right structure JSON file")->required();
    profile_cmd->add_option("--class", profile_class, "tree | acyclic | forest | pg | connected");
    profile_cmd->add_option("--semiring", profile_semiring, "bool | nat | modp:<p> | minplus:<cap>");
    profile_cmd->add_option("--max-states", profile_states, "source slice size bound");
    profile_cmd->add_option("--depth", profile_depth, "source slice depth bound");

    auto* check_cmd = app.add_subcommand("check", "evaluate a formula at the point");
    std::string check_in, check_formula;
    check_cmd->add_option("--in", check_in, "structure JSON file")->required();
    check_cmd->add_option("--formula", check_formula, "formula text")->required();

    auto* equiv_cmd = app.add_subcommand("equiv", "decide language equivalence of two structures");
    std::string equiv_logic, equiv_left, equiv_right;
    int equiv_k = -1;
    equiv_cmd->add_option("--logic", equiv_logic, "language id (ml, ml+, ml+d, ml#, hl, ...)")
        ->required();
    equiv_cmd->add_option("--left", equiv_left, "left structure JSON file")->required();
    equiv_cmd->add_option("--right", equiv_right, "right structure JSON file")->required();
    equiv_cmd->add_option("--k", equiv_k, "depth bound for the bounded languages");

    auto* enum_cmd = app.add_subcommand("enumerate", "enumerate structures up to isomorphism");
    std::string enum_class = "all", enum_props = "p", enum_actions = "R";
    int enum_states = 3, enum_depth = -1;
    enum_cmd->add_option("--class", enum_class, "all | tree | acyclic | forest | pg | connected");
    enum_cmd->add_option("--max-states", enum_states, "state bound");
    enum_cmd->add_option("--depth", enum_depth, "depth bound (default max-states - 1)");
    enum_cmd->add_option("--props", enum_props, "comma-separated proposition names");
    enum_cmd->add_option("--actions", enum_actions, "comma-separated action names");

    auto* verify_cmd = app.add_subcommand("verify", "run a theorem verification experiment");
    std::string verify_id;
    int verify_states = 3, verify_depth = 2, verify_pairs = 200;
    std::uint64_t verify_seed = 0;
    bool verify_json = false;
    std::string id_help = "theorem id: ";
    for (const auto& id : modhom::verify_theorem_ids()) {
        if (id_help.back() != ' ') id_help += ", ";
        id_help += id;
    }
    verify_cmd->add_option("--theorem", verify_id, id_help)->required();
    verify_cmd->add_option("--max-states", verify_states, "corpus state bound");
    verify_cmd->add_option("--depth", verify_depth, "max depth parameter k");
    verify_cmd->add_option("--max-pairs", verify_pairs, "random-corpus pair cap");
    verify_cmd->add_option("--seed", verify_seed, "random-corpus seed");
    verify_cmd->add_flag("--json", verify_json, "emit the report as JSON");

    auto* demo_cmd = app.add_subcommand("negative-demo", "show why counting collapse breaks profiles");
    std::string demo_semiring;
    bool demo_json = false;
    demo_cmd->add_option("--semiring", demo_semiring, "bool | nat | modp:<p> | minplus:<cap>")
        ->required();
    demo_cmd->add_flag("--json", demo_json, "emit the report as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (classify_cmd->parsed()) return run_classify(classify_in, classify_dot);
        if (transform_cmd->parsed())
            return run_transform(transform_kind, transform_in, transform_k, transform_out);
        if (hom_cmd->parsed()) return run_hom_count(hom_source, hom_target, hom_semiring);
        if (profile_cmd->parsed())
            return run_profile_compare(profile_left, profile_right, profile_class,
                                       profile_semiring, profile_states, profile_depth);
        if (check_cmd->parsed()) return run_check(check_in, check_formula);
        if (equiv_cmd->parsed()) return run_equiv(equiv_logic, equiv_left, equiv_right, equiv_k);
        if (enum_cmd->parsed())
            return run_enumerate(enum_class, enum_states, enum_depth, enum_props, enum_actions);
        if (verify_cmd->parsed())
            return run_verify(verify_id, verify_states, verify_depth, verify_pairs, verify_seed,
                              verify_json);
        if (demo_cmd->parsed()) return run_negative_demo(demo_semiring, demo_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
