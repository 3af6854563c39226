#include "modhom/verify.hpp"

#include "modhom/canonical.hpp"
#include "modhom/check.hpp"
#include "modhom/cq.hpp"
#include "modhom/enumerate.hpp"
#include "modhom/hom.hpp"
#include "modhom/json_io.hpp"
#include "modhom/profiles.hpp"
#include "modhom/transforms.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace modhom {

namespace {

std::uint64_t to_u64(const BigCount& c) { return c.convert_to<std::uint64_t>(); }

Signature default_sig() { return make_signature({"p"}, {"R"}); }

std::vector<const PointedStructure*> ptrs(const std::vector<PointedStructure>& v) {
    std::vector<const PointedStructure*> out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(&s);
    return out;
}

PointedStructure make_chain(const Signature& sig, int states) {
    std::vector<LabelSet> labels(states, 0);
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < states; ++i) edges.push_back({0, i, i + 1});
    return make_structure(sig, std::move(labels), std::move(edges), 0);
}

struct Corpus {
    std::vector<PointedStructure> members;
    std::vector<std::pair<int, int>> pairs;
    std::string description;
};

PointedStructure random_member(std::mt19937_64& rng, const Signature& sig, int max_states) {
    std::uniform_int_distribution<int> size_dist(1, max_states);
    const int n = size_dist(rng);
    std::uniform_int_distribution<int> label_dist(0, (1 << sig.num_props()) - 1);
    std::vector<LabelSet> labels(n);
    for (auto& l : labels) l = static_cast<LabelSet>(label_dist(rng));
    std::uniform_int_distribution<int> coin(0, 2);
    std::vector<Edge> edges;
    for (int a = 0; a < sig.num_actions(); ++a) {
        for (int f = 0; f < n; ++f) {
            for (int t = 0; t < n; ++t) {
                if (coin(rng) == 0) edges.push_back({a, f, t});
            }
        }
    }
    return make_structure(sig, std::move(labels), std::move(edges), 0);
}

Corpus build_corpus(const Signature& sig, const VerifyBounds& bounds, std::uint64_t seed) {
    Corpus corpus;
    std::ostringstream desc;
    if (bounds.max_states < 4) {
        corpus.members = enumerate_structures(sig, bounds.max_states);
        const int n = static_cast<int>(corpus.members.size());
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) corpus.pairs.emplace_back(i, j);
        }
        desc << "exhaustive: all " << n << " structures with <= " << bounds.max_states
             << " states up to isomorphism over " << sig.num_props() << " prop(s)/"
             << sig.num_actions() << " action(s), every unordered pair";
    } else {
        std::mt19937_64 rng(seed);
        for (int i = 0; i < bounds.max_pairs; ++i) {
            corpus.members.push_back(random_member(rng, sig, bounds.max_states));
            corpus.members.push_back(random_member(rng, sig, bounds.max_states));
            corpus.pairs.emplace_back(2 * i, 2 * i + 1);
        }
        desc << "random: " << bounds.max_pairs << " seeded pairs with <= " << bounds.max_states
             << " states over " << sig.num_props() << " prop(s)/" << sig.num_actions()
             << " action(s), seed " << seed;
    }
    corpus.description = desc.str();
    return corpus;
}

struct Hash128 {
    std::uint64_t a = 0xcbf29ce484222325ull;
    std::uint64_t b = 0x9e3779b97f4a7c15ull;
    void mix(std::uint64_t v) {
        a = (a ^ v) * 0x100000001b3ull;
        b = (b ^ (v * 0xff51afd7ed558ccdull + 0x2545f4914f6cdd1dull)) * 0xc4ceb9fe1a85ec53ull;
    }
    friend bool operator==(const Hash128&, const Hash128&) = default;
};

// counts[target][entry] over the full slice, in slice order.
std::vector<std::vector<std::uint64_t>> count_matrix(
    const std::vector<const PointedStructure*>& slice,
    const std::vector<const PointedStructure*>& targets, bool boolean) {
    std::vector<std::vector<std::uint64_t>> matrix;
    matrix.reserve(targets.size());
    for (const auto* t : targets) {
        std::vector<std::uint64_t> row(slice.size());
        for (std::size_t e = 0; e < slice.size(); ++e) {
            std::uint64_t c = to_u64(count_hom_maps(*slice[e], *t));
            row[e] = boolean ? (c ? 1 : 0) : c;
        }
        matrix.push_back(std::move(row));
    }
    return matrix;
}

// A filtered view of the count matrix with running hashes snapshotted at
// every source-size boundary, so two targets' profile prefixes compare in
// O(1) per pair.
struct ProfileRows {
    const std::vector<std::vector<std::uint64_t>>* matrix = nullptr;
    std::vector<int> picks;
    std::vector<int> entries_up_to;
    int max_size = 0;
    std::vector<std::vector<Hash128>> cuts;

    std::uint64_t at(int target, int e) const { return (*matrix)[target][picks[e]]; }
};

ProfileRows make_rows(const std::vector<std::vector<std::uint64_t>>& matrix,
                      const std::vector<const PointedStructure*>& slice, std::vector<int> picks) {
    ProfileRows rows;
    rows.matrix = &matrix;
    rows.picks = std::move(picks);
    for (int p : rows.picks) rows.max_size = std::max(rows.max_size, slice[p]->num_states());
    rows.max_size = std::max(rows.max_size, 1);
    rows.entries_up_to.assign(rows.max_size + 1, 0);
    rows.cuts.resize(matrix.size());
    for (auto& c : rows.cuts) c.resize(rows.max_size + 1);
    for (std::size_t t = 0; t < matrix.size(); ++t) {
        Hash128 h;
        std::size_t next = 0;
        for (int sz = 1; sz <= rows.max_size; ++sz) {
            while (next < rows.picks.size() && slice[rows.picks[next]]->num_states() <= sz) {
                h.mix(matrix[t][rows.picks[next]]);
                ++next;
            }
            if (t == 0) rows.entries_up_to[sz] = static_cast<int>(next);
            rows.cuts[t][sz] = h;
        }
    }
    return rows;
}

int rows_first_diff(const ProfileRows& rows, int i, int j, int size_cut) {
    const int limit = rows.entries_up_to[size_cut];
    for (int e = 0; e < limit; ++e) {
        if (rows.at(i, e) != rows.at(j, e)) return e;
    }
    return -1;
}

std::vector<int> intern_keys(const std::vector<std::string>& keys) {
    std::map<std::string, int> ids;
    std::vector<int> out;
    out.reserve(keys.size());
    for (const auto& k : keys) out.push_back(ids.emplace(k, static_cast<int>(ids.size())).first->second);
    return out;
}

template <typename Equiv>
std::vector<int> preorder_classes(int n, Equiv&& equivalent_pair) {
    std::vector<int> id(n, -1);
    std::vector<int> reps;
    for (int i = 0; i < n; ++i) {
        for (int r = 0; r < static_cast<int>(reps.size()); ++r) {
            if (equivalent_pair(reps[r], i)) {
                id[i] = r;
                break;
            }
        }
        if (id[i] < 0) {
            id[i] = static_cast<int>(reps.size());
            reps.push_back(i);
        }
    }
    return id;
}

struct PairRun {
    const Corpus* corpus = nullptr;
    const std::vector<int>* oracle = nullptr;
    const ProfileRows* rows = nullptr;
    const std::vector<const PointedStructure*>* slice = nullptr;
    std::function<long long(int, int)> bound;
    // Settles a pair whose profiles agree up to the enumerated sizes while
    // the theorem bound is larger: 1 = differing source found (sets the
    // witness), 0 = conclusively equal everywhere, -1 = search exhausted.
    std::function<int(int, int, std::optional<PointedStructure>&, std::string&)> beyond;
    std::string oracle_equal = "equivalent";
    std::string oracle_distinct = "distinct";
};

void run_pairs(TheoremReport& report, const PairRun& run) {
    for (auto [i, j] : run.corpus->pairs) {
        const bool oeq = (*run.oracle)[i] == (*run.oracle)[j];
        const long long bound = run.bound(i, j);
        const int cut = static_cast<int>(std::min<long long>(bound, run.rows->max_size));
        const bool peq = run.rows->cuts[i][cut] == run.rows->cuts[j][cut];
        bool agree = false;
        std::string pv;
        std::optional<PointedStructure> witness;
        if (!peq) {
            const int e = rows_first_diff(*run.rows, i, j, cut);
            if (e >= 0) witness = *(*run.slice)[run.rows->picks[e]];
            pv = "distinguished by a " +
                 std::to_string(witness ? witness->num_states() : 0) + "-state source";
            agree = !oeq;
        } else if (bound <= run.rows->max_size) {
            pv = "profiles equal up to the theorem bound";
            agree = oeq;
        } else if (oeq) {
            pv = "profiles equal up to the enumerated sizes; the oracle equivalence settles the rest";
            agree = true;
        } else {
            std::string note;
            const int r = run.beyond ? run.beyond(i, j, witness, note) : -1;
            if (r == 1) {
                pv = note.empty() ? "distinguished beyond the enumerated slice" : note;
                agree = true;
            } else if (r == 0) {
                pv = note.empty() ? "profiles conclusively equal" : note;
            } else {
                pv = note.empty() ? "profiles equal up to the searched sizes" : note;
            }
        }
        ++report.pairs_tested;
        if (agree) {
            ++report.agreements;
        } else {
            report.disagreements.push_back({run.corpus->members[i], run.corpus->members[j], pv,
                                            oeq ? run.oracle_equal : run.oracle_distinct,
                                            std::move(witness)});
        }
    }
}

void record_identity(TheoremReport& report, const PointedStructure& left,
                     const PointedStructure& right, const BigCount& lhs, const BigCount& rhs,
                     const char* lhs_name, const char* rhs_name) {
    ++report.pairs_tested;
    if (lhs == rhs) {
        ++report.agreements;
    } else {
        report.disagreements.push_back({left, right, std::string(lhs_name) + "=" + lhs.str(),
                                        std::string(rhs_name) + "=" + rhs.str(), std::nullopt});
    }
}

void record_roundtrip(TheoremReport& report, const PointedStructure& original,
                      const PointedStructure& roundtripped, const char* law) {
    ++report.pairs_tested;
    if (isomorphic(original, roundtripped)) {
        ++report.agreements;
    } else {
        report.disagreements.push_back(
            {original, roundtripped, std::string(law) + " changed the structure", "identity",
             std::nullopt});
    }
}

// T4.5 / T4.12 (counting) and T3.2 / T3.5 (Boolean) share one engine: tree
// profiles of the (possibly backward-expanded) corpus against the
// unraveling-isomorphism or bounded-mutual-simulation oracle, for every k.
struct TreeSuite {
    bool backward = false;
    bool boolean = false;
};

void run_tree_suite(TheoremReport& report, const VerifyBounds& bounds, std::uint64_t seed,
                    const TreeSuite& suite) {
    const Signature sig = default_sig();
    Corpus corpus = build_corpus(sig, bounds, seed);
    std::vector<PointedStructure> base;
    base.reserve(corpus.members.size());
    for (const auto& m : corpus.members) {
        base.push_back(suite.backward ? backward_expansion(m) : m);
    }
    const Signature slice_sig = base.empty() ? sig : base.front().sig;
    const int base_cap = suite.backward ? 4 : 5;
    const int esc_cap = suite.backward ? 6 : 9;

    EnumerationBudget esc_budget;
    esc_budget.max_tree_states = esc_cap;
    std::map<std::pair<int, int>, std::vector<PointedStructure>> esc_cache;
    auto escalation_slice = [&](int size, int k) -> const std::vector<PointedStructure>& {
        const std::pair<int, int> key{size, std::min(k, size - 1)};
        auto it = esc_cache.find(key);
        if (it == esc_cache.end()) {
            auto full = enumerate_class(ClassTag::Tree, slice_sig, size, key.second, esc_budget);
            std::vector<PointedStructure> exact;
            for (auto& t : full.structures) {
                if (t.num_states() == size) exact.push_back(std::move(t));
            }
            it = esc_cache.emplace(key, std::move(exact)).first;
        }
        return it->second;
    };

    auto slice_all = enumerate_class(ClassTag::Tree, slice_sig, base_cap, base_cap - 1);
    const auto slice = ptrs(slice_all.structures);
    std::vector<int> slice_depth;
    slice_depth.reserve(slice.size());
    for (const auto* t : slice) slice_depth.push_back(classify(*t).directed_depth.value_or(0));
    const auto targets = ptrs(base);
    const auto matrix = count_matrix(slice, targets, suite.boolean);

    const int kmax = std::max(1, bounds.max_depth);
    for (int k = 1; k <= kmax; ++k) {
        std::vector<int> picks;
        for (std::size_t e = 0; e < slice.size(); ++e) {
            if (slice_depth[e] <= k) picks.push_back(static_cast<int>(e));
        }
        const ProfileRows rows = make_rows(matrix, slice, std::move(picks));

        std::vector<PointedStructure> unr(base.size());
        std::vector<long long> usize(base.size());
        for (std::size_t i = 0; i < base.size(); ++i) {
            unr[i] = unravel(base[i], k);
            usize[i] = unr[i].num_states();
        }
        std::vector<int> oracle;
        if (suite.boolean) {
            oracle = preorder_classes(static_cast<int>(base.size()), [&](int a, int b) {
                return bounded_simulation(base[a], base[b], k) &&
                       bounded_simulation(base[b], base[a], k);
            });
        } else {
            std::vector<std::string> keys;
            keys.reserve(unr.size());
            for (const auto& u : unr) keys.push_back(tree_encoding(u));
            oracle = intern_keys(keys);
        }

        PairRun run;
        run.corpus = &corpus;
        run.oracle = &oracle;
        run.rows = &rows;
        run.slice = &slice;
        run.bound = [&](int i, int j) { return std::max(usize[i], usize[j]); };
        if (suite.boolean) {
            run.oracle_equal = "mutually similar to depth k";
            run.oracle_distinct = "not mutually similar to depth k";
            run.beyond = [&](int i, int j, std::optional<PointedStructure>& w, std::string& note) {
                const bool ij = hom_exists(unr[i], base[j]);
                const bool ji = hom_exists(unr[j], base[i]);
                if (ij && ji) {
                    note = "each unraveling maps into the other target; Boolean tree profiles "
                           "conclusively equal";
                    return 0;
                }
                w = ij ? unr[j] : unr[i];
                note = "distinguished by the depth-k unraveling itself";
                return 1;
            };
        } else {
            run.oracle_equal = "unravelings isomorphic";
            run.oracle_distinct = "unravelings non-isomorphic";
            run.beyond = [&](int i, int j, std::optional<PointedStructure>& w, std::string& note) {
                const long long b = std::max(usize[i], usize[j]);
                const int top = static_cast<int>(std::min<long long>(b, esc_cap));
                for (int size = rows.max_size + 1; size <= top; ++size) {
                    for (const auto& t : escalation_slice(size, k)) {
                        if (count_hom_maps(t, base[i]) != count_hom_maps(t, base[j])) {
                            w = t;
                            note = "distinguished by a " + std::to_string(size) + "-state tree";
                            return 1;
                        }
                    }
                }
                if (b <= esc_cap) return 0;
                note = "profiles equal for every tree with <= " + std::to_string(esc_cap) +
                       " states; theorem bound not exhausted";
                return -1;
            };
        }
        run_pairs(report, run);
    }

    std::ostringstream desc;
    desc << corpus.description;
    if (suite.backward) desc << "; backward-expanded, tree slice over the inverse signature";
    desc << "; tree slice <= " << base_cap << " states (escalation to " << esc_cap
         << "), k in 1.." << kmax;
    report.corpus = desc.str();
}

// T-global (counting, stable graded refinement oracle) and T3.7 (Boolean,
// mutual-simulation oracle): forest profiles of the corpus against oracles
// evaluated on the global expansions.
void run_forest_suite(TheoremReport& report, const VerifyBounds& bounds, std::uint64_t seed,
                      bool boolean) {
    const Signature sig = default_sig();
    Corpus corpus = build_corpus(sig, bounds, seed);
    std::vector<PointedStructure> glob;
    glob.reserve(corpus.members.size());
    for (const auto& m : corpus.members) glob.push_back(global_expansion(m));

    const int base_cap = 5;
    const int esc_cap = 7;
    auto slice_all = enumerate_class(ClassTag::Forest, sig, base_cap, base_cap - 1);
    const auto slice = ptrs(slice_all.structures);
    const auto targets = ptrs(corpus.members);
    const auto matrix = count_matrix(slice, targets, boolean);
    std::vector<int> picks(slice.size());
    for (std::size_t e = 0; e < slice.size(); ++e) picks[e] = static_cast<int>(e);
    const ProfileRows rows = make_rows(matrix, slice, std::move(picks));

    std::vector<int> oracle;
    if (boolean) {
        oracle = preorder_classes(static_cast<int>(glob.size()), [&](int a, int b) {
            return simulation_fixpoint(glob[a], glob[b], SimulationKind::Simulation).related &&
                   simulation_fixpoint(glob[b], glob[a], SimulationKind::Simulation).related;
        });
    } else {
        std::vector<const PointedStructure*> batch = ptrs(glob);
        oracle = graded_refinement_classes(batch, -1);
    }

    std::map<int, std::vector<PointedStructure>> esc_cache;
    auto escalation_slice = [&](int size) -> const std::vector<PointedStructure>& {
        auto it = esc_cache.find(size);
        if (it == esc_cache.end()) {
            auto full = enumerate_class(ClassTag::Forest, sig, size, size - 1);
            std::vector<PointedStructure> exact;
            for (auto& f : full.structures) {
                if (f.num_states() == size) exact.push_back(std::move(f));
            }
            it = esc_cache.emplace(size, std::move(exact)).first;
        }
        return it->second;
    };

    PairRun run;
    run.corpus = &corpus;
    run.oracle = &oracle;
    run.rows = &rows;
    run.slice = &slice;
    run.bound = [](int, int) { return std::numeric_limits<long long>::max() / 2; };
    run.oracle_equal = boolean ? "mutually similar after global expansion"
                               : "same stable graded-refinement class after global expansion";
    run.oracle_distinct = boolean ? "not mutually similar after global expansion"
                                  : "different graded-refinement classes after global expansion";
    run.beyond = [&](int i, int j, std::optional<PointedStructure>& w, std::string& note) {
        for (int size = base_cap + 1; size <= esc_cap; ++size) {
            for (const auto& f : escalation_slice(size)) {
                BigCount ci = count_hom_maps(f, corpus.members[i]);
                BigCount cj = count_hom_maps(f, corpus.members[j]);
                if (boolean ? ((ci != 0) != (cj != 0)) : (ci != cj)) {
                    w = f;
                    note = "distinguished by a " + std::to_string(size) + "-state forest";
                    return 1;
                }
            }
        }
        note = "profiles equal for every forest with <= " + std::to_string(esc_cap) +
               " states; the forest class is unbounded";
        return -1;
    };
    run_pairs(report, run);

    report.corpus = corpus.description + "; forest slice <= " + std::to_string(base_cap) +
                    " states (escalation to " + std::to_string(esc_cap) + ")";
}

void run_lovasz(TheoremReport& report, const VerifyBounds& bounds, std::uint64_t seed) {
    if (bounds.max_states > 3) {
        throw std::invalid_argument(
            "Lovasz verification enumerates the full profile class; max_states must be <= 3");
    }
    const Signature sig = default_sig();
    Corpus corpus = build_corpus(sig, bounds, seed);
    const auto slice = ptrs(corpus.members);
    const auto matrix = count_matrix(slice, slice, false);
    std::vector<int> picks(slice.size());
    for (std::size_t e = 0; e < slice.size(); ++e) picks[e] = static_cast<int>(e);
    const ProfileRows rows = make_rows(matrix, slice, std::move(picks));

    std::vector<std::string> keys;
    keys.reserve(corpus.members.size());
    for (const auto& m : corpus.members) keys.push_back(canonical_encoding(m));
    const std::vector<int> oracle = intern_keys(keys);

    PairRun run;
    run.corpus = &corpus;
    run.oracle = &oracle;
    run.rows = &rows;
    run.slice = &slice;
    run.bound = [&](int i, int j) {
        return static_cast<long long>(
            std::max(corpus.members[i].num_states(), corpus.members[j].num_states()));
    };
    run.oracle_equal = "isomorphic";
    run.oracle_distinct = "non-isomorphic";
    run_pairs(report, run);

    report.corpus = corpus.description + "; profile sources = the same exhaustive slice";
}

// T5.4 (point-generated slice, gsub oracle) and T-HLB (connected slice,
// weakly-connected-component oracle).
void run_gsub_suite(TheoremReport& report, const VerifyBounds& bounds, std::uint64_t seed,
                    bool hlb) {
    const Signature sig = default_sig();
    Corpus corpus = build_corpus(sig, bounds, seed);
    std::vector<PointedStructure> reduced;
    reduced.reserve(corpus.members.size());
    for (const auto& m : corpus.members) {
        reduced.push_back(hlb ? gsub(backward_expansion(m)) : gsub(m));
    }
    std::vector<std::string> keys;
    keys.reserve(reduced.size());
    for (const auto& r : reduced) keys.push_back(canonical_encoding(r));
    const std::vector<int> oracle = intern_keys(keys);

    const ClassTag tag = hlb ? ClassTag::Connected : ClassTag::PointGenerated;
    const int slice_cap = std::min(bounds.max_states, 3);
    const int esc_cap = 4;
    auto slice_all = enumerate_class(tag, sig, slice_cap, slice_cap - 1);
    const auto slice = ptrs(slice_all.structures);
    const auto targets = ptrs(corpus.members);
    const auto matrix = count_matrix(slice, targets, false);
    std::vector<int> picks(slice.size());
    for (std::size_t e = 0; e < slice.size(); ++e) picks[e] = static_cast<int>(e);
    const ProfileRows rows = make_rows(matrix, slice, std::move(picks));

    std::map<int, std::vector<PointedStructure>> esc_cache;
    auto escalation_slice = [&](int size) -> const std::vector<PointedStructure>& {
        auto it = esc_cache.find(size);
        if (it == esc_cache.end()) {
            auto full = enumerate_class(tag, sig, size, size - 1);
            std::vector<PointedStructure> exact;
            for (auto& s : full.structures) {
                if (s.num_states() == size) exact.push_back(std::move(s));
            }
            it = esc_cache.emplace(size, std::move(exact)).first;
        }
        return it->second;
    };

    PairRun run;
    run.corpus = &corpus;
    run.oracle = &oracle;
    run.rows = &rows;
    run.slice = &slice;
    run.bound = [&](int i, int j) {
        return static_cast<long long>(std::max(reduced[i].num_states(), reduced[j].num_states()));
    };
    run.oracle_equal = hlb ? "point components isomorphic" : "generated submodels isomorphic";
    run.oracle_distinct =
        hlb ? "point components non-isomorphic" : "generated submodels non-isomorphic";
    run.beyond = [&](int i, int j, std::optional<PointedStructure>& w, std::string& note) {
        const long long b = run.bound(i, j);
        const int top = static_cast<int>(std::min<long long>(b, esc_cap));
        for (int size = rows.max_size + 1; size <= top; ++size) {
            for (const auto& src : escalation_slice(size)) {
                if (count_hom_maps(src, corpus.members[i]) !=
                    count_hom_maps(src, corpus.members[j])) {
                    w = src;
                    note = "distinguished by a " + std::to_string(size) + "-state source";
                    return 1;
                }
            }
        }
        if (b <= esc_cap) return 0;
        note = "profiles equal for every source with <= " + std::to_string(esc_cap) +
               " states; theorem bound not exhausted";
        return -1;
    };
    run_pairs(report, run);

    report.corpus = corpus.description + "; " + std::string(class_tag_name(tag)) +
                    " slice <= " + std::to_string(slice_cap) + " states (escalation to " +
                    std::to_string(esc_cap) + ")";
}

void run_fact21(TheoremReport& report, const VerifyBounds& bounds) {
    const Signature sig = default_sig();
    std::vector<PointedStructure> sources;
    std::set<std::string> seen;
    auto add = [&](std::vector<PointedStructure> batch) {
        for (auto& s : batch) {
            if (seen.insert(canonical_encoding(s)).second) sources.push_back(std::move(s));
        }
    };
    add(enumerate_class(ClassTag::Tree, sig, 4, 3).structures);
    add(enumerate_structures(sig, 2));
    const int target_cap = std::min(bounds.max_states, 3);
    const auto targets = enumerate_structures(sig, target_cap);

    for (const auto& src : sources) {
        const ConjunctiveQuery q = query_of_structure(src);
        const PointedStructure inst = canonical_instance(q);
        record_roundtrip(report, src, inst, "query round trip");
        for (const auto& t : targets) {
            record_identity(report, src, t, satisfying_assignment_count(q, t),
                            count_hom_maps(src, t), "assignments", "homs");
        }
    }

    std::ostringstream desc;
    desc << sources.size()
         << " conjunctive queries (all tree queries <= 4 variables plus every structure <= 2 "
            "states read as a query) against all "
         << targets.size() << " targets <= " << target_cap << " states";
    report.corpus = desc.str();
}

void run_l44(TheoremReport& report, const VerifyBounds& bounds) {
    const Signature sig = default_sig();
    const int tree_cap = std::clamp(bounds.max_states, 1, 5);
    auto trees = enumerate_class(ClassTag::Tree, sig, tree_cap, tree_cap - 1);
    const auto targets = enumerate_structures(sig, 3);

    std::map<std::pair<int, int>, PointedStructure> ucache;
    auto unr_of = [&](int t, int k) -> const PointedStructure& {
        auto it = ucache.find({t, k});
        if (it == ucache.end()) it = ucache.emplace(std::make_pair(t, k), unravel(targets[t], k)).first;
        return it->second;
    };

    for (const auto& tree : trees.structures) {
        const int depth = classify(tree).directed_depth.value_or(0);
        for (std::size_t t = 0; t < targets.size(); ++t) {
            const BigCount direct = count_hom_maps(tree, targets[t]);
            record_identity(report, tree, targets[t], direct,
                            count_hom_maps(tree, unr_of(static_cast<int>(t), depth)),
                            "hom", "hom-into-unraveling");
            if (tree.num_states() <= 4) {
                record_identity(report, tree, targets[t], direct,
                                count_hom_maps(tree, unr_of(static_cast<int>(t), depth + 1)),
                                "hom", "hom-into-deeper-unraveling");
            }
        }
    }

    std::ostringstream desc;
    desc << "all " << trees.structures.size() << " trees <= " << tree_cap
         << " states against all " << targets.size()
         << " targets <= 3 states, unraveled at the tree depth (and depth+1 for trees <= 4)";
    report.corpus = desc.str();
}

void run_p49(TheoremReport& report, const VerifyBounds& bounds) {
    const Signature sig = default_sig();
    const auto targets = enumerate_structures(sig, 3);
    std::vector<PointedStructure> btargets;
    btargets.reserve(targets.size());
    for (const auto& t : targets) btargets.push_back(backward_expansion(t));
    const int src_cap = std::clamp(bounds.max_states, 1, 4);

    auto acyc = enumerate_class(ClassTag::ConnectedAcyclic, sig, src_cap, src_cap - 1);
    for (const auto& a : acyc.structures) {
        const PointedStructure down = down_transform(a);
        record_roundtrip(report, a, flip(down), "flip after down-transform");
        for (std::size_t t = 0; t < targets.size(); ++t) {
            record_identity(report, a, targets[t], count_hom_maps(a, targets[t]),
                            count_hom_maps(down, btargets[t]), "hom", "down-transformed hom");
        }
    }

    const Signature sig_b = btargets.front().sig;
    auto tb = enumerate_class(ClassTag::Tree, sig_b, src_cap, src_cap - 1);
    for (const auto& tr : tb.structures) {
        const PointedStructure fl = flip(tr);
        record_roundtrip(report, tr, down_transform(fl), "down-transform after flip");
        for (std::size_t t = 0; t < targets.size(); ++t) {
            record_identity(report, tr, btargets[t], count_hom_maps(tr, btargets[t]),
                            count_hom_maps(fl, targets[t]), "hom", "flipped hom");
        }
    }

    const int con_cap = std::min(bounds.max_states, 3);
    auto con = enumerate_class(ClassTag::Connected, sig, con_cap, con_cap - 1);
    for (const auto& c : con.structures) {
        const PointedStructure aug = pg_augment(c);
        for (std::size_t t = 0; t < targets.size(); ++t) {
            record_identity(report, c, targets[t], count_hom_maps(c, targets[t]),
                            count_hom_maps(aug, btargets[t]), "hom", "pg-augmented hom");
        }
    }

    std::size_t sampled_fours = 0;
    if (bounds.max_states >= 4) {
        auto con4 = enumerate_class(ClassTag::Connected, sig, 4, 3);
        std::vector<const PointedStructure*> fours;
        for (const auto& c : con4.structures) {
            if (c.num_states() == 4) fours.push_back(&c);
        }
        const std::size_t want = 2000;
        const std::size_t stride = std::max<std::size_t>(1, fours.size() / want);
        const auto targets2 = enumerate_structures(sig, 2);
        std::vector<PointedStructure> btargets2;
        btargets2.reserve(targets2.size());
        for (const auto& t : targets2) btargets2.push_back(backward_expansion(t));
        for (std::size_t i = 0; i < fours.size(); i += stride) {
            const PointedStructure& c = *fours[i];
            const PointedStructure aug = pg_augment(c);
            ++sampled_fours;
            for (std::size_t t = 0; t < targets2.size(); ++t) {
                record_identity(report, c, targets2[t], count_hom_maps(c, targets2[t]),
                                count_hom_maps(aug, btargets2[t]), "hom", "pg-augmented hom");
            }
        }
    }

    std::ostringstream desc;
    desc << "down-transform: all " << acyc.structures.size() << " connected acyclic sources <= "
         << src_cap << " states; flip: all " << tb.structures.size()
         << " inverse-signature trees <= " << src_cap << " states; both against all "
         << targets.size() << " targets <= 3 states with round trips; pg-augmentation: all "
         << con.structures.size() << " connected sources <= " << con_cap << " states";
    if (sampled_fours > 0) {
        desc << " plus an evenly strided sample of " << sampled_fours
             << " four-state connected sources against all structures <= 2 states";
    }
    report.corpus = desc.str();
}

void run_l53(TheoremReport& report, const VerifyBounds& bounds) {
    const Signature sig = default_sig();
    const auto targets = enumerate_structures(sig, 3);
    std::vector<PointedStructure> gfull;
    gfull.reserve(targets.size());
    for (const auto& t : targets) gfull.push_back(gsub(t));
    std::map<std::pair<int, int>, PointedStructure> gk_cache;
    auto gsub_at = [&](int t, int k) -> const PointedStructure& {
        auto it = gk_cache.find({t, k});
        if (it == gk_cache.end()) it = gk_cache.emplace(std::make_pair(t, k), gsub(targets[t], k)).first;
        return it->second;
    };

    const int pg_cap = std::min(bounds.max_states, 3);
    auto pg = enumerate_class(ClassTag::PointGenerated, sig, pg_cap, pg_cap - 1);
    for (const auto& p : pg.structures) {
        const int depth = classify(p).directed_depth.value_or(0);
        for (std::size_t t = 0; t < targets.size(); ++t) {
            const BigCount direct = count_hom_maps(p, targets[t]);
            record_identity(report, p, targets[t], direct, count_hom_maps(p, gfull[t]),
                            "hom", "hom-into-gsub");
            record_identity(report, p, targets[t], direct,
                            count_hom_maps(p, gsub_at(static_cast<int>(t), depth)),
                            "hom", "hom-into-depth-bounded-gsub");
        }
    }

    std::size_t fours = 0;
    if (bounds.max_states >= 4) {
        auto pg4 = enumerate_class(ClassTag::PointGenerated, sig, 4, 3);
        const auto targets2 = enumerate_structures(sig, 2);
        std::vector<PointedStructure> g2;
        g2.reserve(targets2.size());
        for (const auto& t : targets2) g2.push_back(gsub(t));
        for (const auto& p : pg4.structures) {
            if (p.num_states() != 4) continue;
            ++fours;
            for (std::size_t t = 0; t < targets2.size(); ++t) {
                record_identity(report, p, targets2[t], count_hom_maps(p, targets2[t]),
                                count_hom_maps(p, g2[t]), "hom", "hom-into-gsub");
            }
        }
    }

    std::ostringstream desc;
    desc << "all " << pg.structures.size() << " point-generated sources <= " << pg_cap
         << " states against all " << targets.size()
         << " targets <= 3 states (full and depth-bounded generated submodels)";
    if (fours > 0) {
        desc << "; plus all " << fours
             << " four-state point-generated sources against every structure <= 2 states";
    }
    report.corpus = desc.str();
}

const std::vector<std::string>& theorem_id_list() {
    static const std::vector<std::string> ids = {"Lovasz", "T3.2",     "T3.5",  "T3.7", "T4.5",
                                                 "T4.12",  "T5.4",     "T-HLB", "T-global",
                                                 "Fact2.1", "L4.4",    "P4.9",  "L5.3"};
    return ids;
}

std::string normalize_id(const std::string& id) {
    auto lower = [](const std::string& s) {
        std::string out;
        out.reserve(s.size());
        for (char c : s) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        return out;
    };
    const std::string id_lower = lower(id);
    if (id_lower == "lovasz" || id_lower == "lov\xc3\xa1sz") return "Lovasz";
    for (const auto& known : theorem_id_list()) {
        if (id_lower == lower(known)) return known;
    }
    std::string msg = "unknown theorem id '" + id + "'; valid ids:";
    for (const auto& known : theorem_id_list()) msg += " " + known;
    throw std::invalid_argument(msg);
}

} // namespace

std::vector<std::string> verify_theorem_ids() { return theorem_id_list(); }

TheoremReport verify_theorem(const std::string& id, const VerifyBounds& bounds,
                             std::uint64_t seed) {
    if (bounds.max_states < 1) throw std::invalid_argument("max_states must be at least 1");
    if (bounds.max_depth < 0) throw std::invalid_argument("max_depth must be non-negative");
    if (bounds.max_pairs < 1) throw std::invalid_argument("max_pairs must be at least 1");

    TheoremReport report;
    report.theorem = normalize_id(id);
    report.bounds = bounds;
    report.seed = seed;

    const std::string& t = report.theorem;
    if (t == "Lovasz") {
        run_lovasz(report, bounds, seed);
    } else if (t == "T4.5") {
        run_tree_suite(report, bounds, seed, {.backward = false, .boolean = false});
    } else if (t == "T4.12") {
        run_tree_suite(report, bounds, seed, {.backward = true, .boolean = false});
    } else if (t == "T3.2") {
        run_tree_suite(report, bounds, seed, {.backward = false, .boolean = true});
    } else if (t == "T3.5") {
        run_tree_suite(report, bounds, seed, {.backward = true, .boolean = true});
    } else if (t == "T-global") {
        run_forest_suite(report, bounds, seed, false);
    } else if (t == "T3.7") {
        run_forest_suite(report, bounds, seed, true);
    } else if (t == "T5.4") {
        run_gsub_suite(report, bounds, seed, false);
    } else if (t == "T-HLB") {
        run_gsub_suite(report, bounds, seed, true);
    } else if (t == "Fact2.1") {
        run_fact21(report, bounds);
    } else if (t == "L4.4") {
        run_l44(report, bounds);
    } else if (t == "P4.9") {
        run_p49(report, bounds);
    } else if (t == "L5.3") {
        run_l53(report, bounds);
    }

    std::stable_sort(report.disagreements.begin(), report.disagreements.end(),
                     [](const Disagreement& a, const Disagreement& b) {
                         return std::make_tuple(canonical_encoding(a.left),
                                                canonical_encoding(a.right), a.profile_verdict) <
                                std::make_tuple(canonical_encoding(b.left),
                                                canonical_encoding(b.right), b.profile_verdict);
                     });
    return report;
}

nlohmann::json theorem_report_to_json(const TheoremReport& report) {
    nlohmann::json out{{"theorem", report.theorem},
                       {"corpus", report.corpus},
                       {"bounds",
                        {{"maxStates", report.bounds.max_states},
                         {"maxDepth", report.bounds.max_depth},
                         {"maxPairs", report.bounds.max_pairs}}},
                       {"seed", report.seed},
                       {"pairsTested", report.pairs_tested},
                       {"agreements", report.agreements},
                       {"ok", report.ok()}};
    out["disagreements"] = nlohmann::json::array();
    for (const auto& d : report.disagreements) {
        nlohmann::json entry{{"left", structure_to_json(d.left)},
                             {"right", structure_to_json(d.right)},
                             {"profileVerdict", d.profile_verdict},
                             {"oracleVerdict", d.oracle_verdict}};
        if (d.witness) entry["witness"] = structure_to_json(*d.witness);
        out["disagreements"].push_back(std::move(entry));
    }
    return out;
}

std::string theorem_report_to_text(const TheoremReport& report) {
    std::ostringstream out;
    out << "theorem: " << report.theorem << "\n";
    out << "corpus: " << report.corpus << "\n";
    out << "bounds: max_states=" << report.bounds.max_states
        << " max_depth=" << report.bounds.max_depth << " max_pairs=" << report.bounds.max_pairs
        << "\n";
    out << "seed: " << report.seed << "\n";
    out << "pairs tested: " << report.pairs_tested << "\n";
    out << "agreements: " << report.agreements << "\n";
    out << "disagreements: " << report.disagreements.size() << "\n";
    for (const auto& d : report.disagreements) {
        out << "  - left " << structure_to_json(d.left).dump() << "\n";
        out << "    right " << structure_to_json(d.right).dump() << "\n";
        out << "    profile: " << d.profile_verdict << "\n";
        out << "    oracle: " << d.oracle_verdict << "\n";
        if (d.witness) out << "    witness " << structure_to_json(*d.witness).dump() << "\n";
    }
    out << "result: " << (report.ok() ? "OK" : "FAIL") << "\n";
    return out.str();
}

NegativeDemoReport negative_demo(const Semiring& s) {
    NegativeDemoReport rep;
    rep.semiring = s.name;
    const Signature sig = default_sig();

    auto trees = enumerate_class(ClassTag::Tree, sig, 4, 3);
    std::vector<PointedStructure> cliques;
    for (int n = 1; n <= 4; ++n) cliques.push_back(make_clique(sig, n, true));

    rep.clique_counts_exact = true;
    for (int n = 1; n <= 4; ++n) {
        bool all_match = true;
        for (const auto& t : trees.structures) {
            const BigCount expect =
                boost::multiprecision::pow(BigCount(n), unsigned(t.num_states() - 1));
            if (count_hom_maps(t, cliques[n - 1]) != expect) all_match = false;
        }
        if (!all_match) rep.clique_counts_exact = false;
        std::ostringstream line;
        line << "K^" << n << ": hom(T, K^" << n << ") "
             << (all_match ? "=" : "!=") << " " << n << "^(|T|-1) for all "
             << trees.structures.size() << " trees <= 4 states";
        rep.clique_count_lines.push_back(line.str());
    }

    rep.cliques_bisimilar = true;
    for (std::size_t i = 0; i < cliques.size(); ++i) {
        for (std::size_t j = i + 1; j < cliques.size(); ++j) {
            if (!simulation_fixpoint(cliques[i], cliques[j], SimulationKind::Bisimulation)
                     .related) {
                rep.cliques_bisimilar = false;
            }
        }
    }

    const auto [m, n] = hom_equivalent_non_bisimilar_pair();
    rep.pair_hom_equivalent = morphism_check(MorphismKind::HomEquivalent, m, n);
    rep.pair_tree_profiles_equal =
        compare_profiles(m, n, ClassTag::Tree, Semiring::booleans(), {4, 3}).status ==
        ProfileStatus::EqualUpToBound;
    rep.pair_bisimilar = equivalent(m, n, Language::ML);
    rep.pair_mutually_directed_similar = equivalent(m, n, Language::MLPlus);

    rep.periodicity = analyze_periodicity(s, default_probe(s));
    const std::string zero_r = s.render(s.zero());
    const std::string one_r = s.render(s.one());
    const auto& segment = rep.periodicity.segment;
    const bool seg_zero = std::find(segment.begin(), segment.end(), zero_r) != segment.end();
    const bool seg_one = std::find(segment.begin(), segment.end(), one_r) != segment.end();

    auto clique_count = [&](int tree_states, int clique_size) {
        return count_hom_maps(make_chain(sig, tree_states), make_clique(sig, clique_size, true));
    };
    auto set_separation = [&](int tree_states, int left_clique, int right_clique) {
        rep.separating_tree_states = tree_states;
        rep.separating_clique = right_clique;
        rep.count_left = s.render(count_in(s, clique_count(tree_states, left_clique)));
        rep.count_right = s.render(count_in(s, clique_count(tree_states, right_clique)));
    };

    if (rep.periodicity.injective_up_to_probe) {
        rep.case_name = "injective counting";
        set_separation(2, 1, 2);
        rep.separation_verified = rep.count_left != rep.count_right;
        rep.separation = {
            "counting is injective up to the probe, so profiles keep full resolution",
            "the bisimilar cliques K^1 and K^2 stay separated: the 2-chain counts " +
                rep.count_left + " vs " + rep.count_right};
    } else if (seg_zero) {
        rep.case_name = "0_S in pi";
        const int period = std::max(1, rep.periodicity.period);
        int tree_states = period + 1;
        int clique_size = period;
        auto hits_zero = [&](int ts, int cs) {
            return s.render(count_in(s, clique_count(ts, cs))) == zero_r;
        };
        if (clique_size < 1 || clique_size > 16 || !hits_zero(tree_states, clique_size)) {
            bool found = false;
            for (int ts = 2; ts <= 6 && !found; ++ts) {
                for (int cs = 2; cs <= 6 && !found; ++cs) {
                    if (hits_zero(ts, cs)) {
                        tree_states = ts;
                        clique_size = cs;
                        found = true;
                    }
                }
            }
        }
        set_separation(tree_states, 1, clique_size);
        rep.separation_verified =
            rep.count_right == zero_r && rep.count_left != rep.count_right;
        rep.separation = {
            "the counting image contains 0_S inside its cycle, so whole clique columns vanish",
            "the " + std::to_string(tree_states) + "-state chain counts " + rep.count_left +
                " into K^1 but " + rep.count_right + " into K^" + std::to_string(clique_size)};
    } else if (seg_one && rep.periodicity.period == 1) {
        rep.case_name = "1_S in pi, P=1";
        set_separation(2, 1, 2);
        rep.separation_verified = rep.count_left == rep.count_right &&
                                  rep.pair_hom_equivalent && rep.pair_tree_profiles_equal &&
                                  !rep.pair_bisimilar;
        rep.separation = {
            "counting collapses to the constant 1_S, so every nonzero hom count looks alike",
            "no profile can separate what Boolean existence cannot: the hom-equivalent "
            "non-bisimilar pair has equal Boolean tree profiles yet is not bisimilar"};
    } else {
        rep.case_name = seg_one ? "1_S in pi, P>1" : "1_S not in pi";
        bool found = false;
        for (int ts = 2; ts <= 6 && !found; ++ts) {
            for (int cl = 1; cl <= 4 && !found; ++cl) {
                for (int cr = cl + 1; cr <= 4 && !found; ++cr) {
                    const std::string left = s.render(count_in(s, clique_count(ts, cl)));
                    const std::string right = s.render(count_in(s, clique_count(ts, cr)));
                    if (left != right) {
                        rep.separating_tree_states = ts;
                        rep.separating_clique = cr;
                        rep.count_left = left;
                        rep.count_right = right;
                        found = true;
                    }
                }
            }
        }
        rep.separation_verified = found;
        rep.separation = {
            "counting is periodic but not constant on nonzero values",
            found ? "the " + std::to_string(rep.separating_tree_states) +
                        "-state chain still separates two clique columns: " + rep.count_left +
                        " vs " + rep.count_right
                  : "no separating clique column found within the searched range"};
    }
    return rep;
}

nlohmann::json negative_demo_to_json(const NegativeDemoReport& report) {
    return nlohmann::json{
        {"semiring", report.semiring},
        {"cliqueCountsExact", report.clique_counts_exact},
        {"cliqueCountLines", report.clique_count_lines},
        {"cliquesBisimilar", report.cliques_bisimilar},
        {"pairHomEquivalent", report.pair_hom_equivalent},
        {"pairTreeProfilesEqual", report.pair_tree_profiles_equal},
        {"pairBisimilar", report.pair_bisimilar},
        {"pairMutuallyDirectedSimilar", report.pair_mutually_directed_similar},
        {"periodicity",
         {{"injectiveUpToProbe", report.periodicity.injective_up_to_probe},
          {"probe", report.periodicity.probe},
          {"preperiodLength", report.periodicity.preperiod_length},
          {"period", report.periodicity.period},
          {"preperiod", report.periodicity.preperiod},
          {"segment", report.periodicity.segment}}},
        {"caseName", report.case_name},
        {"separation", report.separation},
        {"separatingTreeStates", report.separating_tree_states},
        {"separatingClique", report.separating_clique},
        {"countLeft", report.count_left},
        {"countRight", report.count_right},
        {"separationVerified", report.separation_verified},
        {"ok", report.ok()}};
}

std::string negative_demo_to_text(const NegativeDemoReport& report) {
    std::ostringstream out;
    out << "semiring: " << report.semiring << "\n";
    out << "clique counts exact: " << (report.clique_counts_exact ? "yes" : "no") << "\n";
    for (const auto& line : report.clique_count_lines) out << "  " << line << "\n";
    out << "cliques pairwise bisimilar: " << (report.cliques_bisimilar ? "yes" : "no") << "\n";
    out << "hom-equivalent pair: hom-equivalent=" << (report.pair_hom_equivalent ? "yes" : "no")
        << " boolean-tree-profiles-equal=" << (report.pair_tree_profiles_equal ? "yes" : "no")
        << " bisimilar=" << (report.pair_bisimilar ? "yes" : "no")
        << " mutually-directed-similar="
        << (report.pair_mutually_directed_similar ? "yes" : "no") << "\n";
    out << "periodicity: ";
    if (report.periodicity.injective_up_to_probe) {
        out << "injective up to probe " << report.periodicity.probe << "\n";
    } else {
        out << "L=" << report.periodicity.preperiod_length << " P=" << report.periodicity.period
            << " segment(";
        for (std::size_t i = 0; i < report.periodicity.segment.size(); ++i) {
            if (i) out << ",";
            out << report.periodicity.segment[i];
        }
        out << ")\n";
    }
    out << "case: " << report.case_name << "\n";
    for (const auto& line : report.separation) out << "  " << line << "\n";
    if (report.separating_tree_states > 0) {
        out << "separating example: " << report.separating_tree_states
            << "-state chain into K^1 vs K^" << report.separating_clique << " counts "
            << report.count_left << " vs " << report.count_right << "\n";
    }
    out << "result: " << (report.ok() ? "OK" : "FAIL") << "\n";
    return out.str();
}

} // namespace modhom
