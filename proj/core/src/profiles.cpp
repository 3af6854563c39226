#include "modhom/profiles.hpp"

#include "modhom/hom.hpp"
#include "modhom/json_io.hpp"

#include <stdexcept>

namespace modhom {

namespace {

void require(bool cond, const char* message) {
    if (!cond) throw std::invalid_argument(message);
}

bool same_signature(const Signature& a, const Signature& b) {
    return a.props == b.props && a.actions == b.actions;
}

// Smallest slice certain to contain a witness whenever one exists at all:
// reconnecting each image state to the point costs at most max_depth extra
// states, and sub-digraphs of forests are already forests. Absence below
// these sizes is conclusive.
int inj_sufficient_states(ClassTag tag, const PointedStructure& n, int max_depth) {
    if (tag == ClassTag::Forest) return n.num_states();
    return n.num_states() * (max_depth + 1) + 1;
}

int sur_sufficient_states(ClassTag tag, const PointedStructure& n, int max_depth) {
    int fragment = n.num_states() + 2 * n.num_edges();
    if (tag == ClassTag::Forest) return fragment;
    return fragment * (max_depth + 1) + 1;
}

} // namespace

const char* profile_status_name(ProfileStatus status) {
    switch (status) {
        case ProfileStatus::EqualUpToBound: return "equal-up-to-bound";
        case ProfileStatus::Distinguished: return "distinguished";
    }
    return "?";
}

std::optional<ProfileStatus> profile_status_from_name(std::string_view name) {
    if (name == "equal-up-to-bound") return ProfileStatus::EqualUpToBound;
    if (name == "distinguished") return ProfileStatus::Distinguished;
    return std::nullopt;
}

ProfileVerdict compare_profiles(const PointedStructure& m, const PointedStructure& n,
                                ClassTag tag, const Semiring& s, ProfileBound bound,
                                const EnumerationBudget& budget) {
    require(same_signature(m.sig, n.sig), "profile comparison needs a shared signature");
    require(bound.max_states >= 1, "bound.max_states must be positive");
    require(bound.max_depth >= 0, "bound.max_depth must be nonnegative");
    ClassSlice slice = enumerate_class(tag, m.sig, bound.max_states, bound.max_depth, budget);
    ProfileVerdict verdict;
    verdict.bound = bound;
    for (const PointedStructure& t : slice.structures) {
        SemiringValue left = count_in(s, count_hom_maps(t, m));
        SemiringValue right = count_in(s, count_hom_maps(t, n));
        if (left != right) {
            verdict.status = ProfileStatus::Distinguished;
            verdict.witness = t;
            verdict.counts = std::make_pair(std::move(left), std::move(right));
            return verdict;
        }
    }
    verdict.status = ProfileStatus::EqualUpToBound;
    return verdict;
}

nlohmann::json profile_verdict_to_json(const ProfileVerdict& verdict, const Semiring& s) {
    nlohmann::json j;
    j["status"] = profile_status_name(verdict.status);
    j["bound"] = {{"maxStates", verdict.bound.max_states}, {"maxDepth", verdict.bound.max_depth}};
    if (verdict.witness) j["witness"] = structure_to_json(*verdict.witness);
    if (verdict.counts) {
        j["countLeft"] = s.render(verdict.counts->first);
        j["countRight"] = s.render(verdict.counts->second);
    }
    return j;
}

const char* ext_verdict_name(ExtVerdict verdict) {
    switch (verdict) {
        case ExtVerdict::Yes: return "yes";
        case ExtVerdict::No: return "no";
        case ExtVerdict::Unknown: return "unknown";
    }
    return "?";
}

ExtVerdict ext_membership(const PointedStructure& n, ClassTag tag, ProfileBound bound,
                          const EnumerationBudget& budget) {
    require(bound.max_states >= 1, "bound.max_states must be positive");
    require(bound.max_depth >= 0, "bound.max_depth must be nonnegative");
    Classification cls = classify(n);
    if (cls.in_class(tag, bound.max_depth) && n.num_states() <= bound.max_states) {
        return ExtVerdict::Yes;
    }
    ClassSlice slice = enumerate_class(tag, n.sig, bound.max_states, bound.max_depth, budget);
    bool inj_found = false;
    bool sur_found = false;
    for (const PointedStructure& t : slice.structures) {
        if (!inj_found && morphism_check(MorphismKind::InjectiveHomExists, n, t)) inj_found = true;
        if (!sur_found && morphism_check(MorphismKind::FullySurjectiveHomExists, t, n))
            sur_found = true;
        if (inj_found && sur_found) return ExtVerdict::Yes;
    }
    const int inj_needed = inj_sufficient_states(tag, n, bound.max_depth);
    const int sur_needed = sur_sufficient_states(tag, n, bound.max_depth);
    const bool inj_conclusive = bound.max_states >= inj_needed &&
                                (tag != ClassTag::Forest || bound.max_depth >= inj_needed - 1);
    const bool sur_conclusive = bound.max_states >= sur_needed &&
                                (tag != ClassTag::Forest || bound.max_depth >= sur_needed - 1);
    if ((!inj_found && inj_conclusive) || (!sur_found && sur_conclusive)) return ExtVerdict::No;
    return ExtVerdict::Unknown;
}

} // namespace modhom
