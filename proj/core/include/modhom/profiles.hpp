#pragma once

#include "modhom/enumerate.hpp"
#include "modhom/semiring.hpp"
#include "modhom/structure.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string_view>
#include <utility>

namespace modhom {

enum class ProfileStatus { EqualUpToBound, Distinguished };

const char* profile_status_name(ProfileStatus status);
std::optional<ProfileStatus> profile_status_from_name(std::string_view name);

struct ProfileBound {
    int max_states = 0;
    int max_depth = 0;
};

struct ProfileVerdict {
    ProfileStatus status = ProfileStatus::EqualUpToBound;
    std::optional<PointedStructure> witness;
    std::optional<std::pair<SemiringValue, SemiringValue>> counts;
    ProfileBound bound;
};

// Walks the class slice in its canonical order and reports the first source
// whose hom count into m differs from the one into n; the witness and both
// counts ride along on a Distinguished verdict.
ProfileVerdict compare_profiles(const PointedStructure& m, const PointedStructure& n,
                                ClassTag tag, const Semiring& s, ProfileBound bound,
                                const EnumerationBudget& budget = {});

nlohmann::json profile_verdict_to_json(const ProfileVerdict& verdict, const Semiring& s);

enum class ExtVerdict { Yes, No, Unknown };

const char* ext_verdict_name(ExtVerdict verdict);

// Membership of n in Inj(C) cap Sur(C) for the class slice: Yes needs a
// slice member receiving an injective hom from n and one mapping fully
// surjectively onto n; No needs the missing side to be conclusive at this
// bound; otherwise Unknown.
ExtVerdict ext_membership(const PointedStructure& n, ClassTag tag, ProfileBound bound,
                          const EnumerationBudget& budget = {});

} // namespace modhom
