#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace modhom {

// Derived signatures carry a marker so that serialized structures can be
// reduced back to their base signature.
enum class ExpansionMode { None, Backward, Global };

struct Signature {
    std::vector<std::string> props;
    std::vector<std::string> actions;
    ExpansionMode expansion = ExpansionMode::None;
    int base_action_count = 0;

    int prop_index(std::string_view name) const;
    int action_index(std::string_view name) const;
    int num_props() const { return static_cast<int>(props.size()); }
    int num_actions() const { return static_cast<int>(actions.size()); }
    bool is_base_action(int action) const {
        return expansion == ExpansionMode::None || action < base_action_count;
    }

    bool operator==(const Signature&) const = default;
};

// Validates name uniqueness and reserved characters, throws std::invalid_argument.
Signature make_signature(std::vector<std::string> props, std::vector<std::string> actions);

std::string backward_action_name(const std::string& base_action);
extern const std::string kGlobalActionName;

// Appends an inverse action per base action (σ_B) or one complete fresh action (σ_G).
Signature backward_signature(const Signature& base);
Signature global_signature(const Signature& base);

// Strips the derived actions again; identity on unexpanded signatures.
Signature base_signature(const Signature& expanded);

} // namespace modhom
