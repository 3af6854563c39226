#pragma once

#include "modhom/signature.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace modhom {

enum class FormulaKind {
    True,
    False,
    Prop,
    WorldVar,
    Not,
    And,
    Or,
    Diamond,
    Box,
    BackDiamond,
    Global,
    Down,
    At,
};

// AST over a fixed signature: prop/action occurrences are indices. Graded
// nodes carry a threshold grade >= 1, hybrid nodes a variable name. And/Or
// are n-ary with at least two children.
struct Formula {
    FormulaKind kind = FormulaKind::True;
    int symbol = -1; // prop index (Prop), action index (Diamond/Box/BackDiamond)
    int grade = 0;   // threshold on Diamond/BackDiamond/Global
    std::string var; // WorldVar/Down/At
    std::vector<Formula> children;

    bool operator==(const Formula&) const = default;
};

Formula f_true();
Formula f_false();
Formula f_prop(int prop);
Formula f_var(std::string name);
Formula f_not(Formula f);
// Empty input collapses to true/false, a single element to itself.
Formula f_and(std::vector<Formula> conjuncts);
Formula f_or(std::vector<Formula> disjuncts);
Formula f_diamond(int action, int grade, Formula f);
Formula f_box(int action, Formula f);
Formula f_back_diamond(int action, int grade, Formula f);
Formula f_global(int grade, Formula f);
Formula f_down(std::string var, Formula f);
Formula f_at(std::string var, Formula f);

// Nesting depth of Diamond/Box/BackDiamond/Global nodes.
int modal_depth(const Formula& f);

enum class Language {
    ML,
    MLPlus,
    MLPlusDia,
    MLPlusDiaB,
    MLPlusDiaG,
    MLSharp,
    MLSharpB,
    MLSharpG,
    HL,
    HLB,
};

const char* language_name(Language lang);
// Inverse of language_name; throws std::invalid_argument on unknown names.
Language language_from_name(std::string_view name);
// Whether equivalence for the language is parameterized by a depth bound k.
bool language_is_bounded(Language lang);

bool in_language(const Formula& f, Language lang);

struct ParseError : std::runtime_error {
    ParseError(const std::string& message, std::size_t position);
    std::size_t position = 0;
};

// Recursive-descent parser for the ASCII grammar (see README). Prop and
// action names resolve against sig; a binder whose name collides with an
// enclosing binder, a prop, or a keyword is alpha-renamed to a fresh
// x0, x1, ... variable.
Formula parse_formula(const std::string& text, const Signature& sig);

// Canonical form with every composite subformula parenthesized;
// parse_formula(print_formula(f, sig), sig) == f.
std::string print_formula(const Formula& f, const Signature& sig);

} // namespace modhom
