#include "modhom/formula.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace modhom {

namespace {

void require(bool cond, const char* message) {
    if (!cond) throw std::invalid_argument(message);
}

} // namespace

Formula f_true() { return Formula{FormulaKind::True, -1, 0, {}, {}}; }

Formula f_false() { return Formula{FormulaKind::False, -1, 0, {}, {}}; }

Formula f_prop(int prop) {
    require(prop >= 0, "proposition index must be nonnegative");
    return Formula{FormulaKind::Prop, prop, 0, {}, {}};
}

Formula f_var(std::string name) {
    require(!name.empty(), "world variable name must be nonempty");
    return Formula{FormulaKind::WorldVar, -1, 0, std::move(name), {}};
}

Formula f_not(Formula f) {
    Formula out{FormulaKind::Not, -1, 0, {}, {}};
    out.children.push_back(std::move(f));
    return out;
}

Formula f_and(std::vector<Formula> conjuncts) {
    if (conjuncts.empty()) return f_true();
    if (conjuncts.size() == 1) return std::move(conjuncts.front());
    return Formula{FormulaKind::And, -1, 0, {}, std::move(conjuncts)};
}

Formula f_or(std::vector<Formula> disjuncts) {
    if (disjuncts.empty()) return f_false();
    if (disjuncts.size() == 1) return std::move(disjuncts.front());
    return Formula{FormulaKind::Or, -1, 0, {}, std::move(disjuncts)};
}

Formula f_diamond(int action, int grade, Formula f) {
    require(action >= 0, "action index must be nonnegative");
    require(grade >= 1, "grade must be at least 1");
    Formula out{FormulaKind::Diamond, action, grade, {}, {}};
    out.children.push_back(std::move(f));
    return out;
}

Formula f_box(int action, Formula f) {
    require(action >= 0, "action index must be nonnegative");
    Formula out{FormulaKind::Box, action, 0, {}, {}};
    out.children.push_back(std::move(f));
    return out;
}

Formula f_back_diamond(int action, int grade, Formula f) {
    require(action >= 0, "action index must be nonnegative");
    require(grade >= 1, "grade must be at least 1");
    Formula out{FormulaKind::BackDiamond, action, grade, {}, {}};
    out.children.push_back(std::move(f));
    return out;
}

Formula f_global(int grade, Formula f) {
    require(grade >= 1, "grade must be at least 1");
    Formula out{FormulaKind::Global, -1, grade, {}, {}};
    out.children.push_back(std::move(f));
    return out;
}

Formula f_down(std::string var, Formula f) {
    require(!var.empty(), "world variable name must be nonempty");
    Formula out{FormulaKind::Down, -1, 0, std::move(var), {}};
    out.children.push_back(std::move(f));
    return out;
}

Formula f_at(std::string var, Formula f) {
    require(!var.empty(), "world variable name must be nonempty");
    Formula out{FormulaKind::At, -1, 0, std::move(var), {}};
    out.children.push_back(std::move(f));
    return out;
}

int modal_depth(const Formula& f) {
    int best = 0;
    for (const Formula& c : f.children) best = std::max(best, modal_depth(c));
    switch (f.kind) {
    case FormulaKind::Diamond:
    case FormulaKind::Box:
    case FormulaKind::BackDiamond:
    case FormulaKind::Global:
        return best + 1;
    default:
        return best;
    }
}

const char* language_name(Language lang) {
    switch (lang) {
    case Language::ML: return "ml";
    case Language::MLPlus: return "ml+";
    case Language::MLPlusDia: return "ml+d";
    case Language::MLPlusDiaB: return "ml+db";
    case Language::MLPlusDiaG: return "ml+dg";
    case Language::MLSharp: return "ml#";
    case Language::MLSharpB: return "ml#b";
    case Language::MLSharpG: return "ml#g";
    case Language::HL: return "hl";
    case Language::HLB: return "hlb";
    }
    return "ml";
}

Language language_from_name(std::string_view name) {
    static const std::pair<std::string_view, Language> table[] = {
        {"ml", Language::ML},        {"ml+", Language::MLPlus},
        {"ml+d", Language::MLPlusDia},  {"ml+db", Language::MLPlusDiaB},
        {"ml+dg", Language::MLPlusDiaG}, {"ml#", Language::MLSharp},
        {"ml#b", Language::MLSharpB},   {"ml#g", Language::MLSharpG},
        {"hl", Language::HL},        {"hlb", Language::HLB},
    };
    for (const auto& [key, lang] : table)
        if (key == name) return lang;
    throw std::invalid_argument("unknown language '" + std::string(name) + "'");
}

bool language_is_bounded(Language lang) {
    switch (lang) {
    case Language::MLPlusDia:
    case Language::MLPlusDiaB:
    case Language::MLSharp:
    case Language::MLSharpB:
        return true;
    default:
        return false;
    }
}

bool in_language(const Formula& f, Language lang) {
    const bool hybrid = lang == Language::HL || lang == Language::HLB;
    const bool positive = lang == Language::MLPlus || lang == Language::MLPlusDia ||
                          lang == Language::MLPlusDiaB || lang == Language::MLPlusDiaG;
    const bool graded = lang == Language::MLSharp || lang == Language::MLSharpB ||
                        lang == Language::MLSharpG;

    bool ok = true;
    switch (f.kind) {
    case FormulaKind::True:
    case FormulaKind::False:
    case FormulaKind::Prop:
    case FormulaKind::And:
    case FormulaKind::Or:
        break;
    case FormulaKind::WorldVar:
    case FormulaKind::Down:
    case FormulaKind::At:
        ok = hybrid;
        break;
    case FormulaKind::Not:
        ok = !positive;
        break;
    case FormulaKind::Diamond:
        ok = f.grade == 1 || graded;
        break;
    case FormulaKind::Box:
        ok = lang != Language::MLPlusDia && lang != Language::MLPlusDiaB &&
             lang != Language::MLPlusDiaG;
        break;
    case FormulaKind::BackDiamond:
        ok = lang == Language::MLSharpB ||
             (f.grade == 1 && (lang == Language::MLPlusDiaB || lang == Language::HLB));
        break;
    case FormulaKind::Global:
        ok = lang == Language::MLSharpG || (f.grade == 1 && lang == Language::MLPlusDiaG);
        break;
    }
    if (!ok) return false;
    for (const Formula& c : f.children)
        if (!in_language(c, lang)) return false;
    return true;
}

ParseError::ParseError(const std::string& message, std::size_t pos)
    : std::runtime_error(message + " at position " + std::to_string(pos)), position(pos) {}

namespace {

enum class TokenKind {
    Ident,
    Number,
    LParen,
    RParen,
    LAngle,
    RAngle,
    LBracket,
    RBracket,
    Amp,
    Pipe,
    Bang,
    GreaterEq,
    Dot,
    AtSign,
    Tilde,
    End,
};

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;
    int number = 0;
    std::size_t pos = 0;
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        Token t;
        t.pos = i;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            t.kind = TokenKind::Ident;
            t.text = text.substr(i, j - i);
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            long long value = 0;
            while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) {
                value = value * 10 + (text[j] - '0');
                if (value > 1000000) throw ParseError("grade too large", i);
                ++j;
            }
            t.kind = TokenKind::Number;
            t.number = static_cast<int>(value);
            i = j;
        } else if (c == '>' && i + 1 < n && text[i + 1] == '=') {
            t.kind = TokenKind::GreaterEq;
            i += 2;
        } else {
            switch (c) {
            case '(': t.kind = TokenKind::LParen; break;
            case ')': t.kind = TokenKind::RParen; break;
            case '<': t.kind = TokenKind::LAngle; break;
            case '>': t.kind = TokenKind::RAngle; break;
            case '[': t.kind = TokenKind::LBracket; break;
            case ']': t.kind = TokenKind::RBracket; break;
            case '&': t.kind = TokenKind::Amp; break;
            case '|': t.kind = TokenKind::Pipe; break;
            case '!': t.kind = TokenKind::Bang; break;
            case '.': t.kind = TokenKind::Dot; break;
            case '@': t.kind = TokenKind::AtSign; break;
            case '~': t.kind = TokenKind::Tilde; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", i);
            }
            ++i;
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.kind = TokenKind::End;
    end.pos = n;
    out.push_back(end);
    return out;
}

bool is_keyword(const std::string& name) {
    return name == "true" || name == "false" || name == "down" || name == "E";
}

class Parser {
  public:
    Parser(std::vector<Token> tokens, const Signature& sig)
        : tokens_(std::move(tokens)), sig_(sig) {}

    Formula run() {
        Formula f = parse_or();
        expect(TokenKind::End, "unexpected trailing input");
        return f;
    }

  private:
    std::vector<Token> tokens_;
    const Signature& sig_;
    std::size_t at_ = 0;
    // (name as written, name after alpha-renaming), innermost last.
    std::vector<std::pair<std::string, std::string>> scope_;
    int fresh_counter_ = 0;

    const Token& peek(std::size_t ahead = 0) const {
        return tokens_[std::min(at_ + ahead, tokens_.size() - 1)];
    }
    Token take() { return tokens_[std::min(at_++, tokens_.size() - 1)]; }
    void expect(TokenKind kind, const char* message) {
        if (peek().kind != kind) throw ParseError(message, peek().pos);
        ++at_;
    }

    bool name_in_use(const std::string& name) const {
        if (is_keyword(name) || sig_.prop_index(name) >= 0) return true;
        for (const auto& [user, actual] : scope_)
            if (user == name || actual == name) return true;
        return false;
    }

    std::string binder_name(const std::string& written) {
        if (!name_in_use(written)) return written;
        while (true) {
            std::string candidate = "x" + std::to_string(fresh_counter_++);
            if (!name_in_use(candidate)) return candidate;
        }
    }

    std::string lookup_var(const Token& t) const {
        for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
            if (it->first == t.text) return it->second;
        throw ParseError("unbound world variable '" + t.text + "'", t.pos);
    }

    int parse_grade() {
        expect(TokenKind::GreaterEq, "expected '>='");
        if (peek().kind != TokenKind::Number) throw ParseError("expected a grade", peek().pos);
        Token t = take();
        if (t.number < 1) throw ParseError("grade must be at least 1", t.pos);
        return t.number;
    }

    // Reads an action name, optionally ~-prefixed, and resolves it. Returns
    // the action index plus whether the name fell back to a backward
    // modality over the base action.
    std::pair<int, bool> parse_action_name() {
        bool tilde = false;
        if (peek().kind == TokenKind::Tilde) {
            take();
            tilde = true;
        }
        if (peek().kind != TokenKind::Ident)
            throw ParseError("expected an action name", peek().pos);
        Token t = take();
        const std::string full = (tilde ? "~" : "") + t.text;
        int idx = sig_.action_index(full);
        if (idx >= 0) return {idx, false};
        if (tilde) {
            idx = sig_.action_index(t.text);
            if (idx >= 0) return {idx, true};
        }
        throw ParseError("unknown action '" + full + "'", t.pos);
    }

    Formula parse_or() {
        std::vector<Formula> parts;
        parts.push_back(parse_and());
        while (peek().kind == TokenKind::Pipe) {
            take();
            parts.push_back(parse_and());
        }
        if (parts.size() == 1) return std::move(parts.front());
        return Formula{FormulaKind::Or, -1, 0, {}, std::move(parts)};
    }

    Formula parse_and() {
        std::vector<Formula> parts;
        parts.push_back(parse_unary());
        while (peek().kind == TokenKind::Amp) {
            take();
            parts.push_back(parse_unary());
        }
        if (parts.size() == 1) return std::move(parts.front());
        return Formula{FormulaKind::And, -1, 0, {}, std::move(parts)};
    }

    Formula parse_unary() {
        const Token& t = peek();
        switch (t.kind) {
        case TokenKind::Bang:
            take();
            return f_not(parse_unary());
        case TokenKind::LAngle: {
            take();
            auto [action, backward] = parse_action_name();
            expect(TokenKind::RAngle, "expected '>'");
            int grade = 1;
            if (peek().kind == TokenKind::GreaterEq) grade = parse_grade();
            Formula body = parse_unary();
            return backward ? f_back_diamond(action, grade, std::move(body))
                            : f_diamond(action, grade, std::move(body));
        }
        case TokenKind::LBracket: {
            take();
            auto [action, backward] = parse_action_name();
            if (backward)
                throw ParseError("unknown action '~" + sig_.actions[action] + "'", t.pos);
            expect(TokenKind::RBracket, "expected ']'");
            return f_box(action, parse_unary());
        }
        case TokenKind::AtSign: {
            take();
            if (peek().kind != TokenKind::Ident)
                throw ParseError("expected a world variable", peek().pos);
            Token name = take();
            std::string actual = lookup_var(name);
            return f_at(std::move(actual), parse_unary());
        }
        case TokenKind::Ident:
            if (t.text == "down") {
                take();
                if (peek().kind != TokenKind::Ident)
                    throw ParseError("expected a world variable", peek().pos);
                Token name = take();
                expect(TokenKind::Dot, "expected '.'");
                std::string actual = binder_name(name.text);
                scope_.emplace_back(name.text, actual);
                Formula body = parse_or();
                scope_.pop_back();
                return f_down(std::move(actual), std::move(body));
            }
            if (t.text == "E" && peek(1).kind == TokenKind::GreaterEq) {
                take();
                int grade = parse_grade();
                return f_global(grade, parse_unary());
            }
            return parse_primary();
        default:
            return parse_primary();
        }
    }

    Formula parse_primary() {
        Token t = take();
        switch (t.kind) {
        case TokenKind::LParen: {
            Formula f = parse_or();
            expect(TokenKind::RParen, "expected ')'");
            return f;
        }
        case TokenKind::Ident: {
            if (t.text == "true") return f_true();
            if (t.text == "false") return f_false();
            for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
                if (it->first == t.text) return f_var(it->second);
            const int prop = sig_.prop_index(t.text);
            if (prop >= 0) return f_prop(prop);
            throw ParseError("unknown proposition or world variable '" + t.text + "'", t.pos);
        }
        case TokenKind::End:
            throw ParseError("unexpected end of input", t.pos);
        default:
            throw ParseError("unexpected token", t.pos);
        }
    }
};

bool is_atom(const Formula& f) {
    switch (f.kind) {
    case FormulaKind::True:
    case FormulaKind::False:
    case FormulaKind::Prop:
    case FormulaKind::WorldVar:
        return true;
    default:
        return false;
    }
}

void check_symbol(const Formula& f, const Signature& sig) {
    if (f.kind == FormulaKind::Prop && (f.symbol < 0 || f.symbol >= sig.num_props()))
        throw std::invalid_argument("proposition index out of range for the signature");
    const bool action_node = f.kind == FormulaKind::Diamond || f.kind == FormulaKind::Box ||
                             f.kind == FormulaKind::BackDiamond;
    if (action_node && (f.symbol < 0 || f.symbol >= sig.num_actions()))
        throw std::invalid_argument("action index out of range for the signature");
}

std::string print_rec(const Formula& f, const Signature& sig);

std::string print_wrapped(const Formula& f, const Signature& sig) {
    if (is_atom(f)) return print_rec(f, sig);
    return "(" + print_rec(f, sig) + ")";
}

std::string join_children(const Formula& f, const Signature& sig, const char* op) {
    std::string out;
    for (std::size_t i = 0; i < f.children.size(); ++i) {
        if (i > 0) out += op;
        out += print_wrapped(f.children[i], sig);
    }
    return out;
}

std::string print_rec(const Formula& f, const Signature& sig) {
    check_symbol(f, sig);
    switch (f.kind) {
    case FormulaKind::True: return "true";
    case FormulaKind::False: return "false";
    case FormulaKind::Prop: return sig.props[f.symbol];
    case FormulaKind::WorldVar: return f.var;
    case FormulaKind::Not: return "!" + print_wrapped(f.children.front(), sig);
    case FormulaKind::And: return join_children(f, sig, " & ");
    case FormulaKind::Or: return join_children(f, sig, " | ");
    case FormulaKind::Diamond: {
        std::string out = "<" + sig.actions[f.symbol] + ">";
        if (f.grade > 1) out += ">=" + std::to_string(f.grade);
        return out + " " + print_wrapped(f.children.front(), sig);
    }
    case FormulaKind::Box:
        return "[" + sig.actions[f.symbol] + "] " + print_wrapped(f.children.front(), sig);
    case FormulaKind::BackDiamond: {
        std::string out = "<~" + sig.actions[f.symbol] + ">";
        if (f.grade > 1) out += ">=" + std::to_string(f.grade);
        return out + " " + print_wrapped(f.children.front(), sig);
    }
    case FormulaKind::Global:
        return "E>=" + std::to_string(f.grade) + " " + print_wrapped(f.children.front(), sig);
    case FormulaKind::Down:
        return "down " + f.var + ". " + print_rec(f.children.front(), sig);
    case FormulaKind::At:
        return "@" + f.var + " " + print_wrapped(f.children.front(), sig);
    }
    return "true";
}

} // namespace

Formula parse_formula(const std::string& text, const Signature& sig) {
    Parser parser(lex(text), sig);
    return parser.run();
}

std::string print_formula(const Formula& f, const Signature& sig) {
    return print_rec(f, sig);
}

} // namespace modhom
