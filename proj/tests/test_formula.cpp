#include <doctest.h>

#include "common.hpp"

#include <modhom/formula.hpp>
#include <modhom/signature.hpp>

using namespace modhom;
using namespace testutil;

TEST_CASE("builders validate and collapse") {
    CHECK(f_and({}) == f_true());
    CHECK(f_or({}) == f_false());
    CHECK(f_and({f_prop(0)}) == f_prop(0));
    CHECK(f_or({f_prop(0)}) == f_prop(0));
    CHECK_THROWS_AS(f_diamond(0, 0, f_true()), std::invalid_argument);
    CHECK_THROWS_AS(f_global(0, f_true()), std::invalid_argument);
    CHECK_THROWS_AS(f_prop(-1), std::invalid_argument);
    CHECK_THROWS_AS(f_var(""), std::invalid_argument);
}

TEST_CASE("modal depth") {
    CHECK(modal_depth(f_prop(0)) == 0);
    CHECK(modal_depth(f_and({f_prop(0), f_not(f_prop(0))})) == 0);
    CHECK(modal_depth(f_diamond(0, 1, f_box(0, f_prop(0)))) == 2);
    CHECK(modal_depth(f_global(2, f_back_diamond(0, 1, f_true()))) == 2);
    CHECK(modal_depth(f_down("x", f_at("x", f_diamond(0, 1, f_var("x"))))) == 1);
}

TEST_CASE("parse frozen examples") {
    const Signature s2 = sig2();
    CHECK(parse_formula("<R>>=2 p", sig1()) == f_diamond(0, 2, f_prop(0)));
    CHECK(parse_formula("down x. <R> x", sig1()) == f_down("x", f_diamond(0, 1, f_var("x"))));
    CHECK(parse_formula("E>=1 (p & !q)", s2) ==
          f_global(1, f_and({f_prop(0), f_not(f_prop(1))})));
}

TEST_CASE("parse shapes") {
    const Signature s1 = sig1();
    const Signature s2 = sig2();
    CHECK(parse_formula("true", s1) == f_true());
    CHECK(parse_formula("false", s1) == f_false());
    CHECK(parse_formula("((p))", s1) == f_prop(0));
    CHECK(parse_formula("p & q & p", s2) == f_and({f_prop(0), f_prop(1), f_prop(0)}));
    CHECK(parse_formula("p | q | p", s2) == f_or({f_prop(0), f_prop(1), f_prop(0)}));
    CHECK(parse_formula("p & q | p", s2) == f_or({f_and({f_prop(0), f_prop(1)}), f_prop(0)}));
    CHECK(parse_formula("!p & q", s2) == f_and({f_not(f_prop(0)), f_prop(1)}));
    CHECK(parse_formula("[S] <R> p", s2) == f_box(1, f_diamond(0, 1, f_prop(0))));
    CHECK(parse_formula("<R> p & q", s2) == f_and({f_diamond(0, 1, f_prop(0)), f_prop(1)}));
    CHECK(parse_formula("<~S>>=3 q", s2) == f_back_diamond(1, 3, f_prop(1)));
    CHECK(parse_formula("<~R> p", s1) == f_back_diamond(0, 1, f_prop(0)));
    CHECK(parse_formula("E>=2 p", s1) == f_global(2, f_prop(0)));
}

TEST_CASE("binder scope and renaming") {
    const Signature s1 = sig1();
    CHECK(parse_formula("down y. @y <R> y", s1) ==
          f_down("y", f_at("y", f_diamond(0, 1, f_var("y")))));
    // The binder scopes as far right as possible.
    CHECK(parse_formula("down x. <R> x & p", s1) ==
          f_down("x", f_and({f_diamond(0, 1, f_var("x")), f_prop(0)})));
    // A binder colliding with a proposition is renamed; references follow.
    CHECK(parse_formula("down p. <R> p", s1) == f_down("x0", f_diamond(0, 1, f_var("x0"))));
    // Shadowing an enclosing binder renames the inner one.
    CHECK(parse_formula("down x. <R> down x. x", s1) ==
          f_down("x", f_diamond(0, 1, f_down("x0", f_var("x0")))));
    // Keywords are renamed too.
    CHECK(parse_formula("down E. @E true", s1) == f_down("x0", f_at("x0", f_true())));
    // The fresh supply skips names in use.
    CHECK(parse_formula("down x0. down p. @p x0", s1) ==
          f_down("x0", f_down("x1", f_at("x1", f_var("x0")))));
}

TEST_CASE("backward surface syntax on expanded signatures") {
    const Signature sb = backward_signature(sig1());
    REQUIRE(sb.action_index("~R") == 1);
    CHECK(parse_formula("<~R>>=2 p", sb) == f_diamond(1, 2, f_prop(0)));
    CHECK(parse_formula("[~R] p", sb) == f_box(1, f_prop(0)));
    const Signature sg = global_signature(sig1());
    REQUIRE(sg.action_index("~G") == 1);
    CHECK(parse_formula("<~G> p", sg) == f_diamond(1, 1, f_prop(0)));
}

TEST_CASE("parse errors carry positions") {
    const Signature s1 = sig1();
    auto pos_of = [&](const char* text) {
        try {
            parse_formula(text, s1);
        } catch (const ParseError& e) {
            return static_cast<long long>(e.position);
        }
        return -1LL;
    };
    CHECK(pos_of("<Q> p") == 1);
    CHECK(pos_of("foo") == 0);
    CHECK(pos_of("p &") == 3);
    CHECK(pos_of("(p") == 2);
    CHECK(pos_of("p q") == 2);
    CHECK(pos_of("@y p") == 1);
    CHECK(pos_of("<R>>=0 p") >= 0);
    CHECK(pos_of("[~R] p") >= 0);
    CHECK(pos_of("") == 0);
    CHECK(pos_of("p # q") >= 0);
    CHECK(pos_of("down 3. p") >= 0);
}

TEST_CASE("print round trip") {
    const Signature s1 = sig1();
    const Signature s2 = sig2();
    const std::vector<std::pair<Formula, const Signature*>> cases = {
        {f_true(), &s1},
        {f_false(), &s1},
        {f_prop(0), &s1},
        {f_not(f_prop(1)), &s2},
        {f_and({f_prop(0), f_prop(1), f_true()}), &s2},
        {f_or({f_not(f_prop(0)), f_box(1, f_false())}), &s2},
        {f_diamond(0, 1, f_prop(0)), &s1},
        {f_diamond(1, 5, f_or({f_prop(0), f_prop(1)})), &s2},
        {f_box(0, f_and({f_prop(0), f_not(f_prop(0))})), &s1},
        {f_back_diamond(0, 2, f_diamond(0, 1, f_true())), &s1},
        {f_global(1, f_back_diamond(1, 1, f_prop(1))), &s2},
        {f_down("x", f_diamond(0, 1, f_var("x"))), &s1},
        {f_down("x", f_and({f_var("x"), f_down("y", f_at("y", f_var("x")))})), &s1},
        {f_at("x", f_prop(0)), &s1},
    };
    for (const auto& [f, sig] : cases) {
        if (f.kind == FormulaKind::At) {
            // Free world variables do not reparse; printing still works.
            CHECK(print_formula(f, *sig) == "@x p");
            continue;
        }
        CHECK(parse_formula(print_formula(f, *sig), *sig) == f);
    }
}

TEST_CASE("printer emits canonical parentheses") {
    const Signature s2 = sig2();
    CHECK(print_formula(f_diamond(0, 2, f_prop(0)), s2) == "<R>>=2 p");
    CHECK(print_formula(f_and({f_prop(0), f_not(f_prop(1))}), s2) == "p & (!q)");
    CHECK(print_formula(f_global(1, f_and({f_prop(0), f_prop(1)})), s2) == "E>=1 (p & q)");
    CHECK(print_formula(f_down("x", f_diamond(1, 1, f_var("x"))), s2) == "down x. <S> x");
    CHECK(print_formula(f_back_diamond(0, 3, f_true()), s2) == "<~R>>=3 true");
    CHECK(print_formula(f_box(1, f_or({f_false(), f_prop(0)})), s2) == "[S] (false | p)");
}

TEST_CASE("parsed text round-trips through print") {
    const Signature s2 = sig2();
    const char* samples[] = {
        "p & q | !p",
        "<R>>=2 (p | <S> q)",
        "[R] [S] !p",
        "down x. <R> (x & down y. @y <S> x)",
        "E>=3 (p & <~R>>=2 q)",
        "down p. @p (p | q)",
    };
    for (const char* text : samples) {
        const Formula f = parse_formula(text, s2);
        CHECK(parse_formula(print_formula(f, s2), s2) == f);
    }
}

TEST_CASE("language membership") {
    const Formula prop = f_prop(0);
    const Formula neg = f_not(prop);
    const Formula box = f_box(0, prop);
    const Formula dia = f_diamond(0, 1, prop);
    const Formula graded = f_diamond(0, 2, prop);
    const Formula back1 = f_back_diamond(0, 1, prop);
    const Formula back2 = f_back_diamond(0, 2, prop);
    const Formula glob1 = f_global(1, prop);
    const Formula glob2 = f_global(2, prop);
    const Formula hybrid = f_down("x", f_diamond(0, 1, f_var("x")));

    for (Language lang : {Language::ML, Language::MLPlus, Language::MLPlusDia,
                          Language::MLPlusDiaB, Language::MLPlusDiaG, Language::MLSharp,
                          Language::MLSharpB, Language::MLSharpG, Language::HL, Language::HLB}) {
        CHECK(in_language(f_true(), lang));
        CHECK(in_language(f_false(), lang));
        CHECK(in_language(prop, lang));
    }

    CHECK(in_language(neg, Language::ML));
    CHECK(!in_language(neg, Language::MLPlus));
    CHECK(!in_language(neg, Language::MLPlusDia));
    CHECK(in_language(neg, Language::MLSharp));
    CHECK(in_language(neg, Language::HL));

    CHECK(in_language(box, Language::MLPlus));
    CHECK(!in_language(box, Language::MLPlusDia));
    CHECK(!in_language(box, Language::MLPlusDiaB));
    CHECK(in_language(box, Language::MLSharp));

    CHECK(in_language(dia, Language::MLPlusDia));
    CHECK(!in_language(graded, Language::MLPlusDia));
    CHECK(!in_language(graded, Language::ML));
    CHECK(in_language(graded, Language::MLSharp));
    CHECK(in_language(graded, Language::MLSharpB));

    CHECK(in_language(back1, Language::MLPlusDiaB));
    CHECK(!in_language(back1, Language::MLPlusDia));
    CHECK(!in_language(back2, Language::MLPlusDiaB));
    CHECK(in_language(back2, Language::MLSharpB));
    CHECK(!in_language(back2, Language::MLSharp));
    CHECK(in_language(back1, Language::HLB));
    CHECK(!in_language(back2, Language::HLB));
    CHECK(!in_language(back1, Language::HL));

    CHECK(in_language(glob1, Language::MLPlusDiaG));
    CHECK(!in_language(glob2, Language::MLPlusDiaG));
    CHECK(in_language(glob2, Language::MLSharpG));
    CHECK(!in_language(glob1, Language::MLSharp));

    CHECK(in_language(hybrid, Language::HL));
    CHECK(in_language(hybrid, Language::HLB));
    CHECK(!in_language(hybrid, Language::ML));
    CHECK(!in_language(hybrid, Language::MLSharpG));
}

TEST_CASE("language names") {
    for (Language lang : {Language::ML, Language::MLPlus, Language::MLPlusDia,
                          Language::MLPlusDiaB, Language::MLPlusDiaG, Language::MLSharp,
                          Language::MLSharpB, Language::MLSharpG, Language::HL, Language::HLB})
        CHECK(language_from_name(language_name(lang)) == lang);
    CHECK_THROWS_AS(language_from_name("nope"), std::invalid_argument);
    CHECK(language_is_bounded(Language::MLPlusDia));
    CHECK(language_is_bounded(Language::MLPlusDiaB));
    CHECK(language_is_bounded(Language::MLSharp));
    CHECK(language_is_bounded(Language::MLSharpB));
    CHECK(!language_is_bounded(Language::ML));
    CHECK(!language_is_bounded(Language::MLPlusDiaG));
    CHECK(!language_is_bounded(Language::HL));
}
