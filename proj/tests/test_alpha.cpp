#include <doctest.h>

#include "lambda/alpha.hpp"
#include "lambda/parser.hpp"
#include "support/gen.hpp"
#include "support/props.hpp"

using namespace lambda;
using namespace lambda::testsupport;

namespace {
VarName V(const char* s) { return VarName{s}; }
Context C(std::initializer_list<const char*> names) {
    Context out;
    for (const char* n : names) out.push_back(VarName{n});
    return out;
}
}

TEST_CASE("variable equivalence under contexts") {
    CHECK(alpha_eq_var(C({}), C({}), V("x"), V("x")));
    CHECK(!alpha_eq_var(C({}), C({}), V("x"), V("y")));
    // rightmost entries match simultaneously
    CHECK(alpha_eq_var(C({"x", "y"}), C({"a", "b"}), V("y"), V("b")));
    // the rightmost x shadows the earlier one: no searching further left
    CHECK(!alpha_eq_var(C({"x", "x"}), C({"b", "a"}), V("x"), V("b")));
    CHECK(alpha_eq_var(C({"x", "x"}), C({"a", "b"}), V("x"), V("b")));
    // a hit may occur before either context runs out, lengths ignored
    CHECK(alpha_eq_var(C({"x"}), C({"a", "b"}), V("x"), V("b")));
    // globals need both contexts exhausted together
    CHECK(!alpha_eq_var(C({"z"}), C({}), V("x"), V("x")));
    CHECK(alpha_eq_var(C({"z"}), C({"q"}), V("x"), V("x")));
    // one-sided hit fails
    CHECK(!alpha_eq_var(C({"x"}), C({"a"}), V("x"), V("b")));
}

TEST_CASE("term equivalence under contexts") {
    CHECK(alpha_eq_ctx(C({}), C({}), parse_term("(\\q. z) y"),
                       parse_term("(\\w. z) y")));
    CHECK(!alpha_eq_ctx(C({}), C({}), parse_term("(\\z. z) y"),
                        parse_term("(\\q. z) y")));
    // nested shadowing: \x. x (\x. y x) ~ \a. a (\b. y b)
    CHECK(alpha_eq_ctx(C({}), C({}), parse_term("\\x. x (\\x. y x)"),
                       parse_term("\\a. a (\\b. y b)")));
    // intermediate judgment of the same derivation
    CHECK(alpha_eq_ctx(C({"x", "x"}), C({"a", "b"}), parse_term("y x"),
                       parse_term("y b")));
}

TEST_CASE("closed alpha equivalence") {
    CHECK(alpha_eq(parse_term("\\x. \\y. y"), parse_term("\\a. \\b. b")));
    CHECK(!alpha_eq(parse_term("\\x. \\y. y"), parse_term("\\a. \\b. a")));
    CHECK(!alpha_eq(parse_term("\\x. x"), parse_term("x")));  // kind mismatch
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        const TermPtr t = random_term(rng, 5, name_pool());
        CHECK(alpha_eq(t, t));
    }
}

TEST_CASE("deep terms do not overflow the call stack") {
    // ~300k nested binders; torn down recursively this would crash, so
    // the terms are deliberately kept alive for the process lifetime.
    constexpr int depth = 300'000;
    auto* keep = new std::vector<TermPtr>;
    TermPtr left = mk_var(V("a"));
    TermPtr right = mk_var(V("b"));
    TermPtr wrong = mk_var(V("c"));  // stays free: c != b under empty tails
    for (int i = 0; i < depth; ++i) {
        left = mk_abs(V("a"), left);
        right = mk_abs(V("b"), right);
        wrong = mk_abs(V("b"), wrong);
    }
    keep->push_back(left);
    keep->push_back(right);
    keep->push_back(wrong);
    CHECK(alpha_eq(left, right));
    CHECK(!alpha_eq(left, wrong));
}

TEST_CASE("equivalence relation laws (sampled)") {
    const PropResult refl = prop_alpha_reflexive(200, 101);
    INFO(refl.failure);
    CHECK(refl.ok());
    const PropResult sym = prop_alpha_symmetric(200, 102);
    INFO(sym.failure);
    CHECK(sym.ok());
    const PropResult trans = prop_alpha_transitive(200, 103);
    INFO(trans.failure);
    CHECK(trans.ok());
}

TEST_CASE("structural rules (sampled)") {
    const PropResult fv = prop_alpha_fv(200, 104);
    INFO(fv.failure);
    CHECK(fv.ok());
    const PropResult cong = prop_alpha_congruence(200, 105);
    INFO(cong.failure);
    CHECK(cong.ok());
    const PropResult prep = prop_alpha_ctx_prepend(200, 106);
    INFO(prep.failure);
    CHECK(prep.ok());
    const PropResult shadow = prop_alpha_rem_shadowed(200, 107);
    INFO(shadow.failure);
    CHECK(shadow.ok());
    const PropResult weaken = prop_alpha_ctx_weaken(200, 108);
    INFO(weaken.failure);
    CHECK(weaken.ok());
    const PropResult swap = prop_alpha_swap(200, 109);
    INFO(swap.failure);
    CHECK(swap.ok());
}

TEST_CASE("shadow removal, concrete instance") {
    // <xs1 ++ [x] ++ xs2 ++ [x] ++ xs3; t> with the left x shadowed
    const Context big_l = C({"x", "y", "x", "z"});
    const Context big_r = C({"q", "y2", "b", "z2"});
    const TermPtr t = parse_term("x z");
    const TermPtr u = parse_term("b z2");
    REQUIRE(alpha_eq_ctx(big_l, big_r, t, u));
    CHECK(alpha_eq_ctx(C({"y", "x", "z"}), C({"y2", "b", "z2"}), t, u));
}
