#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "crp/model.hpp"
#include "test_support.hpp"

using namespace crp;
using test::ctx;
using test::L;

TEST_CASE("atom names follow the lowercase identifier pattern") {
    CHECK(is_valid_atom_name("a"));
    CHECK(is_valid_atom_name("c1x"));
    CHECK(is_valid_atom_name("foo_Bar9"));
    CHECK_FALSE(is_valid_atom_name(""));
    CHECK_FALSE(is_valid_atom_name("Foo"));
    CHECK_FALSE(is_valid_atom_name("_a"));
    CHECK_FALSE(is_valid_atom_name("9a"));
    CHECK_FALSE(is_valid_atom_name("a-b"));
    CHECK_NOTHROW(Atom("abc"));
    CHECK_THROWS_AS(Atom("Abc"), std::invalid_argument);
    CHECK_THROWS_AS(Atom(""), std::invalid_argument);
}

TEST_CASE("literals order positives before strong negations") {
    CHECK(L("a") < L("b"));
    CHECK(L("b") < L("-a"));
    CHECK(L("-a") < L("-b"));
    CHECK(L("a") == Literal("a"));
    CHECK(L("-a") == Literal("a", true));
}

TEST_CASE("complement flips the strong negation and is involutive") {
    CHECK(complement(L("a")) == L("-a"));
    CHECK(complement(L("-a")) == L("a"));
    CHECK(complement(complement(L("x"))) == L("x"));
}

TEST_CASE("extended literals render with the default negation keyword") {
    CHECK(to_string(ExtendedLiteral{L("a"), false}) == "a");
    CHECK(to_string(ExtendedLiteral{L("-a"), true}) == "not -a");
}

TEST_CASE("rules drop duplicate literals and keep first occurrence order") {
    Rule r(0, RuleKind::Regular, {L("p"), L("q"), L("p")}, {L("r"), L("r")}, {L("s")});
    CHECK(r.head() == std::vector<Literal>{L("p"), L("q")});
    CHECK(r.pos_body() == std::vector<Literal>{L("r")});
    CHECK(r.neg_body() == std::vector<Literal>{L("s")});
}

TEST_CASE("rule construction rejects bad heads") {
    CHECK_THROWS_AS(Rule(0, RuleKind::Regular, {}, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Rule(0, RuleKind::Cr, {L("p"), L("q")}, {}, {}), std::invalid_argument);
    CHECK_NOTHROW(Rule(0, RuleKind::Cr, {L("p")}, {}, {}));
}

TEST_CASE("rule classification helpers") {
    Rule fact(0, RuleKind::Regular, {L("a")}, {}, {});
    CHECK(fact.is_fact());
    CHECK(fact.is_nondisjunctive());
    CHECK(fact.is_naf_free());
    Rule r(1, RuleKind::Regular, {L("a"), L("b")}, {L("c")}, {L("d")});
    CHECK_FALSE(r.is_fact());
    CHECK_FALSE(r.is_nondisjunctive());
    CHECK_FALSE(r.is_naf_free());
    Rule renamed = r.with_id(7);
    CHECK(renamed.id() == 7);
    CHECK(renamed.head() == r.head());
    CHECK(renamed.kind() == r.kind());
}

TEST_CASE("programs renumber rule ids to positions") {
    Rule a(5, RuleKind::Regular, {L("a")}, {}, {});
    Rule b(9, RuleKind::Cr, {L("b")}, {}, {});
    Program p({a, b});
    CHECK(p.size() == 2);
    CHECK(p.rule(0).id() == 0);
    CHECK(p.rule(1).id() == 1);
    CHECK(p.rule(1).kind() == RuleKind::Cr);
    CHECK_THROWS_AS(p.rule(2), std::out_of_range);
    CHECK_THROWS_AS(p.rule(-1), std::out_of_range);
}

TEST_CASE("regular and cr views keep original ids") {
    Program p = test::chain_program();
    auto regular = p.regular_rules();
    auto crs = p.cr_rules();
    REQUIRE(regular.size() == 3);
    REQUIRE(crs.size() == 2);
    CHECK(regular[0].id() == 0);
    CHECK(regular[2].id() == 2);
    CHECK(crs[0].id() == 3);
    CHECK(crs[1].id() == 4);
    CHECK_FALSE(p.is_regular_only());
    CHECK(p.is_nondisjunctive());
    CHECK_FALSE(p.is_naf_free());
}

TEST_CASE("contexts sort and deduplicate their literals") {
    Context c({L("b"), L("a"), L("-a"), L("b")});
    CHECK(c.size() == 3);
    CHECK(c.literals() == std::vector<Literal>{L("a"), L("b"), L("-a")});
    CHECK(c.contains(L("-a")));
    CHECK_FALSE(c.contains(L("c")));
}

TEST_CASE("subset tests distinguish proper inclusion") {
    Context small = ctx({"a", "b"});
    Context big = ctx({"a", "b", "c"});
    CHECK(small.subset_of(big));
    CHECK(small.proper_subset_of(big));
    CHECK(small.subset_of(small));
    CHECK_FALSE(small.proper_subset_of(small));
    CHECK_FALSE(big.subset_of(small));
    CHECK(Context{}.subset_of(small));
    CHECK(small.plus(L("c")) == big);
}

TEST_CASE("consistency means no complementary pair") {
    CHECK(is_consistent(ctx({"a", "b", "-c"})));
    CHECK_FALSE(is_consistent(ctx({"a", "-a"})));
    CHECK(is_consistent(Context{}));
}

TEST_CASE("intersection and union are plain set operations") {
    CHECK(intersect(ctx({"a", "b", "c"}), ctx({"b", "c", "d"})) == ctx({"b", "c"}));
    CHECK(unite(ctx({"a"}), ctx({"b"})) == ctx({"a", "b"}));
    CHECK(intersect(ctx({"a"}), Context{}) == Context{});
}

TEST_CASE("canonical order compares cardinality before content") {
    CHECK(canonical_less(ctx({"z"}), ctx({"a", "b"})));
    CHECK(canonical_less(ctx({"a", "b"}), ctx({"a", "c"})));
    CHECK_FALSE(canonical_less(ctx({"a"}), ctx({"a"})));
    CHECK(canonical_less(Context{}, ctx({"a"})));
}

TEST_CASE("the literal universe covers heads and both body kinds") {
    Program p = test::chain_program();
    CHECK(literal_universe(p) == ctx({"a", "-a", "b", "c"}));
}

TEST_CASE("rules render in surface syntax") {
    Program p = test::chain_program();
    CHECK(to_string(p.rule(0)) == "a.");
    CHECK(to_string(p.rule(1)) == "-a :- not b, not c.");
    CHECK(to_string(p.rule(2)) == "b :- c.");
    CHECK(to_string(p.rule(3)) == "b :+.");
    Rule r(0, RuleKind::Regular, {L("p"), L("q")}, {L("r")}, {L("s")});
    CHECK(to_string(r) == "p | q :- r, not s.");
    Rule cr(0, RuleKind::Cr, {L("c")}, {L("d")}, {L("e")});
    CHECK(to_string(cr) == "c :+ d, not e.");
}

TEST_CASE("stream insertion matches to_string") {
    std::ostringstream os;
    os << L("-a") << " " << ctx({"a", "b"});
    CHECK(os.str() == "-a {a, b}");
}
