#include <doctest.h>

#include <algorithm>

#include "crp/antichain.hpp"
#include "crp/ap_semantics.hpp"
#include "crp/depgraph.hpp"
#include "crp/parser.hpp"
#include "crp/proofs.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace crp;
using test::ctx;
using test::L;

namespace {

const Context kTwoRouteSet = ctx({"a", "b", "c", "c1x", "c1y", "c2"});

GenConfig proof_config(std::uint64_t seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.atoms = 4;
    cfg.regular_rules = 5;
    cfg.max_head = 2;
    cfg.max_body = 2;
    cfg.strong_neg_prob = 0.2;
    cfg.require = {Requirement::Hcf};
    return cfg;
}

}  // namespace

TEST_CASE("is_proof accepts the hand-checked derivations") {
    Program p = test::two_route_program();
    CHECK(is_proof(p, kTwoRouteSet, L("a"), {4, 3, 2, 1, 0}));
    CHECK(is_proof(p, kTwoRouteSet, L("a"), {4, 3, 1, 2, 0}));
    CHECK(is_proof(p, kTwoRouteSet, L("c"), {6, 5}));
    CHECK(is_proof(p, kTwoRouteSet, L("c1y"), {4}));
    // a naf-only rule may open a proof even though it is no fact
    Program naf = parse_program("l :- not b.\n");
    CHECK(is_proof(naf, ctx({"l"}), L("l"), {0}));
}

TEST_CASE("is_proof rejects sequences breaking any clause") {
    Program p = test::two_route_program();
    CHECK_FALSE(is_proof(p, kTwoRouteSet, L("a"), {0}));           // premises unproven
    CHECK_FALSE(is_proof(p, kTwoRouteSet, L("a"), {3, 4, 2, 1, 0}));  // premise proven too late
    CHECK_FALSE(is_proof(p, kTwoRouteSet, L("c"), {4, 3, 2, 1, 0}));  // wrong target
    CHECK_FALSE(is_proof(p, kTwoRouteSet, L("c"), {6, 5, 5}));        // duplicate rule
    CHECK_FALSE(is_proof(p, ctx({"c2"}), L("c"), {6, 5}));   // c not in context
    Program loop = parse_program("p :- p.\n");
    CHECK_FALSE(is_proof(loop, ctx({"p"}), L("p"), {0}));  // nonempty first body
}

TEST_CASE("is_proof validates its inputs") {
    Program p = test::two_route_program();
    CHECK_THROWS_AS(is_proof(p, kTwoRouteSet, L("a"), {}), std::invalid_argument);
    CHECK_THROWS_AS(is_proof(p, kTwoRouteSet, L("a"), {99}), std::out_of_range);
    CHECK_THROWS_AS(is_proof(p, ctx({"a", "-a"}), L("a"), {0}), std::invalid_argument);
    CHECK_THROWS_AS(is_proof(test::chain_program(), ctx({"a"}), L("a"), {0}),
                    std::invalid_argument);
}

TEST_CASE("make_proof records the supported literal of each step") {
    Program p = test::two_route_program();
    Proof pr = make_proof(p, kTwoRouteSet, L("c"), {6, 5});
    REQUIRE(pr.steps.size() == 2);
    CHECK(pr.steps[0] == ProofStep{6, L("c2")});
    CHECK(pr.steps[1] == ProofStep{5, L("c")});
    CHECK(pr.target == L("c"));
    CHECK(pr.rule_ids() == std::vector<int>{6, 5});
    CHECK(to_string(pr) == "[6, 5] : c");
    CHECK_THROWS_AS(make_proof(p, kTwoRouteSet, L("a"), {0}), std::invalid_argument);
}

TEST_CASE("the minimal proofs of the two-route program match by hand") {
    Program p = test::two_route_program();
    auto of_a = enumerate_proofs(p, kTwoRouteSet, L("a"), 5);
    REQUIRE(of_a.size() == 2);
    CHECK(of_a[0].rule_ids() == std::vector<int>{4, 3, 1, 2, 0});
    CHECK(of_a[1].rule_ids() == std::vector<int>{4, 3, 2, 1, 0});
    auto of_c = enumerate_proofs(p, kTwoRouteSet, L("c"), 3);
    REQUIRE(of_c.size() == 4);
    CHECK(of_c[0].rule_ids() == std::vector<int>{6, 5});
    CHECK(of_c[1].rule_ids() == std::vector<int>{4, 3, 2});
    CHECK(of_c[2].rule_ids() == std::vector<int>{4, 6, 5});
    CHECK(of_c[3].rule_ids() == std::vector<int>{6, 4, 5});
    auto of_c1y = enumerate_proofs(p, kTwoRouteSet, L("c1y"), 1);
    REQUIRE(of_c1y.size() == 1);
    CHECK(of_c1y[0].rule_ids() == std::vector<int>{4});
    CHECK_THROWS_AS(enumerate_proofs(p, kTwoRouteSet, L("a"), 0), std::invalid_argument);
}

TEST_CASE("ranks of the two-route program") {
    Program p = test::two_route_program();
    CHECK(rank(p, kTwoRouteSet, L("a")) == 5);
    CHECK(rank(p, kTwoRouteSet, L("c")) == 2);
    CHECK(rank(p, kTwoRouteSet, L("c1y")) == 1);
    RankingFunction rk = ranking_function(p, kTwoRouteSet);
    RankingFunction expected{{L("a"), 5}, {L("b"), 3},   {L("c"), 2},
                             {L("c1x"), 2}, {L("c1y"), 1}, {L("c2"), 1}};
    CHECK(rk == expected);
}

TEST_CASE("rank insists on its preconditions") {
    Program p = test::two_route_program();
    CHECK_THROWS_AS(rank(p, kTwoRouteSet, L("z")), std::invalid_argument);
    CHECK_THROWS_AS(rank(p, ctx({"c1y"}), L("c1y")), std::invalid_argument);
    Program cyclic_heads = parse_program("p | q.\np :- q.\nq :- p.\n");
    CHECK_THROWS_AS(rank(cyclic_heads, ctx({"p", "q"}), L("p")), std::invalid_argument);
    CHECK_THROWS_AS(rank(test::chain_program(), ctx({"a", "b"}), L("a")),
                    std::invalid_argument);
    CHECK_THROWS_AS(ranking_function(p, ctx({"c1y"})), std::invalid_argument);
}

TEST_CASE("rank ties between derivation routes break normality") {
    Program p = test::two_route_program();
    // rule "c :- c1x." derives a literal of rank 2 from a premise of
    // rank 2, so every proof through it is non-normal
    Proof first = make_proof(p, kTwoRouteSet, L("a"), {4, 3, 2, 1, 0});
    Proof second = make_proof(p, kTwoRouteSet, L("a"), {4, 3, 1, 2, 0});
    CHECK_FALSE(is_normal_proof(p, kTwoRouteSet, first));
    CHECK_FALSE(is_normal_proof(p, kTwoRouteSet, second));
    CHECK_FALSE(is_normal_proof(p, kTwoRouteSet, subproof(first, 3)));
    CHECK(is_normal_proof(p, kTwoRouteSet, make_proof(p, kTwoRouteSet, L("c"), {6, 5})));
    CHECK(is_normal_proof(p, kTwoRouteSet, make_proof(p, kTwoRouteSet, L("c1y"), {4})));
}

TEST_CASE("normality goldens without rank ties") {
    Program p = parse_program("p.\nq :- p.\nr :- q.\nr :- p.\ns :- r, q.\n");
    Context x = ctx({"p", "q", "r", "s"});
    RankingFunction expected{{L("p"), 1}, {L("q"), 2}, {L("r"), 2}, {L("s"), 4}};
    CHECK(ranking_function(p, x) == expected);
    CHECK(is_normal_proof(p, x, make_proof(p, x, L("s"), {0, 1, 3, 4})));
    // "r :- q." derives rank 2 from rank 2
    CHECK_FALSE(is_normal_proof(p, x, make_proof(p, x, L("s"), {0, 1, 2, 4})));
    Proof foreign = make_proof(p, x, L("s"), {0, 1, 3, 4});
    foreign.steps[2].supported = L("q");
    CHECK_THROWS_AS(is_normal_proof(p, x, foreign), std::invalid_argument);
}

TEST_CASE("subproof takes prefixes and re-points the target") {
    Program p = test::two_route_program();
    Proof pr = make_proof(p, kTwoRouteSet, L("a"), {4, 3, 2, 1, 0});
    Proof sub = subproof(pr, 3);
    CHECK(sub.rule_ids() == std::vector<int>{4, 3, 2});
    CHECK(sub.target == L("c"));
    CHECK(is_proof(p, kTwoRouteSet, L("c"), sub.rule_ids()));
    // longer than the minimal proof of c, which has two steps
    CHECK(sub.length() == 3);
    CHECK(rank(p, kTwoRouteSet, L("c")) == 2);
    // the other minimal proof of a reaches c only at its fourth step
    Proof other = subproof(make_proof(p, kTwoRouteSet, L("a"), {4, 3, 1, 2, 0}), 4);
    CHECK(other.rule_ids() == std::vector<int>{4, 3, 1, 2});
    CHECK(other.target == L("c"));
    CHECK(subproof(pr, pr.length()) == pr);
    CHECK(subproof(pr, 1).target == L("c1y"));
    CHECK_THROWS_AS(subproof(pr, 0), std::out_of_range);
    CHECK_THROWS_AS(subproof(pr, 6), std::out_of_range);
}

TEST_CASE("enumerate_proofs agrees with the brute-force oracle") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Program p = random_program(proof_config(seed));
        CAPTURE(seed);
        for (const auto& x : answer_sets(p)) {
            for (const auto& l : x) {
                auto got = enumerate_proofs(p, x, l, 3);
                auto want = test::oracle_proofs(p, x, l, 3);
                REQUIRE(got.size() == want.size());
                for (std::size_t i = 0; i < got.size(); ++i)
                    CHECK(got[i].rule_ids() == want[i]);
            }
        }
    }
}

TEST_CASE("every answer-set literal has a proof and rank matches the oracle") {
    int ranked = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Program p = random_program(proof_config(seed));
        CAPTURE(seed);
        for (const auto& x : answer_sets(p)) {
            RankingFunction rk = ranking_function(p, x);
            for (const auto& l : x) {
                ++ranked;
                CHECK(rk.at(l) == test::oracle_rank(p, x, l));
                CHECK(rk.at(l) >= 1);
            }
        }
    }
    CHECK(ranked > 100);
}

TEST_CASE("prefixes of normal proofs stay normal") {
    int normal_seen = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Program p = random_program(proof_config(seed));
        CAPTURE(seed);
        for (const auto& x : answer_sets(p)) {
            for (const auto& l : x) {
                for (const auto& pr : enumerate_proofs(p, x, l, 4)) {
                    if (!is_normal_proof(p, x, pr)) continue;
                    ++normal_seen;
                    for (std::size_t i = 1; i <= pr.length(); ++i) {
                        Proof sub = subproof(pr, i);
                        CHECK(is_proof(p, x, sub.target, sub.rule_ids()));
                        CHECK(is_normal_proof(p, x, sub));
                    }
                }
            }
        }
    }
    CHECK(normal_seen > 100);
}

TEST_CASE("minimal proofs make the target depend on every earlier step") {
    int minimal_seen = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Program p = random_program(proof_config(seed));
        DepGraph g = build_graph(p);
        CAPTURE(seed);
        for (const auto& x : answer_sets(p)) {
            for (const auto& l : x) {
                int rk = rank(p, x, l);
                for (const auto& pr : enumerate_proofs(p, x, l, rk)) {
                    REQUIRE(pr.length() == static_cast<std::size_t>(rk));
                    ++minimal_seen;
                    for (std::size_t i = 0; i + 1 < pr.steps.size(); ++i)
                        CHECK(depends(g, l, pr.steps[i].supported));
                    // the last step of a shortest proof out-ranks its premises
                    for (const auto& b : p.rule(pr.steps.back().rule_id).pos_body())
                        CHECK(rank(p, x, b) < rk);
                }
            }
        }
    }
    CHECK(minimal_seen > 100);
}
