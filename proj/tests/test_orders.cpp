#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "opgb/checks.hpp"
#include "opgb/divisor.hpp"
#include "opgb/order.hpp"

using namespace opgb;

namespace {

GeneratorSet poisson_gens() {
    GeneratorSet gens;
    gens.add({"mu", 2, Symmetry::none});
    gens.add({"lam", 2, Symmetry::none});
    return gens;
}

} // namespace

TEST_CASE("poisson order pins") {
    GeneratorSet gens = poisson_gens();
    MonomialOrder order = build_poisson_order(gens);
    CHECK(order.name() == "poisson-qm");

    Tree l_over_m = parse_tree("lam(1, mu(2, 3))", gens);
    Tree m_over_l = parse_tree("mu(lam(1, 2), 3)", gens);
    CHECK(order.compare(l_over_m, m_over_l) == Cmp::greater);

    Tree right_comb = parse_tree("mu(1, mu(2, 3))", gens);
    Tree left_comb = parse_tree("mu(mu(1, 2), 3)", gens);
    CHECK(order.compare(right_comb, left_comb) == Cmp::greater);

    CHECK(order.compare(right_comb, right_comb) == Cmp::equal);
    CHECK(order.compare(left_comb, right_comb) == Cmp::less);

    CHECK_THROWS_AS(order.compare(right_comb, parse_tree("mu(1, 2)", gens)),
                    ArityMismatch);
}

TEST_CASE("trace shows the per-stage images and stops when decided") {
    GeneratorSet gens = poisson_gens();
    MonomialOrder order = build_poisson_order(gens);

    SUBCASE("decided at the word stage") {
        Tree a = parse_tree("lam(1, mu(2, 3))", gens);
        Tree b = parse_tree("mu(lam(1, 2), 3)", gens);
        auto lines = order.trace(a, b);
        REQUIRE(lines.size() == 1);
        CHECK(lines[0].stage == "word(qm)");
        CHECK(lines[0].image_a == "(y, xyq, xyq)");
        CHECK(lines[0].image_b == "(xy, xy, x)");
        CHECK(lines[0].result == Cmp::greater);
    }

    SUBCASE("word stage image of the pure-mu combs") {
        Tree a = parse_tree("mu(1, mu(2, 3))", gens);
        Tree b = parse_tree("mu(mu(1, 2), 3)", gens);
        auto lines = order.trace(a, b);
        REQUIRE(lines.size() == 1);
        CHECK(lines[0].image_a == "(x, x^2, x^2)");
        CHECK(lines[0].image_b == "(x^2, x^2, x)");
        CHECK(lines[0].result == Cmp::greater);
    }

    SUBCASE("word and path stages can tie, the permutation decides") {
        Tree a = parse_tree("mu(mu(1, 2), mu(3, 4))", gens);
        Tree b = parse_tree("mu(mu(1, 3), mu(2, 4))", gens);
        auto lines = order.trace(a, b);
        REQUIRE(lines.size() == 3);
        CHECK(lines[0].stage == "word(qm)");
        CHECK(lines[0].result == Cmp::equal);
        CHECK(lines[1].stage == "pathlex");
        CHECK(lines[1].result == Cmp::equal);
        CHECK(lines[2].stage == "perm");
        CHECK(lines[2].image_a == "(1, 2, 3, 4)");
        CHECK(lines[2].image_b == "(1, 3, 2, 4)");
        CHECK(lines[2].result == Cmp::less);
        CHECK(order.compare(a, b) == Cmp::less);
    }
}

TEST_CASE("poisson order is total, antisymmetric, transitive on small arities") {
    GeneratorSet gens = poisson_gens();
    MonomialOrder order = build_poisson_order(gens);
    for (int arity = 2; arity <= 4; ++arity) {
        std::vector<Tree> trees = enumerate_trees(gens, arity);
        // sorting under the order then verifying all pairs is exactly
        // totality + antisymmetry + transitivity
        std::sort(trees.begin(), trees.end(),
                  [&](const Tree& a, const Tree& b) { return order.less(a, b); });
        for (std::size_t i = 0; i < trees.size(); ++i)
            for (std::size_t j = i + 1; j < trees.size(); ++j) {
                CHECK(order.compare(trees[i], trees[j]) == Cmp::less);
                CHECK(order.compare(trees[j], trees[i]) == Cmp::greater);
            }
    }
}

TEST_CASE("build_poisson_order validates its alphabet") {
    GeneratorSet wrong_names;
    wrong_names.add({"a", 2, Symmetry::none});
    wrong_names.add({"b", 2, Symmetry::none});
    CHECK_THROWS_AS(build_poisson_order(wrong_names), WrongSignature);

    GeneratorSet ternary;
    ternary.add({"mu", 3, Symmetry::none});
    CHECK_THROWS_AS(build_poisson_order(ternary), WrongSignature);

    GeneratorSet empty;
    CHECK_THROWS_AS(build_poisson_order(empty), WrongSignature);

    // a mu-only or lam-only alphabet is fine
    GeneratorSet mu_only;
    mu_only.add({"mu", 2, Symmetry::none});
    CHECK(build_poisson_order(mu_only).name() == "poisson-qm");
}

TEST_CASE("pathlex order") {
    GeneratorSet gens = poisson_gens();
    MonomialOrder order = build_pathlex_order(gens);
    CHECK(order.name() == "pathlex");

    Tree right_comb = parse_tree("mu(1, mu(2, 3))", gens);
    Tree left_comb = parse_tree("mu(mu(1, 2), 3)", gens);
    // entry 1: path mu vs mu.mu, shorter word first
    CHECK(order.compare(right_comb, left_comb) == Cmp::less);

    // still a total order on small arities
    for (int arity = 2; arity <= 4; ++arity) {
        std::vector<Tree> trees = enumerate_trees(gens, arity);
        std::sort(trees.begin(), trees.end(),
                  [&](const Tree& a, const Tree& b) { return order.less(a, b); });
        for (std::size_t i = 0; i + 1 < trees.size(); ++i)
            CHECK(order.compare(trees[i], trees[i + 1]) == Cmp::less);
    }
}

TEST_CASE("resolve_order by name and by stage spec") {
    GeneratorSet gens = poisson_gens();
    std::vector<Tree> trees = enumerate_trees(gens, 3);

    SUBCASE("named orders") {
        MonomialOrder a = resolve_order("poisson-qm", gens);
        MonomialOrder b = build_poisson_order(gens);
        for (const Tree& t1 : trees)
            for (const Tree& t2 : trees)
                CHECK(a.compare(t1, t2) == b.compare(t1, t2));
        CHECK(resolve_order("pathlex", gens).name() == "pathlex");
    }

    SUBCASE("stage spec equals the built-in poisson order") {
        MonomialOrder spec = resolve_order(
            "word(qm; mu=(x,x), lam=(y,y)) > pathlex(mu<lam) > perm", gens);
        MonomialOrder builtin_order = build_poisson_order(gens);
        REQUIRE(spec.stages().size() == 3);
        for (const Tree& t1 : trees)
            for (const Tree& t2 : trees)
                CHECK(spec.compare(t1, t2) == builtin_order.compare(t1, t2));
    }

    SUBCASE("exponent words in bindings") {
        MonomialOrder spec =
            resolve_order("word(qm; mu=(x^2,x), lam=(y,yq)) > perm", gens);
        CHECK(spec.stages().size() == 2);
        Tree a = parse_tree("mu(1, 2)", gens);
        Tree b = parse_tree("lam(1, 2)", gens);
        // entry 1: x^2 vs y, larger x-exponent is smaller
        CHECK(spec.compare(a, b) == Cmp::less);
    }

    SUBCASE("errors") {
        CHECK_THROWS_AS(resolve_order("nope", gens), UnknownName);
        CHECK_THROWS_AS(resolve_order("pathlex(mu)", gens), WrongSignature);
        CHECK_THROWS_AS(
            resolve_order("word(qm; mu=(x,x,x), lam=(y,y))", gens),
            LengthMismatch);
        CHECK_THROWS_AS(resolve_order("word(qm; mu=(x,x))", gens),
                        WrongSignature);
        CHECK_THROWS_AS(resolve_order("word(zz; mu=(x,x), lam=(y,y))", gens),
                        UnknownName);
    }
}

TEST_CASE("admissibility harness") {
    GeneratorSet gens = poisson_gens();
    Rng rng(7);

    SUBCASE("poisson order admissible on sampled grafts") {
        auto report =
            check_admissible(build_poisson_order(gens), gens, 2000, 5, rng);
        CHECK(report.failures == 0);
    }

    SUBCASE("pathlex admissible on sampled grafts") {
        auto report =
            check_admissible(build_pathlex_order(gens), gens, 2000, 5, rng);
        CHECK(report.failures == 0);
    }

    SUBCASE("reversed q rule inside the word stage: run recorded") {
        // exploratory: no expected verdict, the harness just has to run
        auto report =
            check_admissible(make_m_reversed_order(gens), gens, 2000, 5, rng);
        CHECK(report.trials == 2000);
    }
}

TEST_CASE("word stage ties are decided only by later stages") {
    GeneratorSet gens = poisson_gens();
    MonomialOrder order = build_poisson_order(gens);
    Tree a = parse_tree("mu(mu(1, 2), mu(3, 4))", gens);
    Tree b = parse_tree("mu(mu(1, 3), mu(2, 4))", gens);
    auto lines = order.trace(a, b);
    REQUIRE(!lines.empty());
    CHECK(lines[0].result == Cmp::equal);
    CHECK(order.compare(a, b) != Cmp::equal);
}
