#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "opgb/groebner.hpp"
#include "opgb/order.hpp"
#include "opgb/presentation.hpp"

using namespace opgb;

TEST_CASE("builtin com") {
    Presentation com = builtin("com");
    REQUIRE(com.generators.size() == 1);
    CHECK(com.generators.at("mu").symmetry == Symmetry::symmetric);
    REQUIRE(com.relations.size() == 2);
    GeneratorSet gens = com.generators;
    CHECK(com.relations[0] ==
          parse_polynomial("mu(mu(1, 2), 3) - mu(1, mu(2, 3))", gens));
    CHECK(com.relations[1] ==
          parse_polynomial("mu(mu(1, 2), 3) - mu(mu(1, 3), 2)", gens));
}

TEST_CASE("builtin lie") {
    Presentation lie = builtin("lie");
    REQUIRE(lie.generators.size() == 1);
    CHECK(lie.generators.at("lam").symmetry == Symmetry::skew);
    REQUIRE(lie.relations.size() == 1);
    GeneratorSet gens = lie.generators;
    CHECK(lie.relations[0] ==
          parse_polynomial(
              "lam(1, lam(2, 3)) - lam(lam(1, 2), 3) + lam(lam(1, 3), 2)",
              gens));
}

TEST_CASE("builtin pois carries the six quadratic relations") {
    Presentation pois = builtin("pois");
    REQUIRE(pois.generators.size() == 2);
    CHECK(pois.generators.at("mu").symmetry == Symmetry::symmetric);
    CHECK(pois.generators.at("lam").symmetry == Symmetry::skew);
    REQUIRE(pois.relations.size() == 6);
    GeneratorSet gens = pois.generators;

    // associativity and commutativity of the product
    CHECK(pois.relations[0] ==
          parse_polynomial("mu(mu(1, 2), 3) - mu(1, mu(2, 3))", gens));
    CHECK(pois.relations[1] ==
          parse_polynomial("mu(mu(1, 2), 3) - mu(mu(1, 3), 2)", gens));
    // jacobi
    CHECK(pois.relations[2] ==
          parse_polynomial(
              "lam(1, lam(2, 3)) - lam(lam(1, 2), 3) + lam(lam(1, 3), 2)",
              gens));
    // the three shuffle Leibniz rules, term for term
    CHECK(pois.relations[3] ==
          parse_polynomial(
              "lam(1, mu(2, 3)) - mu(lam(1, 2), 3) - mu(lam(1, 3), 2)", gens));
    CHECK(pois.relations[4] ==
          parse_polynomial(
              "-lam(mu(1, 3), 2) + mu(lam(1, 2), 3) - mu(1, lam(2, 3))",
              gens));
    CHECK(pois.relations[5] ==
          parse_polynomial(
              "-lam(mu(1, 2), 3) + mu(1, lam(2, 3)) + mu(lam(1, 3), 2)",
              gens));

    for (const auto& r : pois.relations) {
        CHECK(r.arity() == 3);
        for (const auto& [t, c] : r.terms()) CHECK(validate_tree(t));
    }
}

TEST_CASE("poisson leading monomials are the bracket-on-top trees") {
    Presentation pois = builtin("pois");
    GeneratorSet gens = pois.generators;
    MonomialOrder order = build_poisson_order(gens);
    std::vector<std::string> lts;
    for (const auto& r : pois.relations)
        lts.push_back(to_string(leading_monomial(r, order)));
    CHECK(lts == std::vector<std::string>{
                     "mu(1, mu(2, 3))", "mu(mu(1, 3), 2)", "lam(lam(1, 2), 3)",
                     "lam(1, mu(2, 3))", "lam(mu(1, 3), 2)",
                     "lam(mu(1, 2), 3)"});
    // the three Leibniz leading monomials are exactly the bracket applied to
    // a product, one per leaf partition
    for (int i = 3; i < 6; ++i) {
        Tree lt = leading_monomial(pois.relations[i], order);
        CHECK(lt.gen().name == "lam");
    }
}

TEST_CASE("builtin ass") {
    Presentation ass = builtin("ass");
    REQUIRE(ass.generators.size() == 2);
    CHECK(ass.generators.at("m").symmetry == Symmetry::none);
    CHECK(ass.generators.at("mo").symmetry == Symmetry::none);
    REQUIRE(ass.relations.size() == 6);
    for (const auto& r : ass.relations) {
        CHECK(r.arity() == 3);
        CHECK(r.size() == 2);
        for (const auto& [t, c] : r.terms()) {
            CHECK(validate_tree(t));
            CHECK((c == Rational(1) || c == Rational(-1)));
        }
    }
    CHECK_THROWS_AS(builtin("nope"), UnknownName);
}

TEST_CASE("expand_symmetric") {
    GeneratorSet gens;
    gens.add({"mu", 2, Symmetry::symmetric});
    gens.add({"lam", 2, Symmetry::skew});

    SUBCASE("commutativity collapses to nothing") {
        // swapping the arguments of a symmetric vertex changes no normalized
        // term, so every relabeling cancels
        SymmetricRelation rel = parse_symmetric_relation(
            "mu(mu(a1, a2), a3) - mu(mu(a2, a1), a3)", gens);
        ExpansionRecord record;
        auto out = expand_symmetric(rel, &record);
        CHECK(out.empty());
        CHECK(record.kept.empty());
        CHECK(!record.discarded.empty());
    }

    SUBCASE("skew pair collapses too") {
        SymmetricRelation rel = parse_symmetric_relation(
            "lam(lam(a1, a2), a3) + lam(lam(a2, a1), a3)", gens);
        auto out = expand_symmetric(rel);
        CHECK(out.empty());
    }

    SUBCASE("leibniz expands to the three relations") {
        SymmetricRelation rel = parse_symmetric_relation(
            "lam(a1, mu(a2, a3)) - mu(lam(a1, a2), a3) - mu(lam(a1, a3), a2)",
            gens);
        ExpansionRecord record;
        auto out = expand_symmetric(rel, &record);
        Presentation pois = builtin("pois");
        REQUIRE(out.size() == 3);
        CHECK(out[0] == pois.relations[3]);
        CHECK(out[1] == pois.relations[4]);
        CHECK(out[2] == pois.relations[5]);
        CHECK(record.kept.size() == 3);
        CHECK(record.discarded.size() == 3);
    }

    SUBCASE("jacobi keeps one independent relation") {
        SymmetricRelation rel = parse_symmetric_relation(
            "lam(a1, lam(a2, a3)) - lam(lam(a1, a2), a3) + lam(lam(a1, a3), a2)",
            gens);
        auto out = expand_symmetric(rel);
        REQUIRE(out.size() == 1);
        CHECK(out[0] == builtin("lie").relations[0]);
    }

    SUBCASE("swapping placeholder names flips at most the overall sign") {
        SymmetricRelation rel_a = parse_symmetric_relation(
            "lam(a1, lam(a2, a3)) - lam(lam(a1, a2), a3) + lam(lam(a1, a3), a2)",
            gens);
        // a1 <-> a2 throughout
        SymmetricRelation rel_b = parse_symmetric_relation(
            "lam(a2, lam(a1, a3)) - lam(lam(a2, a1), a3) + lam(lam(a2, a3), a1)",
            gens);
        auto out_a = expand_symmetric(rel_a);
        auto out_b = expand_symmetric(rel_b);
        REQUIRE(out_a.size() == out_b.size());
        for (std::size_t i = 0; i < out_a.size(); ++i) {
            bool same = out_a[i] == out_b[i];
            TreePolynomial negated = out_b[i];
            negated *= Rational(-1);
            bool flipped = out_a[i] == negated;
            CHECK((same || flipped));
        }
    }

    SUBCASE("expansion rejects non-binary and unsigned generators") {
        GeneratorSet bad;
        bad.add({"t", 3, Symmetry::symmetric});
        SymmetricRelation ternary = parse_symmetric_relation("t(a1, a2, a3)", bad);
        CHECK_THROWS_AS(expand_symmetric(ternary), UnsupportedArity);
        GeneratorSet plain;
        plain.add({"m", 2, Symmetry::none});
        SymmetricRelation rel =
            parse_symmetric_relation("m(a1, m(a2, a3)) - m(m(a1, a2), a3)",
                                     plain);
        CHECK_THROWS_AS(expand_symmetric(rel),
                        UnknownSymmetry);
    }
}

TEST_CASE("expansion provenance is recorded for the built-ins") {
    Presentation pois = builtin("pois");
    REQUIRE(pois.provenance.size() == 3);
    CHECK(pois.provenance[0].kept.size() == 2);  // associativity
    CHECK(pois.provenance[1].kept.size() == 1);  // jacobi
    CHECK(pois.provenance[2].kept.size() == 3);  // leibniz
}

TEST_CASE("presentation files") {
    std::string text =
        "# a poisson clone\n"
        "generators:\n"
        "  mu 2 symmetric\n"
        "  lam 2 skew\n"
        "relations:\n"
        "  symmetric: mu(mu(a1, a2), a3) - mu(a1, mu(a2, a3))\n"
        "  symmetric: lam(a1, lam(a2, a3)) - lam(lam(a1, a2), a3)"
        " + lam(lam(a1, a3), a2)\n"
        "  symmetric: lam(a1, mu(a2, a3)) - mu(lam(a1, a2), a3)"
        " - mu(lam(a1, a3), a2)\n";

    SUBCASE("parsing reproduces the built-in poisson data") {
        Presentation mine = parse_presentation(text, "mine");
        Presentation pois = builtin("pois");
        CHECK(mine.name == "mine");
        REQUIRE(mine.relations.size() == 6);
        for (std::size_t i = 0; i < 6; ++i)
            CHECK(mine.relations[i] == pois.relations[i]);
    }

    SUBCASE("explicit shuffle relations with coefficients") {
        std::string flat =
            "generators:\n"
            "  mu 2 symmetric\n"
            "relations:\n"
            "  mu(mu(1, 2), 3) - mu(1, mu(2, 3))\n"
            "  1/2*mu(mu(1, 2), 3) - 1/2*mu(mu(1, 3), 2)\n";
        Presentation p = parse_presentation(flat, "flat");
        REQUIRE(p.relations.size() == 2);
        CHECK(p.relations[1].coeff_of(parse_tree("mu(mu(1, 2), 3)",
                                                 p.generators)) ==
              Rational(1, 2));
    }

    SUBCASE("load from disk uses the file stem as the name") {
        auto path = std::filesystem::temp_directory_path() / "clone_pois.txt";
        {
            std::ofstream out(path);
            out << text;
        }
        Presentation loaded = load_presentation(path.string());
        CHECK(loaded.name == "clone_pois");
        CHECK(loaded.relations.size() == 6);
        std::filesystem::remove(path);
        CHECK_THROWS_AS(load_presentation(path.string()), ParseError);
    }

    SUBCASE("parse errors") {
        CHECK_THROWS_AS(parse_presentation("relations:\n mu(1, 2)\n", "x"),
                        ParseError);
        CHECK_THROWS_AS(
            parse_presentation("generators:\n mu two symmetric\n", "x"),
            ParseError);
        CHECK_THROWS_AS(
            parse_presentation("generators:\n mu 2 sym extra\n", "x"),
            ParseError);
        CHECK_THROWS_AS(
            parse_presentation(
                "generators:\n mu 2 symmetric\nrelations:\n 0\n", "x"),
            ParseError);
        CHECK_THROWS_AS(
            parse_presentation("generators:\n mu 1 symmetric\n", "x"),
            UnsupportedArity);
    }
}
