#include <doctest.h>

#include "test_util.hpp"

using namespace cpmat;
using namespace testutil;

TEST_SUITE("symbolic_oracle") {

// Frozen expectations, produced by the independent cofactor oracle and
// checked by hand before the matching-based expansion existed:
//   det(example5)        = -c1^2 * c2          (variables c1, c2, g1, g2)
//   det(example2_mprime) = -c1^4 * c2          (variables c1, c2, g1, g2)

TEST_CASE("cofactor oracle reproduces the frozen determinants") {
    ColoredPatternMatrix m5 = load_matrix("example5.cpm");
    CHECK(oracle_symbolic_det(m5) == exp_poly({{-1, {2, 1, 0, 0}}}));

    ColoredPatternMatrix mp = load_matrix("example2_mprime.cpm");
    CHECK(oracle_symbolic_det(mp) == exp_poly({{-1, {4, 1, 0, 0}}}));
}

TEST_CASE("matching-based expansion matches the frozen determinants") {
    ColoredPatternMatrix m5 = load_matrix("example5.cpm");
    ColorPolynomial det5 = symbolic_determinant(m5);
    ColorPolynomial expected5;
    expected5.add_term(Monomial{{{star(1), 2}, {star(2), 1}}}, Integer(-1));
    CHECK(det5 == expected5);
    CHECK(det5.to_string() == "-c1^2*c2");

    ColorPolynomial detp = symbolic_determinant(load_matrix("example2_mprime.cpm"));
    ColorPolynomial expectedp;
    expectedp.add_term(Monomial{{{star(1), 4}, {star(2), 1}}}, Integer(-1));
    CHECK(detp == expectedp);

    CHECK(single_solid_monomial(det5));
    CHECK(single_solid_monomial(detp));
}

TEST_CASE("matching-based expansion agrees with the cofactor oracle everywhere") {
    std::mt19937_64 rng(301);
    for (int trial = 0; trial < 250; ++trial) {
        std::size_t t = 1 + draw_below(rng, 5);
        int density = 25 + static_cast<int>(draw_below(rng, 70));
        ColoredPatternMatrix m = random_pattern(rng, t, t, density, 3, 2);
        CAPTURE(m.to_text());
        CHECK(to_exp_poly(symbolic_determinant(m), m.colors()) == oracle_symbolic_det(m));
    }
}

TEST_CASE("symbolic determinant evaluates like the numeric determinant") {
    std::mt19937_64 rng(302);
    SamplePlan plan;
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t t = 1 + draw_below(rng, 4);
        ColoredPatternMatrix m = random_pattern(rng, t, t, 60, 2, 2);
        ColorPolynomial det = symbolic_determinant(m);
        ColorAssignment a = sample_assignment(m.colors(), rng, plan);
        CHECK(det.evaluate(a) == instantiate(m, a).determinant());
    }
}

TEST_CASE("single solid monomial characterization") {
    ColorPolynomial zero;
    CHECK(!single_solid_monomial(zero));

    ColorPolynomial one_solid;
    one_solid.add_term(Monomial{{{star(1), 3}}}, Integer(2));
    CHECK(single_solid_monomial(one_solid));

    ColorPolynomial with_dashed;
    with_dashed.add_term(Monomial{{{star(1), 1}, {question(1), 1}}}, Integer(1));
    CHECK(!single_solid_monomial(with_dashed));

    ColorPolynomial two_terms = one_solid;
    two_terms.add_term(Monomial{{{star(2), 1}}}, Integer(1));
    CHECK(!single_solid_monomial(two_terms));
}

TEST_CASE("polynomial arithmetic basics") {
    // (c1 + g1) * (c1 - g1) == c1^2 - g1^2
    ColorPolynomial sum;
    sum.add_term(Monomial{{{star(1), 1}}}, Integer(1));
    sum.add_term(Monomial{{{question(1), 1}}}, Integer(1));
    ColorPolynomial diff;
    diff.add_term(Monomial{{{star(1), 1}}}, Integer(1));
    diff.add_term(Monomial{{{question(1), 1}}}, Integer(-1));
    ColorPolynomial product = sum * diff;
    ColorPolynomial expected;
    expected.add_term(Monomial{{{star(1), 2}}}, Integer(1));
    expected.add_term(Monomial{{{question(1), 2}}}, Integer(-1));
    CHECK(product == expected);
    CHECK(product.variables() == std::vector<ColorId>{star(1), question(1)});

    ColorPolynomial cancel = product;
    cancel += -product;
    CHECK(cancel.is_zero());
    CHECK(cancel.to_string() == "0");

    CHECK(Monomial{{{star(1), 2}, {star(2), 1}}}.token() == "c1^2*c2");
    CHECK(Monomial{}.token() == "1");
    CHECK(Monomial{{{star(1), 2}, {star(2), 1}}}.degree() == 3);
}

TEST_CASE("singular witness search: identically zero determinant") {
    // No perfect matching: determinant is the zero polynomial.
    ColoredPatternMatrix m = ColoredPatternMatrix::parse("dims 2 2\nc1 c1\n0 0\n");
    SingularSearchResult r = find_singular_assignment(m);
    CHECK(r.det_identically_zero);
    REQUIRE(r.witness.has_value());
    CHECK(instantiate(m, *r.witness).determinant() == 0);
    CHECK(r.trials_used == 0);
}

TEST_CASE("singular witness search: dashed shortcut") {
    // det = g1 * c1: setting g1 = 0 kills it without any random trials.
    ColoredPatternMatrix m = ColoredPatternMatrix::parse("dims 2 2\ng1 0\n0 c1\n");
    SingularSearchResult r = find_singular_assignment(m);
    CHECK(!r.det_identically_zero);
    REQUIRE(r.witness.has_value());
    CHECK(r.trials_used == 0);
    CHECK(r.witness->at(question(1)) == 0);
    CHECK(instantiate(m, *r.witness).determinant() == 0);
}

TEST_CASE("singular witness search: root solving on solid variables") {
    // det = c1^2 - c2^2 vanishes at c1 = +-c2: needs the rational-root path.
    ColoredPatternMatrix m = ColoredPatternMatrix::parse("dims 2 2\nc1 c2\nc2 c1\n");
    SingularSearchResult r = find_singular_assignment(m);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->at(star(1)) != 0);
    CHECK(r.witness->at(star(2)) != 0);
    CHECK(instantiate(m, *r.witness).determinant() == 0);
}

TEST_CASE("singular witness search is deterministic for a fixed seed") {
    ColoredPatternMatrix m = ColoredPatternMatrix::parse("dims 2 2\nc1 c2\nc2 c1\n");
    SingularSearchOptions options;
    options.seed = 77;
    SingularSearchResult a = find_singular_assignment(m, options);
    SingularSearchResult b = find_singular_assignment(m, options);
    REQUIRE(a.witness.has_value());
    REQUIRE(b.witness.has_value());
    CHECK(a.witness->values == b.witness->values);
    CHECK(a.trials_used == b.trials_used);
}

TEST_CASE("size caps are enforced") {
    std::vector<Cell> big(11 * 11, Cell{star(1)});
    ColoredPatternMatrix m(11, 11, std::move(big));
    CHECK_THROWS_AS(symbolic_determinant(m), BudgetExceeded);

    // Raising the size cap leaves the matching budget as the guard.
    DeterminantOptions tight;
    tight.max_size = 11;
    tight.matching.max_matchings = 1000;
    CHECK_THROWS_AS(symbolic_determinant(m, tight), BudgetExceeded);

    std::vector<Cell> wide(13 * 13, Cell{star(1)});
    ColoredPatternMatrix mw(13, 13, std::move(wide));
    CHECK_THROWS_AS(permanent_01(build_bipartite(mw)), BudgetExceeded);
}

TEST_CASE("permanent on tiny hand-counted graphs") {
    CHECK(permanent_01(build_bipartite(ColoredPatternMatrix::parse("dims 1 1\nc1\n"))) == 1);
    CHECK(permanent_01(build_bipartite(ColoredPatternMatrix::parse("dims 1 1\n0\n"))) == 0);
    CHECK(permanent_01(build_bipartite(ColoredPatternMatrix::parse(
              "dims 3 3\nc1 c1 c1\nc1 c1 c1\nc1 c1 c1\n"))) == 6);
    CHECK(permanent_01(build_bipartite(load_matrix("example5.cpm"))) == 3);
}

}  // TEST_SUITE
