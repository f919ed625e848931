#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "starlock/hpoly.hpp"
#include "starlock/ratio.hpp"
#include "starlock/rng.hpp"
#include "starlock/series.hpp"
#include "starlock/unipoly.hpp"
#include "test_util.hpp"

using namespace starlock;

TEST_CASE("Ratio basics") {
    CHECK(Ratio(2, 4).str() == "1/2");
    CHECK(Ratio(-2, -4).str() == "1/2");
    CHECK(Ratio(2, -4).str() == "-1/2");
    CHECK(Ratio(0, 7).str() == "0");
    CHECK(Ratio::parse("-3/2") == Ratio(-3, 2));
    CHECK(Ratio::parse("5") == Ratio(5));
    CHECK_THROWS(Ratio::parse("1/0"));
    CHECK_THROWS(Ratio::parse("a"));
    CHECK_THROWS(Ratio(1, 0));
    CHECK(Ratio(1, 2) + Ratio(1, 3) == Ratio(5, 6));
    CHECK(Ratio(3, 4).pow(2) == Ratio(9, 16));
    CHECK(Ratio(2).pow(-2) == Ratio(1, 4));

    Ratio r;
    CHECK(Ratio(4, 9).nth_root(2, r));
    CHECK(r == Ratio(2, 3));
    CHECK(Ratio(-8).nth_root(3, r));
    CHECK(r == Ratio(-2));
    CHECK_FALSE(Ratio(2).nth_root(2, r));
    CHECK_FALSE(Ratio(-4).nth_root(2, r));
}

TEST_CASE("parser and canonical text") {
    HPoly f = parse_hpoly("X0*X1*(X0+X1+X2)+X3^3");
    CHECK(f.nvars() == 4);
    CHECK(f.degree() == 3);
    CHECK(f.coeff({1, 1, 1, 0}) == Ratio(1));
    CHECK(f.coeff({2, 1, 0, 0}) == Ratio(1));
    CHECK(f.coeff({0, 0, 0, 3}) == Ratio(1));
    CHECK(parse_hpoly("-3/2*X0*X2^2", 4).coeff({1, 0, 2, 0}) == Ratio(-3, 2));
    CHECK(parse_hpoly("X0^2 - X0^2 + X1^2", 2).str() == "X1^2");
    CHECK(parse_hpoly("0", 3).is_zero());
    CHECK_THROWS(parse_hpoly("X0^2+X1"));       // inhomogeneous
    CHECK_THROWS(parse_hpoly("X0++X1"));        // malformed
    CHECK_THROWS(parse_hpoly("X0*X5", 2));      // out of range
    // round trip through the canonical printer
    HPoly g = parse_hpoly("2*X0^2*X1 - X1^3 + 1/2*X0*X1^2", 2);
    CHECK(parse_hpoly(g.str(), 2) == g);
}

TEST_CASE("substitute_linear examples") {
    HPoly p = parse_hpoly("X0^3+X1^3", 2);
    CHECK(p.substitute_linear(RatMatrix::identity(2)) == p);

    HPoly q = parse_hpoly("X0*X1", 2);
    RatMatrix swap(2, 2);
    swap.at(0, 1) = Ratio(1);
    swap.at(1, 0) = Ratio(1);
    CHECK(q.substitute_linear(swap) == q);

    // X2 -> X2 + X3, X3 -> X3 on X2*X3 gives X2*X3 + X3^2
    HPoly r = parse_hpoly("X2*X3", 4);
    RatMatrix m = RatMatrix::identity(4);
    m.at(2, 3) = Ratio(1);
    CHECK(r.substitute_linear(m) == parse_hpoly("X2*X3+X3^2", 4));

    RatMatrix singular(2, 2);
    singular.at(0, 0) = Ratio(1);
    singular.at(1, 0) = Ratio(1);
    CHECK_THROWS_WITH_AS(singular.inverse(), "non-invertible transform", std::invalid_argument);
}

TEST_CASE("substitute_linear round trip under random transforms") {
    Rng rng(11);
    for (int iter = 0; iter < 25; ++iter) {
        int nvars = static_cast<int>(rng.next_int(2, 4));
        int deg = static_cast<int>(rng.next_int(1, 4));
        HPoly p = testutil::random_homogeneous(rng, nvars, deg, 5);
        RatMatrix m = rng.next_invertible(nvars);
        HPoly q = p.substitute_linear(m).substitute_linear(m.inverse());
        CHECK(q == p);
        if (!p.is_zero()) CHECK(p.substitute_linear(m).degree() == p.degree());
    }
}

TEST_CASE("HPoly ring axioms on random inputs") {
    Rng rng(12);
    for (int iter = 0; iter < 25; ++iter) {
        int nvars = static_cast<int>(rng.next_int(2, 4));
        int deg = static_cast<int>(rng.next_int(1, 3));
        HPoly p = testutil::random_homogeneous(rng, nvars, deg, 4);
        HPoly q = testutil::random_homogeneous(rng, nvars, deg, 4);
        HPoly r = testutil::random_homogeneous(rng, nvars, deg + 1, 4);
        CHECK((p + q) * r == p * r + q * r);
        CHECK(p * q == q * p);
        if (!p.is_zero() && !q.is_zero() && !(p + q).is_zero())
            CHECK((p + q).degree() == deg);  // homogeneity preserved by addition
    }
}

TEST_CASE("Euler relation") {
    Rng rng(13);
    for (int iter = 0; iter < 10; ++iter) {
        HPoly p = testutil::random_nonzero_homogeneous(rng, 4, 3, 6);
        HPoly sum(4);
        for (int i = 0; i < 4; ++i) sum += HPoly::variable(4, i) * p.derivative(i);
        CHECK(sum == p.scaled(Ratio(p.degree())));
    }
}

TEST_CASE("univariate_factor examples") {
    // t^2 - 1 = (t-1)(t+1)
    UniFactorization f = univariate_factor(UniPoly({Ratio(-1), Ratio(0), Ratio(1)}));
    CHECK(f.content == Ratio(1));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == UniPoly({Ratio(-1), Ratio(1)}));
    CHECK(f.factors[0].second == 1);
    CHECK(f.factors[1].first == UniPoly({Ratio(1), Ratio(1)}));
    CHECK(f.factors[1].second == 1);

    // t^2 (t - 1)
    f = univariate_factor(UniPoly({Ratio(0), Ratio(0), Ratio(-1), Ratio(1)}));
    REQUIRE(f.factors.size() == 2);
    bool saw_t2 = false, saw_lin = false;
    for (const auto& [fac, mult] : f.factors) {
        if (fac == UniPoly({Ratio(0), Ratio(1)})) { CHECK(mult == 2); saw_t2 = true; }
        if (fac == UniPoly({Ratio(-1), Ratio(1)})) { CHECK(mult == 1); saw_lin = true; }
    }
    CHECK(saw_t2);
    CHECK(saw_lin);

    // t^2 + 1 irreducible: rational-root test plus negative discriminant
    // rule out any rational factorization of a quadratic.
    f = univariate_factor(UniPoly({Ratio(1), Ratio(0), Ratio(1)}));
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].first.degree() == 2);
    CHECK(f.factors[0].second == 1);

    CHECK_THROWS(univariate_factor(UniPoly()));
}

TEST_CASE("univariate_factor handles quadratic*quadratic and content") {
    // (t^2+1)(t^2+2), no rational roots, must split into two quadratics
    UniPoly p = UniPoly({Ratio(1), Ratio(0), Ratio(1)}) * UniPoly({Ratio(2), Ratio(0), Ratio(1)});
    UniFactorization f = univariate_factor(p);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first.degree() == 2);
    CHECK(f.factors[1].first.degree() == 2);
    CHECK(f.expand() == p);

    // content and non-monic input: 6(t - 1/2)^2 = (3/2)(2t-1)^2 etc.
    UniPoly q = UniPoly({Ratio(-1, 2), Ratio(1)}).pow(2).scaled(Ratio(6));
    f = univariate_factor(q);
    CHECK(f.content == Ratio(6));
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].second == 2);
    CHECK(f.expand() == q);

    // quadratic * cubic with no rational roots
    UniPoly c = UniPoly({Ratio(1), Ratio(0), Ratio(1)}) *
                UniPoly({Ratio(-2), Ratio(0), Ratio(0), Ratio(1)});  // (t^2+1)(t^3-2)
    f = univariate_factor(c);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first.degree() == 2);
    CHECK(f.factors[1].first.degree() == 3);
    CHECK(f.expand() == c);
}

TEST_CASE("univariate_factor round trip on random products") {
    Rng rng(14);
    for (int iter = 0; iter < 30; ++iter) {
        UniPoly p = UniPoly::constant(rng.next_nonzero_ratio(3));
        int nfac = static_cast<int>(rng.next_int(1, 3));
        for (int i = 0; i < nfac; ++i) {
            int deg = static_cast<int>(rng.next_int(1, 2));
            std::vector<Ratio> cs(deg + 1);
            for (int j = 0; j < deg; ++j) cs[j] = Ratio(rng.next_int(-3, 3));
            cs[deg] = Ratio(1);
            int mult = static_cast<int>(rng.next_int(1, 3));
            p = p * UniPoly(cs).pow(mult);
        }
        UniFactorization f = univariate_factor(p);
        CHECK(f.expand() == p);
        // pairwise coprime and squarefree factors
        for (size_t i = 0; i < f.factors.size(); ++i) {
            CHECK(gcd(f.factors[i].first, f.factors[i].first.derivative()).degree() == 0);
            for (size_t j = i + 1; j < f.factors.size(); ++j)
                CHECK(gcd(f.factors[i].first, f.factors[j].first).degree() == 0);
        }
        // weighted degrees sum to deg p
        int sum = 0;
        for (const auto& [fac, m] : f.factors) sum += fac.degree() * m;
        CHECK(sum == p.degree());
    }
}

TEST_CASE("series arithmetic and order") {
    TruncSeries x = TruncSeries::variable(1, 6, 0);
    TruncSeries s = x.pow(3) + x.pow(4);
    CHECK(s.order() == 3);
    CHECK_FALSE(TruncSeries(1, 5).order().has_value());  // zero series -> Overflow

    // truncation drops high terms
    TruncSeries t = TruncSeries::variable(1, 3, 0);
    CHECK((t.pow(2) * t).is_zero());

    TruncSeries a = TruncSeries::constant(2, 5, Ratio(1)) + TruncSeries::variable(2, 5, 0) +
                    TruncSeries::variable(2, 5, 1);
    CHECK((a * a).coeff({1, 1}) == Ratio(2));
}

TEST_CASE("series_nth_root examples") {
    // (1, n=2, T=4) -> 1
    TruncSeries one = TruncSeries::constant(1, 4, Ratio(1));
    CHECK(series_nth_root(one, 2) == one);

    // (1+x, n=2, T=3) -> 1 + x/2 - x^2/8, frozen from the binomial oracle
    TruncSeries u = TruncSeries::constant(1, 3, Ratio(1)) + TruncSeries::variable(1, 3, 0);
    TruncSeries r = series_nth_root(u, 2);
    TruncSeries expect(1, 3);
    expect.add_term({0}, Ratio(1));
    expect.add_term({1}, Ratio(1, 2));
    expect.add_term({2}, Ratio(-1, 8));
    CHECK(r == expect);

    // (8, n=3, T=2) -> 2
    CHECK(series_nth_root(TruncSeries::constant(1, 2, Ratio(8)), 3) ==
          TruncSeries::constant(1, 2, Ratio(2)));

    CHECK_THROWS_WITH_AS(series_nth_root(TruncSeries(1, 4), 2), "non-unit series",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(series_nth_root(TruncSeries::constant(1, 4, Ratio(2)), 2),
                         "root not in coefficient field", std::invalid_argument);
}

TEST_CASE("series_nth_root inverts exponentiation for random unit series") {
    Rng rng(15);
    for (int iter = 0; iter < 20; ++iter) {
        int nvars = static_cast<int>(rng.next_int(1, 3));
        int T = static_cast<int>(rng.next_int(3, 7));
        long n = rng.next_int(1, 4);
        Ratio c = rng.next_nonzero_ratio(3);
        TruncSeries u = TruncSeries::constant(nvars, T, c.pow(n));  // constant has an exact root
        std::vector<Exponents> exps = testutil::enumerate_exponents(nvars, 1);
        for (const auto& e : exps) u.add_term(e, rng.next_ratio(3));
        if (T > 2)
            for (const auto& e : testutil::enumerate_exponents(nvars, 2))
                u.add_term(e, rng.next_ratio(3));
        TruncSeries r = series_nth_root(u, n);
        CHECK(r.pow(static_cast<int>(n)) == u);
    }
}

TEST_CASE("series substitution composes and respects truncation") {
    // subst x -> x + y^2 into x^2 at T=5: x^2 + 2x y^2 + y^4
    TruncSeries f = TruncSeries::variable(2, 5, 0).pow(2);
    std::vector<TruncSeries> images = {
        TruncSeries::variable(2, 5, 0) + TruncSeries::variable(2, 5, 1).pow(2),
        TruncSeries::variable(2, 5, 1)};
    TruncSeries g = f.substitute(images);
    CHECK(g.coeff({2, 0}) == Ratio(1));
    CHECK(g.coeff({1, 2}) == Ratio(2));
    CHECK(g.coeff({0, 4}) == Ratio(1));

    // images must not have constant terms
    std::vector<TruncSeries> bad = {TruncSeries::constant(2, 5, Ratio(1)),
                                    TruncSeries::variable(2, 5, 1)};
    CHECK_THROWS(f.substitute(bad));
}

TEST_CASE("dehomogenize helpers") {
    HPoly f = parse_hpoly("X2*(X3*X0+X1*X0)+X3^3", 4);
    TruncSeries s = dehomogenize_to_series(f, 0, 14);
    CHECK(s.coeff({1, 1, 0}) == Ratio(1));  // x1 x2
    CHECK(s.coeff({0, 1, 1}) == Ratio(1));  // x2 x3
    CHECK(s.coeff({0, 0, 3}) == Ratio(1));  // x3^3

    HPoly b = parse_hpoly("X0^2*X1 - X1^3", 2);
    UniPoly u = dehomogenize_binary(b);
    CHECK(u == UniPoly({Ratio(0), Ratio(1), Ratio(0), Ratio(-1)}));
    CHECK(b.degree() - u.degree() == 0);
    // degree drop records multiplicity of the root (0:1)
    HPoly c = parse_hpoly("X0^2*X1", 2);
    CHECK(c.degree() - dehomogenize_binary(c).degree() == 2);
}

TEST_CASE("linear form multiplicity") {
    HPoly f = parse_hpoly("X0^2*X1 + X0^3", 3);  // X0^2 (X1 + X0)
    HPoly cof(3);
    CHECK(f.linear_form_multiplicity({Ratio(1), Ratio(0), Ratio(0)}, &cof) == 2);
    CHECK(cof == parse_hpoly("X0+X1", 3));
    CHECK(f.linear_form_multiplicity({Ratio(0), Ratio(0), Ratio(1)}) == 0);
    CHECK(f.linear_form_multiplicity({Ratio(1), Ratio(1), Ratio(0)}) == 1);
}
