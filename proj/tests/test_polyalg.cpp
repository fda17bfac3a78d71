#include <autobell/errors.hpp>
#include <autobell/polynomial.hpp>
#include <autobell/rational.hpp>
#include <autobell/series.hpp>

#include <doctest.h>

#include <random>

using namespace autobell;

namespace
{

MultiPoly P(const char *s)
{
    return parse_poly(s);
}

// Random polynomial in x, y, a with small rational coefficients.
MultiPoly random_poly(std::mt19937 &rng)
{
    std::uniform_int_distribution<int> c(-5, 5), e(0, 3), terms(0, 4);
    const Var vs[] = {Var::named("x"), Var::named("y"), Var::named("a")};
    MultiPoly p;
    for (int t = terms(rng); t > 0; --t) {
        std::vector<Monomial::Entry> m;
        for (Var v : vs) {
            m.emplace_back(v, e(rng));
        }
        p.add_term(make_rational(c(rng), 1 + (c(rng) + 5) % 3), Monomial(m));
    }
    return p;
}

} // namespace

TEST_CASE("rational parsing and printing")
{
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(to_string(make_rational(4, -6)) == "-2/3");
    CHECK_THROWS_AS(make_rational(1, 0), ArgumentError);
    CHECK_THROWS_AS(parse_rational("1/0"), ArgumentError);
    CHECK_THROWS_AS(parse_rational("1.5"), ArgumentError);
    CHECK_THROWS_AS(parse_rational(""), ArgumentError);
}

TEST_CASE("factorials and binomials")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(20) == Integer("2432902008176640000"));
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(3, 7) == 0);
    CHECK(binomial_signed(-1, 2) == 0);
    CHECK(binomial_signed(6, 2) == 15);
    CHECK(binomial_signed(2, -1) == 0);
    for (unsigned n = 1; n < 30; ++n) {
        for (unsigned k = 1; k < n; ++k) {
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
    }
}

TEST_CASE("parse and render round trip")
{
    for (const char *s : {"0", "1", "-x", "a*(x+1)^2", "x1*x3 + 3*x2^2", "1/2*a - 3/4", "(x-y)*(x+y)"}) {
        const MultiPoly p = P(s);
        CHECK(parse_poly(render(p)) == p);
        CHECK(parse_poly(render_compact(p)) == p);
    }
    CHECK(render(P("(x+1)^2")) == "x^2 + 2*x + 1");
    CHECK(render_compact(P("42*a^2+15*a")) == "42a^2 + 15a");
    CHECK(render(MultiPoly()) == "0");
    CHECK_THROWS_AS(P("x +"), ArgumentError);
    CHECK_THROWS_AS(P("(x"), ArgumentError);
}

TEST_CASE("ring laws on random polynomials")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const MultiPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p - p).is_zero());
        CHECK(pow(p, 2) == p * p);
    }
}

TEST_CASE("evaluation, specialisation and substitution agree")
{
    std::mt19937 rng(11);
    const Var x = Var::named("x"), y = Var::named("y"), a = Var::named("a");
    for (int trial = 0; trial < 100; ++trial) {
        const MultiPoly p = random_poly(rng), q = random_poly(rng);
        const Assignment at{{x, Rational(2, 3)}, {y, Rational(-1)}, {a, Rational(5)}};
        CHECK(poly_eval(p * q, at) == poly_eval(p, at) * poly_eval(q, at));
        const MultiPoly half = specialize(p, {{x, Rational(2, 3)}});
        CHECK(poly_eval(half, at) == poly_eval(p, at));
        const MultiPoly sub = substitute(p, {{x, MultiPoly(Rational(2, 3))}});
        CHECK(sub == half);
    }
    CHECK_THROWS_AS(poly_eval(P("x*y"), {{x, Rational(1)}}), UnboundVariable);
}

TEST_CASE("degrees and weights")
{
    const Var x = Var::named("x");
    CHECK(degree_in(P("x^3*a + x"), x) == 3u);
    CHECK_FALSE(degree_in(MultiPoly(), x).has_value());
    const auto cs = coefficients_in(P("a*x^2 + 3*x + a"), x);
    REQUIRE(cs.size() == 3);
    CHECK(cs[0] == P("a"));
    CHECK(cs[2] == P("a"));
    const Weights w{{Var::named("u"), 2}, {Var::named("x2"), 1}};
    CHECK(is_weighted_homogeneous(P("u*x2^2 + u^2"), w, 4));
    CHECK_FALSE(is_weighted_homogeneous(P("u*x2 + u^2"), w, 4));
}

TEST_CASE("formal series: exp, product, derivative")
{
    // exp(t) = sum t^n/n!  -> all ones in the exponential convention.
    FormalSeries t({MultiPoly(), MultiPoly(1), MultiPoly(), MultiPoly(), MultiPoly(), MultiPoly()});
    const FormalSeries e = series_exp(t);
    for (std::size_t n = 0; n <= 5; ++n) {
        CHECK(e[n] == MultiPoly(1));
    }
    // 2^n from exp(t)^2.
    const FormalSeries sq = e * e;
    CHECK(sq[5] == MultiPoly(32));
    const FormalSeries d = series_diff(e, 2);
    CHECK(d.order() == 3);
    CHECK_THROWS_AS(series_diff(e, 6), OrderExhausted);
    CHECK_THROWS_AS(series_exp(e), ArgumentError);
    CHECK(truncate(e, 2).order() == 2);
    CHECK((e + truncate(e, 2)).order() == 2);
}
