#include "oracle.hpp"

#include <autobell/analytic.hpp>
#include <autobell/errors.hpp>

#include <doctest.h>

#include <random>

using namespace autobell;

namespace
{

Real abs_diff(const Real &x, const Real &y)
{
    return abs(x - y);
}

} // namespace

TEST_CASE("formal residual on random rational data")
{
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 3), pick(0, 2);
    const Rational as[] = {1, -1, 2};
    for (unsigned k = 1; k <= 5; ++k) {
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<Rational> init{0};
            for (unsigned j = 1; j < k; ++j) {
                // |value| <= 3
                init.push_back(make_rational(num(rng), den(rng) * 3));
            }
            const Rational a = as[pick(rng)];
            const unsigned N = 4 * k + 8;
            const SeriesSolution sol = series_solution(k, init, a, N);
            CHECK(residual_check(sol) == N - k);
        }
    }
}

TEST_CASE("series coefficients")
{
    const SeriesSolution s = series_solution(2, {0, 0}, 1, 8);
    CHECK(s.coefficient(2) == 1);
    CHECK(s.coefficient(4) == 1);
    CHECK(s.coefficient(6) == 4);
    CHECK(s.coefficient(8) == 34);
    CHECK(s.coefficient(3) == 0);
    const SeriesSolution k1 = series_solution(1, {0}, 1, 6);
    for (unsigned n = 1; n <= 6; ++n) {
        CHECK(k1.coefficient(n) == Rational(factorial(n - 1)));
    }
}

TEST_CASE("series and closed forms agree with the numeric ODE oracle")
{
    const PrecisionScope p(50);
    for (const auto &c : oracle()["numeric"]) {
        const unsigned k = c["k"];
        std::vector<Rational> init;
        for (const auto &v : c["initials"]) {
            init.push_back(oracle_rational(v));
        }
        const Rational a = oracle_rational(c["a"]);
        const SeriesSolution sol = series_solution(k, init, a, 40);
        const ClosedForm cf = make_closed_form(k, to_real(init[0]), k == 2 ? to_real(init[1]) : Real(0), to_real(a));
        for (const auto &pt : c["points"]) {
            const Real t = parse_real(pt["t"].get<std::string>());
            const Real y = parse_real(pt["y"].get<std::string>());
            CAPTURE(pt["t"].get<std::string>());
            CHECK(abs_diff(series_eval(sol, t), y) < Real("1e-12"));
            CHECK(abs_diff(closed_form_eval(cf, t), y) < Real("1e-25"));
        }
    }
}

TEST_CASE("printed arctanh sign gives the wrong slope")
{
    const PrecisionScope p(50);
    ClosedForm cf = make_closed_form(2, Real(0), Real(1), Real(-1));
    CHECK(cf.branch == Branch::HyperbolicSecant);
    const Real h("1e-20");
    const Real slope = (closed_form_eval(cf, h) - closed_form_eval(cf, -h)) / (2 * h);
    CHECK(abs_diff(slope, Real(1)) < Real("1e-15"));
    cf.flipped_arctanh = true;
    const Real flipped = (closed_form_eval(cf, h) - closed_form_eval(cf, -h)) / (2 * h);
    CHECK(abs_diff(flipped, Real(-1)) < Real("1e-15"));
}

TEST_CASE("acceptance tolerances")
{
    const PrecisionScope p(50);
    const Comparison c1 = compare_closed_form(1, {0}, 1, 40, uniform_grid(Real("-0.3"), Real("0.3"), 61));
    CHECK(c1.max_error < Real("1e-20"));
    const Comparison c2 = compare_closed_form(2, {0, 0}, -1, 40, uniform_grid(Real("-0.5"), Real("0.5"), 101));
    CHECK(c2.max_error < Real("1e-10"));
    CHECK(c2.digits == 50);
}

TEST_CASE("domain and argument errors")
{
    const PrecisionScope p(30);
    CHECK_THROWS_AS(series_solution(2, {1, 0}, 1, 6), ArgumentError);
    CHECK_THROWS_AS(series_solution(2, {0}, 1, 6), ArgumentError);
    CHECK_THROWS_AS(series_solution(3, {0, 0, 0}, 1, 2), ArgumentError);
    CHECK_THROWS_AS(make_closed_form(3, Real(0), Real(0), Real(1)), ArgumentError);
    CHECK_THROWS_AS(make_closed_form(1, Real(0), Real(0), Real(0)), ArgumentError);
    // k = 1, a = 1 blows up at t = 1.
    const ClosedForm cf = make_closed_form(1, Real(0), Real(0), Real(1));
    CHECK_THROWS_AS(closed_form_eval(cf, Real(2)), DomainError);
    CHECK_THROWS_AS(compare_closed_form(3, {0, 0, 0}, 1, 9, {Real(0)}), ArgumentError);
}

TEST_CASE("precision scope restores the default")
{
    const unsigned before = Real::default_precision();
    {
        const PrecisionScope p(80);
        CHECK(Real::default_precision() == 80);
    }
    CHECK(Real::default_precision() == before);
    CHECK(format_real(Real("0.000123"), 3) == "1.23e-04");
}
