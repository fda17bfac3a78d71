#include "oracle.hpp"

#include <autobell/autonomous.hpp>
#include <autobell/bell.hpp>
#include <autobell/errors.hpp>

#include <doctest.h>

using namespace autobell;

namespace
{

MultiPoly P(const char *s)
{
    return parse_poly(s);
}

} // namespace

TEST_CASE("A_n^(k)(1) match the Taylor oracle")
{
    for (unsigned k = 1; k <= 5; ++k) {
        const auto &expected = oracle()["a_at_one"][std::to_string(k)];
        const ASequence A = a_sequence(k, static_cast<unsigned>(expected.size()));
        for (unsigned n = 1; n <= expected.size(); ++n) {
            CAPTURE(k);
            CAPTURE(n);
            CHECK(A.at_one(n) == oracle_rational(expected[n - 1]));
            CHECK(A[n] == MultiPoly(A.at_one(n)) * pow(MultiPoly::variable(a_var()), n));
        }
    }
}

TEST_CASE("A_3^(4) is 36, not 35")
{
    // C(7,3) A_2 A_1 + C(7,7) A_1 A_2 with A_1 = A_2 = 1.
    const ASequence A = a_sequence(4, 4);
    CHECK(A.at_one(3) == 36);
    CHECK(A.at_one(4) == 6306);
}

TEST_CASE("A_n^(k)(1,1) match the Taylor oracle")
{
    for (unsigned k = 2; k <= 5; ++k) {
        AutonomousPolynomials polys(k);
        const auto &expected = oracle()["a_ones"][std::to_string(k)];
        for (unsigned n = 1; n <= expected.size(); ++n) {
            const Rational v = poly_eval(polys(n), {{a_var(), Rational(1)}, {x_var(), Rational(1)}});
            CHECK(v == oracle_rational(expected[n - 1]));
        }
    }
}

TEST_CASE("coefficient tables match the symbolic Taylor oracle")
{
    for (unsigned k : {2u, 3u, 4u}) {
        const auto &expected = oracle()["coefficient_tables"][std::to_string(k)];
        const unsigned rows = static_cast<unsigned>(expected.size()) - 1;
        const CoefficientTable T = coeff_table(k, rows);
        REQUIRE(T.row_count() == rows + 1);
        for (unsigned n = 0; n <= rows; ++n) {
            for (unsigned i = 0; i <= n; ++i) {
                CAPTURE(k);
                CAPTURE(n);
                CAPTURE(i);
                CHECK(T.at(n, i) == oracle_poly(expected[n][i]));
            }
        }
    }
}

TEST_CASE("recurrence reproduces the expansion at a = 1")
{
    for (unsigned k = 2; k <= 5; ++k) {
        CHECK(coeff_by_recurrence(k, 20) == coeff_table(k, 20).at_a(1));
    }
    CHECK_THROWS_AS(coeff_recur(1, 4), ArgumentError);
}

TEST_CASE("symbolic f_n: listing values and both recursions")
{
    CHECK(auto_f(0, 2) == MultiPoly::variable(slot_var(1)));
    CHECK(auto_f(1, 2) == MultiPoly::variable(slot_var(2)));
    CHECK(auto_f(2, 2) == P("u"));
    CHECK(auto_f(4, 2) == P("u^2 + u*x2^2"));
    for (unsigned k = 1; k <= 5; ++k) {
        for (unsigned n = 1; n <= 4 * k + 8; ++n) {
            CHECK(auto_f(n, k) == auto_f_alt(n, k));
        }
    }
}

TEST_CASE("property: weighted homogeneity of f_n")
{
    for (unsigned k = 1; k <= 5; ++k) {
        AutonomousSystem sys(k);
        const Weights w = scaling_weights(k);
        for (unsigned n = 1; n <= 4 * k + 8; ++n) {
            CAPTURE(k);
            CAPTURE(n);
            CHECK(is_weighted_homogeneous(sys.f(n), w, n));
        }
    }
}

TEST_CASE("property: even-order alternation of f_n")
{
    for (unsigned k : {2u, 4u}) {
        AutonomousSystem sys(k);
        std::map<Var, MultiPoly> flip;
        for (unsigned j = 2; j <= k; j += 2) {
            flip.emplace(slot_var(j), -MultiPoly::variable(slot_var(j)));
        }
        for (unsigned n = 1; n <= 4 * k + 8; ++n) {
            const Rational s = n % 2 == 0 ? 1 : -1;
            CHECK(substitute(sys.f(n), flip) == s * sys.f(n));
        }
    }
}

TEST_CASE("property: degree and diagonals of the coefficient tables")
{
    for (unsigned k = 2; k <= 5; ++k) {
        AutonomousPolynomials polys(k);
        for (unsigned n = k; n <= k + 14; ++n) {
            CHECK(degree_in(polys(n), x_var()) == n - k);
        }
        const CoefficientTable T = coeff_table(k, 14);
        for (unsigned n = 0; n <= 14; ++n) {
            CHECK(T.at(n, n) == MultiPoly::variable(a_var()));
            CHECK(T.at(n, n + 1).is_zero());
            CHECK(T.at(n, -1).is_zero());
        }
    }
}

TEST_CASE("g values at zero slots")
{
    // g_{n,i} = B_{n,i}(f_1, ..., f_{n-i+1}).
    CHECK(auto_g(3, 5, 2).is_zero());
    CHECK(auto_g(0, 0, 2) == MultiPoly(1));
    CHECK(auto_g(2, 1, 2) == auto_f(2, 2));
    CHECK(auto_g(4, 2, 2) == bell_partial<MultiPoly>(4, 2, std::vector<MultiPoly>{auto_f(1, 2), auto_f(2, 2),
                                                                                     auto_f(3, 2)}));
}

TEST_CASE("argument checks")
{
    CHECK_THROWS_AS(AutonomousSystem(0), ArgumentError);
    CHECK_THROWS_AS(a_sequence(0, 3), ArgumentError);
    CHECK_THROWS_AS(coeff_table(0, 3), ArgumentError);
}

TEST_CASE("k = 1 tables are padded rows of zeros under the constant")
{
    const CoefficientTable T = coeff_table(1, 5);
    for (unsigned n = 0; n <= 5; ++n) {
        REQUIRE(T.rows[n].size() == n + 1);
        CHECK(T.at(n, 0) == MultiPoly(Rational(factorial(n))) * pow(MultiPoly::variable(a_var()), n + 1));
        for (unsigned i = 1; i <= n; ++i) {
            CHECK(T.at(n, i).is_zero());
        }
    }
}
