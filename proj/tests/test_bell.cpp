#include "oracle.hpp"

#include <autobell/bell.hpp>
#include <autobell/errors.hpp>

#include <doctest.h>

#include <random>

using namespace autobell;

TEST_CASE("partial Bell polynomials match the oracle")
{
    for (const auto &e : oracle()["bell_partial"]) {
        const unsigned n = e["n"], k = e["k"];
        const auto xs = symbolic_args(n + 1);
        const MultiPoly expected = oracle_poly(e["poly"]);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(bell_partial<MultiPoly>(n, k, xs) == expected);
        CHECK(bell_partial_explicit<MultiPoly>(n, k, xs) == expected);
    }
}

TEST_CASE("complete Bell polynomials match the oracle")
{
    for (const auto &e : oracle()["bell_complete"]) {
        const unsigned n = e["n"];
        const auto xs = symbolic_args(n);
        CHECK(bell_complete<MultiPoly>(n, xs) == oracle_poly(e["poly"]));
        CHECK(bell_complete_by_partials<MultiPoly>(n, xs) == oracle_poly(e["poly"]));
    }
}

TEST_CASE("closed forms on the first diagonals")
{
    for (unsigned n = 1; n <= 12; ++n) {
        const auto xs = symbolic_args(n);
        for (unsigned off = 0; off <= 4 && off < n; ++off) {
            CHECK(bell_closed_form<MultiPoly>(n, off, xs) == bell_partial<MultiPoly>(n, n - off, xs));
        }
    }
}

TEST_CASE("small values")
{
    const auto xs = symbolic_args(4);
    CHECK(bell_partial<MultiPoly>(0, 0, xs) == MultiPoly(1));
    CHECK(bell_partial<MultiPoly>(3, 0, xs).is_zero());
    CHECK(bell_partial<MultiPoly>(4, 2, xs) == parse_poly("4*x1*x3 + 3*x2^2"));
    CHECK(bell_complete<MultiPoly>(3, xs) == parse_poly("x1^3 + 3*x1*x2 + x3"));
    CHECK_THROWS_AS(bell_partial<MultiPoly>(5, 1, std::vector<MultiPoly>(2)), ArgumentError);
}

TEST_CASE("Stirling, Lah and idempotent numbers")
{
    const auto &s1 = oracle()["stirling"]["first_unsigned"];
    const auto &s2 = oracle()["stirling"]["second"];
    for (unsigned n = 0; n <= 12; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            CHECK(Rational(stirling1_unsigned(n, k)) == oracle_rational(s1[n][k]));
            CHECK(Rational(stirling2(n, k)) == oracle_rational(s2[n][k]));
            // The Bell evaluations are cross-checked inside special_value.
            CHECK(special_value(SpecialKind::Stirling1Unsigned, n, k) == oracle_rational(s1[n][k]));
            CHECK(special_value(SpecialKind::Stirling2, n, k) == oracle_rational(s2[n][k]));
            special_value(SpecialKind::Lah, n, k);
            special_value(SpecialKind::Idempotent, n, k);
        }
    }
    CHECK(lah_number(4, 2) == 36);
    CHECK(idempotent_number(4, 2) == 24);
}

TEST_CASE("property: sign alternation of complete Bell polynomials")
{
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int trial = 0; trial < 50; ++trial) {
        const unsigned n = 1 + trial % 12;
        std::vector<Rational> xs(n), alt(n);
        for (unsigned j = 0; j < n; ++j) {
            xs[j] = Rational(d(rng), 1 + trial % 3);
            alt[j] = j % 2 == 0 ? Rational(-xs[j]) : xs[j];
        }
        const Rational s = n % 2 == 0 ? 1 : -1;
        CHECK(bell_complete<Rational>(n, alt) == s * bell_complete<Rational>(n, xs));
    }
}

TEST_CASE("property: odd complete Bell values vanish with all odd slots zero")
{
    for (unsigned n = 0; 2 * n + 1 <= 13; ++n) {
        auto xs = symbolic_args(2 * n + 1);
        for (unsigned j = 0; j < xs.size(); j += 2) {
            xs[j] = MultiPoly();
        }
        CHECK(bell_complete<MultiPoly>(2 * n + 1, xs).is_zero());
    }
}

TEST_CASE("property: binomial type in the arguments")
{
    // B_n(x + y) = sum_k C(n,k) B_k(x) B_{n-k}(y) for numeric vectors.
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(-3, 3);
    for (unsigned n = 0; n <= 10; ++n) {
        std::vector<Rational> x(n), y(n), s(n);
        for (unsigned j = 0; j < n; ++j) {
            x[j] = d(rng);
            y[j] = d(rng);
            s[j] = x[j] + y[j];
        }
        Rational rhs = 0;
        for (unsigned k = 0; k <= n; ++k) {
            rhs += Rational(binomial(n, k)) * bell_complete<Rational>(k, x) * bell_complete<Rational>(n - k, y);
        }
        CHECK(bell_complete<Rational>(n, s) == rhs);
    }
}

TEST_CASE("table and sequence helpers reuse results")
{
    const auto xs = symbolic_args(10);
    PartialBellTable<MultiPoly> t(xs);
    const MultiPoly &ref = t(10, 3);
    t(9, 9);
    CHECK(ref == bell_partial<MultiPoly>(10, 3, xs));
    CompleteBellSequence<MultiPoly> seq;
    for (unsigned n = 0; n < 6; ++n) {
        seq.push_argument(xs[n]);
    }
    CHECK(seq(6) == bell_complete<MultiPoly>(6, xs));
}
