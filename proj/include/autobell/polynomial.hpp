#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <autobell/rational.hpp>
#include <autobell/var.hpp>

namespace autobell
{

// Power product of variables. Exponents are positive; entries are sorted by
// variable id so equal monomials compare equal.
class Monomial
{
public:
    using Entry = std::pair<Var, std::uint32_t>;

    Monomial() = default;
    explicit Monomial(Var v, std::uint32_t exp = 1);
    // Entries may come in any order; zero exponents are dropped, repeats add up.
    explicit Monomial(std::vector<Entry> entries);

    std::span<const Entry> entries() const noexcept
    {
        return entries_;
    }
    bool is_one() const noexcept
    {
        return entries_.empty();
    }
    std::uint32_t exponent(Var v) const noexcept;
    unsigned long total_degree() const noexcept;

    // Same monomial with `v` removed.
    Monomial without(Var v) const;

    friend Monomial operator*(const Monomial &lhs, const Monomial &rhs);
    friend bool operator==(const Monomial &, const Monomial &) = default;
    friend auto operator<=>(const Monomial &, const Monomial &) = default;

private:
    std::vector<Entry> entries_;
};

using Assignment = std::map<Var, Rational>;
using Weights = std::map<Var, long>;

// Sparse multivariate polynomial with exact rational coefficients.
// Canonical: no zero coefficients stored, so structural equality is
// mathematical equality.
class MultiPoly
{
public:
    using Terms = std::map<Monomial, Rational>;

    MultiPoly() = default;
    MultiPoly(int c) : MultiPoly(Rational(c)) {}
    MultiPoly(const Integer &c) : MultiPoly(Rational(c)) {}
    MultiPoly(const Rational &c);
    MultiPoly(const Rational &c, Monomial m);

    static MultiPoly variable(Var v);
    static MultiPoly variable(std::string_view name)
    {
        return variable(Var::named(name));
    }

    const Terms &terms() const noexcept
    {
        return terms_;
    }
    std::size_t size() const noexcept
    {
        return terms_.size();
    }
    bool is_zero() const noexcept
    {
        return terms_.empty();
    }
    bool is_constant() const noexcept;
    // Constant term (zero if absent).
    Rational constant_term() const;
    Rational coefficient(const Monomial &m) const;

    // Variables that occur, in registry order.
    std::vector<Var> variables() const;

    MultiPoly &operator+=(const MultiPoly &rhs);
    MultiPoly &operator-=(const MultiPoly &rhs);
    MultiPoly &operator*=(const MultiPoly &rhs);
    MultiPoly &operator*=(const Rational &c);

    friend MultiPoly operator+(MultiPoly lhs, const MultiPoly &rhs)
    {
        return lhs += rhs;
    }
    friend MultiPoly operator-(MultiPoly lhs, const MultiPoly &rhs)
    {
        return lhs -= rhs;
    }
    friend MultiPoly operator*(const MultiPoly &lhs, const MultiPoly &rhs);
    friend MultiPoly operator*(MultiPoly p, const Rational &c)
    {
        return p *= c;
    }
    friend MultiPoly operator*(const Rational &c, MultiPoly p)
    {
        return p *= c;
    }
    friend MultiPoly operator*(MultiPoly p, const Integer &c)
    {
        return p *= Rational(c);
    }
    friend MultiPoly operator*(const Integer &c, MultiPoly p)
    {
        return p *= Rational(c);
    }
    MultiPoly operator-() const;

    friend bool operator==(const MultiPoly &, const MultiPoly &) = default;

    // Adds c*m in place.
    void add_term(const Rational &c, const Monomial &m);

private:
    Terms terms_;
};

MultiPoly pow(const MultiPoly &p, unsigned exp);

// Exact value; every variable of p must be bound (UnboundVariable otherwise).
Rational poly_eval(const MultiPoly &p, const Assignment &assignment);

// Binds a subset of the variables, leaving the rest symbolic.
MultiPoly specialize(const MultiPoly &p, const Assignment &assignment);

// Replaces variables by polynomials; unmapped variables stay.
MultiPoly substitute(const MultiPoly &p, const std::map<Var, MultiPoly> &images);

// Degree in v; nullopt for the zero polynomial.
std::optional<unsigned> degree_in(const MultiPoly &p, Var v);

// coefficients[i] is the coefficient of v^i (a polynomial in the other
// variables); length is degree+1, empty for zero.
std::vector<MultiPoly> coefficients_in(const MultiPoly &p, Var v);

// Max over monomials of sum exponent*weight; nullopt for the zero
// polynomial. Variables without a weight raise ArgumentError.
std::optional<long> weighted_degree(const MultiPoly &p, const Weights &weights);

// Every monomial has weighted degree exactly d (false for zero).
bool is_weighted_homogeneous(const MultiPoly &p, const Weights &weights, long d);

// Canonical text: graded-lex term order by registry order, explicit '*',
// '^' exponents, e.g. "u^2 + u*x2^2", "5/2*a - 1".
std::string render(const MultiPoly &p);
// Same order, but a numeric coefficient is written directly before its
// monomial ("42a^2 + 15a"), as in printed coefficient tables.
std::string render_compact(const MultiPoly &p);

std::ostream &operator<<(std::ostream &os, const MultiPoly &p);

// Parses the canonical rendering. Also accepts implicit multiplication
// after a number ("11a^2") and parentheses; only numeric literals may be
// divided ("5/2*a").
MultiPoly parse_poly(std::string_view text);

} // namespace autobell
