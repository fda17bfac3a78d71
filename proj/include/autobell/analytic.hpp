#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include <autobell/rational.hpp>
#include <autobell/series.hpp>

namespace autobell
{

using Real = boost::multiprecision::mpfr_float;

// Working precision in decimal digits: AUTOBELL_PRECISION if set to a
// positive integer, else 50.
unsigned default_precision_digits();

// Sets the default precision of newly created Reals for the lifetime of the
// scope. The default is process-wide, so scopes must not overlap across
// threads.
class PrecisionScope
{
public:
    explicit PrecisionScope(unsigned digits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope &) = delete;
    PrecisionScope &operator=(const PrecisionScope &) = delete;

private:
    unsigned saved_;
};

Real to_real(const Rational &q);
Real parse_real(const std::string &text);
// Scientific notation with `digits` significant digits.
std::string format_real(const Real &r, unsigned digits = 20);

// E_k(t, x, a) truncated at order N with exact coefficients:
// coefficient 0 is x1, 1..k-1 are x2..xk, n >= k is f_n at the initial data.
struct SeriesSolution {
    unsigned k = 1;
    std::vector<Rational> initials;
    Rational a;
    unsigned order = 0;
    FormalSeries series;

    Rational coefficient(unsigned n) const;
};

// Requires k >= 1, initials.size() == k, N >= k and x1 == 0 (ArgumentError
// otherwise).
SeriesSolution series_solution(unsigned k, const std::vector<Rational> &initials, const Rational &a, unsigned N);

// D^k E - a exp(E - x1), coefficientwise. Returns N - k when every
// coefficient through that order vanishes, else throws ResidualFailure with
// the first offending order.
std::size_t residual_check(const SeriesSolution &sol);

// sum_n c_n t^n / n!.
Real series_eval(const SeriesSolution &sol, const Real &t);

enum class Branch {
    Logarithmic,      // k = 1: -ln(e^{-x} - a t)
    Secant,           // k = 2, a > 0
    HyperbolicSecant, // k = 2, a < 0
};

struct ClosedForm {
    unsigned k = 1;
    Branch branch = Branch::Logarithmic;
    Real x, y, a;
    // Evaluate the hyperbolic branch with +arctanh(y/c) instead of the
    // sign that reproduces y'(0) = y. Only for documenting the discrepancy.
    bool flipped_arctanh = false;
};

// Picks the branch from k and the sign of a. ArgumentError for k > 2 or
// a == 0; for k == 1 the y argument is ignored.
ClosedForm make_closed_form(unsigned k, const Real &x, const Real &y, const Real &a);

// DomainError (carrying the blow-up bound) outside the real domain.
Real closed_form_eval(const ClosedForm &cf, const Real &t);

struct Comparison {
    unsigned k = 1;
    std::vector<Rational> initials;
    Rational a;
    unsigned order = 0;
    std::vector<Real> grid;
    Real max_error;
    unsigned digits = 50;
};

// max over the grid of |series(t) - closed form(t)|; k in {1, 2}.
Comparison compare_closed_form(unsigned k, const std::vector<Rational> &initials, const Rational &a, unsigned N,
                               const std::vector<Real> &grid);

// count evenly spaced points from lo to hi inclusive (count >= 2), or {lo}.
std::vector<Real> uniform_grid(const Real &lo, const Real &hi, unsigned count);

} // namespace autobell
