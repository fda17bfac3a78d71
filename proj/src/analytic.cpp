#include <autobell/analytic.hpp>
#include <autobell/autonomous.hpp>
#include <autobell/errors.hpp>

#include <cstdlib>
#include <sstream>

namespace autobell
{

unsigned default_precision_digits()
{
    if (const char *env = std::getenv("AUTOBELL_PRECISION")) {
        char *end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 100000) {
            return static_cast<unsigned>(v);
        }
    }
    return 50;
}

PrecisionScope::PrecisionScope(unsigned digits) : saved_(Real::default_precision())
{
    if (digits == 0) {
        throw ArgumentError("precision must be positive");
    }
    Real::default_precision(digits);
}

PrecisionScope::~PrecisionScope()
{
    Real::default_precision(saved_);
}

Real to_real(const Rational &q)
{
    Real r;
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real parse_real(const std::string &text)
{
    if (text.find('/') != std::string::npos) {
        return to_real(parse_rational(text));
    }
    try {
        return Real(text);
    } catch (const std::exception &) {
        throw ArgumentError("not a real number: '" + text + "'");
    }
}

std::string format_real(const Real &r, unsigned digits)
{
    return r.str(static_cast<std::streamsize>(digits > 1 ? digits - 1 : 0), std::ios_base::scientific);
}

// ---- exact series ----

Rational SeriesSolution::coefficient(unsigned n) const
{
    const MultiPoly &c = series[n];
    return c.constant_term();
}

SeriesSolution series_solution(unsigned k, const std::vector<Rational> &initials, const Rational &a, unsigned N)
{
    if (k < 1) {
        throw ArgumentError("k must be at least 1");
    }
    if (initials.size() != k) {
        throw ArgumentError("order " + std::to_string(k) + " needs " + std::to_string(k) + " initial values, got " +
                            std::to_string(initials.size()));
    }
    if (N < k) {
        throw ArgumentError("series order must be at least k");
    }
    if (initials[0] != 0) {
        throw ArgumentError("exact mode needs x1 = 0 (shift x1 into the scaling constant instead)");
    }
    std::vector<MultiPoly> slots;
    for (unsigned j = 1; j < k; ++j) {
        slots.emplace_back(initials[j]);
    }
    AutonomousSystem system(k, slots, MultiPoly(a));
    std::vector<MultiPoly> coeffs{MultiPoly(initials[0])};
    for (unsigned n = 1; n <= N; ++n) {
        coeffs.push_back(system.f(n));
    }
    return {k, initials, a, N, FormalSeries(std::move(coeffs))};
}

std::size_t residual_check(const SeriesSolution &sol)
{
    const FormalSeries &E = sol.series;
    const FormalSeries lhs = series_diff(E, sol.k);
    const FormalSeries rhs = series_exp(E) * MultiPoly(sol.a);
    const FormalSeries residual = lhs - rhs;
    for (std::size_t m = 0; m <= residual.order(); ++m) {
        if (!residual[m].is_zero()) {
            throw ResidualFailure("residual coefficient " + std::to_string(m) + " is " + render(residual[m]), m);
        }
    }
    return residual.order();
}

Real series_eval(const SeriesSolution &sol, const Real &t)
{
    // Horner in t with the 1/n! folded in: c_0 + t(c_1 + t/2 (c_2 + t/3 (...))).
    Real acc = 0;
    for (unsigned n = sol.order; n >= 1; --n) {
        acc = to_real(sol.coefficient(n)) + acc * t / (n + 1);
    }
    return to_real(sol.coefficient(0)) + acc * t;
}

// ---- closed forms ----

ClosedForm make_closed_form(unsigned k, const Real &x, const Real &y, const Real &a)
{
    if (a == 0) {
        throw ArgumentError("a = 0 degenerates the equation to y^(k) = 0");
    }
    ClosedForm cf;
    cf.k = k;
    cf.x = x;
    cf.y = y;
    cf.a = a;
    if (k == 1) {
        cf.branch = Branch::Logarithmic;
    } else if (k == 2) {
        cf.branch = a > 0 ? Branch::Secant : Branch::HyperbolicSecant;
    } else {
        throw ArgumentError("closed forms exist only for k = 1 and k = 2");
    }
    return cf;
}

Real closed_form_eval(const ClosedForm &cf, const Real &t)
{
    using boost::multiprecision::atan;
    using boost::multiprecision::atanh;
    using boost::multiprecision::cos;
    using boost::multiprecision::cosh;
    using boost::multiprecision::exp;
    using boost::multiprecision::log;
    using boost::multiprecision::sqrt;

    switch (cf.branch) {
    case Branch::Logarithmic: {
        const Real inner = exp(-cf.x) - cf.a * t;
        if (inner <= 0) {
            throw DomainError("t is past the blow-up of -ln(e^{-x} - a t)", format_real(exp(-cf.x) / cf.a));
        }
        return -log(inner);
    }
    case Branch::Secant: {
        const Real disc = 2 * cf.a * exp(cf.x) - cf.y * cf.y;
        if (disc <= 0) {
            throw DomainError("secant branch needs 2a e^x - y^2 > 0", "none");
        }
        const Real c = sqrt(disc);
        const Real phase = atan(cf.y / c);
        const Real s = c * t / 2 + phase;
        const Real half_pi = boost::math::constants::half_pi<Real>();
        if (s >= half_pi || s <= -half_pi) {
            const Real bound = ((t > 0 ? half_pi : -half_pi) - phase) * 2 / c;
            throw DomainError("t is past the pole of sec^2", format_real(bound));
        }
        const Real cs = cos(s);
        return cf.x - log(cs * cs) - log(1 + cf.y * cf.y / disc);
    }
    case Branch::HyperbolicSecant: {
        const Real b = -cf.a;
        const Real disc = 2 * b * exp(cf.x) + cf.y * cf.y;
        const Real c = sqrt(disc);
        const Real phase = cf.flipped_arctanh ? atanh(cf.y / c) : -atanh(cf.y / c);
        const Real s = c * t / 2 + phase;
        const Real ch = cosh(s);
        return cf.x - log(ch * ch) - log(1 - cf.y * cf.y / disc);
    }
    }
    throw ArgumentError("unknown closed-form branch");
}

std::vector<Real> uniform_grid(const Real &lo, const Real &hi, unsigned count)
{
    if (count == 0) {
        throw ArgumentError("grid needs at least one point");
    }
    if (count == 1) {
        return {lo};
    }
    std::vector<Real> grid;
    for (unsigned i = 0; i < count; ++i) {
        grid.push_back(lo + (hi - lo) * i / (count - 1));
    }
    return grid;
}

Comparison compare_closed_form(unsigned k, const std::vector<Rational> &initials, const Rational &a, unsigned N,
                               const std::vector<Real> &grid)
{
    if (k != 1 && k != 2) {
        throw ArgumentError("closed-form comparison supports k = 1 and k = 2 only");
    }
    if (grid.empty()) {
        throw ArgumentError("empty comparison grid");
    }
    const SeriesSolution sol = series_solution(k, initials, a, N);
    const ClosedForm cf =
        make_closed_form(k, to_real(initials[0]), k == 2 ? to_real(initials[1]) : Real(0), to_real(a));
    Real worst = 0;
    for (const Real &t : grid) {
        const Real err = boost::multiprecision::abs(series_eval(sol, t) - closed_form_eval(cf, t));
        if (err > worst) {
            worst = err;
        }
    }
    return {k, initials, a, N, grid, worst, Real::default_precision()};
}

} // namespace autobell
