#include <autobell/analytic.hpp>
#include <autobell/autonomous.hpp>
#include <autobell/bell.hpp>
#include <autobell/emit.hpp>
#include <autobell/errors.hpp>
#include <autobell/sequences.hpp>
#include <autobell/verify.hpp>

#include <CLI11.hpp>

#include <iostream>

using namespace autobell;

namespace
{

constexpr int exit_refuted = 1;
constexpr int exit_usage = 2;

std::vector<std::string> split(const std::string &text, char sep = ',')
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<Rational> rationals(const std::string &text)
{
    std::vector<Rational> out;
    for (const auto &s : split(text)) {
        out.push_back(parse_rational(s));
    }
    return out;
}

struct Options {
    std::string format = "md";
    unsigned precision = 0;

    // table
    unsigned table_k = 2;
    unsigned rows = 6;
    std::string at;
    bool by_recurrence = false;

    // seq
    std::string seq_name;
    unsigned count = 10;

    // series
    unsigned series_k = 1;
    std::string init;
    std::string a = "1";
    unsigned order = 10;
    bool compare = false;
    std::string t;
    std::string grid;

    // check
    std::string scope = "all";
    std::string ks = "2,3,4";
    unsigned max_n = 0;
    unsigned check_rows = 0;

    // bell
    unsigned bell_n = 0;
    int bell_k = -1;
    std::string args;
};

int run_table(const Options &o, Format f)
{
    CoefficientTable t = o.by_recurrence ? coeff_recur(o.table_k, o.rows) : coeff_table(o.table_k, o.rows);
    if (!o.at.empty()) {
        const std::string v = o.at.rfind("a=", 0) == 0 ? o.at.substr(2) : o.at;
        t = t.at_a(parse_rational(v));
    }
    std::cout << emit_table(t, f);
    return 0;
}

int run_seq(const Options &o, Format f)
{
    std::cout << emit_sequence(sequence(o.seq_name, o.count), f);
    return 0;
}

// "lo:hi:count" or a comma list of points.
std::vector<Real> grid_points(const Options &o)
{
    if (!o.t.empty()) {
        std::vector<Real> pts;
        for (const auto &s : split(o.t)) {
            pts.push_back(parse_real(s));
        }
        return pts;
    }
    const auto parts = split(o.grid.empty() ? "-0.1:0.1:21" : o.grid, ':');
    if (parts.size() != 3) {
        throw ArgumentError("--grid expects lo:hi:count");
    }
    const auto count = std::stoul(parts[2]);
    return uniform_grid(parse_real(parts[0]), parse_real(parts[1]), static_cast<unsigned>(count));
}

int run_series(const Options &o, Format f)
{
    std::vector<Rational> init;
    if (o.init.empty()) {
        init.assign(o.series_k, Rational(0));
    } else {
        init = rationals(o.init);
    }
    const Rational a = parse_rational(o.a);
    if (!o.compare) {
        std::cout << emit_series(series_solution(o.series_k, init, a, o.order), f);
        return 0;
    }
    if (o.series_k > 2) {
        throw ArgumentError("--compare supports k = 1 and k = 2 only");
    }
    std::cout << emit_comparison(compare_closed_form(o.series_k, init, a, o.order, grid_points(o)), f);
    return 0;
}

int run_check(const Options &o, Format f)
{
    SuiteRanges r;
    r.ks.clear();
    for (const auto &s : split(o.ks)) {
        r.ks.push_back(static_cast<unsigned>(std::stoul(s)));
    }
    if (o.max_n > 0) {
        r.symbolic_n = o.max_n;
        r.numeric_n = o.max_n;
    }
    r.table_rows = o.check_rows;
    const VerificationReport report = run_suite(parse_scope(o.scope), r);
    std::cout << emit_report(report, f);
    return report.has_unexcused_refutation() ? exit_refuted : 0;
}

int run_bell(const Options &o, Format f)
{
    if (o.bell_k > static_cast<int>(o.bell_n)) {
        throw ArgumentError("--k must not exceed --n");
    }
    const unsigned m = o.bell_k < 0 ? o.bell_n : o.bell_n - static_cast<unsigned>(o.bell_k) + 1;
    std::vector<MultiPoly> xs;
    if (o.args.empty()) {
        xs = symbolic_args(m);
    } else {
        for (const auto &s : split(o.args)) {
            xs.push_back(parse_poly(s));
        }
    }
    if (xs.size() < m) {
        throw ArgumentError("need at least " + std::to_string(m) + " arguments, got " + std::to_string(xs.size()));
    }
    xs.resize(m);
    BellResult r{o.bell_n, o.bell_k, {}, {}};
    for (const auto &x : xs) {
        r.arguments.push_back(render(x));
    }
    const MultiPoly v = o.bell_k < 0 ? bell_complete<MultiPoly>(o.bell_n, xs)
                                     : bell_partial<MultiPoly>(o.bell_n, static_cast<unsigned>(o.bell_k), xs);
    r.value = render(v);
    std::cout << emit_bell(r, f);
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Bell polynomials and the autonomous equation y^(k) = a e^y"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "md, csv or json")->check(CLI::IsMember({"md", "csv", "json"}));
    app.add_option("--precision", o.precision, "decimal digits for the analytic comparisons");

    auto *table = app.add_subcommand("table", "(k,a)-autonomous coefficient table");
    table->add_option("--k", o.table_k)->check(CLI::PositiveNumber);
    table->add_option("--rows", o.rows, "last row n");
    table->add_option("--at", o.at, "evaluate at a value of a, e.g. a=1");
    table->add_flag("--recurrence", o.by_recurrence, "build the table from the binomial recurrence (k >= 2, a = 1)");

    auto *seq = app.add_subcommand("seq", "named integer sequence");
    seq->add_option("name", o.seq_name)->required();
    seq->add_option("-n,--count", o.count);

    auto *series = app.add_subcommand("series", "truncated series solution");
    series->add_option("--k", o.series_k)->check(CLI::PositiveNumber);
    series->add_option("--init", o.init, "x1,...,xk (x1 must be 0)");
    series->add_option("--a", o.a);
    series->add_option("--order", o.order);
    series->add_flag("--compare", o.compare, "compare with the closed form (k <= 2)");
    series->add_option("--t", o.t, "comparison points, comma separated");
    series->add_option("--grid", o.grid, "comparison grid lo:hi:count");

    auto *check = app.add_subcommand("check", "run the verification suite");
    check->add_option("scope", o.scope, "all, identities, conjectures, tables or sequences");
    check->add_option("--k", o.ks, "comma separated orders");
    check->add_option("--max-n", o.max_n, "identity and sequence range");
    check->add_option("--rows", o.check_rows, "last printed table row to compare");

    auto *bell = app.add_subcommand("bell", "evaluate B_{n,k} or B_n");
    bell->add_option("--n", o.bell_n)->required();
    bell->add_option("--k", o.bell_k, "omit for the complete polynomial");
    bell->add_option("--args", o.args, "comma separated arguments; symbolic x1, x2, ... when omitted");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        const Format f = parse_format(o.format);
        const PrecisionScope scope(o.precision > 0 ? o.precision : default_precision_digits());
        if (*table) {
            return run_table(o, f);
        }
        if (*seq) {
            return run_seq(o, f);
        }
        if (*series) {
            return run_series(o, f);
        }
        if (*check) {
            return run_check(o, f);
        }
        if (*bell) {
            return run_bell(o, f);
        }
    } catch (const ArgumentError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const DomainError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const UnboundVariable &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_refuted;
    }
    return exit_usage;
}
