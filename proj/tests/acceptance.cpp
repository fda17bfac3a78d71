// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.
// Optional argv[1]: path of the CLI binary, used for the determinism line.

#include <autobell/analytic.hpp>
#include <autobell/autonomous.hpp>
#include <autobell/bell.hpp>
#include <autobell/emit.hpp>
#include <autobell/sequences.hpp>
#include <autobell/verify.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace autobell;

namespace
{

// Pinned limits.
constexpr double bell_seconds = 60;
constexpr double residual_seconds = 120;
constexpr double conjecture_seconds = 120;
const char *const k1_tolerance = "1e-20";
const char *const k2_tolerance = "1e-10";
constexpr unsigned working_digits = 50;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string &why)
    {
        if (pass) {
            detail = why;
        } else {
            detail += "; " + why;
        }
        pass = false;
    }
};

int failures = 0;

void line(const std::string &name, const std::function<Outcome()> &body)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception &e) {
        o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += o.pass ? 0 : 1;
    std::ostringstream os;
    os.precision(3);
    os << (o.pass ? "PASS" : "FAIL") << "  " << name << "  (" << std::fixed << secs << " s)";
    if (!o.detail.empty()) {
        os << "  " << o.detail;
    }
    std::cout << os.str() << std::endl;
}

double elapsed(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string join(const std::vector<Rational> &v)
{
    std::string s;
    for (const auto &q : v) {
        s += (s.empty() ? "" : ",") + to_string(q);
    }
    return s;
}

Outcome bell_equivalence()
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    for (unsigned n = 0; n <= 12; ++n) {
        const auto xs = symbolic_args(n);
        PartialBellTable<MultiPoly> table(xs);
        for (unsigned k = 0; k <= n; ++k) {
            const MultiPoly rec = table(n, k);
            if (rec != bell_partial_explicit<MultiPoly>(n, k, xs)) {
                o.fail("recurrence vs explicit at n=" + std::to_string(n) + ", k=" + std::to_string(k));
            }
            if (k >= 1 && n - k <= 4 && rec != bell_closed_form<MultiPoly>(n, n - k, xs)) {
                o.fail("closed form at n=" + std::to_string(n) + ", k=" + std::to_string(k));
            }
        }
    }
    if (elapsed(t0) > bell_seconds) {
        o.fail("over the time limit");
    }
    return o;
}

Outcome tables()
{
    Outcome o;
    SuiteRanges r;
    r.ks = {2, 3, 4};
    const VerificationReport rep = run_table_suite(r);
    for (const char *id : {"table.k2", "table.k3", "table.k4"}) {
        const CheckResult *c = rep.find(id);
        if (!c || c->status != Status::Verified) {
            o.fail(std::string(id) + (c ? ": " + c->details : " missing"));
        }
    }
    for (const char *id : {"table.k4.entry_7_3"}) {
        const CheckResult *c = rep.find(id);
        if (!c || !c->known_erratum) {
            o.fail(std::string(id) + " not flagged");
        }
    }
    if (o.pass) {
        std::string flagged;
        for (const auto &c : rep.checks()) {
            if (c.known_erratum) {
                flagged += (flagged.empty() ? "" : ", ") + c.id;
            }
        }
        o.detail = "flagged print errors: " + flagged;
    }
    return o;
}

Outcome goldens()
{
    Outcome o;
    const auto expect = [&](const std::string &name, unsigned count, const std::vector<long> &want, bool suffix) {
        const SequenceTable t = sequence(name, count);
        std::vector<Rational> got = t.terms;
        if (suffix) {
            got.erase(got.begin(), got.end() - static_cast<long>(want.size()));
        }
        std::vector<Rational> w(want.begin(), want.end());
        if (got != w) {
            o.fail(name + "(" + std::to_string(count) + ") = (" + join(t.terms) + "), expected " +
                   (suffix ? "... " : "") + "(" + join(w) + ")");
        }
    };
    expect("reduced_tangent", 5, {1, 1, 4, 34, 496}, false);
    expect("blasius", 5, {1, 1, 11, 375, 27897}, false);
    expect("a4", 4, {1, 1, 35, 6140}, false);
    expect("shifts_exp3", 9, {1, 1, 1, 1, 2, 5, 15, 53, 213}, false);
    expect("stirling_shift3", 12, {222, 1115, 6698}, true);
    expect("euler_zigzag", 8, {1, 1, 1, 2, 5, 16, 61, 272}, false);
    return o;
}

Outcome residuals()
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(20240531);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 3), pick(0, 2);
    const std::array<Rational, 3> as{Rational(1), Rational(-1), Rational(2)};
    for (int trial = 0; trial < 20; ++trial) {
        const unsigned k = 1 + trial % 5;
        std::vector<Rational> init{0};
        for (unsigned j = 1; j < k; ++j) {
            init.push_back(make_rational(num(rng), 3 * den(rng)));
        }
        const Rational a = as[pick(rng)];
        const unsigned N = 4 * k + 8;
        const SeriesSolution sol = series_solution(k, init, a, N);
        if (residual_check(sol) != N - k) {
            o.fail("k=" + std::to_string(k) + " initials=(" + join(init) + ") a=" + to_string(a));
        }
    }
    if (elapsed(t0) > residual_seconds) {
        o.fail("over the time limit");
    }
    return o;
}

Outcome closed_forms()
{
    Outcome o;
    const PrecisionScope p(working_digits);
    const Comparison c1 = compare_closed_form(1, {0}, 1, 40, uniform_grid(Real("-0.3"), Real("0.3"), 61));
    const Comparison c2 = compare_closed_form(2, {0, 0}, -1, 40, uniform_grid(Real("-0.5"), Real("0.5"), 101));
    if (!(c1.max_error < Real(k1_tolerance))) {
        o.fail("k=1 error " + format_real(c1.max_error, 4));
    }
    if (!(c2.max_error < Real(k2_tolerance))) {
        o.fail("k=2 error " + format_real(c2.max_error, 4));
    }
    if (o.pass) {
        o.detail = "k=1 max error " + format_real(c1.max_error, 3) + " < " + k1_tolerance + ", k=2 max error " +
                   format_real(c2.max_error, 3) + " < " + k2_tolerance;
    }
    return o;
}

Outcome conjectures()
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    for (unsigned k : {2u, 3u, 4u}) {
        const CheckResult c = check_conjecture1(k, 15);
        if (c.status != Status::Verified) {
            o.fail(c.id + " " + std::string(status_name(c.status)) + " (" + c.details + ")");
        }
    }
    const CheckResult c2 = check_conjecture2(25);
    if (c2.status != Status::Verified) {
        o.fail("conjecture2: " + c2.details);
    }
    const CheckResult c3 = check_conjecture3(25);
    if (c3.status != Status::VerifiedWithOffset) {
        o.fail("conjecture3 " + std::string(status_name(c3.status)) + ": " + c3.details);
    }
    const CheckResult c4 = check_conjecture4(25);
    if (c4.status != Status::Verified) {
        o.fail("conjecture4: " + c4.details);
    }
    if (elapsed(t0) > conjecture_seconds) {
        o.fail("over the time limit");
    }
    return o;
}

Outcome invariants()
{
    Outcome o;
    SuiteRanges r;
    r.symbolic_n = 12;
    const VerificationReport ident = run_identity_suite(r);
    const VerificationReport cross = cross_checks(12);
    const std::map<std::string, std::vector<Status>> want{
        {"auto.scaling", {Status::Verified}},
        {"auto.alternation", {Status::Verified}},
        {"bell.complete", {Status::Verified}},
        {"bell.sign", {Status::Verified}},
        // The printed argument list ends in a nonzero odd slot; holds with it zero.
        {"bell.odd_zero", {Status::Verified, Status::VerifiedWithOffset}},
        {"stirling1.factorial_sum", {Status::Verified}},
        {"tangent.bernoulli", {Status::Verified}},
    };
    for (const auto &[id, ok] : want) {
        const CheckResult *c = ident.find(id) ? ident.find(id) : cross.find(id);
        if (!c) {
            o.fail(id + " missing");
        } else if (std::find(ok.begin(), ok.end(), c->status) == ok.end()) {
            o.fail(id + " " + std::string(status_name(c->status)) + ": " + c->details);
        }
    }
    // Homogeneity and alternation run to n = 4k + 8 regardless of symbolic_n.
    for (unsigned k = 1; k <= 5; ++k) {
        AutonomousSystem sys(k);
        const Weights w = scaling_weights(k);
        for (unsigned n = 1; n <= 4 * k + 8; ++n) {
            if (!is_weighted_homogeneous(sys.f(n), w, n)) {
                o.fail("homogeneity k=" + std::to_string(k) + " n=" + std::to_string(n));
            }
        }
    }
    return o;
}

std::string run_cli(const std::string &cmd)
{
    std::string out;
    FILE *p = popen(cmd.c_str(), "r");
    if (!p) {
        throw std::runtime_error("cannot run " + cmd);
    }
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) {
        out.append(buf.data(), got);
    }
    pclose(p);
    return out;
}

Outcome determinism(const char *cli)
{
    Outcome o;
    std::string first, second;
    if (cli) {
        const std::string cmd = std::string("'") + cli + "' --format json check all";
        first = run_cli(cmd);
        second = run_cli(cmd);
    } else {
        first = emit_report(run_suite(Scope::All, SuiteRanges{}), Format::Json);
        second = emit_report(run_suite(Scope::All, SuiteRanges{}), Format::Json);
    }
    if (first.empty() || first != second) {
        o.fail("reports differ");
    } else {
        o.detail = std::to_string(first.size()) + " bytes, identical" + (cli ? " (CLI)" : " (in process)");
    }
    return o;
}

} // namespace

int main(int argc, char **argv)
{
    line("Bell oracle equivalence", bell_equivalence);
    line("Table reproduction", tables);
    line("Sequence goldens", goldens);
    line("Formal residual", residuals);
    line("Closed-form agreement", closed_forms);
    line("Conjecture suite", conjectures);
    line("Invariant suites", invariants);
    line("Determinism", [&] { return determinism(argc > 1 ? argv[1] : nullptr); });
    std::cout << failures << " of 8 criteria failed" << std::endl;
    return failures == 0 ? 0 : 1;
}
