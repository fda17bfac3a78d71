#include <autobell/autonomous.hpp>
#include <autobell/bell.hpp>
#include <autobell/errors.hpp>
#include <autobell/sequences.hpp>

#include <algorithm>
#include <functional>
#include <map>

namespace autobell
{

namespace
{

struct Entry {
    std::string oeis;
    unsigned first_index;
    std::vector<Integer> printed;
    std::vector<unsigned> errata;
    std::string note;
    std::function<std::vector<Rational>(unsigned)> generate;
};

std::vector<Integer> ints(std::initializer_list<long> xs)
{
    return {xs.begin(), xs.end()};
}

std::vector<Rational> to_rationals(const std::vector<Integer> &xs)
{
    return {xs.begin(), xs.end()};
}

std::vector<Rational> a_numbers(unsigned k, unsigned count)
{
    const ASequence seq = a_sequence(k, count);
    std::vector<Rational> out;
    for (unsigned n = 1; n <= count; ++n) {
        out.push_back(seq.at_one(n));
    }
    return out;
}

const std::map<std::string, Entry, std::less<>> &registry()
{
    static const std::map<std::string, Entry, std::less<>> entries = [] {
        std::map<std::string, Entry, std::less<>> m;
        m["reduced_tangent"] = {"A002105", 1, ints({1, 1, 4, 34, 496}), {}, "T_n = A_n^(2)(1)",
                                [](unsigned c) { return a_numbers(2, c); }};
        m["euler_zigzag"] = {"A000111",
                             0,
                             ints({1, 1, 1, 2, 5, 16, 61, 272}),
                             {},
                             "zz_{n+1} = B_n(zz_0..zz_{n-1}), checked against the boustrophedon triangle",
                             [](unsigned c) {
                                 auto bell = zigzag_by_bell(c);
                                 if (bell != zigzag_boustrophedon(c)) {
                                     throw InternalInconsistency("zigzag: Bell recursion and boustrophedon differ");
                                 }
                                 return to_rationals(bell);
                             }};
        m["blasius"] = {"A018893", 1, ints({1, 1, 11, 375, 27897}), {}, "b_n = A_n^(3)(1); printed 27.897 is 27897",
                        [](unsigned c) { return a_numbers(3, c); }};
        m["a4"] = {"", 1, ints({1, 1, 35, 6140}), {3, 4}, "c_n = A_n^(4)(1); printed 35 and 6140 should be 36 and 6306",
                   [](unsigned c) { return a_numbers(4, c); }};
        m["shifts_exp3"] = {"A007548", 1, ints({1, 1, 1, 1, 2, 5, 15, 53, 213}), {}, "e_n = A_n^(3)(1,1)",
                            [](unsigned c) { return to_rationals(autonomous_ones(3, c)); }};
        m["stirling_shift3"] = {"A336020",
                                1,
                                ints({1, 1, 1, 1, 1, 2, 5, 15, 53, 222, 1115, 6698}),
                                {},
                                "d_{n+1} = s_n with s_0..s_2 = 1, s_{n+3} = sum_j S(n,j) s_j",
                                [](unsigned c) { return to_rationals(stirling_shift(3, c)); }};
        m["autonomous4_ones"] = {"", 1, {}, {}, "A_n^(4)(1,1); agrees with stirling_shift3 for n <= 8 only",
                                 [](unsigned c) { return to_rationals(autonomous_ones(4, c)); }};
        m["eulerian_like"] = {"A000295",
                              0,
                              ints({0,      0,      1,       4,       11,      26,      57,       120,
                                    247,    502,    1013,    2036,    4083,    8178,    16369,    32752,
                                    65519,  131054, 262125,  524268,  1048555, 2097130}),
                              {},
                              "2^n - n - 1",
                              [](unsigned c) {
                                  std::vector<Rational> out;
                                  for (unsigned n = 0; n < c; ++n) {
                                      Integer p;
                                      mpz_ui_pow_ui(p.get_mpz_t(), 2, n);
                                      out.emplace_back(p - n - 1);
                                  }
                                  return out;
                              }};
        m["triangular_pairs"] = {"A050534", 1, ints({0, 0, 3, 15, 45, 105, 210, 378, 630, 990, 1485}), {},
                                 "C(C(n,2),2)", [](unsigned c) {
                                     std::vector<Rational> out;
                                     for (unsigned n = 1; n <= c; ++n) {
                                         const Integer pairs = binomial(n, 2);
                                         out.emplace_back(binomial(static_cast<unsigned>(pairs.get_ui()), 2));
                                     }
                                     return out;
                                 }};
        m["eight_seq"] = {"A027778",
                          5,
                          ints({10,      75,      315,     980,     2520,    5670,    11550,   21780,
                                38610,   65065,   105105,  163800,  247520,  364140,  523260,  736440,
                                1017450, 1382535, 1850695, 2443980, 3187800, 4111250, 5247450}),
                          {},
                          "(5/2)(n-1)C(n,5), n >= 5",
                          [](unsigned c) {
                              std::vector<Rational> out;
                              for (unsigned n = 5; n < 5 + c; ++n) {
                                  out.push_back(Rational(5, 2) * (n - 1) * Rational(binomial(n, 5)));
                              }
                              return out;
                          }};
        return m;
    }();
    return entries;
}

const Entry &lookup(std::string_view name)
{
    const auto &reg = registry();
    const auto it = reg.find(name);
    if (it == reg.end()) {
        std::string known;
        for (const auto &n : sequence_names()) {
            known += (known.empty() ? "" : ", ") + n;
        }
        throw ArgumentError("unknown sequence '" + std::string(name) + "'; available: " + known);
    }
    return it->second;
}

} // namespace

const std::vector<std::string> &sequence_names()
{
    static const std::vector<std::string> names{"reduced_tangent", "euler_zigzag",     "blasius",
                                                "a4",              "shifts_exp3",      "stirling_shift3",
                                                "eulerian_like",   "triangular_pairs", "eight_seq",
                                                "autonomous4_ones"};
    return names;
}

const std::vector<Integer> &printed_terms(std::string_view name)
{
    return lookup(name).printed;
}

std::vector<unsigned> erratum_indices(std::string_view name)
{
    return lookup(name).errata;
}

SequenceTable sequence(std::string_view name, unsigned count)
{
    if (count == 0) {
        throw ArgumentError("sequence length must be at least 1");
    }
    const Entry &entry = lookup(name);
    SequenceTable table{std::string(name), entry.oeis, entry.first_index, entry.generate(count), entry.note};
    const std::size_t checked = std::min<std::size_t>(count, entry.printed.size());
    for (std::size_t j = 0; j < checked; ++j) {
        const unsigned index = entry.first_index + static_cast<unsigned>(j);
        if (table.terms[j] == Rational(entry.printed[j])) {
            continue;
        }
        if (std::find(entry.errata.begin(), entry.errata.end(), index) != entry.errata.end()) {
            continue;
        }
        throw InternalInconsistency(std::string(name) + ": term " + std::to_string(index) + " is " +
                                    to_string(table.terms[j]) + ", printed " + to_string(entry.printed[j]));
    }
    return table;
}

std::vector<Integer> zigzag_by_bell(unsigned count)
{
    std::vector<Integer> zz;
    CompleteBellSequence<Rational> bell;
    for (unsigned n = 0; n < count; ++n) {
        if (n < 2) {
            zz.emplace_back(1);
            continue;
        }
        // zz_n = B_{n-1}(zz_0, ..., zz_{n-2})
        while (bell.argument_count() < n - 1) {
            bell.push_argument(Rational(zz[bell.argument_count()]));
        }
        const Rational &v = bell(n - 1);
        if (!is_integer(v)) {
            throw InternalInconsistency("zigzag: non-integral Bell value");
        }
        zz.push_back(v.get_num());
    }
    return zz;
}

std::vector<Integer> zigzag_boustrophedon(unsigned count)
{
    std::vector<Integer> zz;
    std::vector<Integer> row{1};
    for (unsigned n = 0; n < count; ++n) {
        if (n > 0) {
            std::vector<Integer> next(n + 1);
            next[0] = 0;
            for (unsigned j = 1; j <= n; ++j) {
                next[j] = next[j - 1] + row[n - j];
            }
            row = std::move(next);
        }
        zz.push_back(row.back());
    }
    return zz;
}

std::vector<Integer> autonomous_ones(unsigned k, unsigned count)
{
    AutonomousPolynomials polys(k);
    const Assignment ones{{x_var(), Rational(1)}, {a_var(), Rational(1)}};
    std::vector<Integer> out;
    for (unsigned n = 1; n <= count; ++n) {
        const Rational v = poly_eval(polys(n), ones);
        if (!is_integer(v)) {
            throw InternalInconsistency("A_" + std::to_string(n) + "(1,1) is not an integer");
        }
        out.push_back(v.get_num());
    }
    return out;
}

std::vector<Integer> stirling_shift(unsigned p, unsigned count)
{
    if (p == 0) {
        throw ArgumentError("stirling_shift needs p >= 1");
    }
    std::vector<Integer> s;
    for (unsigned m = 0; m < count; ++m) {
        if (m < p) {
            s.emplace_back(1);
            continue;
        }
        const unsigned n = m - p;
        Integer sum = 0;
        for (unsigned j = 0; j <= n; ++j) {
            sum += stirling2(n, j) * s[j];
        }
        s.push_back(sum);
    }
    return s;
}

Rational bernoulli_abs(unsigned m)
{
    if (m == 0 || m % 2 != 0) {
        throw ArgumentError("bernoulli_abs needs an even m >= 2, got " + std::to_string(m));
    }
    std::vector<Rational> b{Rational(1)};
    for (unsigned j = 1; j <= m; ++j) {
        Rational sum = 0;
        for (unsigned i = 0; i < j; ++i) {
            sum += Rational(binomial(j + 1, i)) * b[i];
        }
        b.push_back(-sum / Rational(j + 1));
    }
    return abs(b[m]);
}

Rational tangent_from_bernoulli(unsigned n)
{
    if (n == 0) {
        throw ArgumentError("tangent_from_bernoulli needs n >= 1");
    }
    const Rational p2n = pow(Rational(2), n);
    return p2n * (p2n * p2n - 1) * bernoulli_abs(2 * n) / Rational(n);
}

VerificationReport cross_checks(unsigned N)
{
    if (N < 1) {
        throw ArgumentError("cross_checks needs N >= 1");
    }
    VerificationReport report;

    {
        CheckResult c{"stirling1.factorial_sum", "n! = sum_{i=1}^{n} |s(n,i)|", range_label("n", 1, N), Status::Verified,
                      "", false};
        for (unsigned n = 1; n <= N && c.status == Status::Verified; ++n) {
            Rational sum = 0;
            for (unsigned i = 1; i <= n; ++i) {
                sum += special_value(SpecialKind::Stirling1Unsigned, n, i);
            }
            if (sum != Rational(factorial(n))) {
                c.status = Status::RefutedAsPrinted;
                c.details = "n=" + std::to_string(n) + ": sum is " + to_string(sum);
            }
        }
        report.add(std::move(c));
    }
    {
        CheckResult c{"stirling1.finite_sum", "|s(n+1,i+1)| = sum_{j=i}^{n} n!/j! |s(j,i)|",
                      range_label("n", 0, N), Status::Verified, "", false};
        for (unsigned n = 0; n <= N && c.status == Status::Verified; ++n) {
            for (unsigned i = 0; i <= n; ++i) {
                Rational sum = 0;
                for (unsigned j = i; j <= n; ++j) {
                    sum += Rational(factorial(n)) / Rational(factorial(j)) * Rational(stirling1_unsigned(j, i));
                }
                if (sum != Rational(stirling1_unsigned(n + 1, i + 1))) {
                    c.status = Status::RefutedAsPrinted;
                    c.details = "n=" + std::to_string(n) + ", i=" + std::to_string(i);
                    break;
                }
            }
        }
        report.add(std::move(c));
    }
    {
        CheckResult c{"stirling1.k1_partials", "g_{n,i}((x,0..0),1) = u^n |s(n,i)| for k = 1",
                      range_label("n", 1, std::min(N, 12u)), Status::Verified, "", false};
        for (unsigned n = 1; n <= std::min(N, 12u) && c.status == Status::Verified; ++n) {
            for (unsigned i = 1; i <= n; ++i) {
                const MultiPoly expected = MultiPoly(Rational(stirling1_unsigned(n, i))) * pow(MultiPoly::variable(u_var()), n);
                if (auto_g(n, i, 1) != expected) {
                    c.status = Status::RefutedAsPrinted;
                    c.details = "n=" + std::to_string(n) + ", i=" + std::to_string(i);
                    break;
                }
            }
        }
        report.add(std::move(c));
    }
    {
        CheckResult c{"tangent.bernoulli", "T_n = 2^n (2^{2n} - 1) |b_{2n}| / n", range_label("n", 1, N),
                      Status::Verified, "", false};
        const ASequence T = a_sequence(2, N);
        for (unsigned n = 1; n <= N; ++n) {
            if (T.at_one(n) != tangent_from_bernoulli(n)) {
                c.status = Status::RefutedAsPrinted;
                c.details = "n=" + std::to_string(n);
                break;
            }
        }
        report.add(std::move(c));
    }
    return report;
}

} // namespace autobell
