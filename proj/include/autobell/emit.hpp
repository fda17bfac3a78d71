#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <autobell/analytic.hpp>
#include <autobell/autonomous.hpp>
#include <autobell/report.hpp>
#include <autobell/sequences.hpp>

namespace autobell
{

enum class Format { Markdown, Csv, Json };

// "md", "csv" or "json"; ArgumentError otherwise.
Format parse_format(std::string_view text);

// All exact values are written as decimal strings. Every result ends in a
// newline.
std::string emit_table(const CoefficientTable &table, Format f);
std::string emit_sequence(const SequenceTable &seq, Format f);
// Derivative values f_0..f_N of the series solution.
std::string emit_series(const SeriesSolution &sol, Format f);
std::string emit_comparison(const Comparison &cmp, Format f);
std::string emit_report(const VerificationReport &report, Format f);

// "B_{n,k}" or "B_n" evaluated on the given arguments.
struct BellResult {
    unsigned n = 0;
    // -1 for the complete polynomial.
    int k = -1;
    std::vector<std::string> arguments;
    std::string value;
};
std::string emit_bell(const BellResult &r, Format f);

// CSV field quoting.
std::string csv_field(std::string_view s);

} // namespace autobell
