#include <autobell/emit.hpp>
#include <autobell/errors.hpp>

#include <json.hpp>

#include <sstream>

namespace autobell
{

using nlohmann::ordered_json;

namespace
{

std::string dump(const ordered_json &j)
{
    return j.dump(2) + "\n";
}

std::vector<std::string> strings(const std::vector<Rational> &v)
{
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto &q : v) {
        out.push_back(to_string(q));
    }
    return out;
}

std::string joined(const std::vector<std::string> &v, std::string_view sep)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? std::string(sep) : "") + v[i];
    }
    return out;
}

// Pipes inside a markdown cell.
std::string md_cell(std::string_view s)
{
    std::string out;
    for (char c : s) {
        if (c == '|') {
            out += "\\|";
        } else {
            out += c;
        }
    }
    return out;
}

std::string label(const Comparison &c)
{
    return "k=" + std::to_string(c.k) + ", initials=(" + joined(strings(c.initials), ",") + "), a=" + to_string(c.a) +
           ", N=" + std::to_string(c.order);
}

} // namespace

Format parse_format(std::string_view text)
{
    if (text == "md") {
        return Format::Markdown;
    }
    if (text == "csv") {
        return Format::Csv;
    }
    if (text == "json") {
        return Format::Json;
    }
    throw ArgumentError("unknown format '" + std::string(text) + "'; expected md, csv or json");
}

std::string csv_field(std::string_view s)
{
    if (s.find_first_of(",\"\n") == std::string_view::npos) {
        return std::string(s);
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

std::string emit_table(const CoefficientTable &table, Format f)
{
    const std::size_t width = table.rows.empty() ? 0 : table.rows.back().size();
    if (f == Format::Json) {
        ordered_json rows = ordered_json::array();
        for (std::size_t n = 0; n < table.rows.size(); ++n) {
            std::vector<std::string> cs;
            for (const auto &p : table.rows[n]) {
                cs.push_back(render_compact(p));
            }
            rows.push_back({{"n", n}, {"coeffs", cs}});
        }
        return dump({{"k", table.k}, {"rows", rows}});
    }
    std::ostringstream os;
    if (f == Format::Csv) {
        os << "n,i,coeff\n";
        for (std::size_t n = 0; n < table.rows.size(); ++n) {
            for (std::size_t i = 0; i < table.rows[n].size(); ++i) {
                os << n << ',' << i << ',' << csv_field(render_compact(table.rows[n][i])) << '\n';
            }
        }
        return os.str();
    }
    os << "(" << table.k << ",a)-autonomous coefficients [[n,i]]\n\n| n\\i |";
    for (std::size_t i = 0; i < width; ++i) {
        os << ' ' << i << " |";
    }
    os << "\n|---|";
    for (std::size_t i = 0; i < width; ++i) {
        os << "---|";
    }
    os << '\n';
    for (std::size_t n = 0; n < table.rows.size(); ++n) {
        os << "| " << n << " |";
        for (std::size_t i = 0; i < width; ++i) {
            os << ' ' << (i < table.rows[n].size() ? render_compact(table.rows[n][i]) : "") << " |";
        }
        os << '\n';
    }
    return os.str();
}

std::string emit_sequence(const SequenceTable &seq, Format f)
{
    const auto terms = strings(seq.terms);
    if (f == Format::Json) {
        ordered_json j{{"name", seq.name},
                       {"oeis", seq.oeis.empty() ? ordered_json(nullptr) : ordered_json(seq.oeis)},
                       {"first_index", seq.first_index},
                       {"terms", terms}};
        if (!seq.note.empty()) {
            j["note"] = seq.note;
        }
        return dump(j);
    }
    std::ostringstream os;
    if (f == Format::Csv) {
        os << "n,value\n";
        for (std::size_t j = 0; j < terms.size(); ++j) {
            os << seq.first_index + j << ',' << terms[j] << '\n';
        }
        return os.str();
    }
    os << seq.name;
    if (!seq.oeis.empty()) {
        os << " (" << seq.oeis << ")";
    }
    os << "\n\n| n | value |\n|---|---|\n";
    for (std::size_t j = 0; j < terms.size(); ++j) {
        os << "| " << seq.first_index + j << " | " << terms[j] << " |\n";
    }
    if (!seq.note.empty()) {
        os << "\n" << seq.note << '\n';
    }
    return os.str();
}

std::string emit_series(const SeriesSolution &sol, Format f)
{
    std::vector<std::string> cs;
    for (unsigned n = 0; n <= sol.order; ++n) {
        cs.push_back(to_string(sol.coefficient(n)));
    }
    if (f == Format::Json) {
        return dump({{"k", sol.k},
                     {"initials", strings(sol.initials)},
                     {"a", to_string(sol.a)},
                     {"order", sol.order},
                     {"coefficients", cs}});
    }
    std::ostringstream os;
    if (f == Format::Csv) {
        os << "n,coefficient\n";
        for (std::size_t n = 0; n < cs.size(); ++n) {
            os << n << ',' << cs[n] << '\n';
        }
        return os.str();
    }
    os << "E(t) = sum_n c_n t^n/n!, k=" << sol.k << ", initials=(" << joined(strings(sol.initials), ",")
       << "), a=" << to_string(sol.a) << "\n\n| n | c_n |\n|---|---|\n";
    for (std::size_t n = 0; n < cs.size(); ++n) {
        os << "| " << n << " | " << cs[n] << " |\n";
    }
    return os.str();
}

std::string emit_comparison(const Comparison &cmp, Format f)
{
    std::vector<std::string> grid;
    for (const auto &t : cmp.grid) {
        grid.push_back(format_real(t, 10));
    }
    const std::string err = format_real(cmp.max_error, 6);
    if (f == Format::Json) {
        return dump({{"k", cmp.k},
                     {"initials", strings(cmp.initials)},
                     {"a", to_string(cmp.a)},
                     {"N", cmp.order},
                     {"grid", grid},
                     {"max_error", err},
                     {"precision_digits", cmp.digits}});
    }
    if (f == Format::Csv) {
        return "k,a,N,points,max_error,precision_digits\n" + std::to_string(cmp.k) + "," + to_string(cmp.a) + "," +
               std::to_string(cmp.order) + "," + std::to_string(grid.size()) + "," + err + "," +
               std::to_string(cmp.digits) + "\n";
    }
    return "closed-form comparison (" + label(cmp) + ")\n\n" + "- grid: " + std::to_string(grid.size()) +
           " points from " + (grid.empty() ? "-" : grid.front()) + " to " + (grid.empty() ? "-" : grid.back()) +
           "\n- max |series - closed form|: " + err + "\n- working precision: " + std::to_string(cmp.digits) +
           " digits\n";
}

std::string emit_report(const VerificationReport &report, Format f)
{
    const auto &checks = report.checks();
    if (f == Format::Json) {
        ordered_json list = ordered_json::array();
        for (const auto &c : checks) {
            list.push_back({{"id", c.id},
                            {"anchor", c.anchor},
                            {"range", c.range},
                            {"status", status_name(c.status)},
                            {"details", c.details},
                            {"known_erratum", c.known_erratum}});
        }
        std::size_t excused = 0;
        for (const auto &c : checks) {
            excused += c.known_erratum ? 1 : 0;
        }
        return dump({{"checks", list},
                     {"summary",
                      {{"total", checks.size()},
                       {"verified", report.count(Status::Verified)},
                       {"verified_with_offset", report.count(Status::VerifiedWithOffset)},
                       {"refuted_as_printed", report.count(Status::RefutedAsPrinted)},
                       {"known_errata", excused},
                       {"ok", !report.has_unexcused_refutation()}}}});
    }
    std::ostringstream os;
    if (f == Format::Csv) {
        os << "id,status,known_erratum,range,anchor,details\n";
        for (const auto &c : checks) {
            os << csv_field(c.id) << ',' << status_name(c.status) << ',' << (c.known_erratum ? "yes" : "no") << ','
               << csv_field(c.range) << ',' << csv_field(c.anchor) << ',' << csv_field(c.details) << '\n';
        }
        return os.str();
    }
    os << "| id | status | range | identity | details |\n|---|---|---|---|---|\n";
    for (const auto &c : checks) {
        os << "| " << md_cell(c.id) << " | " << status_name(c.status) << (c.known_erratum ? " (known erratum)" : "")
           << " | " << md_cell(c.range) << " | " << md_cell(c.anchor) << " | " << md_cell(c.details) << " |\n";
    }
    os << "\n" << checks.size() << " checks: " << report.count(Status::Verified) << " verified, "
       << report.count(Status::VerifiedWithOffset) << " verified-with-offset, "
       << report.count(Status::RefutedAsPrinted) << " refuted-as-printed";
    std::size_t unexcused = 0;
    for (const auto &c : checks) {
        unexcused += c.status == Status::RefutedAsPrinted && !c.known_erratum ? 1 : 0;
    }
    os << " (" << unexcused << " not known errata)\n";
    return os.str();
}

std::string emit_bell(const BellResult &r, Format f)
{
    const std::string name =
        r.k < 0 ? "B_" + std::to_string(r.n) : "B_{" + std::to_string(r.n) + "," + std::to_string(r.k) + "}";
    if (f == Format::Json) {
        ordered_json j{{"n", r.n}};
        j["k"] = r.k < 0 ? ordered_json(nullptr) : ordered_json(r.k);
        j["arguments"] = r.arguments;
        j["value"] = r.value;
        return dump(j);
    }
    if (f == Format::Csv) {
        return "n,k,value\n" + std::to_string(r.n) + "," + (r.k < 0 ? "" : std::to_string(r.k)) + "," +
               csv_field(r.value) + "\n";
    }
    return name + "(" + joined(r.arguments, ", ") + ") = " + r.value + "\n";
}

} // namespace autobell
