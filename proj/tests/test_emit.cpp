#include <autobell/emit.hpp>
#include <autobell/errors.hpp>

#include <doctest.h>
#include <json.hpp>

using namespace autobell;
using nlohmann::json;

TEST_CASE("table json uses compact coefficients")
{
    const json j = json::parse(emit_table(coeff_table(4, 7), Format::Json));
    CHECK(j["k"] == 4);
    CHECK(j["rows"].size() == 8);
    CHECK(j["rows"][7]["coeffs"][4] == "315a");
    CHECK(j["rows"][7]["coeffs"][3] == "64a^2 + 175a");
}

TEST_CASE("table markdown and csv")
{
    const std::string md = emit_table(coeff_table(2, 3), Format::Markdown);
    CHECK(md.find("| 3 | 0 | 4a^2 | 0 | a |") != std::string::npos);
    const std::string csv = emit_table(coeff_table(2, 2), Format::Csv);
    CHECK(csv.rfind("n,i,coeff\n0,0,a\n", 0) == 0);
}

TEST_CASE("sequence json has decimal strings")
{
    const json j = json::parse(emit_sequence(sequence("blasius", 5), Format::Json));
    CHECK(j["name"] == "blasius");
    CHECK(j["oeis"] == "A018893");
    CHECK(j["terms"] == json::array({"1", "1", "11", "375", "27897"}));
    const json d = json::parse(emit_sequence(sequence("autonomous4_ones", 3), Format::Json));
    CHECK(d["oeis"].is_null());
}

TEST_CASE("series and comparison")
{
    const json s = json::parse(emit_series(series_solution(2, {0, 0}, 1, 2), Format::Json));
    CHECK(s["coefficients"] == json::array({"0", "0", "1"}));
    const PrecisionScope p(40);
    const Comparison c = compare_closed_form(1, {0}, 1, 5, {Real("0.1")});
    const json j = json::parse(emit_comparison(c, Format::Json));
    CHECK(j["precision_digits"] == 40);
    CHECK(j["max_error"].is_string());
}

TEST_CASE("report formats")
{
    VerificationReport r;
    r.add({"x.one", "a | b", "n in [0..2]", Status::VerifiedWithOffset, "holds, shifted \"one\"", false});
    const json j = json::parse(emit_report(r, Format::Json));
    CHECK(j["checks"][0]["status"] == "verified-with-offset");
    CHECK(j["summary"]["ok"] == true);
    const std::string md = emit_report(r, Format::Markdown);
    CHECK(md.find("a \\| b") != std::string::npos);
    const std::string csv = emit_report(r, Format::Csv);
    CHECK(csv.find("\"holds, shifted \"\"one\"\"\"") != std::string::npos);
}

TEST_CASE("bell output")
{
    const BellResult r{4, 2, {"x1", "x2", "x3"}, "4*x1*x3 + 3*x2^2"};
    CHECK(emit_bell(r, Format::Markdown) == "B_{4,2}(x1, x2, x3) = 4*x1*x3 + 3*x2^2\n");
    CHECK(json::parse(emit_bell(r, Format::Json))["k"] == 2);
}

TEST_CASE("format names")
{
    CHECK(parse_format("csv") == Format::Csv);
    CHECK_THROWS_AS(parse_format("xml"), ArgumentError);
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
}
