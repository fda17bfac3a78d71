#pragma once

#include <string_view>
#include <vector>

#include <autobell/report.hpp>

namespace autobell
{

enum class Scope { All, Identities, Conjectures, Tables, Sequences };

// "all", "identities", "conjectures", "tables", "sequences".
Scope parse_scope(std::string_view text);
std::string_view scope_name(Scope s);

struct SuiteRanges {
    // Bound for checks on symbolic polynomials.
    unsigned symbolic_n = 14;
    // Bound for checks on integer sequences.
    unsigned numeric_n = 25;
    // Orders covered by the conjecture and table checks.
    std::vector<unsigned> ks{2, 3, 4};
    // Table rows to compare; 0 means every printed row.
    unsigned table_rows = 0;
};

// A_{n+k}^(k)(1,1) = sum_{i=1}^{n} S(n,i) A_i^(k)(1,1), n <= N.
CheckResult check_conjecture1(unsigned k, unsigned N);
// The coefficient-sum form of the same statement.
CheckResult check_conjecture1_sum_form(unsigned k, unsigned N);
// [[n,n-2]]_(2,a) = a^2 (2^n - n - 1), 2 <= n <= N.
CheckResult check_conjecture2(unsigned N);
// [[n,n-2]]_(3,a) = a C(C(n,2),2) with an index offset search.
CheckResult check_conjecture3(unsigned N);
// [[n,n-3]]_(4,a) = (5a/2)(n-1) C(n,5), 5 <= n <= N.
CheckResult check_conjecture4(unsigned N);

// Bell identities, autonomous-function identities and coefficient values.
VerificationReport run_identity_suite(const SuiteRanges &ranges);
VerificationReport run_conjecture_suite(const SuiteRanges &ranges);
// Printed coefficient tables and polynomial listings.
VerificationReport run_table_suite(const SuiteRanges &ranges);
// Printed sequences and the identities stated for them.
VerificationReport run_sequence_suite(const SuiteRanges &ranges);

VerificationReport run_suite(Scope scope, const SuiteRanges &ranges);

} // namespace autobell
