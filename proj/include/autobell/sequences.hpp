#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <autobell/rational.hpp>
#include <autobell/report.hpp>

namespace autobell
{

struct SequenceTable {
    std::string name;
    std::string oeis; // empty when there is no entry
    unsigned first_index = 1;
    std::vector<Rational> terms; // terms[j] has index first_index + j
    std::string note;

    const Rational &at(unsigned index) const
    {
        return terms.at(index - first_index);
    }
};

// Names accepted by sequence(), in a fixed order.
const std::vector<std::string> &sequence_names();

// Printed prefix of a named sequence (may be empty).
const std::vector<Integer> &printed_terms(std::string_view name);

// Positions (sequence indices) where the printed prefix is a known print
// error and the computed value is kept.
std::vector<unsigned> erratum_indices(std::string_view name);

// The first `count` terms of a named sequence. Terms disagreeing with the
// printed prefix raise InternalInconsistency naming the first bad index,
// except at erratum_indices(name). ArgumentError for an unknown name or
// count == 0.
SequenceTable sequence(std::string_view name, unsigned count);

// Euler zigzag numbers zz_0..zz_{count-1}: Bell recursion
// zz_{n+1} = B_n(zz_0, ..., zz_{n-1}) from zz_0 = zz_1 = 1.
std::vector<Integer> zigzag_by_bell(unsigned count);
// Same numbers from the boustrophedon (Entringer) triangle.
std::vector<Integer> zigzag_boustrophedon(unsigned count);

// A_1^(k)(1,1), ..., A_count^(k)(1,1).
std::vector<Integer> autonomous_ones(unsigned k, unsigned count);

// s_0..s_{count-1} with s_0 = ... = s_{p-1} = 1 and
// s_{n+p} = sum_{j=0}^{n} S(n,j) s_j.
std::vector<Integer> stirling_shift(unsigned p, unsigned count);

// |b_m| for even m >= 2 from sum_{j=0}^{m} C(m+1, j) b_j = 0, b_0 = 1.
// ArgumentError for odd or zero m.
Rational bernoulli_abs(unsigned m);

// 2^n (2^{2n} - 1) |b_{2n}| / n.
Rational tangent_from_bernoulli(unsigned n);

// n! = sum_i |s(n,i)|; s(n+1,i+1) = sum_j n!/j! s(j,i); T_n against the
// Bernoulli formula. All n <= N.
VerificationReport cross_checks(unsigned N);

} // namespace autobell
