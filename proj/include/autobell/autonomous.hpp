#pragma once

#include <span>
#include <vector>

#include <autobell/bell.hpp>
#include <autobell/polynomial.hpp>

namespace autobell
{

// Symbols of the u-encoding: f_n is a polynomial in u = a*e^{x1} and the
// initial derivatives x2..xk. Autonomous polynomials live in x and a.
Var u_var();
Var a_var();
Var x_var();
// x_j, j >= 1.
Var slot_var(unsigned j);

// wt(u) = k, wt(x_j) = j - 1 for j = 2..k.
Weights scaling_weights(unsigned k);

// Coefficients f_n of the series solution of y^(k) = a e^y for one order k:
//   f_1..f_{k-1} = slots, f_k = lead, f_{n+k} = lead * B_n(f_1, ..., f_n).
// The default constructor arguments give the symbolic functions (slots
// x2..xk, lead u). Other slot/lead choices specialise the same recursion,
// e.g. slots 0 for the A-numbers or slots x and lead a for the autonomous
// polynomials. Memoised; one instance per thread.
class AutonomousSystem
{
public:
    explicit AutonomousSystem(unsigned k);
    AutonomousSystem(unsigned k, std::vector<MultiPoly> slots, MultiPoly lead);

    unsigned order() const noexcept
    {
        return k_;
    }
    // n >= 1.
    const MultiPoly &f(unsigned n);

private:
    unsigned k_;
    MultiPoly lead_;
    std::vector<MultiPoly> values_; // values_[n-1] = f_n
    CompleteBellSequence<MultiPoly> bell_;
};

// f_n(x, a) in the u-encoding. f_0 is returned as the bare symbol x1; it is
// not part of the u-encoding and only enters at series assembly.
MultiPoly auto_f(unsigned n, unsigned k);

// Same functions through the convolution recurrence
//   f_{n+k+1} = sum_{i=0}^{n} C(n, i) f_{n-i+k} f_{i+1}.
MultiPoly auto_f_alt(unsigned n, unsigned k);

// f_1..f_count by the convolution recurrence, for arbitrary slots/lead.
std::vector<MultiPoly> autonomous_by_convolution(unsigned k, std::span<const MultiPoly> slots, const MultiPoly &lead,
                                                 unsigned count);

// g_{n,i} = B_{n,i}(f_1, ..., f_{n-i+1}) with g_{0,0} = 1, g_{n,0} = 0 and
// g_{0,i} = 0. Computed by the recurrence
//   g_{n,i} = sum_j C(n-1, j-1) f_j g_{n-j,i-1}
// and checked against the explicit partition sum.
MultiPoly auto_g(unsigned n, unsigned i, unsigned k);

// A_1^(k)(a), ..., A_N^(k)(a) as polynomials in a.
struct ASequence {
    unsigned k = 1;
    std::vector<MultiPoly> entries; // entries[n-1] = A_n

    const MultiPoly &operator[](unsigned n) const
    {
        return entries.at(n - 1);
    }
    // A_n^(k)(1).
    Rational at_one(unsigned n) const;
};

// A_1 = a and
//   A_{n+2} = sum_{i=0}^{n} C(kn+k-1, ki+k-1) A_{n-i+1} A_{i+1},
// verified against the Bell construction A_n = a B_{k(n-1)}(0,..,0,A_1,0,..,0,A_2,...)
// (A_j in slot kj) and against f_{kn} at zero initial derivatives. Any
// disagreement raises InternalInconsistency.
ASequence a_sequence(unsigned k, unsigned N);

// A_n^(k)(x, a): f_n at the initial vector (0, x, ..., x). Memoised per k;
// each value is computed as a B_{n-k}(A_1, ..., A_{n-k}) and checked against
// the symbolic f_n with u -> a, x_j -> x.
class AutonomousPolynomials
{
public:
    explicit AutonomousPolynomials(unsigned k);

    unsigned order() const noexcept
    {
        return k_;
    }
    // n >= 1.
    const MultiPoly &operator()(unsigned n);

private:
    unsigned k_;
    AutonomousSystem bell_path_;
    AutonomousSystem symbolic_;
    std::vector<bool> checked_;
};

MultiPoly auto_poly(unsigned n, unsigned k);

// Rows n = 0..N of the (k,a)-autonomous coefficients: row n lists the
// coefficients of x^0..x^n in A_{n+k}^(k)(x, a).
struct CoefficientTable {
    unsigned k = 1;
    std::vector<std::vector<MultiPoly>> rows;

    std::size_t row_count() const noexcept
    {
        return rows.size();
    }
    // Zero outside 0 <= i <= n.
    MultiPoly at(long n, long i) const;
    // Row sum at x = 1.
    MultiPoly row_sum(unsigned n) const;
    // Every entry with a set to `a`.
    CoefficientTable at_a(const Rational &a) const;

    friend bool operator==(const CoefficientTable &, const CoefficientTable &) = default;
};

CoefficientTable coeff_table(unsigned k, unsigned N);

// (k,1)-coefficients from the three-branch binomial recurrence alone
// (k >= 2), without checking.
CoefficientTable coeff_by_recurrence(unsigned k, unsigned N);

// coeff_by_recurrence, verified entry by entry against coeff_table at a = 1;
// InternalInconsistency names the first (n, i) that differs.
CoefficientTable coeff_recur(unsigned k, unsigned N);

} // namespace autobell
