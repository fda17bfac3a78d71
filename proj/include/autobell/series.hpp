#pragma once

#include <span>
#include <vector>

#include <autobell/polynomial.hpp>

namespace autobell
{

// Truncated power series in t, stored in exponential convention:
// the series is sum_{n=0}^{N} c_n t^n / n!. Differentiation is a left
// shift and Bell identities read off coefficientwise.
class FormalSeries
{
public:
    // Zero series of the given order.
    explicit FormalSeries(std::size_t order = 0, bool truncated = true);
    // coefficients must be non-empty; order = size - 1.
    explicit FormalSeries(std::vector<MultiPoly> coefficients, bool truncated = true);

    std::size_t order() const noexcept
    {
        return coeffs_.size() - 1;
    }
    // True when higher-order terms were cut off (the series stands for an
    // infinite one known only through `order`).
    bool truncated() const noexcept
    {
        return truncated_;
    }
    const MultiPoly &operator[](std::size_t n) const
    {
        return coeffs_.at(n);
    }
    std::span<const MultiPoly> coefficients() const noexcept
    {
        return coeffs_;
    }

    friend bool operator==(const FormalSeries &, const FormalSeries &) = default;

private:
    std::vector<MultiPoly> coeffs_;
    bool truncated_ = true;
};

// Results have the order of the less precise operand.
FormalSeries operator+(const FormalSeries &lhs, const FormalSeries &rhs);
FormalSeries operator-(const FormalSeries &lhs, const FormalSeries &rhs);
// Exponential-convention product: c_n = sum_i C(n,i) a_i b_{n-i}.
FormalSeries operator*(const FormalSeries &lhs, const FormalSeries &rhs);
FormalSeries operator*(const FormalSeries &s, const MultiPoly &c);

FormalSeries truncate(const FormalSeries &s, std::size_t order);

// exp(s) to the order of s; requires s[0] == 0 (ArgumentError otherwise).
// Coefficient n equals the complete Bell polynomial B_n(s_1, ..., s_n).
FormalSeries series_exp(const FormalSeries &s);

// d^times/dt^times; the order drops by `times`. OrderExhausted when
// times > order.
FormalSeries series_diff(const FormalSeries &s, std::size_t times = 1);

} // namespace autobell
