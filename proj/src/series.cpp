#include <autobell/errors.hpp>
#include <autobell/series.hpp>

#include <algorithm>

namespace autobell
{

FormalSeries::FormalSeries(std::size_t order, bool truncated) : coeffs_(order + 1), truncated_(truncated) {}

FormalSeries::FormalSeries(std::vector<MultiPoly> coefficients, bool truncated)
    : coeffs_(std::move(coefficients)), truncated_(truncated)
{
    if (coeffs_.empty()) {
        throw ArgumentError("a series needs at least its constant coefficient");
    }
}

namespace
{

bool result_truncated(const FormalSeries &lhs, const FormalSeries &rhs)
{
    return lhs.truncated() || rhs.truncated() || lhs.order() != rhs.order();
}

} // namespace

FormalSeries operator+(const FormalSeries &lhs, const FormalSeries &rhs)
{
    const std::size_t n = std::min(lhs.order(), rhs.order());
    std::vector<MultiPoly> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        c[i] = lhs[i] + rhs[i];
    }
    return FormalSeries(std::move(c), result_truncated(lhs, rhs));
}

FormalSeries operator-(const FormalSeries &lhs, const FormalSeries &rhs)
{
    const std::size_t n = std::min(lhs.order(), rhs.order());
    std::vector<MultiPoly> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        c[i] = lhs[i] - rhs[i];
    }
    return FormalSeries(std::move(c), result_truncated(lhs, rhs));
}

FormalSeries operator*(const FormalSeries &lhs, const FormalSeries &rhs)
{
    const std::size_t n = std::min(lhs.order(), rhs.order());
    std::vector<MultiPoly> c(n + 1);
    for (std::size_t m = 0; m <= n; ++m) {
        for (std::size_t i = 0; i <= m; ++i) {
            if (lhs[i].is_zero() || rhs[m - i].is_zero()) {
                continue;
            }
            c[m] += binomial(static_cast<unsigned>(m), static_cast<unsigned>(i)) * (lhs[i] * rhs[m - i]);
        }
    }
    // A product of two polynomials in t may exceed the stored order.
    return FormalSeries(std::move(c), true);
}

FormalSeries operator*(const FormalSeries &s, const MultiPoly &c)
{
    std::vector<MultiPoly> out(s.coefficients().begin(), s.coefficients().end());
    for (auto &coeff : out) {
        coeff = coeff * c;
    }
    return FormalSeries(std::move(out), s.truncated());
}

FormalSeries truncate(const FormalSeries &s, std::size_t order)
{
    if (order >= s.order()) {
        return s;
    }
    const auto c = s.coefficients();
    return FormalSeries(std::vector<MultiPoly>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(order) + 1), true);
}

FormalSeries series_exp(const FormalSeries &s)
{
    if (!s[0].is_zero()) {
        throw ArgumentError("series_exp needs a zero constant term");
    }
    const std::size_t n = s.order();
    // E' = E s'  =>  E_{m+1} = sum_i C(m,i) E_{m-i} s_{i+1}.
    std::vector<MultiPoly> e(n + 1);
    e[0] = MultiPoly(1);
    for (std::size_t m = 0; m + 1 <= n; ++m) {
        MultiPoly next;
        for (std::size_t i = 0; i <= m; ++i) {
            if (s[i + 1].is_zero() || e[m - i].is_zero()) {
                continue;
            }
            next += binomial(static_cast<unsigned>(m), static_cast<unsigned>(i)) * (e[m - i] * s[i + 1]);
        }
        e[m + 1] = std::move(next);
    }
    return FormalSeries(std::move(e), true);
}

FormalSeries series_diff(const FormalSeries &s, std::size_t times)
{
    if (times > s.order()) {
        throw OrderExhausted("cannot differentiate " + std::to_string(times) + " times a series of order " +
                             std::to_string(s.order()));
    }
    const auto c = s.coefficients();
    return FormalSeries(std::vector<MultiPoly>(c.begin() + static_cast<std::ptrdiff_t>(times), c.end()),
                        s.truncated());
}

} // namespace autobell
