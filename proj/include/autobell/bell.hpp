#pragma once

#include <concepts>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <autobell/errors.hpp>
#include <autobell/polynomial.hpp>
#include <autobell/rational.hpp>

namespace autobell
{

// Exact commutative ring used as Bell argument type: Rational or MultiPoly.
template <class R>
concept BellRing = std::copyable<R> && std::equality_comparable<R> && std::constructible_from<R, int> &&
                   requires(const R a, const R b, const Integer z) {
                       { a + b } -> std::convertible_to<R>;
                       { a * b } -> std::convertible_to<R>;
                       { a * z } -> std::convertible_to<R>;
                   };

namespace detail
{

inline bool is_zero(const Rational &q)
{
    return q == 0;
}
inline bool is_zero(const MultiPoly &p)
{
    return p.is_zero();
}

template <BellRing R>
R ring_pow(const R &base, unsigned exp)
{
    R result(1);
    for (unsigned i = 0; i < exp; ++i) {
        result = result * base;
    }
    return result;
}

inline void require_partial_args(unsigned n, unsigned k, std::size_t have)
{
    if (k > n) {
        throw ArgumentError("B_{n,k} needs k <= n (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
    }
    if (k >= 1 && have < n - k + 1) {
        throw ArgumentError("B_{" + std::to_string(n) + "," + std::to_string(k) + "} needs " +
                            std::to_string(n - k + 1) + " arguments, got " + std::to_string(have));
    }
}

} // namespace detail

// Memo of partial Bell polynomials B_{n,k}(x_1, ...) for one fixed argument
// list, filled by
//   B_{n,k} = sum_{i=1}^{n-k+1} C(n-1, i-1) x_i B_{n-i,k-1}.
// Not shared between threads; each computation owns its table.
template <BellRing R>
class PartialBellTable
{
public:
    explicit PartialBellTable(std::vector<R> xs) : xs_(std::move(xs)) {}

    std::span<const R> arguments() const noexcept
    {
        return xs_;
    }

    const R &operator()(unsigned n, unsigned k)
    {
        detail::require_partial_args(n, k, xs_.size());
        return get(n, k);
    }

private:
    const R &get(unsigned n, unsigned k)
    {
        if (memo_.size() <= n) {
            memo_.resize(n + 1);
        }
        auto &row = memo_[n];
        // Full width up front: references handed out stay valid.
        if (row.empty()) {
            row.resize(n + 1);
        }
        if (row[k]) {
            return *row[k];
        }
        R value(0);
        if (n == 0 && k == 0) {
            value = R(1);
        } else if (n != 0 && k != 0) {
            for (unsigned i = 1; i <= n - k + 1; ++i) {
                if (detail::is_zero(xs_[i - 1])) {
                    continue;
                }
                const R &rest = get(n - i, k - 1);
                if (detail::is_zero(rest)) {
                    continue;
                }
                value = value + (xs_[i - 1] * rest) * binomial(n - 1, i - 1);
            }
        }
        // Recursion may have grown memo_; re-index rather than reuse `row`.
        memo_[n][k] = std::move(value);
        return *memo_[n][k];
    }

    std::vector<R> xs_;
    std::vector<std::vector<std::optional<R>>> memo_;
};

// Incremental complete Bell values B_0, B_1, ... for one argument list via
//   B_{m+1} = sum_{i=0}^{m} C(m, i) B_{m-i} x_{i+1}.
// B_m depends only on x_1..x_m, so arguments may be appended as they become
// known (used when the arguments are defined through earlier Bell values).
template <BellRing R>
class CompleteBellSequence
{
public:
    CompleteBellSequence() : values_{R(1)} {}
    explicit CompleteBellSequence(std::vector<R> xs) : xs_(std::move(xs)), values_{R(1)} {}

    void push_argument(R x)
    {
        xs_.push_back(std::move(x));
    }
    std::size_t argument_count() const noexcept
    {
        return xs_.size();
    }

    const R &operator()(unsigned n)
    {
        if (n > xs_.size()) {
            throw ArgumentError("B_" + std::to_string(n) + " needs " + std::to_string(n) + " arguments, got " +
                                std::to_string(xs_.size()));
        }
        while (values_.size() <= n) {
            const auto m = static_cast<unsigned>(values_.size() - 1);
            R next(0);
            for (unsigned i = 0; i <= m; ++i) {
                if (detail::is_zero(xs_[i]) || detail::is_zero(values_[m - i])) {
                    continue;
                }
                next = next + (values_[m - i] * xs_[i]) * binomial(m, i);
            }
            values_.push_back(std::move(next));
        }
        return values_[n];
    }

private:
    std::vector<R> xs_;
    std::vector<R> values_;
};

// Production path: recurrence.
template <BellRing R>
R bell_partial(unsigned n, unsigned k, std::span<const R> xs)
{
    detail::require_partial_args(n, k, xs.size());
    PartialBellTable<R> table(std::vector<R>(xs.begin(), xs.end()));
    return table(n, k);
}

// Oracle path: direct sum over c-vectors with c_1 + 2c_2 + ... = n and
// c_1 + c_2 + ... = k, coefficient n! / prod(c_j! (j!)^{c_j}). Vectors are
// visited in lexicographic order with pruning on both constraints.
template <BellRing R>
R bell_partial_explicit(unsigned n, unsigned k, std::span<const R> xs)
{
    detail::require_partial_args(n, k, xs.size());
    if (k == 0) {
        return R(n == 0 ? 1 : 0);
    }
    const unsigned m = n - k + 1;
    std::vector<unsigned> c(m + 1, 0);
    R total(0);
    const Integer nfact = factorial(n);

    // Descend j = 1..m with `parts` blocks and `size` elements still to place.
    auto visit = [&](auto &&self, unsigned j, unsigned parts, unsigned size) -> void {
        if (j > m) {
            if (parts == 0 && size == 0) {
                Integer denom = 1;
                R monomial(1);
                for (unsigned i = 1; i <= m; ++i) {
                    if (c[i] == 0) {
                        continue;
                    }
                    Integer jf = factorial(i);
                    Integer jpow;
                    mpz_pow_ui(jpow.get_mpz_t(), jf.get_mpz_t(), c[i]);
                    denom *= factorial(c[i]) * jpow;
                    monomial = monomial * detail::ring_pow(xs[i - 1], c[i]);
                }
                const Integer coeff = nfact / denom;
                total = total + monomial * coeff;
            }
            return;
        }
        const unsigned cap = std::min(parts, size / j);
        for (unsigned cj = 0; cj <= cap; ++cj) {
            const unsigned parts_left = parts - cj;
            const unsigned size_left = size - cj * j;
            // Remaining blocks have sizes in [j+1, m].
            if (parts_left == 0 ? size_left != 0
                                : (size_left < parts_left * (j + 1) || size_left > parts_left * m)) {
                continue;
            }
            c[j] = cj;
            self(self, j + 1, parts_left, size_left);
            c[j] = 0;
        }
    };
    visit(visit, 1, k, n);
    return total;
}

template <BellRing R>
R bell_complete(unsigned n, std::span<const R> xs)
{
    if (xs.size() < n) {
        throw ArgumentError("B_" + std::to_string(n) + " needs " + std::to_string(n) + " arguments, got " +
                            std::to_string(xs.size()));
    }
    CompleteBellSequence<R> seq(std::vector<R>(xs.begin(), xs.begin() + n));
    return seq(n);
}

// Sum over k of the partial polynomials; cross-check for bell_complete.
template <BellRing R>
R bell_complete_by_partials(unsigned n, std::span<const R> xs)
{
    if (xs.size() < n) {
        throw ArgumentError("B_" + std::to_string(n) + " needs " + std::to_string(n) + " arguments");
    }
    if (n == 0) {
        return R(1);
    }
    PartialBellTable<R> table(std::vector<R>(xs.begin(), xs.begin() + n));
    R sum(0);
    for (unsigned k = 1; k <= n; ++k) {
        sum = sum + table(n, k);
    }
    return sum;
}

// Diagonal closed forms for B_{n,n-offset}, offset in 0..4. Needs
// offset+1 arguments; binomials with upper < lower vanish.
template <BellRing R>
R bell_closed_form(unsigned n, unsigned offset, std::span<const R> xs)
{
    if (offset > 4) {
        throw ArgumentError("closed forms exist for offsets 0..4, got " + std::to_string(offset));
    }
    if (n < offset) {
        throw ArgumentError("B_{n,n-a} needs n >= a");
    }
    if (xs.size() < offset + 1) {
        throw ArgumentError("B_{n,n-" + std::to_string(offset) + "} needs " + std::to_string(offset + 1) +
                            " arguments");
    }
    const auto x = [&](unsigned i) -> const R & { return xs[i - 1]; };
    // C(n, j) * x1^(n-j), zero when j > n.
    const auto lead = [&](unsigned j) -> R {
        if (j > n) {
            return R(0);
        }
        return detail::ring_pow(x(1), n - j) * binomial(n, j);
    };
    switch (offset) {
    case 0:
        return detail::ring_pow(x(1), n);
    case 1:
        return lead(2) * x(2);
    case 2:
        return lead(3) * x(3) + lead(4) * (detail::ring_pow(x(2), 2) * Integer(3));
    case 3:
        return lead(4) * x(4) + lead(5) * ((x(2) * x(3)) * Integer(10)) +
               lead(6) * (detail::ring_pow(x(2), 3) * Integer(15));
    default:
        return lead(5) * x(5) + lead(6) * ((x(2) * x(4)) * Integer(15) + (x(3) * x(3)) * Integer(10)) +
               lead(7) * ((detail::ring_pow(x(2), 2) * x(3)) * Integer(105)) +
               lead(8) * (detail::ring_pow(x(2), 4) * Integer(105));
    }
}

// x1, ..., xm as polynomials (prefix "x" by default).
std::vector<MultiPoly> symbolic_args(unsigned m, std::string_view prefix = "x");

// Classical combinatorial numbers, computed independently of Bell
// polynomials.
Integer stirling1_unsigned(unsigned n, unsigned k);
Integer stirling2(unsigned n, unsigned k);
Integer lah_number(unsigned n, unsigned k);
Integer idempotent_number(unsigned n, unsigned k);

enum class SpecialKind { Stirling1Unsigned, Stirling2, Lah, Idempotent };

// B_{n,k} at the argument list characterising `kind`, checked against the
// classical formula. InternalInconsistency if the two disagree.
Rational special_value(SpecialKind kind, unsigned n, unsigned k);

// Argument list for `kind` of length m: (0!,1!,...), (1,1,...), (1!,2!,...),
// (1,2,3,...).
std::vector<Rational> special_arguments(SpecialKind kind, unsigned m);

} // namespace autobell
