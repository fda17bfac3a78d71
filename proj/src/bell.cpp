#include <autobell/bell.hpp>

namespace autobell
{

std::vector<MultiPoly> symbolic_args(unsigned m, std::string_view prefix)
{
    std::vector<MultiPoly> xs;
    xs.reserve(m);
    for (unsigned i = 1; i <= m; ++i) {
        xs.push_back(MultiPoly::variable(indexed_var(prefix, i)));
    }
    return xs;
}

namespace
{

// Triangle T(n,k) with T(0,0)=1 and T(n,k) = T(n-1,k-1) + w(n,k) T(n-1,k).
template <class Weight>
Integer triangle(unsigned n, unsigned k, Weight w)
{
    if (k > n) {
        return 0;
    }
    std::vector<Integer> row{1};
    for (unsigned i = 1; i <= n; ++i) {
        std::vector<Integer> next(i + 1, 0);
        for (unsigned j = 0; j <= i; ++j) {
            if (j >= 1) {
                next[j] += row[j - 1];
            }
            if (j < i) {
                next[j] += w(i, j) * row[j];
            }
        }
        row = std::move(next);
    }
    return row[k];
}

} // namespace

Integer stirling1_unsigned(unsigned n, unsigned k)
{
    return triangle(n, k, [](unsigned i, unsigned) { return Integer(i - 1); });
}

Integer stirling2(unsigned n, unsigned k)
{
    return triangle(n, k, [](unsigned, unsigned j) { return Integer(j); });
}

Integer lah_number(unsigned n, unsigned k)
{
    if (k > n) {
        return 0;
    }
    if (n == 0) {
        return 1;
    }
    if (k == 0) {
        return 0;
    }
    return binomial(n - 1, k - 1) * factorial(n) / factorial(k);
}

Integer idempotent_number(unsigned n, unsigned k)
{
    if (k > n) {
        return 0;
    }
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), k, n - k);
    return binomial(n, k) * power;
}

std::vector<Rational> special_arguments(SpecialKind kind, unsigned m)
{
    std::vector<Rational> xs;
    xs.reserve(m);
    for (unsigned i = 1; i <= m; ++i) {
        switch (kind) {
        case SpecialKind::Stirling1Unsigned:
            xs.emplace_back(factorial(i - 1));
            break;
        case SpecialKind::Stirling2:
            xs.emplace_back(1);
            break;
        case SpecialKind::Lah:
            xs.emplace_back(factorial(i));
            break;
        case SpecialKind::Idempotent:
            xs.emplace_back(i);
            break;
        }
    }
    return xs;
}

Rational special_value(SpecialKind kind, unsigned n, unsigned k)
{
    if (k > n) {
        throw ArgumentError("special values need k <= n");
    }
    const auto xs = special_arguments(kind, n - k + 1);
    const Rational via_bell = bell_partial<Rational>(n, k, xs);
    Integer classical;
    const char *name = "";
    switch (kind) {
    case SpecialKind::Stirling1Unsigned:
        classical = stirling1_unsigned(n, k);
        name = "stirling1";
        break;
    case SpecialKind::Stirling2:
        classical = stirling2(n, k);
        name = "stirling2";
        break;
    case SpecialKind::Lah:
        classical = lah_number(n, k);
        name = "lah";
        break;
    case SpecialKind::Idempotent:
        classical = idempotent_number(n, k);
        name = "idempotent";
        break;
    }
    if (via_bell != Rational(classical)) {
        throw InternalInconsistency(std::string(name) + "(" + std::to_string(n) + "," + std::to_string(k) +
                                    "): Bell value " + to_string(via_bell) + " vs classical " +
                                    to_string(classical));
    }
    return via_bell;
}

} // namespace autobell
