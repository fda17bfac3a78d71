#include <autobell/errors.hpp>
#include <autobell/rational.hpp>

#include <cctype>

namespace autobell
{

Rational make_rational(const Integer &num, const Integer &den)
{
    if (den == 0) {
        throw ArgumentError("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace
{

Integer parse_integer(std::string_view text, std::string_view whole)
{
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) {
        throw ArgumentError("malformed rational '" + std::string(whole) + "'");
    }
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw ArgumentError("malformed rational '" + std::string(whole) + "'");
        }
    }
    Integer z(std::string(text.substr(pos)), 10);
    return negative ? Integer(-z) : z;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    return make_rational(parse_integer(text.substr(0, slash), text), parse_integer(text.substr(slash + 1), text));
}

std::string to_string(const Rational &q)
{
    return q.get_str();
}

std::string to_string(const Integer &z)
{
    return z.get_str();
}

Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned n, unsigned k)
{
    if (k > n) {
        return 0;
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer binomial_signed(long n, long k)
{
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    return binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
}

Rational pow(const Rational &base, unsigned exp)
{
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exp);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exp);
    return r;
}

} // namespace autobell
