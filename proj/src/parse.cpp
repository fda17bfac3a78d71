#include <autobell/errors.hpp>
#include <autobell/polynomial.hpp>

#include <cctype>

namespace autobell
{

namespace
{

class Parser
{
public:
    explicit Parser(std::string_view text) : text_(text) {}

    MultiPoly parse()
    {
        MultiPoly p = expr();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected character");
        }
        return p;
    }

private:
    [[noreturn]] void fail(const std::string &why) const
    {
        throw ArgumentError("cannot parse polynomial '" + std::string(text_) + "': " + why + " at offset " +
                            std::to_string(pos_));
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool starts_factor()
    {
        const char c = peek();
        return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
    }

    MultiPoly expr()
    {
        MultiPoly sum;
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = text_[pos_++] == '-';
        }
        MultiPoly t = term();
        sum += negate ? -t : t;
        while (peek() == '+' || peek() == '-') {
            negate = text_[pos_++] == '-';
            t = term();
            sum += negate ? -t : t;
        }
        return sum;
    }

    MultiPoly term()
    {
        MultiPoly prod = factor();
        while (true) {
            if (peek() == '*') {
                ++pos_;
                prod *= factor();
            } else if (starts_factor()) {
                prod *= factor();
            } else {
                return prod;
            }
        }
    }

    MultiPoly factor()
    {
        MultiPoly base = primary();
        if (peek() == '^') {
            ++pos_;
            skip_space();
            const Integer e = digits();
            if (!e.fits_uint_p()) {
                fail("exponent too large");
            }
            base = pow(base, static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    Integer digits()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected digits");
        }
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
    }

    MultiPoly primary()
    {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            MultiPoly inner = expr();
            if (peek() != ')') {
                fail("expected ')'");
            }
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const Integer num = digits();
            if (peek() == '/') {
                ++pos_;
                skip_space();
                const Integer den = digits();
                if (den == 0) {
                    fail("zero denominator");
                }
                return MultiPoly(make_rational(num, den));
            }
            return MultiPoly(Rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            return MultiPoly::variable(text_.substr(start, pos_ - start));
        }
        fail("expected a number, variable or '('");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

MultiPoly parse_poly(std::string_view text)
{
    return Parser(text).parse();
}

} // namespace autobell
