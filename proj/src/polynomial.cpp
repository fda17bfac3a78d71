#include <autobell/errors.hpp>
#include <autobell/polynomial.hpp>

#include <algorithm>
#include <sstream>

namespace autobell
{

// ---- Monomial ----

Monomial::Monomial(Var v, std::uint32_t exp)
{
    if (exp != 0) {
        entries_.emplace_back(v, exp);
    }
}

Monomial::Monomial(std::vector<Entry> entries)
{
    std::sort(entries.begin(), entries.end());
    for (const auto &[v, e] : entries) {
        if (e == 0) {
            continue;
        }
        if (!entries_.empty() && entries_.back().first == v) {
            entries_.back().second += e;
        } else {
            entries_.emplace_back(v, e);
        }
    }
}

std::uint32_t Monomial::exponent(Var v) const noexcept
{
    for (const auto &[w, e] : entries_) {
        if (w == v) {
            return e;
        }
    }
    return 0;
}

unsigned long Monomial::total_degree() const noexcept
{
    unsigned long d = 0;
    for (const auto &entry : entries_) {
        d += entry.second;
    }
    return d;
}

Monomial Monomial::without(Var v) const
{
    Monomial m;
    for (const auto &entry : entries_) {
        if (entry.first != v) {
            m.entries_.push_back(entry);
        }
    }
    return m;
}

Monomial operator*(const Monomial &lhs, const Monomial &rhs)
{
    Monomial out;
    out.entries_.reserve(lhs.entries_.size() + rhs.entries_.size());
    auto i = lhs.entries_.begin();
    auto j = rhs.entries_.begin();
    while (i != lhs.entries_.end() && j != rhs.entries_.end()) {
        if (i->first == j->first) {
            out.entries_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        } else if (i->first < j->first) {
            out.entries_.push_back(*i++);
        } else {
            out.entries_.push_back(*j++);
        }
    }
    out.entries_.insert(out.entries_.end(), i, lhs.entries_.end());
    out.entries_.insert(out.entries_.end(), j, rhs.entries_.end());
    return out;
}

// ---- MultiPoly ----

MultiPoly::MultiPoly(const Rational &c)
{
    if (c != 0) {
        terms_.emplace(Monomial{}, c);
    }
}

MultiPoly::MultiPoly(const Rational &c, Monomial m)
{
    if (c != 0) {
        terms_.emplace(std::move(m), c);
    }
}

MultiPoly MultiPoly::variable(Var v)
{
    return MultiPoly(Rational(1), Monomial(v));
}

bool MultiPoly::is_constant() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MultiPoly::constant_term() const
{
    return coefficient(Monomial{});
}

Rational MultiPoly::coefficient(const Monomial &m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Var> MultiPoly::variables() const
{
    std::vector<Var> vars;
    for (const auto &term : terms_) {
        for (const auto &entry : term.first.entries()) {
            vars.push_back(entry.first);
        }
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    std::sort(vars.begin(), vars.end(), Var::precedes);
    return vars;
}

void MultiPoly::add_term(const Rational &c, const Monomial &m)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

MultiPoly &MultiPoly::operator+=(const MultiPoly &rhs)
{
    for (const auto &[m, c] : rhs.terms_) {
        add_term(c, m);
    }
    return *this;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &rhs)
{
    for (const auto &[m, c] : rhs.terms_) {
        add_term(-c, m);
    }
    return *this;
}

MultiPoly &MultiPoly::operator*=(const MultiPoly &rhs)
{
    *this = *this * rhs;
    return *this;
}

MultiPoly &MultiPoly::operator*=(const Rational &c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &term : terms_) {
        term.second *= c;
    }
    return *this;
}

MultiPoly operator*(const MultiPoly &lhs, const MultiPoly &rhs)
{
    MultiPoly out;
    if (lhs.is_zero() || rhs.is_zero()) {
        return out;
    }
    Rational prod;
    for (const auto &[m1, c1] : lhs.terms_) {
        for (const auto &[m2, c2] : rhs.terms_) {
            prod = c1 * c2;
            auto [it, inserted] = out.terms_.try_emplace(m1 * m2, prod);
            if (!inserted) {
                it->second += prod;
            }
        }
    }
    std::erase_if(out.terms_, [](const auto &term) { return term.second == 0; });
    return out;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly out = *this;
    for (auto &term : out.terms_) {
        term.second = -term.second;
    }
    return out;
}

MultiPoly pow(const MultiPoly &p, unsigned exp)
{
    MultiPoly result(1);
    MultiPoly base = p;
    while (exp != 0) {
        if (exp & 1U) {
            result *= base;
        }
        exp >>= 1U;
        if (exp != 0) {
            base *= base;
        }
    }
    return result;
}

Rational poly_eval(const MultiPoly &p, const Assignment &assignment)
{
    Rational sum = 0;
    for (const auto &[m, c] : p.terms()) {
        Rational term = c;
        for (const auto &[v, e] : m.entries()) {
            auto it = assignment.find(v);
            if (it == assignment.end()) {
                throw UnboundVariable(v.name());
            }
            term *= pow(it->second, e);
        }
        sum += term;
    }
    return sum;
}

MultiPoly specialize(const MultiPoly &p, const Assignment &assignment)
{
    MultiPoly out;
    for (const auto &[m, c] : p.terms()) {
        Rational coeff = c;
        std::vector<Monomial::Entry> kept;
        for (const auto &entry : m.entries()) {
            if (auto it = assignment.find(entry.first); it != assignment.end()) {
                coeff *= pow(it->second, entry.second);
            } else {
                kept.push_back(entry);
            }
        }
        out.add_term(coeff, Monomial(std::move(kept)));
    }
    return out;
}

MultiPoly substitute(const MultiPoly &p, const std::map<Var, MultiPoly> &images)
{
    MultiPoly out;
    for (const auto &[m, c] : p.terms()) {
        MultiPoly term(c);
        std::vector<Monomial::Entry> kept;
        for (const auto &entry : m.entries()) {
            if (auto it = images.find(entry.first); it != images.end()) {
                term *= pow(it->second, entry.second);
            } else {
                kept.push_back(entry);
            }
        }
        out += term * MultiPoly(Rational(1), Monomial(std::move(kept)));
    }
    return out;
}

std::optional<unsigned> degree_in(const MultiPoly &p, Var v)
{
    if (p.is_zero()) {
        return std::nullopt;
    }
    unsigned d = 0;
    for (const auto &term : p.terms()) {
        d = std::max<unsigned>(d, term.first.exponent(v));
    }
    return d;
}

std::vector<MultiPoly> coefficients_in(const MultiPoly &p, Var v)
{
    const auto deg = degree_in(p, v);
    if (!deg) {
        return {};
    }
    std::vector<MultiPoly> coeffs(*deg + 1);
    for (const auto &[m, c] : p.terms()) {
        coeffs[m.exponent(v)].add_term(c, m.without(v));
    }
    return coeffs;
}

namespace
{

long monomial_weight(const Monomial &m, const Weights &weights)
{
    long w = 0;
    for (const auto &[v, e] : m.entries()) {
        auto it = weights.find(v);
        if (it == weights.end()) {
            throw ArgumentError("no weight given for variable '" + v.name() + "'");
        }
        w += it->second * static_cast<long>(e);
    }
    return w;
}

} // namespace

std::optional<long> weighted_degree(const MultiPoly &p, const Weights &weights)
{
    std::optional<long> best;
    for (const auto &term : p.terms()) {
        const long w = monomial_weight(term.first, weights);
        if (!best || w > *best) {
            best = w;
        }
    }
    return best;
}

bool is_weighted_homogeneous(const MultiPoly &p, const Weights &weights, long d)
{
    if (p.is_zero()) {
        return false;
    }
    return std::all_of(p.terms().begin(), p.terms().end(),
                       [&](const auto &term) { return monomial_weight(term.first, weights) == d; });
}

namespace
{

std::string render_with(const MultiPoly &p, std::string_view coeff_sep)
{
    if (p.is_zero()) {
        return "0";
    }
    const std::vector<Var> vars = p.variables();
    struct Row {
        unsigned long degree;
        std::vector<std::uint32_t> exps;
        const Monomial *mono;
        const Rational *coeff;
    };
    std::vector<Row> rows;
    rows.reserve(p.size());
    for (const auto &[m, c] : p.terms()) {
        Row row{m.total_degree(), {}, &m, &c};
        row.exps.reserve(vars.size());
        for (Var v : vars) {
            row.exps.push_back(m.exponent(v));
        }
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const Row &l, const Row &r) {
        if (l.degree != r.degree) {
            return l.degree > r.degree;
        }
        return l.exps > r.exps;
    });

    std::string out;
    bool first = true;
    for (const Row &row : rows) {
        Rational c = *row.coeff;
        const bool negative = c < 0;
        if (negative) {
            c = -c;
        }
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;

        std::string mono;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (row.exps[i] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += '*';
            }
            mono += vars[i].name();
            if (row.exps[i] > 1) {
                mono += '^' + std::to_string(row.exps[i]);
            }
        }
        if (mono.empty()) {
            out += to_string(c);
        } else if (c == 1) {
            out += mono;
        } else {
            out += to_string(c);
            out += coeff_sep;
            out += mono;
        }
    }
    return out;
}

} // namespace

std::string render(const MultiPoly &p)
{
    return render_with(p, "*");
}

std::string render_compact(const MultiPoly &p)
{
    return render_with(p, "");
}

std::ostream &operator<<(std::ostream &os, const MultiPoly &p)
{
    return os << render(p);
}

} // namespace autobell
