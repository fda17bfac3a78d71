#include <autobell/autonomous.hpp>

namespace autobell
{

Var u_var()
{
    static const Var v = Var::named("u");
    return v;
}

Var a_var()
{
    static const Var v = Var::named("a");
    return v;
}

Var x_var()
{
    static const Var v = Var::named("x");
    return v;
}

Var slot_var(unsigned j)
{
    return indexed_var("x", j);
}

Weights scaling_weights(unsigned k)
{
    Weights w{{u_var(), static_cast<long>(k)}};
    for (unsigned j = 2; j <= k; ++j) {
        w.emplace(slot_var(j), static_cast<long>(j) - 1);
    }
    return w;
}

namespace
{

void require_order(unsigned k)
{
    if (k < 1) {
        throw ArgumentError("the order k must be at least 1");
    }
}

std::vector<MultiPoly> symbolic_slots(unsigned k)
{
    std::vector<MultiPoly> slots;
    for (unsigned j = 2; j <= k; ++j) {
        slots.push_back(MultiPoly::variable(slot_var(j)));
    }
    return slots;
}

} // namespace

// ---- f_n ----

AutonomousSystem::AutonomousSystem(unsigned k) : AutonomousSystem(k, symbolic_slots(k), MultiPoly::variable(u_var()))
{
}

AutonomousSystem::AutonomousSystem(unsigned k, std::vector<MultiPoly> slots, MultiPoly lead)
    : k_(k), lead_(std::move(lead))
{
    require_order(k);
    if (slots.size() != k - 1) {
        throw ArgumentError("order " + std::to_string(k) + " needs " + std::to_string(k - 1) + " slot values");
    }
    values_ = std::move(slots);
    values_.push_back(lead_);
}

const MultiPoly &AutonomousSystem::f(unsigned n)
{
    if (n == 0) {
        throw ArgumentError("f_0 is the initial value x1, not part of the u-encoding");
    }
    while (values_.size() < n) {
        const auto m = static_cast<unsigned>(values_.size()) + 1;
        const unsigned j = m - k_;
        while (bell_.argument_count() < j) {
            bell_.push_argument(values_[bell_.argument_count()]);
        }
        values_.push_back(lead_ * bell_(j));
    }
    return values_[n - 1];
}

MultiPoly auto_f(unsigned n, unsigned k)
{
    require_order(k);
    if (n == 0) {
        return MultiPoly::variable(slot_var(1));
    }
    AutonomousSystem system(k);
    return system.f(n);
}

std::vector<MultiPoly> autonomous_by_convolution(unsigned k, std::span<const MultiPoly> slots, const MultiPoly &lead,
                                                 unsigned count)
{
    require_order(k);
    if (slots.size() != k - 1) {
        throw ArgumentError("order " + std::to_string(k) + " needs " + std::to_string(k - 1) + " slot values");
    }
    // f[m] for m >= 1; f[0] unused.
    std::vector<MultiPoly> f(1);
    f.insert(f.end(), slots.begin(), slots.end());
    f.push_back(lead);
    for (unsigned m = k + 1; m <= count; ++m) {
        const unsigned n = m - k - 1;
        MultiPoly sum;
        for (unsigned i = 0; i <= n; ++i) {
            const MultiPoly &left = f[n - i + k];
            const MultiPoly &right = f[i + 1];
            if (left.is_zero() || right.is_zero()) {
                continue;
            }
            sum += binomial(n, i) * (left * right);
        }
        f.push_back(std::move(sum));
    }
    f.erase(f.begin());
    f.resize(count);
    return f;
}

MultiPoly auto_f_alt(unsigned n, unsigned k)
{
    require_order(k);
    if (n == 0) {
        return MultiPoly::variable(slot_var(1));
    }
    const auto slots = symbolic_slots(k);
    return autonomous_by_convolution(k, slots, MultiPoly::variable(u_var()), n).back();
}

// ---- g_{n,i} ----

MultiPoly auto_g(unsigned n, unsigned i, unsigned k)
{
    require_order(k);
    if (i > n) {
        return {};
    }
    if (i == 0) {
        return n == 0 ? MultiPoly(1) : MultiPoly();
    }
    AutonomousSystem system(k);
    std::vector<MultiPoly> fs;
    for (unsigned j = 1; j <= n - i + 1; ++j) {
        fs.push_back(system.f(j));
    }
    PartialBellTable<MultiPoly> recurrence(fs);
    MultiPoly value = recurrence(n, i);
    const MultiPoly direct = bell_partial_explicit<MultiPoly>(n, i, fs);
    if (value != direct) {
        throw InternalInconsistency("g_{" + std::to_string(n) + "," + std::to_string(i) +
                                    "}: recurrence and partition sum disagree");
    }
    return value;
}

// ---- A_n^(k)(a) ----

Rational ASequence::at_one(unsigned n) const
{
    return poly_eval((*this)[n], {{a_var(), Rational(1)}});
}

ASequence a_sequence(unsigned k, unsigned N)
{
    require_order(k);
    if (N < 1) {
        throw ArgumentError("a_sequence needs N >= 1");
    }
    const MultiPoly a = MultiPoly::variable(a_var());

    // Quadratic recurrence; A[m] for m >= 1.
    std::vector<MultiPoly> A(N + 1);
    A[1] = a;
    for (unsigned n = 0; n + 2 <= N; ++n) {
        MultiPoly sum;
        for (unsigned i = 0; i <= n; ++i) {
            sum += binomial(k * n + k - 1, k * i + k - 1) * (A[n - i + 1] * A[i + 1]);
        }
        A[n + 2] = std::move(sum);
    }

    // Bell construction with A_j in slot kj.
    CompleteBellSequence<MultiPoly> bell;
    std::vector<MultiPoly> via_bell(N + 1);
    for (unsigned n = 1; n <= N; ++n) {
        const unsigned need = k * (n - 1);
        while (bell.argument_count() < need) {
            const auto slot = static_cast<unsigned>(bell.argument_count()) + 1;
            bell.push_argument(slot % k == 0 ? via_bell[slot / k] : MultiPoly());
        }
        via_bell[n] = a * bell(need);
    }

    // f_{kn} at zero initial derivatives, x1 = 0 (u -> a).
    AutonomousSystem zero(k, std::vector<MultiPoly>(k - 1), a);

    for (unsigned n = 1; n <= N; ++n) {
        if (A[n] != via_bell[n]) {
            throw InternalInconsistency("A_" + std::to_string(n) + "^(" + std::to_string(k) +
                                        "): recurrence and Bell construction disagree");
        }
        if (A[n] != zero.f(k * n)) {
            throw InternalInconsistency("A_" + std::to_string(n) + "^(" + std::to_string(k) +
                                        "): recurrence and f_kn disagree");
        }
        for (unsigned j = 1; j < k; ++j) {
            if (!zero.f(k * (n - 1) + j).is_zero()) {
                throw InternalInconsistency("f_" + std::to_string(k * (n - 1) + j) +
                                            " does not vanish at zero initial derivatives");
            }
        }
    }
    ASequence seq;
    seq.k = k;
    seq.entries.assign(A.begin() + 1, A.end());
    return seq;
}

// ---- autonomous polynomials ----

AutonomousPolynomials::AutonomousPolynomials(unsigned k)
    : k_(k), bell_path_(k, std::vector<MultiPoly>(k == 0 ? 0 : k - 1, MultiPoly::variable(x_var())),
                        MultiPoly::variable(a_var())),
      symbolic_(k)
{
}

const MultiPoly &AutonomousPolynomials::operator()(unsigned n)
{
    if (n == 0) {
        throw ArgumentError("autonomous polynomials start at n = 1");
    }
    const MultiPoly &value = bell_path_.f(n);
    if (checked_.size() <= n) {
        checked_.resize(n + 1, false);
    }
    if (!checked_[n]) {
        std::map<Var, MultiPoly> images{{u_var(), MultiPoly::variable(a_var())}};
        for (unsigned j = 2; j <= k_; ++j) {
            images.emplace(slot_var(j), MultiPoly::variable(x_var()));
        }
        if (substitute(symbolic_.f(n), images) != value) {
            throw InternalInconsistency("A_" + std::to_string(n) + "^(" + std::to_string(k_) +
                                        ")(x,a): Bell recursion and specialised f_n disagree");
        }
        checked_[n] = true;
    }
    return value;
}

MultiPoly auto_poly(unsigned n, unsigned k)
{
    require_order(k);
    AutonomousPolynomials polys(k);
    return polys(n);
}

// ---- coefficient tables ----

MultiPoly CoefficientTable::at(long n, long i) const
{
    if (n < 0 || i < 0 || i > n) {
        return {};
    }
    return rows.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(i));
}

MultiPoly CoefficientTable::row_sum(unsigned n) const
{
    MultiPoly sum;
    for (const auto &entry : rows.at(n)) {
        sum += entry;
    }
    return sum;
}

CoefficientTable CoefficientTable::at_a(const Rational &a) const
{
    CoefficientTable out{k, {}};
    const Assignment assignment{{a_var(), a}};
    for (const auto &row : rows) {
        auto &dst = out.rows.emplace_back();
        for (const auto &entry : row) {
            dst.push_back(specialize(entry, assignment));
        }
    }
    return out;
}

CoefficientTable coeff_table(unsigned k, unsigned N)
{
    require_order(k);
    AutonomousPolynomials polys(k);
    CoefficientTable table{k, {}};
    for (unsigned n = 0; n <= N; ++n) {
        auto coeffs = coefficients_in(polys(n + k), x_var());
        if (k == 1) {
            // No x at all for k = 1: row n is (n! a^{n+1}, 0, ..., 0).
            coeffs.resize(n + 1);
        }
        if (coeffs.size() != n + 1) {
            throw InternalInconsistency("A_" + std::to_string(n + k) + "^(" + std::to_string(k) +
                                        ") has x-degree " + std::to_string(static_cast<long>(coeffs.size()) - 1) +
                                        ", expected " + std::to_string(n));
        }
        table.rows.push_back(std::move(coeffs));
    }
    return table;
}

CoefficientTable coeff_by_recurrence(unsigned k, unsigned N)
{
    if (k < 2) {
        throw ArgumentError("the coefficient recurrence needs k >= 2");
    }
    std::vector<std::vector<Rational>> rows{{Rational(1)}};
    const auto T = [&](long r, long j) -> Rational {
        if (r < 0 || j < 0 || j > r) {
            return 0;
        }
        return rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
    };
    const long kk = k;
    for (long n = 0; n + 1 <= static_cast<long>(N); ++n) {
        std::vector<Rational> next(static_cast<std::size_t>(n) + 2);
        for (long i = 0; i <= n + 1; ++i) {
            Rational v = Rational(binomial_signed(n, kk - 1)) * T(n + 1 - kk, i);
            if (i >= 1) {
                // x-linear factors: A_1..A_{k-1} = x and A_{k+1} = x.
                const long upper = i <= n - kk + 3 ? kk - 2 : n - i + 1;
                for (long h = 0; h <= upper; ++h) {
                    v += Rational(binomial_signed(n, h)) * T(n - h, i - 1);
                }
                v += Rational(binomial_signed(n, kk)) * T(n - kk, i - 1);
            }
            for (long h = kk + 1; h <= n; ++h) {
                Rational conv = 0;
                for (long j = 0; j <= i; ++j) {
                    conv += T(n - h, j) * T(h + 1 - kk, i - j);
                }
                v += Rational(binomial_signed(n, h)) * conv;
            }
            next[static_cast<std::size_t>(i)] = v;
        }
        rows.push_back(std::move(next));
    }
    CoefficientTable table{k, {}};
    for (const auto &row : rows) {
        auto &dst = table.rows.emplace_back();
        for (const auto &c : row) {
            dst.emplace_back(c);
        }
    }
    return table;
}

CoefficientTable coeff_recur(unsigned k, unsigned N)
{
    CoefficientTable recurred = coeff_by_recurrence(k, N);
    const CoefficientTable expanded = coeff_table(k, N).at_a(1);
    for (unsigned n = 0; n <= N; ++n) {
        for (unsigned i = 0; i <= n; ++i) {
            if (recurred.at(n, i) != expanded.at(n, i)) {
                throw InternalInconsistency("(" + std::to_string(k) + ",1)-coefficient [[" + std::to_string(n) +
                                            "," + std::to_string(i) + "]]: recurrence gives " +
                                            render(recurred.at(n, i)) + ", expansion gives " +
                                            render(expanded.at(n, i)));
            }
        }
    }
    return recurred;
}

} // namespace autobell
