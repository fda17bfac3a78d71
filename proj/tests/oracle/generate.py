"""Independent reference values, written to frozen.json.

Nothing here calls the library. Bell polynomials come from sympy, the
autonomous quantities from Taylor coefficients of y^(k) = a e^y computed
with sympy series arithmetic, and the numeric solutions from mpmath's ODE
integrator.

    python3 generate.py > frozen.json
"""

import json
import sys
from fractions import Fraction
from math import comb, factorial

import mpmath
import sympy as sp
from sympy.functions.combinatorial.numbers import stirling


def poly_text(expr):
    return str(sp.expand(expr)).replace("**", "^")


def bell_partials(nmax):
    xs = sp.symbols(f"x1:{nmax + 2}")
    out = []
    for n in range(0, nmax + 1):
        for k in range(0, n + 1):
            out.append({"n": n, "k": k, "poly": poly_text(sp.bell(n, k, xs[: n - k + 1]))})
    return out


def bell_complete(nmax):
    xs = sp.symbols(f"x1:{nmax + 2}")
    out = []
    for n in range(0, nmax + 1):
        b = sum(sp.bell(n, k, xs[: n - k + 1]) for k in range(0, n + 1))
        out.append({"n": n, "poly": poly_text(b)})
    return out


def taylor_derivatives(k, initials, a, count):
    """y^(n)(0) for n < count, y^(k) = a e^y, y^(j)(0) = initials[j]."""
    c = [sp.Integer(0)] * count
    for j, v in enumerate(initials):
        c[j] = sp.sympify(v) / factorial(j)
    e = [sp.Integer(0)] * count  # Taylor coefficients of e^y
    e0 = sp.exp(c[0]) if c[0] != 0 else sp.Integer(1)
    for n in range(0, count - k):
        # e_n from c_1..c_n: n e_n = sum j c_j e_{n-j}
        if n == 0:
            e[0] = e0
        else:
            e[n] = sp.expand(sum(j * c[j] * e[n - j] for j in range(1, n + 1)) / n)
        c[n + k] = sp.expand(a * e[n] * factorial(n) / factorial(n + k))
    return [sp.expand(c[n] * factorial(n)) for n in range(count)]


def a_values(kmax, nmax):
    a = sp.Symbol("a")
    out = {}
    for k in range(1, kmax + 1):
        d = taylor_derivatives(k, [0] * k, a, k * nmax + 1)
        # A_n(a) = y^(k n)(0) with zero slots; record A_n(1).
        out[str(k)] = [str(d[k * n].subs(a, 1)) for n in range(1, nmax + 1)]
    return out


def ones_values(kmax, nmax):
    out = {}
    for k in range(2, kmax + 1):
        d = taylor_derivatives(k, [0] + [1] * (k - 1), 1, nmax + 1)
        out[str(k)] = [str(d[n]) for n in range(1, nmax + 1)]
    return out


def coefficient_tables(ks, rows):
    x, a = sp.symbols("x a")
    out = {}
    for k in ks:
        d = taylor_derivatives(k, [0] + [x] * (k - 1), a, rows + k + 1)
        table = []
        for n in range(0, rows + 1):
            p = sp.Poly(d[n + k], x)
            coeffs = [poly_text(p.coeff_monomial(x**i)) for i in range(0, n + 1)]
            table.append(coeffs)
        out[str(k)] = table
    return out


def zigzag(count):
    t = sp.Symbol("t")
    s = sp.series(sp.sec(t) + sp.tan(t), t, 0, count).removeO()
    return [str(s.coeff(t, n) * factorial(n)) for n in range(count)]


def stirling_tables(nmax):
    return {
        "first_unsigned": [[str(stirling(n, k, kind=1)) for k in range(n + 1)] for n in range(nmax + 1)],
        "second": [[str(stirling(n, k)) for k in range(n + 1)] for n in range(nmax + 1)],
    }


def numeric_solutions():
    mpmath.mp.dps = 40
    cases = []
    for (k, initials, a, ts) in [
        (1, [0], 1, ["-0.3", "-0.1", "0.1", "0.2", "0.3"]),
        (2, [0, 0], -1, ["-0.5", "-0.25", "0.25", "0.5"]),
        (2, [0, 0], 1, ["-0.4", "0.1", "0.4"]),
        (2, [0, 1], 1, ["0.1", "0.3"]),
        (2, [0, 1], -1, ["0.1", "0.3"]),
    ]:
        if k == 1:
            f = mpmath.odefun(lambda t, y: a * mpmath.exp(y), 0, initials[0])
            val = lambda t: f(t)
        else:
            f = mpmath.odefun(lambda t, y: [y[1], a * mpmath.exp(y[0])], 0, [mpmath.mpf(v) for v in initials])
            val = lambda t: f(t)[0]
        pts = []
        for s in ts:
            tv = mpmath.mpf(s)
            if tv < 0:
                # integrate the time-reversed equation
                if k == 1:
                    g = mpmath.odefun(lambda t, y: -a * mpmath.exp(y), 0, initials[0])
                    y = g(-tv)
                else:
                    g = mpmath.odefun(
                        lambda t, y: [y[1], a * mpmath.exp(y[0])], 0, [mpmath.mpf(initials[0]), -mpmath.mpf(initials[1])]
                    )
                    y = g(-tv)[0]
            else:
                y = val(tv)
            pts.append({"t": s, "y": mpmath.nstr(y, 32)})
        cases.append({"k": k, "initials": [str(v) for v in initials], "a": str(a), "points": pts})
    return cases


def main():
    out = {
        "bell_partial": bell_partials(8),
        "bell_complete": bell_complete(8),
        "a_at_one": a_values(5, 7),
        "a_ones": ones_values(5, 16),
        "coefficient_tables": coefficient_tables([2, 3, 4], 9),
        "zigzag": zigzag(16),
        "bernoulli_abs": [str(abs(sp.bernoulli(m))) for m in range(2, 21, 2)],
        "stirling": stirling_tables(12),
        "numeric": numeric_solutions(),
    }
    json.dump(out, sys.stdout, indent=1, sort_keys=True)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
