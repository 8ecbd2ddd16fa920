"""Slow, independent reference computations used to cross-check the package."""

import itertools
from fractions import Fraction
from math import comb, factorial

import sympy


def rank_mod_p_naive(rows, p):
    """Row echelon rank over F_p with plain Python lists."""
    m = [[x % p for x in r] for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        r += 1
        if r == nrows:
            break
    return r


def det_fraction(rows):
    """Determinant by Gaussian elimination over the rationals."""
    m = [[Fraction(x) for x in r] for r in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    assert det.denominator == 1
    return int(det)


def hilbert_brute(a, i):
    return sum(1 for e in itertools.product(*(range(x) for x in a)) if sum(e) == i)


def valuation_brute(x, p):
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


def symbols(m):
    return sympy.symbols(f"x1:{m + 1}")


def expand_mod(expr, gens, p):
    return sympy.Poly(sympy.expand(expr), *gens, modulus=p)


def is_relation_sympy(entries, a, p):
    """Recheck sum v_i g_i = 0 with sympy, from exponent dictionaries."""
    m = len(a) - 1
    xs = symbols(m)
    gens = [xs[i] ** a[i] for i in range(m)] + [sum(xs) ** a[-1]]
    total = 0
    for v, g in zip(entries, gens):
        poly = sum(c * sympy.Mul(*[x ** e for x, e in zip(xs, mon)]) for mon, c in v.terms.items())
        total += poly * g
    return expand_mod(total, xs, p).is_zero


def kernel_dim_L_power(p, a, gamma, i):
    """dim ker(L^gamma : A_i -> A_{i+gamma}) by sympy expansion of each basis image."""
    n = len(a)
    xs = symbols(n)
    src = [e for e in itertools.product(*(range(x) for x in a)) if sum(e) == i]
    tgt = [e for e in itertools.product(*(range(x) for x in a)) if sum(e) == i + gamma]
    if not src:
        return 0
    tindex = {e: k for k, e in enumerate(tgt)}
    Lg = sympy.Poly(sum(xs) ** gamma, *xs, modulus=p)
    cols = []
    for e in src:
        mono = sympy.Poly(sympy.Mul(*[x ** k for x, k in zip(xs, e)]), *xs, modulus=p)
        prod = (Lg * mono).as_dict()
        col = [0] * len(tgt)
        for mon, c in prod.items():
            if mon in tindex:
                col[tindex[mon]] = int(c) % p
        cols.append(col)
    rows = [list(r) for r in zip(*cols)] if tgt else []
    rank = rank_mod_p_naive(rows, p) if rows else 0
    return len(src) - rank


def multinomial(parts):
    out = factorial(sum(parts))
    for k in parts:
        out //= factorial(k)
    return out


def binomial_falling(m, i):
    if i < 0:
        return 0
    num = 1
    for j in range(i):
        num *= m - j
    return num // factorial(i)
