"""Exact integer helpers: extended binomials, binomials mod p, p-adic orders."""

from functools import lru_cache
from math import comb

__all__ = [
    "is_prime",
    "check_prime",
    "binomial",
    "binomial_mod",
    "multinomial_mod",
    "factorial_valuation",
    "padic_order",
    "kummer_carries",
]


def is_prime(p):
    """Deterministic trial-division primality test (desk-scale moduli only)."""
    if not isinstance(p, int) or p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def check_prime(p):
    if not is_prime(p):
        raise ValueError(f"modulus must be prime, got {p!r}")
    return p


def binomial(m, i):
    """Binomial coefficient C(m, i) for arbitrary integers m and i.

    Uses the falling factorial m(m-1)...(m-i+1)/i! for i > 0, so negative
    upper indices are allowed. C(m, 0) = 1 and C(m, i) = 0 for i < 0.

    >>> binomial(5, 2), binomial(3, -1), binomial(-2, 3)
    (10, 0, -4)
    """
    if i < 0:
        return 0
    if i == 0:
        return 1
    if m >= 0:
        return comb(m, i)
    # C(m, i) = (-1)^i C(i - m - 1, i) for m < 0
    return (-1) ** i * comb(i - m - 1, i)


@lru_cache(maxsize=None)
def _small_binomials(p):
    return tuple(tuple(comb(a, b) % p for b in range(p)) for a in range(p))


def binomial_mod(m, i, p):
    """C(m, i) reduced mod the prime p, via Lucas' theorem (m >= 0)."""
    check_prime(p)
    if m < 0:
        raise ValueError("binomial_mod requires a non-negative upper index")
    if i < 0 or i > m:
        return 0
    table = _small_binomials(p) if p <= 64 else None
    result = 1
    while i:
        mi, ii = m % p, i % p
        if ii > mi:
            return 0
        if table is not None:
            result = result * table[mi][ii] % p
        else:
            result = result * comb(mi, ii) % p
        m //= p
        i //= p
    return result % p


def multinomial_mod(parts, p):
    """Multinomial coefficient (sum parts)! / prod(part!) mod p."""
    total = 0
    result = 1
    for k in parts:
        if k < 0:
            return 0
        total += k
        result = result * binomial_mod(total, k, p) % p
        if not result:
            return 0
    return result


def factorial_valuation(m, p):
    """Legendre's formula: the exponent of p in m!."""
    if m < 0:
        raise ValueError("factorial_valuation requires m >= 0")
    v, pk = 0, p
    while pk <= m:
        v += m // pk
        pk *= p
    return v


def padic_order(x, p):
    """Largest k with p**k dividing the nonzero integer x."""
    if x == 0:
        raise ValueError("p-adic order of 0 is infinite")
    x = abs(x)
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


def kummer_carries(a, b, p):
    """Number of carries when adding a and b in base p."""
    carries = carry = 0
    while a or b or carry:
        s = a % p + b % p + carry
        carry = 1 if s >= p else 0
        carries += carry
        a //= p
        b //= p
    return carries

