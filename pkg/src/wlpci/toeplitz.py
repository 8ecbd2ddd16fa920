"""Toeplitz matrices of binomial coefficients and their determinants.

``M(t, b, r, c)`` is the r x c integer matrix whose (i, j) entry (0-based)
is ``binomial(t, b + i - j)``.  Square determinants are computed three ways:

* :func:`det_direct`   -- fraction-free (Bareiss) elimination over the integers;
* :func:`det_roberts`  -- the classical product formula
  ``prod_j C(t+j, b) / prod_j C(b+j, b)``;
* :func:`valuation_by_counting` -- the p-adic order of ``det M(d, c, c, c)``
  obtained by counting p-power divisible factors of its factored form.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .exactarith import binomial, check_prime, padic_order

__all__ = [
    "ToeplitzSpec",
    "ValuationWitness",
    "build_matrix",
    "bareiss_det",
    "det_direct",
    "det_roberts",
    "det_nonzero_mod",
    "dcc_factors",
    "valuation_by_counting",
    "closed_form_D_lambda",
    "exact_valuation",
]


@dataclass(frozen=True)
class ToeplitzSpec:
    t: int
    b: int
    r: int
    c: int

    def __post_init__(self):
        if self.r < 1 or self.c < 1:
            raise ValueError(f"matrix shape must be positive, got {self.r}x{self.c}")

    @classmethod
    def square(cls, t, b, s):
        return cls(t, b, s, s)

    @property
    def is_square(self):
        return self.r == self.c


@dataclass(frozen=True)
class ValuationWitness:
    """Factor counts for one power ``p**lam`` in ``det M(d, c, c, c)``.

    ``rho``, ``sharp`` and ``b`` are only meaningful when ``rho <= c``; ``u``
    only when ``d`` admits a decomposition ``d = k p^e + r`` with ``e >= lam``
    and ``r`` in {(p^e - 1)/2, (p^e + 1)/2}.  They are ``None`` otherwise.
    """

    lam: int
    rho: int
    u: Optional[int]
    sharp: Optional[int]
    b: Optional[int]
    N: int
    D: int


def build_matrix(spec):
    """Return M(t, b, r, c) as a list of rows of Python ints."""
    t, b = spec.t, spec.b
    return [[binomial(t, b + i - j) for j in range(spec.c)] for i in range(spec.r)]


def bareiss_det(rows):
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def _square_args(spec_or_t, b=None, s=None):
    if isinstance(spec_or_t, ToeplitzSpec):
        spec = spec_or_t
    else:
        spec = ToeplitzSpec.square(spec_or_t, b, s)
    if not spec.is_square:
        raise ValueError("determinant requires a square matrix")
    return spec


def det_direct(spec_or_t, b=None, s=None):
    """Determinant of M(t, b, s, s) by fraction-free elimination."""
    spec = _square_args(spec_or_t, b, s)
    return bareiss_det(build_matrix(spec))


def det_roberts(t, b, s):
    """Determinant of M(t, b, s, s) from the product formula (0 <= b <= t)."""
    if not 0 <= b <= t:
        raise ValueError(f"product formula needs 0 <= b <= t, got b={b}, t={t}")
    if s < 1:
        raise ValueError("side length must be positive")
    num = den = 1
    for j in range(s):
        num *= binomial(t + j, b)
        den *= binomial(b + j, b)
    q, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"inexact division in product formula for ({t}, {b}, {s})")
    return q


def det_nonzero_mod(t, b, s, p):
    """True iff det M(t, b, s, s) is a unit mod the prime p."""
    check_prime(p)
    if t + s <= p:
        # every factor of the product formula is below p
        return True
    return det_roberts(t, b, s) % p != 0


def dcc_factors(d, c):
    """Listed factors of det M(d, c, c, c) as ``(numerator, denominator)``.

    Each side is a list of ``(value, multiplicity)`` pairs::

        N = (d+c-1)^1 (d+c-2)^2 ... d^c ... (d-c+1)^1
        D = (2c-1)^1 (2c-2)^2 ... c^c ... 1^1
    """
    if not 1 <= c <= d:
        raise ValueError(f"need 1 <= c <= d, got c={c}, d={d}")
    num = [(d + t, c - abs(t)) for t in range(-(c - 1), c)]
    den = [(c + t, c - abs(t)) for t in range(-(c - 1), c)]
    return num, den


def _count(factors, pk):
    return sum(mult for v, mult in factors if v % pk == 0)


def valuation_by_counting(d, c, p) -> Tuple[int, List[ValuationWitness]]:
    """p-adic order of det M(d, c, c, c) by stratified factor counting.

    For every power ``p**lam`` dividing some listed factor, ``N`` and ``D`` are
    the summed multiplicities of numerator and denominator factors divisible
    by ``p**lam``.  The order is the sum over lam of ``N - D``.
    """
    check_prime(p)
    if p == 2:
        raise ValueError("valuation counting is set up for odd primes")
    num, den = dcc_factors(d, c)
    decomps = _decompositions(p, d)
    witnesses = []
    total = 0
    lam, pk = 1, p
    while pk <= d + c - 1:
        N, D = _count(num, pk), _count(den, pk)
        if N or D:
            rho = (pk + 1) // 2
            sharp = b = u = None
            if rho <= c:
                sharp = (c - rho) // pk
                b = c - rho - pk * sharp
            for dec in decomps:
                if dec.e >= lam:
                    eps = (dec.q + 1) // 2 - dec.r
                    u = (d + eps - rho) // pk
                    break
            witnesses.append(ValuationWitness(lam, rho, u, sharp, b, N, D))
            total += N - D
        lam += 1
        pk *= p
    return total, witnesses


def _decompositions(p, d):
    from .classify import all_cond_decompositions

    return all_cond_decompositions(p, d)


def closed_form_D_lambda(d, c, p, lam):
    """Closed form ``2c(#+1) - p^lam (#+1)^2`` for the denominator count.

    Only valid when ``rho = (p^lam + 1)/2 <= c`` and ``d = k p^e + r`` is an
    admissible decomposition with ``lam <= e``; raises ``ValueError`` otherwise.
    """
    check_prime(p)
    if lam < 1:
        raise ValueError("lam must be positive")
    pk = p ** lam
    rho = (pk + 1) // 2
    if rho > c:
        raise ValueError(f"closed form needs rho={rho} <= c={c}")
    if not any(dec.e >= lam for dec in _decompositions(p, d)):
        raise ValueError(f"d={d} has no admissible decomposition with e >= {lam} for p={p}")
    sharp = (c - rho) // pk
    return 2 * c * (sharp + 1) - pk * (sharp + 1) ** 2


def exact_valuation(d, c, p):
    """v_p(det M(d, c, c, c)) straight from the exact determinant."""
    return padic_order(det_roberts(d, c, c), p)
