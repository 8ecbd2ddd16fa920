"""Closed-form WLP decisions for A = F_p[x_1..x_n]/(x_1^d, ..., x_n^d).

No linear algebra happens here apart from the determinant test in
:func:`sufficient_n4_via_det`, which works with exact integers.
"""

from dataclasses import dataclass
from typing import List, Optional

from .exactarith import check_prime
from .lefschetz import Decision, WlpVerdict
from .toeplitz import det_nonzero_mod

__all__ = [
    "CondDecomposition",
    "cond_decompose",
    "all_cond_decompositions",
    "classify",
    "sufficient_n4_via_det",
    "sufficient_general",
    "n5_threshold",
]


@dataclass(frozen=True)
class CondDecomposition:
    """d = k q + r with 1 <= k <= (p-1)/2, q = p^e, r in {(q-1)/2, (q+1)/2}."""

    k: int
    e: int
    q: int
    r: int

    @property
    def d(self):
        return self.k * self.q + self.r

    def to_dict(self):
        return {"k": self.k, "e": self.e, "q": self.q, "r": self.r}


def all_cond_decompositions(p, d) -> List[CondDecomposition]:
    """Every decomposition of ``d`` of the form above, in increasing e."""
    check_prime(p)
    if p == 2:
        return []  # no k with 1 <= k <= (p-1)/2
    if d < 1:
        raise ValueError("d must be positive")
    out = []
    e, q = 0, 1
    while q <= 2 * d + 1:
        for r in sorted({(q - 1) // 2, (q + 1) // 2}):
            k, rem = divmod(d - r, q)
            if rem == 0 and 1 <= k <= (p - 1) // 2:
                out.append(CondDecomposition(k, e, q, r))
        e += 1
        q *= p
    return out


def cond_decompose(p, d) -> Optional[CondDecomposition]:
    """The decomposition with the smallest e, or ``None``."""
    found = all_cond_decompositions(p, d)
    return found[0] if found else None


def n5_threshold(n, d):
    """floor((n(d-1)+3)/2), which is E(n, d:n)."""
    return (n * (d - 1) + 3) // 2


def classify(p, n, d) -> WlpVerdict:
    """WLP of A(n, d:n) over F_p from the closed-form classifications.

    n <= 2 always has the WLP; n = 3 is reported as Unsupported; n = 4 uses
    the decomposition condition (and d = 1 for p = 2); n >= 5 compares
    floor((n(d-1)+3)/2) with p.
    """
    check_prime(p)
    if n < 1 or d < 1:
        raise ValueError("n and d must be positive")
    if n == 3:
        return WlpVerdict(Decision.UNSUPPORTED)
    if n <= 2 or d == 1:
        ok = True
    elif n == 4:
        ok = p != 2 and cond_decompose(p, d) is not None
    else:
        ok = n5_threshold(n, d) <= p
    return WlpVerdict(Decision.HAS_WLP if ok else Decision.NO_WLP)


def sufficient_n4_via_det(p, d):
    """True iff det M(d, c, c, c) is nonzero mod p for every 1 <= c <= d."""
    check_prime(p)
    return all(det_nonzero_mod(d, c, c, p) for c in range(1, d + 1))


def sufficient_general(p, n, d, gamma):
    """floor((nd - n + 2 + gamma)/2) <= p."""
    check_prime(p)
    return (n * d - n + 2 + gamma) // 2 <= p
