"""Explicit low-degree relations on x_1^d, ..., x_{n-1}^d, (x_1+...+x_{n-1})^d.

Every constructor returns a :class:`~wlpci.syzygy.SyzygyElement` scaled so
its first nonzero entry has leading coefficient 1.  Frobenius lifts take a
relation for small exponents, raise its entries to a q-th power (q = p^e)
and multiply by monomial correctors so it becomes a relation for
d = kq + r.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .exactarith import check_prime
from .lefschetz import DEFAULT_BUDGET, BudgetExceeded, E, mgd_kos, mgd_syzbar
from .polyring import PolyFp, in_monomial_ideal
from .syzygy import SyzygyElement, in_koszul_span, koszul_matrix, verify_syzygy

__all__ = [
    "PreconditionError",
    "relation_2k_minus_1",
    "frobenius_lift_n4_part1",
    "frobenius_lift_n4_part2",
    "frobenius_lift_general",
    "power_relation",
    "low_power_relation",
    "verify_syzygy",
    "verify_non_koszul",
    "largest_power_split",
    "WitnessChoice",
    "high_n_witness",
]

KOSZUL_LA_BUDGET = 3000


class PreconditionError(ValueError):
    """A constructor was called outside the range where its relation exists."""


def _power_of(p, q):
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    return e if q == 1 else None


def _require_valid(base, what="base relation"):
    if not verify_syzygy(base):
        raise PreconditionError(f"{what} is not a nonzero homogeneous relation")


def relation_2k_minus_1(p, k):
    """The degree 2k-1 relation on x_1^k, x_2^k, x_3^k, (x_1+x_2+x_3)^k.

    With g = (x_2^k - (-x_3)^k)/(x_2 + x_3) and (x_1+x_2+x_3)^k = x_1^k + h(x_2+x_3),
    the identity (x_1+x_2+x_3)^k g = x_1^k g + h(x_2^k - (-x_3)^k) gives
    [g, h, -(-1)^k h, -g].
    """
    check_prime(p)
    if p == 2:
        raise PreconditionError("the 2k-1 relation needs an odd prime")
    if not 1 <= k <= (p + 1) // 2:
        raise PreconditionError(f"need 1 <= k <= (p+1)/2 = {(p + 1) // 2}, got k={k}")
    x1, x2, x3 = (PolyFp.variable(p, 3, i) for i in range(3))
    s = x2 + x3
    sign = -1 if k % 2 else 1
    g = (x2 ** k - (-x3) ** k).exact_divide(s)
    h = ((x1 + s) ** k - x1 ** k).exact_divide(s)
    return SyzygyElement.from_entries(p, (k,) * 4, [g, h, h.scale(-sign), -g]).normalized()


def frobenius_lift_n4_part1(p, e, base, r):
    """Lift a relation for (k:n) to (kq+r : n), degree q*deg + n*r.

    Entry i is v_i^q times the r-th powers of the other generators' bases:
    x_j^r for j != i and (x_1+...+x_{n-1})^r, except the last entry which
    gets x_1^r ... x_{n-1}^r only.
    """
    check_prime(p)
    _require_valid(base)
    if base.p != p or len(set(base.a)) != 1:
        raise PreconditionError("base must be a relation over F_p for equal exponents (k:n)")
    if e < 1:
        raise PreconditionError("need e >= 1")
    q = p ** e
    if not 0 <= r <= q - 1:
        raise PreconditionError(f"need 0 <= r <= q-1 = {q - 1}, got r={r}")
    k = base.a[0]
    m = base.n - 1
    xs = [PolyFp.variable(p, m, i) ** r for i in range(m)]
    Lr = PolyFp.linear_sum(p, m) ** r
    entries = []
    for i, v in enumerate(base.entries):
        factor = Lr if i < m else PolyFp.constant(p, m)
        for j in range(m):
            if j != i:
                factor = factor * xs[j]
        entries.append(v.frobenius(q) * factor)
    d = k * q + r
    return SyzygyElement.from_entries(p, (d,) * base.n, entries).normalized()


def frobenius_lift_n4_part2(p, e, base, r):
    """Lift a relation for ((k+1):n) to (kq+r : n), degree q*deg.

    Entry i is v_i^q x_i^{q-r}; the last entry is v_n^q (x_1+...+x_{n-1})^{q-r}.
    """
    check_prime(p)
    _require_valid(base)
    if base.p != p or len(set(base.a)) != 1:
        raise PreconditionError("base must be a relation over F_p for equal exponents ((k+1):n)")
    if e < 1:
        raise PreconditionError("need e >= 1")
    q = p ** e
    if not 0 <= r <= q - 1:
        raise PreconditionError(f"need 0 <= r <= q-1 = {q - 1}, got r={r}")
    k = base.a[0] - 1
    m = base.n - 1
    entries = []
    for i, v in enumerate(base.entries):
        mult = PolyFp.variable(p, m, i) if i < m else PolyFp.linear_sum(p, m)
        entries.append(v.frobenius(q) * mult ** (q - r))
    d = k * q + r
    if d < 1:
        raise PreconditionError("k = 0 needs r >= 1")
    return SyzygyElement.from_entries(p, (d,) * base.n, entries).normalized()


def largest_power_split(p, d, e=None):
    """(k, e, q, r) with d = k q + r, q = p^e, 0 <= r < q.

    By default q is the largest power p^e <= d with e >= 1.
    """
    if e is None:
        e, q = 1, p
        while q * p <= d:
            q *= p
            e += 1
    else:
        q = p ** e
    k, r = divmod(d, q)
    return k, e, q, r


def frobenius_lift_general(p, n, d, ell, e=None, budget=DEFAULT_BUDGET):
    """Relation for (d:n) lifted from a minimal one for ((k+1):ell, k:(n-ell)).

    Writes d = kq + r (q = p^e, largest by default) and takes a lowest-degree
    relation eta' = [v_1..v_n] whose last entry is outside the monomial
    ideal.  With X = x_{ell+1}^r ... x_{n-1}^r and L = x_1 + ... + x_{n-1}:

    * rows i <= ell:     v_i^q x_i^{q-r} X L^r
    * rows ell < i < n:  v_i^q (X / x_i^r) L^r
    * last row:          v_n^q X

    The degree is q deg(eta') + r(n - ell).
    """
    check_prime(p)
    if n < 2:
        raise PreconditionError("need n >= 2")
    if not 0 <= ell <= n - 1:
        raise PreconditionError(f"need 0 <= l <= n-1, got l={ell}")
    if e is not None and e < 1:
        raise PreconditionError("need e >= 1")
    k, e, q, r = largest_power_split(p, d, e)
    if k < 1:
        raise PreconditionError(f"need k >= 1 in d = kq + r, but d={d} < q={q}")
    if not (ell == 0 and r == 0) and not 1 <= r <= q - 1:
        raise PreconditionError("need l = r = 0, or 1 <= r <= q-1")
    a_small = (k + 1,) * ell + (k,) * (n - ell)
    inner = mgd_syzbar(p, n, a_small, budget)
    base = inner.witness
    if base is None:
        raise RuntimeError(f"no lowest-degree relation found for {a_small}")
    m = n - 1
    x = [PolyFp.variable(p, m, i) for i in range(m)]
    Lr = PolyFp.linear_sum(p, m) ** r
    xr = [xi ** r for xi in x]
    X = PolyFp.constant(p, m)
    for j in range(ell, m):
        X = X * xr[j]
    entries = []
    for i, v in enumerate(base.entries):
        vq = v.frobenius(q)
        if i < ell:
            entries.append(vq * x[i] ** (q - r) * X * Lr)
        elif i < m:
            rest = PolyFp.constant(p, m)
            for j in range(ell, m):
                if j != i:
                    rest = rest * xr[j]
            entries.append(vq * rest * Lr)
        else:
            entries.append(vq * X)
    return SyzygyElement.from_entries(p, (d,) * n, entries).normalized()


def _power_entries(p, n, d, q):
    m = n - 1
    entries = [PolyFp.variable(p, m, i) ** (q - d) for i in range(m)]
    entries.append(-(PolyFp.linear_sum(p, m) ** (q - d)))
    return SyzygyElement.from_entries(p, (d,) * n, entries)


def power_relation(p, n, d, e):
    """[x_1^{q-d}, ..., x_{n-1}^{q-d}, -(x_1+...+x_{n-1})^{q-d}], q = p^e, q/2 < d <= q."""
    check_prime(p)
    if n < 2 or e < 1:
        raise PreconditionError("need n >= 2 and e >= 1")
    q = p ** e
    if not q < 2 * d <= 2 * q:
        raise PreconditionError(f"need q/2 < d <= q for q={q}, got d={d}")
    return _power_entries(p, n, d, q)


def low_power_relation(p, n, d, e):
    """The same q-th power relation when d <= q/2.

    Such a relation need not be outside the Koszul submodule, so the
    constructor checks that (x_1+...+x_{n-1})^{q-d} is not in
    (x_1^d, ..., x_{n-1}^d) and refuses otherwise.
    """
    check_prime(p)
    if n < 2 or e < 1:
        raise PreconditionError("need n >= 2 and e >= 1")
    q = p ** e
    if not 1 <= d <= q:
        raise PreconditionError(f"need 1 <= d <= q={q}, got d={d}")
    eta = _power_entries(p, n, d, q)
    if in_monomial_ideal(eta.entries[-1], (d,) * (n - 1)):
        raise PreconditionError(f"(x_1+...+x_{n - 1})^{q - d} lies in (x_i^{d}); the relation is Koszul")
    return eta


def verify_non_koszul(eta, a=None, p=None, budget=KOSZUL_LA_BUDGET):
    """True iff ``eta`` is a relation that is not in the Koszul submodule.

    Below the Koszul generator degree every relation is non-Koszul.  Otherwise
    the membership is decided by linear algebra when the degree piece has at
    most ``budget`` coordinates, and from the last entry when it is larger:
    modulo Koszul relations a relation is determined by its last entry
    reduced mod (x_1^a_1, ..., x_{n-1}^a_{n-1}).
    """
    a = eta.a if a is None else tuple(a)
    p = eta.p if p is None else p
    probe = SyzygyElement(p, a, eta.entries, eta.total_degree)
    if not verify_syzygy(probe):
        return False
    if probe.total_degree < mgd_kos(len(a), a):
        return True
    ncoords = sum(_count_monomials(len(a) - 1, probe.total_degree - ai) for ai in a)
    if budget is not None and ncoords <= budget:
        return not in_koszul_span(probe)
    return not in_monomial_ideal(probe.entries[-1], a[:-1])


def _count_monomials(nvars, degree):
    from math import comb

    return comb(degree + nvars - 1, nvars - 1) if degree >= 0 else 0


@dataclass(frozen=True)
class WitnessChoice:
    """Which construction covers (p, n, d) and the relation it produced."""

    case: int
    method: str
    params: dict
    relation: SyzygyElement

    def to_dict(self):
        return {"case": self.case, "method": self.method, "params": dict(self.params),
                "relation": self.relation.to_dict()}


def _pure_power_exponent(p, d):
    e = _power_of(p, d)
    return e if e is not None and e >= 1 else None


def high_n_witness(p, n, d, budget=DEFAULT_BUDGET) -> WitnessChoice:
    """A non-Koszul relation of degree < E(n, d:n) when p < E(n, d:n), n >= 5.

    The construction is chosen by case:

    1. d = p^e: power relation with q = d.
    2. p = 2: power relation with 2^{e-1} < d < 2^e.
    3. d < p: the power relation with q = p.
    4. p = 3, 4 <= d <= 8: the k = 1, l = 0 lift for n = 5, d = 4, else q = 9.
    5.-9. d = kq + r with q the largest power of p below d: the general lift
       with l = 0 when r = 0, and otherwise l picked by n and the parity of k;
       for n = 5, q = 5 the leftovers d = 7 and d in {13, 17, 23} use the
       k = 1 lift and the q = 25 power relation.
    """
    check_prime(p)
    if n < 5:
        raise PreconditionError("the case table covers n >= 5")
    if not p < E(n, (d,) * n):
        raise PreconditionError(f"need p < E(n, d:n) = {E(n, (d,) * n)}")
    e = _pure_power_exponent(p, d)
    if e is not None:
        return WitnessChoice(1, "power", {"e": e}, power_relation(p, n, d, e))
    if p == 2:
        e = d.bit_length()
        return WitnessChoice(2, "power", {"e": e}, power_relation(p, n, d, e))
    if d < p:
        return WitnessChoice(3, "low-power", {"e": 1}, low_power_relation(p, n, d, 1))
    if p == 3 and 4 <= d <= 8:
        if n == 5 and d == 4:
            return WitnessChoice(4, "frobenius-general", {"l": 0, "e": 1},
                                 frobenius_lift_general(p, n, d, 0, 1, budget))
        if d == 4:
            return WitnessChoice(4, "low-power", {"e": 2}, low_power_relation(p, n, d, 2))
        return WitnessChoice(4, "power", {"e": 2}, power_relation(p, n, d, 2))
    k, e, q, r = largest_power_split(p, d)
    if r == 0:
        case, ell = 5, 0
    elif n == 5:
        case, ell = 6, None
        if k % 2:
            if q + 3 < 3 * r:
                ell = 4
            elif r < q - 3:
                ell = 2
        else:
            if r > 3:
                ell = 3
            elif 3 * r < 2 * q - 3:
                ell = 1
        if ell is None:
            if d == 7:
                return WitnessChoice(6, "frobenius-general", {"l": 0, "e": e},
                                     frobenius_lift_general(p, n, d, 0, e, budget))
            return WitnessChoice(6, "power", {"e": 2}, power_relation(p, n, d, 2))
    elif n == 6:
        case, ell = 7, (4 if r > 2 else 2)
    elif n % 2:
        case, ell = 8, 3 + (k % 2)
    else:
        case, ell = 9, n // 2
    return WitnessChoice(case, "frobenius-general", {"l": ell, "e": e},
                         frobenius_lift_general(p, n, d, ell, e, budget))
