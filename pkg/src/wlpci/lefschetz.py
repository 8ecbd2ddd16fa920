"""Graded invariants and brute-force Lefschetz decisions for L = x_1 + ... + x_n.

Notation used throughout, for an exponent tuple ``a`` of length ``n``:

* ``sigma = |a| - n`` is the socle degree of ``A = k[x]/(x_i^a_i)``;
* ``E(n, a) = floor((|a| - n + 3) / 2)``;
* ``MN(n, a, gamma) = 1 + floor((|a| - n - gamma) / 2)``;
* ``J(gamma)`` is the colon ideal ``(x^a : L^gamma) / (x^a)`` inside ``A``;
  its degree-i piece is the kernel of multiplication by ``L^gamma`` on ``A_i``;
* ``Syz``, ``Kos`` and ``Syz-bar = Syz / Kos`` are the relation modules of
  :mod:`wlpci.syzygy`.

The minimal generator degree (mgd) of the zero module is ``math.inf``.
"""

import enum
import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from .exactarith import check_prime
from .linalg import first_kernel_vector, rank_mod_p
from .polyring import PolyFp, check_exponents, graded_basis, hilbert, mult_matrix
from .syzygy import (
    SyzygyElement,
    entries_from_vector,
    koszul_matrix,
    lift_colon_element,
    xi_matrix,
)

__all__ = [
    "INF",
    "DEFAULT_BUDGET",
    "BudgetExceeded",
    "InconsistencyError",
    "Decision",
    "LefschetzBounds",
    "RankCertificate",
    "KernelWitness",
    "WlpVerdict",
    "MgdResult",
    "EquivalenceReport",
    "socle_degree",
    "E",
    "MN",
    "bounds",
    "mgd_J",
    "stan_holds",
    "wlp_bruteforce",
    "wlp_all_degrees",
    "mgd_syz",
    "mgd_kos",
    "mgd_syzbar",
    "mgd_syzbar_direct",
    "equivalence_suite",
]

INF = math.inf
DEFAULT_BUDGET = 20_000


class BudgetExceeded(RuntimeError):
    """A graded piece is larger than the allowed number of monomials."""

    def __init__(self, dimension, budget, where=""):
        super().__init__(f"graded piece of dimension {dimension} exceeds budget {budget}"
                         + (f" ({where})" if where else ""))
        self.dimension = dimension
        self.budget = budget


class InconsistencyError(RuntimeError):
    """Two routes that must agree by theory returned different answers."""


class Decision(str, enum.Enum):
    HAS_WLP = "HasWLP"
    NO_WLP = "NoWLP"
    UNSUPPORTED = "Unsupported"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class LefschetzBounds:
    n: int
    a: Tuple[int, ...]
    E: int
    sigma: int

    def MN(self, gamma):
        return MN(self.n, self.a, gamma)


@dataclass(frozen=True)
class RankCertificate:
    degree: int
    rank: int
    expected: int

    @property
    def ok(self):
        return self.rank == self.expected

    def to_dict(self):
        return {"degree": self.degree, "rank": self.rank, "expected": self.expected}


@dataclass(frozen=True)
class KernelWitness:
    """Nonzero ``f`` in ``A_source_degree`` with ``L * f = 0``.

    As an element of the kernel of ``A(-1) -> A`` it sits in degree
    ``source_degree + 1``, reported as ``degree``.
    """

    source_degree: int
    poly: PolyFp

    @property
    def degree(self):
        return self.source_degree + 1

    def check(self, a):
        """Recompute ``L * f`` in ``A`` and confirm it vanishes."""
        L = PolyFp.linear_sum(self.poly.p, self.poly.nvars)
        return not self.poly.is_zero() and (L * self.poly).truncate(a).is_zero()

    def to_dict(self):
        return {"degree": self.degree, "source_degree": self.source_degree,
                "poly": self.poly.format()}


@dataclass(frozen=True)
class WlpVerdict:
    decision: Decision
    ranks: Tuple[RankCertificate, ...] = ()
    witness: Optional[KernelWitness] = None

    @property
    def has_wlp(self):
        return self.decision is Decision.HAS_WLP

    def to_dict(self):
        return {
            "decision": self.decision.value,
            "ranks": [r.to_dict() for r in self.ranks],
            "witness": self.witness.to_dict() if self.witness else None,
        }


@dataclass(frozen=True)
class MgdResult:
    value: float  # int, or INF for the zero module
    witness: object = None

    @property
    def finite(self):
        return self.value != INF


def _check(p, n, a):
    check_prime(p)
    a = check_exponents(a)
    if n != len(a):
        raise ValueError(f"n={n} but the exponent tuple has length {len(a)}")
    return a


def _budget(dim, budget, where):
    if budget is not None and dim > budget:
        raise BudgetExceeded(dim, budget, where)


def socle_degree(a):
    return sum(a) - len(a)


def E(n, a):
    return (sum(a) - n + 3) // 2


def MN(n, a, gamma):
    return 1 + (sum(a) - n - gamma) // 2


def bounds(n, a):
    a = check_exponents(a)
    if n != len(a):
        raise ValueError(f"n={n} but the exponent tuple has length {len(a)}")
    return LefschetzBounds(n, a, E(n, a), socle_degree(a))


def _normalize(vec, p):
    nz = np.flatnonzero(vec)
    if nz.size == 0:
        return vec
    inv = pow(int(vec[nz[0]]), -1, p)
    return (vec * inv) % p


def _kernel_witness(mm, p):
    vec = first_kernel_vector(mm.matrix, p)
    if vec is None:
        return None
    vec = _normalize(vec, p)
    return PolyFp.from_vector(mm.source, vec)


def mgd_J(p, n, a, gamma, budget=DEFAULT_BUDGET):
    """Lowest degree of a nonzero element of J(gamma), with a witness polynomial."""
    a = _check(p, n, a)
    if gamma < 0:
        raise ValueError("gamma must be non-negative")
    if gamma == 0:
        return MgdResult(INF)
    sigma = socle_degree(a)
    for i in range(0, sigma + 1):
        dim = hilbert(a, i)
        if i + gamma > sigma:
            # L^gamma kills all of A_i
            piece = graded_basis(p, a, i)
            return MgdResult(i, PolyFp.monomial(p, piece.basis[0]))
        _budget(max(dim, hilbert(a, i + gamma)), budget, f"degree {i}")
        mm = mult_matrix(p, a, gamma, i)
        if mm.rank() < dim:
            return MgdResult(i, _kernel_witness(mm, p))
    return MgdResult(INF)


def stan_holds(p, n, a, gamma, budget=DEFAULT_BUDGET):
    """MN(n, a, gamma) <= mgd J(gamma)."""
    a = _check(p, n, a)
    if gamma == 0:
        return True
    target = MN(n, a, gamma)
    if target <= 0:
        return True
    # only degrees below MN matter
    sigma = socle_degree(a)
    for i in range(0, min(target, sigma + 1)):
        if i + gamma > sigma:
            return False
        _budget(max(hilbert(a, i), hilbert(a, i + gamma)), budget, f"degree {i}")
        if not mult_matrix(p, a, gamma, i).is_injective():
            return False
    return True


def _first_kernel_witness(p, a, upto, budget):
    for i in range(0, upto + 1):
        _budget(max(hilbert(a, i), hilbert(a, i + 1)), budget, f"degree {i}")
        mm = mult_matrix(p, a, 1, i)
        if mm.rank() < len(mm.source):
            return KernelWitness(i, _kernel_witness(mm, p))
    return None


def wlp_bruteforce(p, n, a, budget=DEFAULT_BUDGET):
    """Decide the WLP from injectivity of L: A_m -> A_{m+1}, m = floor((sigma-1)/2)."""
    a = _check(p, n, a)
    sigma = socle_degree(a)
    mid = (sigma - 1) // 2
    if mid < 0:
        return WlpVerdict(Decision.HAS_WLP)
    _budget(max(hilbert(a, mid), hilbert(a, mid + 1)), budget, f"degree {mid}")
    mm = mult_matrix(p, a, 1, mid)
    rank = mm.rank()
    cert = RankCertificate(mid, rank, min(len(mm.source), len(mm.target)))
    if rank == len(mm.source):
        return WlpVerdict(Decision.HAS_WLP, (cert,))
    witness = _first_kernel_witness(p, a, mid, budget)
    return WlpVerdict(Decision.NO_WLP, (cert,), witness)


def wlp_all_degrees(p, n, a, budget=DEFAULT_BUDGET):
    """Check maximal rank of L: A_i -> A_{i+1} in every degree 0 <= i <= sigma."""
    a = _check(p, n, a)
    sigma = socle_degree(a)
    certs = []
    witness = None
    for i in range(0, sigma + 1):
        _budget(max(hilbert(a, i), hilbert(a, i + 1)), budget, f"degree {i}")
        mm = mult_matrix(p, a, 1, i)
        rank = mm.rank()
        certs.append(RankCertificate(i, rank, min(len(mm.source), len(mm.target))))
        if witness is None and rank < len(mm.source) and len(mm.source) <= len(mm.target):
            witness = KernelWitness(i, _kernel_witness(mm, p))
    ok = all(c.ok for c in certs)
    return WlpVerdict(Decision.HAS_WLP if ok else Decision.NO_WLP, tuple(certs),
                      None if ok else witness)


def _syz_kernel(p, a, degree):
    mat, blocks = xi_matrix(p, a, degree)
    return mat, blocks


def mgd_syz(p, n, a, budget=DEFAULT_BUDGET):
    """Lowest degree of a nonzero relation on the row, with a normalized witness."""
    a = _check(p, n, a)
    if n < 2:
        raise ValueError("Syz needs n >= 2")
    stop = mgd_kos(n, a)
    for j in range(min(a), stop + 1):
        mat, blocks = _syz_kernel(p, a, j)
        _budget(mat.shape[1], budget, f"Syz degree {j}")
        if mat.shape[1] == 0:
            continue
        if rank_mod_p(mat, p) < mat.shape[1]:
            vec = first_kernel_vector(mat, p)
            eta = SyzygyElement.from_entries(p, a, entries_from_vector(p, a, blocks, vec))
            return MgdResult(j, eta.normalized())
    raise InconsistencyError("no relation found up to the Koszul degree")


def mgd_kos(n, a):
    """Sum of the two smallest exponents."""
    a = check_exponents(a)
    if n < 2 or len(a) != n:
        raise ValueError("Kos needs n >= 2 exponents")
    s = sorted(a)
    return s[0] + s[1]


def mgd_syzbar(p, n, a, budget=DEFAULT_BUDGET):
    """mgd Syz-bar through two kernel computations that must agree.

    Route 1 shifts mgd J(gamma=1) of ``A`` by one; route 2 shifts
    mgd J(gamma=a_n) of the ring on the first n-1 exponents by ``a_n``.  The
    witness is the relation obtained by lifting the route-2 kernel element.
    """
    a = _check(p, n, a)
    if n < 2:
        raise ValueError("Syz-bar needs n >= 2")
    via_k = mgd_J(p, n, a, 1, budget).value + 1
    inner = mgd_J(p, n - 1, a[:-1], a[-1], budget)
    via_colon = inner.value + a[-1]
    if via_k != via_colon:
        raise InconsistencyError(f"mgd Syz-bar routes disagree for p={p}, a={a}: {via_k} vs {via_colon}")
    witness = None
    if inner.witness is not None:
        witness = lift_colon_element(p, a, inner.witness)
        if witness is not None:
            witness = witness.normalized()
    return MgdResult(via_k, witness)


def syzbar_dimension(p, a, degree):
    """dim Syz_j - dim Kos_j computed directly over Q = k[x_1..x_{n-1}]."""
    mat, _ = xi_matrix(p, a, degree)
    if mat.shape[1] == 0:
        return 0
    nullity = mat.shape[1] - rank_mod_p(mat, p)
    kos = koszul_matrix(p, a, degree)
    kos_rank = rank_mod_p(kos, p) if kos.shape[1] else 0
    return nullity - kos_rank


def mgd_syzbar_direct(p, n, a, budget=DEFAULT_BUDGET, upto=None):
    """mgd Syz-bar from degreewise dimensions of Syz and Kos (no colon ideals).

    Searches degrees up to ``upto`` (default sigma + 1, where Syz-bar is
    always nonzero) and returns ``INF`` if nothing turns up by then.
    """
    a = _check(p, n, a)
    if n < 2:
        raise ValueError("Syz-bar needs n >= 2")
    stop = socle_degree(a) + 1 if upto is None else upto
    for j in range(min(a), stop + 1):
        _budget(sum(max(0, math.comb(j - ai + n - 2, n - 2)) if j >= ai else 0 for ai in a),
                budget, f"Syz degree {j}")
        if syzbar_dimension(p, a, j) > 0:
            return MgdResult(j)
    return MgdResult(INF)


@dataclass(frozen=True)
class EquivalenceReport:
    p: int
    a: Tuple[int, ...]
    injective_up_to_middle: bool
    injective_at_middle: bool
    stan_gamma_one: bool
    syzbar_bound: bool
    stan_last_variable: bool
    mgd_syzbar: float = INF
    E: int = 0

    @property
    def conditions(self):
        return (self.injective_up_to_middle, self.injective_at_middle, self.stan_gamma_one,
                self.syzbar_bound, self.stan_last_variable)

    @property
    def agree(self):
        return len(set(self.conditions)) == 1

    def to_dict(self):
        return {
            "p": self.p,
            "a": list(self.a),
            "conditions": list(self.conditions),
            "agree": self.agree,
            "E": self.E,
            "mgd_syzbar": "infinity" if self.mgd_syzbar == INF else self.mgd_syzbar,
        }


def equivalence_suite(p, n, a, budget=DEFAULT_BUDGET):
    """Evaluate the five equivalent WLP conditions independently.

    1. L is injective on A_i for every i <= floor((sigma-1)/2);
    2. L is injective on A_i for i = floor((sigma-1)/2);
    3. MN(n, a, 1) <= mgd J(gamma=1);
    4. E(n, a) <= mgd Syz-bar, with Syz-bar measured directly from Syz and Kos;
    5. MN(n-1, a', a_n) <= mgd J over n-1 variables with gamma = a_n.
    """
    a = _check(p, n, a)
    if n < 2:
        raise ValueError("the equivalence suite needs n >= 2")
    sigma = socle_degree(a)
    mid = (sigma - 1) // 2
    injective = []
    for i in range(0, mid + 1):
        _budget(max(hilbert(a, i), hilbert(a, i + 1)), budget, f"degree {i}")
        injective.append(mult_matrix(p, a, 1, i).is_injective())
    c1 = all(injective)
    c2 = injective[-1] if injective else True
    c3 = MN(n, a, 1) <= mgd_J(p, n, a, 1, budget).value
    e = E(n, a)
    direct = mgd_syzbar_direct(p, n, a, budget, upto=e)
    c4 = e <= direct.value
    c5 = MN(n - 1, a[:-1], a[-1]) <= mgd_J(p, n - 1, a[:-1], a[-1], budget).value
    return EquivalenceReport(p, a, c1, c2, c3, c4, c5, direct.value, e)
