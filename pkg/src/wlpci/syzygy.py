"""Relations on x_1^a_1, ..., x_{n-1}^a_{n-1}, (x_1 + ... + x_{n-1})^a_n.

Everything here lives in Q = F_p[x_1, ..., x_{n-1}].  A syzygy is an n-vector
of homogeneous polynomials ``[v_1, ..., v_n]`` with ``sum v_i g_i = 0`` for
the row ``g`` above; its degree is ``deg v_i + a_i`` (the same for every
nonzero entry).
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

import numpy as np

from .exactarith import check_prime
from .linalg import rank_mod_p
from .polyring import PolyFp, check_exponents, monomials

__all__ = [
    "SyzygyElement",
    "generators",
    "xi_apply",
    "xi_matrix",
    "koszul_matrix",
    "koszul_generator",
    "verify_syzygy",
    "in_koszul_span",
    "lift_colon_element",
]


@lru_cache(maxsize=512)
def _generators(p, a):
    n = len(a)
    m = n - 1
    gens = [PolyFp.monomial(p, tuple(a[i] if j == i else 0 for j in range(m))) for i in range(m)]
    gens.append(PolyFp.linear_sum(p, m) ** a[-1])
    return tuple(gens)


def generators(p, a):
    """The row [x_1^a_1, ..., x_{n-1}^a_{n-1}, (x_1 + ... + x_{n-1})^a_n] over Q."""
    check_prime(p)
    a = check_exponents(a)
    if len(a) < 2:
        raise ValueError("need at least two exponents")
    return _generators(p, a)


@dataclass(frozen=True)
class SyzygyElement:
    p: int
    a: Tuple[int, ...]
    entries: Tuple[PolyFp, ...]
    total_degree: int

    @property
    def n(self):
        return len(self.a)

    def is_zero(self):
        return all(e.is_zero() for e in self.entries)

    def is_homogeneous(self):
        for e, ai in zip(self.entries, self.a):
            if e.is_zero():
                continue
            if not e.is_homogeneous() or e.degree + ai != self.total_degree:
                return False
        return True

    def normalized(self):
        """Scale so the first nonzero entry has leading coefficient 1."""
        for e in self.entries:
            if not e.is_zero():
                inv = pow(e.leading_coefficient(), -1, self.p)
                if inv == 1:
                    return self
                return SyzygyElement(self.p, self.a, tuple(x.scale(inv) for x in self.entries),
                                     self.total_degree)
        return self

    def format(self, signed=True):
        return "[" + ", ".join(e.format(signed=signed) for e in self.entries) + "]"

    def to_dict(self):
        return {
            "p": self.p,
            "a": list(self.a),
            "total_degree": self.total_degree,
            "entries": [e.format() for e in self.entries],
        }

    @classmethod
    def from_entries(cls, p, a, entries):
        a = check_exponents(a)
        degs = {e.degree + ai for e, ai in zip(entries, a) if not e.is_zero()}
        if len(degs) != 1:
            raise ValueError(f"entries do not share a single total degree: {sorted(degs)}")
        return cls(p, a, tuple(entries), degs.pop())


def xi_apply(p, a, entries):
    """sum_i entries[i] * g_i in Q."""
    gens = generators(p, a)
    total = PolyFp.zero(p, len(a) - 1)
    for v, g in zip(entries, gens):
        if not v.is_zero():
            total = total + v * g
    return total


def verify_syzygy(eta, a=None):
    """True iff ``eta`` is a nonzero homogeneous relation on the row for ``a``."""
    a = eta.a if a is None else check_exponents(a)
    if len(eta.entries) != len(a):
        return False
    probe = SyzygyElement(eta.p, a, eta.entries, eta.total_degree)
    if probe.is_zero() or not probe.is_homogeneous():
        return False
    return xi_apply(eta.p, a, eta.entries).is_zero()


def koszul_generator(p, a, i, j, multiplier=None):
    """The relation with g_j in slot i and -g_i in slot j (times ``multiplier``)."""
    gens = generators(p, a)
    m = len(a) - 1
    entries = [PolyFp.zero(p, m) for _ in a]
    mult = multiplier if multiplier is not None else PolyFp.constant(p, m)
    entries[i] = mult * gens[j]
    entries[j] = -(mult * gens[i])
    return SyzygyElement.from_entries(p, a, entries)


def _source_layout(a, degree):
    """Monomial blocks of (+)_i Q_{degree - a_i} and their column offsets."""
    m = len(a) - 1
    blocks, offsets, off = [], [], 0
    for ai in a:
        mons = monomials(m, degree - ai)
        blocks.append(mons)
        offsets.append(off)
        off += len(mons)
    return blocks, offsets, off


def xi_matrix(p, a, degree):
    """Matrix of xi in degree ``degree``: (+)_i Q_{degree - a_i} -> Q_degree.

    Columns run over slots i = 1..n and, inside a slot, over the monomials of
    Q_{degree - a_i} in canonical order.  Returns ``(matrix, blocks)``.
    """
    a = check_exponents(a)
    gens = generators(p, a)
    m = len(a) - 1
    target = monomials(m, degree)
    tindex = {mon: k for k, mon in enumerate(target)}
    blocks, offsets, ncols = _source_layout(a, degree)
    mat = np.zeros((len(target), ncols), dtype=np.int64)
    for slot, (mons, off) in enumerate(zip(blocks, offsets)):
        gterms = list(gens[slot].terms.items())
        for k, mon in enumerate(mons):
            for gm, gc in gterms:
                mat[tindex[tuple(x + y for x, y in zip(mon, gm))], off + k] = gc
    return mat, blocks


def entries_from_vector(p, a, blocks, vec):
    m = len(a) - 1
    entries, off = [], 0
    for mons in blocks:
        chunk = vec[off:off + len(mons)]
        entries.append(PolyFp(p, m, {mon: int(c) for mon, c in zip(mons, chunk) if int(c) % p}))
        off += len(mons)
    return entries


def vector_from_entries(p, a, degree, entries):
    blocks, offsets, ncols = _source_layout(a, degree)
    vec = np.zeros(ncols, dtype=np.int64)
    for mons, off, e in zip(blocks, offsets, entries):
        index = {mon: k for k, mon in enumerate(mons)}
        for mon, c in e.terms.items():
            if mon not in index:
                raise ValueError("entry does not have the expected degree")
            vec[off + index[mon]] = c
    return vec


def koszul_matrix(p, a, degree):
    """Columns spanning Kos in degree ``degree`` inside (+)_i Q_{degree - a_i}."""
    a = check_exponents(a)
    gens = generators(p, a)
    m = len(a) - 1
    blocks, offsets, nrows = _source_layout(a, degree)
    index = [{mon: k for k, mon in enumerate(mons)} for mons in blocks]
    cols = []
    n = len(a)
    for i in range(n):
        for j in range(i + 1, n):
            for mult in monomials(m, degree - a[i] - a[j]):
                col = np.zeros(nrows, dtype=np.int64)
                for gm, gc in gens[j].terms.items():
                    col[offsets[i] + index[i][tuple(x + y for x, y in zip(mult, gm))]] += gc
                for gm, gc in gens[i].terms.items():
                    col[offsets[j] + index[j][tuple(x + y for x, y in zip(mult, gm))]] -= gc
                cols.append(col % p)
    if not cols:
        return np.zeros((nrows, 0), dtype=np.int64)
    return np.stack(cols, axis=1)


def in_koszul_span(eta):
    """True iff ``eta`` lies in the Koszul submodule (degreewise linear algebra)."""
    kos = koszul_matrix(eta.p, eta.a, eta.total_degree)
    if kos.shape[1] == 0:
        return eta.is_zero()
    vec = vector_from_entries(eta.p, eta.a, eta.total_degree, eta.entries).reshape(-1, 1)
    return rank_mod_p(np.hstack([kos, vec]), eta.p) == rank_mod_p(kos, eta.p)


def lift_colon_element(p, a, f) -> Optional[SyzygyElement]:
    """Turn ``f`` with ``f (x_1+...+x_{n-1})^a_n`` in (x_1^a_1, ..) into a syzygy.

    The last entry is ``f``; every monomial of ``-f * g_n`` is assigned to the
    first variable whose power it is divisible by.
    """
    a = check_exponents(a)
    gens = generators(p, a)
    m = len(a) - 1
    product = f * gens[-1]
    parts = [dict() for _ in range(m)]
    for mon, c in product.terms.items():
        for i in range(m):
            if mon[i] >= a[i]:
                q = list(mon)
                q[i] -= a[i]
                q = tuple(q)
                parts[i][q] = (parts[i].get(q, 0) - c) % p
                break
        else:
            return None
    entries = [PolyFp(p, m, part) for part in parts] + [f]
    return SyzygyElement.from_entries(p, a, entries)
