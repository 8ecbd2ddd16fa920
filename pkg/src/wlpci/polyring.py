"""Graded pieces of monomial complete intersections and polynomials over F_p.

The quotient ``A = F_p[x_1..x_n] / (x_1^a_1, ..., x_n^a_n)`` has the monomials
with ``e_j < a_j`` as a basis.  Every graded piece is listed in graded-lex
order with ``x_1 > x_2 > ...``; since a piece is homogeneous this is plain
lexicographic order on exponent vectors, largest first.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Optional, Tuple

import numpy as np

from .exactarith import check_prime, multinomial_mod
from .linalg import first_kernel_vector, kernel_basis, matmul_mod_p, rank_mod_p

__all__ = [
    "check_exponents",
    "monomials",
    "hilbert",
    "hilbert_vector",
    "GradedPiece",
    "graded_basis",
    "GradedMapMatrix",
    "mult_matrix",
    "rank_mod_p",
    "kernel_basis",
    "first_kernel_vector",
    "matmul_mod_p",
    "PolyFp",
    "in_monomial_ideal",
]

Monomial = Tuple[int, ...]


def check_exponents(a):
    a = tuple(int(x) for x in a)
    if not a:
        raise ValueError("exponent tuple must be non-empty")
    if any(x < 1 for x in a):
        raise ValueError(f"exponents must be positive, got {a}")
    return a


@lru_cache(maxsize=4096)
def monomials(nvars, degree, bounds=None):
    """Exponent vectors of total ``degree`` in ``nvars`` variables, lex-descending.

    With ``bounds`` given, only vectors with ``e_j < bounds[j]`` are kept.
    """
    if degree < 0 or nvars < 0:
        return ()
    if nvars == 0:
        return ((),) if degree == 0 else ()
    out = []
    top = degree if bounds is None else min(degree, bounds[0] - 1)
    rest_bounds = None if bounds is None else bounds[1:]
    if rest_bounds is not None:
        cap = sum(b - 1 for b in rest_bounds)
    for e in range(top, -1, -1):
        if rest_bounds is not None and degree - e > cap:
            break
        for tail in monomials(nvars - 1, degree - e, rest_bounds):
            out.append((e,) + tail)
    return tuple(out)


@lru_cache(maxsize=1024)
def hilbert_vector(a):
    """Coefficients of prod_j (1 + t + ... + t^(a_j - 1)), lowest degree first."""
    a = check_exponents(a)
    h = [1]
    for aj in a:
        nxt = [0] * (len(h) + aj - 1)
        # running-window sum == convolution with a row of aj ones
        window = 0
        for i in range(len(nxt)):
            if i < len(h):
                window += h[i]
            if i - aj >= 0:
                window -= h[i - aj]
            nxt[i] = window
        h = nxt
    return tuple(h)


def hilbert(a, i):
    """dim_k A_i for the complete intersection with exponents ``a``."""
    h = hilbert_vector(tuple(a))
    return h[i] if 0 <= i < len(h) else 0


@dataclass(frozen=True)
class GradedPiece:
    p: int
    a: Tuple[int, ...]
    degree: int
    basis: Tuple[Monomial, ...]
    index: Dict[Monomial, int] = field(repr=False, compare=False)

    def __len__(self):
        return len(self.basis)


@lru_cache(maxsize=1024)
def _piece(p, a, i):
    basis = monomials(len(a), i, a) if i >= 0 else ()
    return GradedPiece(p, a, i, basis, {m: k for k, m in enumerate(basis)})


def graded_basis(p, a, i):
    """The degree-``i`` piece of ``A`` with its canonically ordered monomial basis."""
    check_prime(p)
    return _piece(p, check_exponents(a), i)


@dataclass(frozen=True)
class GradedMapMatrix:
    """Matrix of a degree-``target.degree - source.degree`` map between pieces.

    Column ``j`` holds the image of ``source.basis[j]`` in ``target`` coordinates.
    """

    source: GradedPiece
    target: GradedPiece
    matrix: np.ndarray

    @property
    def p(self):
        return self.source.p

    @property
    def shape(self):
        return self.matrix.shape

    def rank(self):
        return rank_mod_p(self.matrix, self.p) if self.matrix.size else 0

    def is_injective(self):
        return self.rank() == len(self.source)

    def has_max_rank(self):
        return self.rank() == min(len(self.source), len(self.target))

    def apply(self, vector):
        v = np.asarray(vector, dtype=np.int64).reshape(-1, 1)
        return matmul_mod_p(self.matrix, v, self.p).ravel()


@lru_cache(maxsize=256)
def _compositions(nparts, total):
    return monomials(nparts, total)


def _power_coefficients(p, n, gamma):
    """Nonzero coefficients of (x_1 + ... + x_n)^gamma mod p as (shift, coeff)."""
    out = []
    for c in _compositions(n, gamma):
        coeff = multinomial_mod(c, p)
        if coeff:
            out.append((c, coeff))
    return out


def mult_matrix(p, a, gamma, i):
    """Matrix of multiplication by (x_1 + ... + x_n)^gamma from A_i to A_{i+gamma}."""
    check_prime(p)
    a = check_exponents(a)
    if gamma < 0:
        raise ValueError("gamma must be non-negative")
    src = _piece(p, a, i)
    tgt = _piece(p, a, i + gamma)
    mat = np.zeros((len(tgt), len(src)), dtype=np.int64)
    if len(src) and len(tgt):
        terms = _power_coefficients(p, len(a), gamma)
        tindex = tgt.index
        for col, m in enumerate(src.basis):
            for shift, coeff in terms:
                row = tindex.get(tuple(x + y for x, y in zip(m, shift)))
                if row is not None:
                    mat[row, col] = coeff
    return GradedMapMatrix(src, tgt, mat)


class PolyFp:
    """Sparse polynomial over F_p: a dict from exponent tuples to residues."""

    __slots__ = ("p", "nvars", "terms")

    def __init__(self, p, nvars, terms=None):
        self.p = p
        self.nvars = nvars
        clean = {}
        if terms:
            for m, c in terms.items():
                if len(m) != nvars:
                    raise ValueError(f"monomial {m} does not have {nvars} variables")
                c %= p
                if c:
                    clean[tuple(m)] = c
        self.terms = clean

    # constructors
    @classmethod
    def zero(cls, p, nvars):
        return cls(p, nvars)

    @classmethod
    def constant(cls, p, nvars, c=1):
        return cls(p, nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, p, exps, c=1):
        return cls(p, len(exps), {tuple(exps): c})

    @classmethod
    def variable(cls, p, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls(p, nvars, {tuple(e): 1})

    @classmethod
    def linear_sum(cls, p, nvars, idx=None):
        """x_{i} summed over ``idx`` (all variables by default)."""
        idx = range(nvars) if idx is None else idx
        return sum((cls.variable(p, nvars, i) for i in idx), cls.zero(p, nvars))

    # queries
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degrees(self):
        return {sum(m) for m in self.terms}

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    @property
    def degree(self):
        """Total degree of a homogeneous polynomial (None for zero)."""
        degs = self.degrees()
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError("polynomial is not homogeneous")
        return degs.pop()

    def sorted_terms(self):
        """Terms in graded-lex order, largest monomial first."""
        return sorted(self.terms.items(), key=lambda mc: (sum(mc[0]), mc[0]), reverse=True)

    def leading_coefficient(self):
        st = self.sorted_terms()
        return st[0][1] if st else 0

    def coefficient(self, m):
        return self.terms.get(tuple(m), 0)

    # arithmetic
    def _check(self, other):
        if not isinstance(other, PolyFp):
            return PolyFp.constant(self.p, self.nvars, other)
        if other.p != self.p or other.nvars != self.nvars:
            raise ValueError("polynomials live in different rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = (out.get(m, 0) + c) % self.p
        return PolyFp(self.p, self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return PolyFp(self.p, self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def scale(self, c):
        return PolyFp(self.p, self.nvars, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, PolyFp):
            return self.scale(other)
        other = self._check(other)
        p = self.p
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                out[m] = (out.get(m, 0) + c1 * c2) % p
        return PolyFp(p, self.nvars, out)

    __rmul__ = __mul__

    def frobenius(self, q):
        """f(x)^q for q a power of p: coefficients are fixed, exponents scale by q."""
        qq = q
        while qq % self.p == 0:
            qq //= self.p
        if qq != 1:
            raise ValueError(f"{q} is not a power of {self.p}")
        return PolyFp(self.p, self.nvars, {tuple(q * e for e in m): c for m, c in self.terms.items()})

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = PolyFp.constant(self.p, self.nvars)
        base = self
        # peel off p-th powers with the Frobenius map, multiply the digits
        q = 1
        while k:
            digit = k % self.p
            if digit:
                piece = base.frobenius(q) if q > 1 else base
                for _ in range(digit):
                    result = result * piece
            k //= self.p
            q *= self.p
        return result

    def __eq__(self, other):
        if isinstance(other, PolyFp):
            return self.p == other.p and self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, int):
            return self == PolyFp.constant(self.p, self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.nvars, frozenset(self.terms.items())))

    def exact_divide(self, divisor):
        """Quotient of an exact division (multivariate, lex leading terms)."""
        divisor = self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        key = lambda m: (sum(m), m)
        lead_m = max(divisor.terms, key=key)
        lead_inv = pow(divisor.terms[lead_m], -1, self.p)
        rem = PolyFp(self.p, self.nvars, self.terms)
        quot = {}
        while rem.terms:
            m = max(rem.terms, key=key)
            shift = tuple(x - y for x, y in zip(m, lead_m))
            if min(shift) < 0:
                raise ArithmeticError("division is not exact")
            c = rem.terms[m] * lead_inv % self.p
            quot[shift] = c
            rem = rem - PolyFp.monomial(self.p, shift, c) * divisor
        return PolyFp(self.p, self.nvars, quot)

    def truncate(self, a):
        """Normal form in the quotient by (x_1^a_1, ..., x_m^a_m)."""
        return PolyFp(self.p, self.nvars, {m: c for m, c in self.terms.items()
                                           if all(e < b for e, b in zip(m, a))})

    def homogeneous_part(self, deg):
        return PolyFp(self.p, self.nvars, {m: c for m, c in self.terms.items() if sum(m) == deg})

    def to_vector(self, piece):
        """Coordinates in a graded piece's basis (terms outside the basis raise)."""
        v = np.zeros(len(piece), dtype=np.int64)
        for m, c in self.terms.items():
            try:
                v[piece.index[m]] = c
            except KeyError:
                raise ValueError(f"monomial {m} is not in the basis") from None
        return v

    @classmethod
    def from_vector(cls, piece, vector, nvars=None):
        nvars = len(piece.a) if nvars is None else nvars
        return cls(piece.p, nvars, {m: int(c) for m, c in zip(piece.basis, vector) if int(c) % piece.p})

    def format(self, names=None, signed=False):
        """Human-readable form, terms in canonical order.

        Coefficients print as residues in [1, p-1]; with ``signed`` the
        residue p-1 prints as a minus sign.
        """
        if not self.terms:
            return "0"
        names = names or [f"x{i + 1}" for i in range(self.nvars)]
        parts = []
        for m, c in self.sorted_terms():
            neg = signed and c == self.p - 1 and self.p > 2
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e)
            coeff = 1 if neg else c
            if not mono:
                body = str(coeff)
            elif coeff == 1:
                body = mono
            else:
                body = f"{coeff}*{mono}"
            parts.append(("-" if neg else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"PolyFp(p={self.p}, {self.format()})"


def in_monomial_ideal(f, a):
    """True iff ``f`` lies in (x_1^a_1, ..., x_m^a_m), m = number of variables of f."""
    a = tuple(a)[: f.nvars]
    if len(a) < f.nvars:
        raise ValueError("need one exponent per variable")
    return all(any(e >= b for e, b in zip(m, a)) for m in f.terms)
