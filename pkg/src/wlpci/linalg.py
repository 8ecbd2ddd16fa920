"""Dense Gaussian elimination over a prime field F_p on numpy int64 arrays.

Entries are kept reduced in [0, p); products stay below p**2, so int64 is
exact for every prime this package is meant for (p < 2**31).
"""

import numpy as np

__all__ = ["as_fp_array", "row_reduce", "rank_mod_p", "kernel_basis", "matmul_mod_p", "inverse_mod"]


def inverse_mod(a, p):
    return pow(int(a), -1, p)


def as_fp_array(matrix, p):
    arr = np.array(matrix, dtype=object) if not isinstance(matrix, np.ndarray) else matrix
    if arr.dtype == object:
        arr = np.array([[int(x) % p for x in row] for row in arr], dtype=np.int64).reshape(arr.shape)
    else:
        arr = np.mod(arr.astype(np.int64, copy=True), p)
    return arr


def row_reduce(matrix, p, *, reduced=True):
    """Row-reduce a copy of ``matrix`` mod p.

    Returns ``(echelon, pivots)`` where ``pivots`` lists pivot columns in
    order.  With ``reduced=True`` the result is the reduced row echelon form
    (pivots equal 1 and are the only nonzero entry of their column);
    otherwise only entries below the pivots are cleared, which is enough for
    the rank.
    """
    a = as_fp_array(matrix, p)
    if a.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    nrows, ncols = a.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        col = a[r:, c]
        nz = np.flatnonzero(col)
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = inverse_mod(a[r, c], p)
        if inv != 1:
            a[r, c:] = (a[r, c:] * inv) % p
        prow = a[r, c:]
        pcols = np.flatnonzero(prow)
        if reduced:
            targets = np.flatnonzero(a[:, c])
            targets = targets[targets != r]
        else:
            targets = r + 1 + np.flatnonzero(a[r + 1:, c])
        if targets.size:
            factors = a[targets, c]
            cols = c + pcols
            block = a[np.ix_(targets, cols)]
            block -= np.outer(factors, prow[pcols])
            np.mod(block, p, out=block)
            a[np.ix_(targets, cols)] = block
        pivots.append(c)
        r += 1
    return a, pivots


def _panel_rank(a, p, r, c0, c1):
    """Eliminate columns c0:c1 of rows r: in place; return the pivot count.

    ``a`` is float64 holding exact integers.  Row swaps are applied to whole
    rows and the trailing columns c1: are updated with one matrix product,
    so ``a`` stays row-equivalent to the input.  Trailing entries are left
    unreduced (congruent mod p); callers bound their growth.
    """
    nrows = a.shape[0]
    panel = np.mod(a[r:, c0:c1], p)
    m = panel.shape[0]
    perm = np.arange(m)
    mult = np.zeros((m, c1 - c0), dtype=np.float64)
    k = 0
    for j in range(c1 - c0):
        if k == m:
            break
        nz = np.flatnonzero(panel[k:, j])
        if nz.size == 0:
            continue
        piv = k + int(nz[0])
        if piv != k:
            panel[[k, piv]] = panel[[piv, k]]
            perm[[k, piv]] = perm[[piv, k]]
            mult[[k, piv]] = mult[[piv, k]]
        inv = inverse_mod(panel[k, j], p)
        below = k + 1 + np.flatnonzero(panel[k + 1:, j])
        if below.size:
            f = np.mod(panel[below, j] * inv, p)
            mult[below, k] = f
            panel[below, j:] = np.mod(panel[below, j:] - np.outer(f, panel[k, j:]), p)
        k += 1
    if k == 0:
        a[r:, c0:c1] = panel
        return 0
    moved = np.flatnonzero(perm != np.arange(m))
    if moved.size:
        a[r + moved] = a[r + perm[moved]]
    a[r:, c0:c1] = panel
    if c1 < a.shape[1]:
        u = np.mod(a[r:r + k, c1:], p)
        for j in range(1, k):
            coeffs = mult[j, :j]
            if coeffs.any():
                u[j] = np.mod(u[j] - coeffs @ u[:j], p)
        a[r:r + k, c1:] = u
        if r + k < nrows:
            a[r + k:, c1:] -= mult[k:, :k] @ u
    return k


def _rank_blocked(a, p, block=64):
    a = a.astype(np.float64)
    nrows, ncols = a.shape
    limit = 2.0 ** 52
    step = block * float(p - 1) ** 2
    bound = float(p)
    r = 0
    for c0 in range(0, ncols, block):
        if r == nrows:
            break
        if bound + step >= limit:
            np.mod(a[r:], p, out=a[r:])
            bound = float(p)
        r += _panel_rank(a, p, r, c0, min(ncols, c0 + block))
        bound += step
    return r


def rank_mod_p(matrix, p):
    """Rank of ``matrix`` over F_p."""
    a = as_fp_array(matrix, p)
    if a.size == 0:
        return 0
    # eliminate along the shorter side
    if a.shape[0] > a.shape[1]:
        a = a.T.copy()
    if min(a.shape) > 192 and p < 2 ** 16:
        return _rank_blocked(a, p)
    return len(row_reduce(a, p, reduced=False)[1])


def kernel_basis(matrix, p):
    """Basis of the right null space ``{v : matrix @ v = 0}`` over F_p.

    Vectors come from the free columns of the reduced echelon form, in
    increasing column order; the k-th vector has a 1 in the k-th free column
    and zeros in the other free columns.
    """
    a = as_fp_array(matrix, p)
    ncols = a.shape[1]
    if a.shape[0] == 0:
        return [np.eye(ncols, dtype=np.int64)[i] for i in range(ncols)]
    rref, pivots = row_reduce(a, p, reduced=True)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = np.zeros(ncols, dtype=np.int64)
        v[f] = 1
        for row, pc in enumerate(pivots):
            v[pc] = (-rref[row, f]) % p
        basis.append(v)
    return basis


def first_kernel_vector(matrix, p):
    """The first vector :func:`kernel_basis` would return, or ``None``."""
    a = as_fp_array(matrix, p)
    ncols = a.shape[1]
    if ncols == 0:
        return None
    if a.shape[0] == 0:
        v = np.zeros(ncols, dtype=np.int64)
        v[0] = 1
        return v
    rref, pivots = row_reduce(a, p, reduced=True)
    pivset = set(pivots)
    for f in range(ncols):
        if f not in pivset:
            v = np.zeros(ncols, dtype=np.int64)
            v[f] = 1
            for row, pc in enumerate(pivots):
                if pc > f:
                    break
                v[pc] = (-rref[row, f]) % p
            return v
    return None


def matmul_mod_p(x, y, p):
    x = np.asarray(x, dtype=np.int64)
    y = np.asarray(y, dtype=np.int64)
    if x.shape[1] == 0:
        return np.zeros((x.shape[0], y.shape[1]), dtype=np.int64)
    # chunk the inner dimension so partial sums stay far below 2**63
    step = max(1, (2 ** 62) // max(1, (p - 1) ** 2))
    out = np.zeros((x.shape[0], y.shape[1]), dtype=np.int64)
    for k in range(0, x.shape[1], step):
        out = (out + x[:, k:k + step] @ y[k:k + step, :]) % p
    return out
