"""Exact linear algebra over Q(i).

Two independent eliminations are provided. :func:`fraction_free_rref` is a
Bareiss-style Gauss-Jordan sweep on Gaussian-integer matrices, where every
intermediate entry is a minor of the input, so the divisions by the previous
pivot are exact. :func:`naive_rref` is textbook Gauss-Jordan with field
division. The oracle checks one against the other.
"""

from __future__ import annotations

from collections.abc import Sequence
from math import lcm

from .scalars import ONE, ZERO, Scalar, as_scalar

Matrix = list[list[Scalar]]


def to_matrix(rows: Sequence[Sequence[object]]) -> Matrix:
    return [[as_scalar(x) for x in row] for row in rows]


def integralize(rows: Sequence[Sequence[Scalar]]) -> Matrix:
    """Scale each row by the lcm of its denominators to get Gaussian integers."""
    out = []
    for row in rows:
        dens = [x.re.denominator for x in row] + [x.im.denominator for x in row]
        m = lcm(*dens) if dens else 1
        out.append([x * m for x in row])
    return out


def fraction_free_rref(rows: Sequence[Sequence[Scalar]]) -> tuple[Matrix, list[int], Scalar]:
    """Fraction-free reduced echelon form.

    Returns ``(R, pivots, d)`` where every pivot entry of ``R`` equals ``d``
    and the other entries of pivot columns are zero. Input rows are first made
    integral, and the result stays integral.
    """
    a = integralize(rows)
    if not a:
        return [], [], ONE
    nrows, ncols = len(a), len(a[0])
    pivots: list[int] = []
    prev = ONE
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        prev_inv = prev.inverse()
        for i in range(nrows):
            if i == r:
                continue
            f = a[i][c]
            row_i, row_r = a[i], a[r]
            if f:
                a[i] = [(p * x - f * y) * prev_inv for x, y in zip(row_i, row_r)]
            else:
                a[i] = [p * x * prev_inv for x in row_i]
        prev = p
        pivots.append(c)
        r += 1
    return a, pivots, prev


def naive_rref(rows: Sequence[Sequence[Scalar]]) -> tuple[Matrix, list[int]]:
    """Gauss-Jordan with unit pivots, using field division."""
    a = [list(row) for row in rows]
    if not a:
        return [], []
    nrows, ncols = len(a), len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][c].inverse()
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(rows: Sequence[Sequence[object]]) -> int:
    _, pivots, _ = fraction_free_rref(to_matrix(rows))
    return len(pivots)


def naive_rank(rows: Sequence[Sequence[object]]) -> int:
    _, pivots = naive_rref(to_matrix(rows))
    return len(pivots)


def nullspace(rows: Sequence[Sequence[object]], ncols: int | None = None) -> list[list[Scalar]]:
    """Basis of ``{x : A x = 0}`` with Gaussian-integer entries."""
    a = to_matrix(rows)
    ncols = len(a[0]) if a else (ncols or 0)
    r, pivots, d = fraction_free_rref(a)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = d
        for i, c in enumerate(pivots):
            x[c] = -r[i][f]
        basis.append(x)
    return basis


def naive_nullspace(rows: Sequence[Sequence[object]], ncols: int | None = None) -> list[list[Scalar]]:
    a = to_matrix(rows)
    ncols = len(a[0]) if a else (ncols or 0)
    r, pivots = naive_rref(a)
    basis = []
    for f in (c for c in range(ncols) if c not in pivots):
        x = [ZERO] * ncols
        x[f] = ONE
        for i, c in enumerate(pivots):
            x[c] = -r[i][f]
        basis.append(x)
    return basis


def invert_matrix(m: Sequence[Sequence[object]]) -> Matrix | None:
    """Exact inverse of a square matrix, or None if it is singular."""
    n = len(m)
    aug = [list(to_matrix([row])[0]) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(m)]
    r, pivots = naive_rref(aug)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in r]


def matmul(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> Matrix:
    bt = list(zip(*b))
    out = []
    for row in a:
        out.append([sum((x * y for x, y in zip(row, col) if x and y), ZERO) for col in bt])
    return out


def spans_equal(u: Sequence[Sequence[Scalar]], v: Sequence[Sequence[Scalar]]) -> bool:
    """Whether two lists of vectors span the same subspace."""
    ru, rv = naive_rank(u) if u else 0, naive_rank(v) if v else 0
    if ru != rv:
        return False
    if not u:
        return True
    return naive_rank(list(u) + list(v)) == ru
