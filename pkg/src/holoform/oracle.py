"""Brute-force computation of GL_n-equivariant linear maps into Lambda^q V*.

The unknown map M: E -> Lambda^q V* (E = a sub-representation of the
covariant tensors of order k, by default all of them) is pinned down by the
linear equations ``M rho_E(X) = rho_Lambda(X) M`` for the generators
``X = E_ab`` of gl_n. GL_n acts on V* by ``g.xi = xi o g^-1``, so a
generator acts on a covariant slot by ``-X^T``. The solution space is then
compared with the span of skew-symmetrization. Nothing here calls into
:mod:`holoform.tensors`; the comparison map is built from scratch.
"""

from __future__ import annotations

import random
import time
from collections.abc import Sequence
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from math import comb

from .forms import sort_with_sign
from .linalg import (
    invert_matrix,
    naive_nullspace,
    naive_rank,
    naive_rref,
    nullspace,
    spans_equal,
    to_matrix,
)
from .scalars import ONE, ZERO, Scalar

__all__ = [
    "OracleLimitError",
    "NotInvariantError",
    "EquivariantSolution",
    "equivariant_hom_dimension",
    "verify_h_is_solution",
    "skew_matrix",
    "jet_component_subspace",
    "group_spot_check",
]

MAX_DOMAIN = 4096

Index = tuple[int, ...]
Vector = dict[Index, Scalar]


class OracleLimitError(ValueError):
    pass


class NotInvariantError(ValueError):
    pass


@dataclass
class EquivariantSolution:
    k: int
    q: int
    n: int
    dimension: int
    basis_maps: list[list[list[Scalar]]]
    matches_skew_symmetrization: bool
    cross_checked: bool
    subspace_dimension: int
    elapsed: float = field(default=0.0, compare=False)

    def to_json(self, with_elapsed: bool = True) -> dict:
        out = {
            "k": self.k,
            "q": self.q,
            "n": self.n,
            "subspace_dimension": self.subspace_dimension,
            "dimension": self.dimension,
            "matches_skew_symmetrization": self.matches_skew_symmetrization,
            "cross_checked": self.cross_checked,
            "basis_maps": [[[str(x) for x in row] for row in m] for m in self.basis_maps],
        }
        if with_elapsed:
            out["elapsed"] = round(self.elapsed, 6)
        return out


# representations ---------------------------------------------------------


def tensor_indices(k: int, n: int) -> list[Index]:
    return list(product(range(1, n + 1), repeat=k))


def form_indices(q: int, n: int) -> list[Index]:
    return list(combinations(range(1, n + 1), q))


def act_tensor(a: int, b: int, vec: Vector) -> Vector:
    """Action of E_ab on a covariant tensor: slot by slot, e^a -> -e^b."""
    out: Vector = {}
    for key, c in vec.items():
        for t, j in enumerate(key):
            if j == a:
                nk = key[:t] + (b,) + key[t + 1:]
                out[nk] = out.get(nk, ZERO) - c
    return {k: c for k, c in out.items() if c}


def act_form(a: int, b: int, key: Index) -> Vector:
    """Action of E_ab on e^I in Lambda^q, as a derivation."""
    out: Vector = {}
    for t, j in enumerate(key):
        if j == a:
            sign, nk = sort_with_sign(key[:t] + (b,) + key[t + 1:])
            if sign:
                out[nk] = out.get(nk, ZERO) - sign
    return {k: c for k, c in out.items() if c}


class _Coordinates:
    """Coordinates of vectors with respect to a basis of a subspace E."""

    def __init__(self, k: int, n: int, spanning: Sequence[Vector] | None):
        self.full = spanning is None
        if self.full:
            self.basis = [{J: ONE} for J in tensor_indices(k, n)]
            self.index = {J: i for i, J in enumerate(tensor_indices(k, n))}
            return
        support = sorted({J for v in spanning for J in v})
        rows = [[v.get(J, ZERO) for J in support] for v in spanning]
        r, pivots = naive_rref(rows) if rows else ([], [])
        self.basis = [
            {support[j]: x for j, x in enumerate(r[i]) if x} for i in range(len(pivots))
        ]
        self.pivots = [support[c] for c in pivots]

    def __len__(self) -> int:
        return len(self.basis)

    def coords(self, vec: Vector) -> list[Scalar]:
        if self.full:
            out = [ZERO] * len(self.basis)
            for J, c in vec.items():
                out[self.index[J]] = c
            return out
        cs = [vec.get(J, ZERO) for J in self.pivots]
        residual = dict(vec)
        for c, b in zip(cs, self.basis):
            if c:
                for J, x in b.items():
                    residual[J] = residual.get(J, ZERO) - c * x
        if any(residual.values()):
            raise NotInvariantError("subspace is not invariant under gl_n")
        return cs


def skew_matrix(k: int, n: int, vectors: Sequence[Vector] | None = None) -> list[list[Scalar]]:
    """Skew-symmetrization ``otimes^k -> Lambda^k`` evaluated on ``vectors``.

    Rows are indexed by increasing k-tuples, columns by the given domain
    vectors (default: the standard tensor basis).
    """
    if vectors is None:
        vectors = [{J: ONE} for J in tensor_indices(k, n)]
    rows = form_indices(k, n)
    pos = {I: i for i, I in enumerate(rows)}
    mat = [[ZERO] * len(vectors) for _ in rows]
    for col, vec in enumerate(vectors):
        for J, c in vec.items():
            sign, I = sort_with_sign(J)
            if sign and I in pos:
                mat[pos[I]][col] += c * sign
    return mat


def _constraints(k: int, q: int, n: int, coords: _Coordinates) -> list[list[Scalar]]:
    dim_e = len(coords)
    cod = form_indices(q, n)
    nunk = len(cod) * dim_e
    rows: list[list[Scalar]] = []
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            # A[:, j] = coordinates of X . basis_j
            action = [coords.coords(act_tensor(a, b, v)) for v in coords.basis]
            cod_action = [act_form(a, b, I) for I in cod]  # column I'' of rho_Lambda
            for i, target in enumerate(cod):
                for j in range(dim_e):
                    row = [ZERO] * nunk
                    # (M A)[i, j] = sum_l M[i, l] A[l, j]
                    for l_, x in enumerate(action[j]):
                        if x:
                            row[i * dim_e + l_] += x
                    # (rho M)[i, j] = sum_l rho[i, l] M[l, j]
                    for l_ in range(len(cod)):
                        x = cod_action[l_].get(target)
                        if x:
                            row[l_ * dim_e + j] -= x
                    if any(row):
                        rows.append(row)
    return rows


def equivariant_hom_dimension(
    k: int, q: int, n: int, subspace: Sequence[Vector] | None = None
) -> EquivariantSolution:
    """Solve for all equivariant linear maps from ``subspace`` (default the
    whole order-k covariant tensor space) to Lambda^q.

    ``subspace`` is a spanning list of tensors ``{index tuple: Scalar}``; it is
    reduced to a basis and checked for invariance under every generator.
    """
    if k < 0 or q < 0 or n < 1:
        raise ValueError(f"need k, q >= 0 and n >= 1 (got k={k}, q={q}, n={n})")
    if n**k > MAX_DOMAIN:
        raise OracleLimitError(
            f"domain dimension n^k = {n**k} exceeds the limit of {MAX_DOMAIN}"
        )
    start = time.perf_counter()
    coords = _Coordinates(k, n, subspace)
    ncod = comb(n, q)
    dim_e = len(coords)
    if subspace is not None:
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                for v in coords.basis:
                    coords.coords(act_tensor(a, b, v))
    nunk = ncod * dim_e
    rows = _constraints(k, q, n, coords)
    if nunk == 0:
        sols, naive = [], []
    elif rows:
        sols = nullspace(rows)
        naive = naive_nullspace(rows)
    else:
        sols = naive = [[ONE if i == j else ZERO for i in range(nunk)] for j in range(nunk)]
    cross = len(sols) == len(naive) and spans_equal(sols, naive)

    maps = [[vec[i * dim_e:(i + 1) * dim_e] for i in range(ncod)] for vec in sols]
    if k == q and nunk:
        h = skew_matrix(k, n, coords.basis)
        h_flat = [x for row in h for x in row]
        target = [h_flat] if any(h_flat) else []
    else:
        target = []
    matches = spans_equal(sols, target)
    return EquivariantSolution(
        k=k,
        q=q,
        n=n,
        dimension=len(sols),
        basis_maps=maps,
        matches_skew_symmetrization=matches,
        cross_checked=cross,
        subspace_dimension=dim_e,
        elapsed=time.perf_counter() - start,
    )


def verify_h_is_solution(q: int, n: int) -> bool:
    """Substitute the skew-symmetrization matrix into every constraint."""
    coords = _Coordinates(q, n, None)
    rows = _constraints(q, q, n, coords)
    h = skew_matrix(q, n)
    flat = [x for row in h for x in row]
    return all(sum((r * x for r, x in zip(row, flat) if r and x), ZERO) == 0 for row in rows)


# sub-representations of jets ----------------------------------------------


def _alt(I: Index) -> Vector:
    out: Vector = {}
    for perm in permutations(I):
        sign, _ = sort_with_sign(perm)
        out[perm] = Scalar(sign)
    return out


def _tensor(u: Vector, v: Vector) -> Vector:
    return {a + b: x * y for a, x in u.items() for b, y in v.items()}


def _symmetric_power(spanning: list[Vector], d: int) -> list[Vector]:
    """Spanning set of S^d(W) inside W^{(x)d}, from a spanning set of W."""
    if d == 0:
        return [{(): ONE}]
    out = []
    for combo in _multisets(len(spanning), d):
        acc: Vector = {}
        for perm in set(permutations(combo)):
            t: Vector = {(): ONE}
            for idx in perm:
                t = _tensor(t, spanning[idx])
            for key, x in t.items():
                acc[key] = acc.get(key, ZERO) + x
        out.append({key: x for key, x in acc.items() if x})
    return out


def _multisets(m: int, d: int):
    if d == 0:
        yield ()
        return
    for i in range(m):
        for rest in _multisets(m, d - 1):
            if not rest or rest[0] >= i:
                yield (i,) + rest


def jet_component_subspace(p: int, d0: int, d1: int, n: int) -> list[Vector]:
    """Spanning set for ``S^d0(Lambda^p) (x) S^d1(S^1 (x) Lambda^p)`` in
    ``otimes^q``, ``q = p d0 + (p+1) d1``.
    """
    lam = [_alt(I) for I in form_indices(p, n)]
    s1lam = [_tensor({(i,): ONE}, v) for i in range(1, n + 1) for v in lam]
    left = _symmetric_power(lam, d0)
    right = _symmetric_power(s1lam, d1)
    out = [_tensor(a, b) for a in left for b in right]
    return [v for v in out if v]


# finite group spot check -------------------------------------------------


def _det(m: list[list[Scalar]]) -> Scalar:
    a = [list(r) for r in m]
    n = len(a)
    det = ONE
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return ZERO
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det = det * a[c][c]
        inv = a[c][c].inverse()
        for i in range(c + 1, n):
            f = a[i][c] * inv
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


def group_spot_check(sol: EquivariantSolution, trials: int = 20, seed: int = 0) -> bool:
    """Check ``M rho(g) = rho(g) M`` for seeded random invertible rational g.

    Only defined for solutions on the full tensor space.
    """
    k, q, n = sol.k, sol.q, sol.n
    if sol.subspace_dimension != n**k:
        raise ValueError("group spot check needs a solution on the full tensor space")
    rng = random.Random(seed)
    dom = tensor_indices(k, n)
    cod = form_indices(q, n)
    for _ in range(trials):
        while True:
            g = to_matrix([[Scalar(rng.randint(-3, 3), rng.randint(-1, 1)) for _ in range(n)] for _ in range(n)])
            ginv = invert_matrix(g)
            if ginv is not None:
                break
        # action on covectors: column j = image of e^j
        dual = [[ginv[j][i] for j in range(n)] for i in range(n)]
        rho_dom = [[ONE] * len(dom) for _ in dom]
        for r, Jr in enumerate(dom):
            for c, Jc in enumerate(dom):
                x = ONE
                for a, b in zip(Jr, Jc):
                    x = x * dual[a - 1][b - 1]
                    if not x:
                        break
                rho_dom[r][c] = x
        rho_cod = [
            [_det([[dual[a - 1][b - 1] for b in Ic] for a in Ir]) if q else ONE for Ic in cod]
            for Ir in cod
        ]
        for m in sol.basis_maps:
            for i in range(len(cod)):
                for c in range(len(dom)):
                    lhs = sum((m[i][l] * rho_dom[l][c] for l in range(len(dom)) if m[i][l]), ZERO)
                    rhs = sum((rho_cod[i][l] * m[l][c] for l in range(len(cod)) if m[l][c]), ZERO)
                    if lhs != rhs:
                        return False
    return True


def solution_rank_check(sol: EquivariantSolution) -> bool:
    """Sanity: the returned basis maps are linearly independent."""
    flat = [[x for row in m for x in row] for m in sol.basis_maps]
    return not flat or naive_rank(flat) == len(flat)
