"""The jet group G^k_0: k-jets of biholomorphism germs of C^n fixing 0.

A germ is a tuple of n polynomials without constant term, truncated above
total degree k, whose linear part is an invertible matrix.
"""

from __future__ import annotations

import random
from collections.abc import Sequence
from dataclasses import dataclass

from .linalg import invert_matrix
from .polynomials import Polynomial, compose_maps, identity_map, iter_exponents
from .scalars import ZERO, Scalar, as_scalar

__all__ = [
    "JetGerm",
    "compose",
    "invert",
    "scaling_germ",
    "linear_germ",
    "random_germ",
    "random_unitriangular_automorphism",
    "random_linear_automorphism",
    "random_automorphism",
    "linear_map",
]

PolyMap = tuple[Polynomial, ...]


def _unit_exp(j: int, n: int) -> tuple[int, ...]:
    e = [0] * n
    e[j] = 1
    return tuple(e)


@dataclass(frozen=True)
class JetGerm:
    dim: int
    order: int
    components: PolyMap

    def __post_init__(self):
        n, k = self.dim, self.order
        if k < 1:
            raise ValueError(f"jet order must be at least 1, got {k}")
        comps = tuple(self.components)
        if len(comps) != n or any(c.dim != n for c in comps):
            raise ValueError(f"a germ of C^{n} needs {n} polynomials in {n} variables")
        zero = (0,) * n
        for c in comps:
            if zero in c.terms:
                raise ValueError("germ components must vanish at the origin")
            if c.total_degree() > k:
                raise ValueError(f"component {c} exceeds jet order {k}")
        object.__setattr__(self, "components", comps)
        if invert_matrix(self.linear_part()) is None:
            raise ValueError("linear part of the germ is singular")

    @classmethod
    def from_map(cls, components: Sequence[Polynomial], order: int) -> JetGerm:
        """Truncate an origin-fixing polynomial map to a k-jet."""
        return cls(len(components), order, tuple(c.truncate(order) for c in components))

    @classmethod
    def identity(cls, n: int, k: int) -> JetGerm:
        return cls(n, k, identity_map(n))

    def linear_part(self) -> list[list[Scalar]]:
        """Jacobian at 0 as a row-major matrix: entry (i, j) is d phi_i / d z_j."""
        n = self.dim
        return [[c.terms.get(_unit_exp(j, n), ZERO) for j in range(n)] for c in self.components]

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.components) + ")"


def linear_map(matrix: Sequence[Sequence[object]]) -> PolyMap:
    n = len(matrix)
    return tuple(
        Polynomial(n, {_unit_exp(j, n): matrix[i][j] for j in range(n)}) for i in range(n)
    )


def linear_germ(matrix: Sequence[Sequence[object]], k: int) -> JetGerm:
    return JetGerm(len(matrix), k, linear_map(matrix))


def _check_pair(a: JetGerm, b: JetGerm) -> None:
    if a.dim != b.dim or a.order != b.order:
        raise ValueError(
            f"cannot combine a {a.order}-jet on C^{a.dim} with a {b.order}-jet on C^{b.dim}"
        )


def compose(a: JetGerm, b: JetGerm) -> JetGerm:
    """The jet of ``a o b``, truncated above order k."""
    _check_pair(a, b)
    return JetGerm(a.dim, a.order, compose_maps(a.components, b.components, truncate=a.order))


def invert(g: JetGerm) -> JetGerm:
    """Two-sided inverse in G^k_0.

    With g = L + N (linear plus higher part), the inverse h solves
    ``h = L^-1 (id - N o h)``; iterating from ``h = L^-1`` gains one order of
    accuracy per step.
    """
    n, k = g.dim, g.order
    lin_inv = invert_matrix(g.linear_part())
    lin_inv_map = linear_map(lin_inv)
    nonlinear = tuple(
        Polynomial(n, {e: c for e, c in comp.terms.items() if sum(e) > 1}) for comp in g.components
    )
    ident = identity_map(n)
    h = lin_inv_map
    for _ in range(k):
        n_of_h = compose_maps(nonlinear, h, truncate=k)
        inner = tuple(z - t for z, t in zip(ident, n_of_h))
        h_next = compose_maps(lin_inv_map, inner, truncate=k)
        if h_next == h:
            break
        h = h_next
    return JetGerm(n, k, h)


def scaling_germ(lam, n: int, k: int) -> JetGerm:
    """The homothety z -> lam z."""
    lam = as_scalar(lam)
    if not lam:
        raise ValueError("homothety ratio must be non-zero")
    return linear_germ([[lam if i == j else ZERO for j in range(n)] for i in range(n)], k)


# random elements --------------------------------------------------------


def _rand_gaussian(rng: random.Random, bound: int = 2) -> Scalar:
    return Scalar(rng.randint(-bound, bound), rng.randint(-bound, bound))


def random_unitriangular_automorphism(n: int, max_degree: int, seed: int) -> tuple[PolyMap, PolyMap]:
    """A shear ``(z1, z2 + f2(z1), z3 + f3(z1, z2), ...)`` and its exact inverse.

    Each ``f_i`` is a seeded random polynomial of degree 2..max_degree in the
    earlier variables.
    """
    rng = random.Random(seed)
    phi: list[Polynomial] = []
    for i in range(n):
        terms: dict[tuple[int, ...], Scalar] = {}
        if i > 0:
            for deg in range(2, max_degree + 1):
                for _ in range(2):
                    e = [0] * n
                    for _ in range(deg):
                        e[rng.randrange(i)] += 1
                    c = Scalar(rng.randint(-2, 2))
                    if c:
                        terms[tuple(e)] = terms.get(tuple(e), ZERO) + c
        phi.append(Polynomial.variable(i + 1, n) + Polynomial(n, terms))
    # w_i = z_i - f_i(w_1, ..., w_{i-1})
    inv: list[Polynomial] = []
    for i in range(n):
        shear = phi[i] - Polynomial.variable(i + 1, n)
        subs = inv + [Polynomial.zero(n)] * (n - i)
        inv.append(Polynomial.variable(i + 1, n) - shear.compose(subs))
    return tuple(phi), tuple(inv)


def random_linear_automorphism(n: int, seed: int) -> tuple[PolyMap, PolyMap]:
    """A seeded invertible matrix with small Gaussian-integer entries, as maps."""
    rng = random.Random(seed)
    while True:
        m = [[_rand_gaussian(rng) for _ in range(n)] for _ in range(n)]
        inv = invert_matrix(m)
        if inv is not None:
            return linear_map(m), linear_map(inv)


def random_automorphism(n: int, max_degree: int, seed: int) -> tuple[PolyMap, PolyMap]:
    """Exact polynomial automorphism ``shear o linear`` with its inverse."""
    shear, shear_inv = random_unitriangular_automorphism(n, max_degree, seed)
    lin, lin_inv = random_linear_automorphism(n, seed + 7919)
    return compose_maps(shear, lin), compose_maps(lin_inv, shear_inv)


def random_germ(n: int, k: int, seed: int) -> JetGerm:
    rng = random.Random(seed)
    while True:
        comps = []
        for _ in range(n):
            terms = {}
            for deg in range(1, k + 1):
                for e in iter_exponents(n, deg):
                    if rng.random() < 0.6:
                        terms[e] = _rand_gaussian(rng)
            comps.append(Polynomial(n, terms))
        try:
            return JetGerm(n, k, tuple(comps))
        except ValueError:
            continue
