"""Enumeration of the natural operators
``Lambda^{p1} + ... + Lambda^{pm} ~> Lambda^q`` as monomials in
``u_i = w_i`` and ``v_i = d w_i``, and their application to concrete forms.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from .forms import Form, exterior_derivative
from .graded import GradedMonomial, GradedPolynomial, Universe, evaluate, operator_universe

__all__ = [
    "SignatureError",
    "ZeroDegreeSourceError",
    "OperatorSignature",
    "OperatorBasis",
    "solve_degree_equation",
    "enumerate_basis",
    "apply_operator",
]


class SignatureError(ValueError):
    pass


class ZeroDegreeSourceError(SignatureError):
    """Raised for functions (0-forms) as sources.

    Homothety weights give no constraint on a degree-0 variable, so any
    holomorphic function of f may appear: ``f -> f df`` is natural and is not
    a constant multiple of d. The enumeration only covers p >= 1.
    """

    def __init__(self, index: int):
        super().__init__(
            f"source {index} has degree p = 0, which is not classified (need p >= 1): "
            "on functions, f -> f*df is a natural operator that is not a constant "
            "multiple of d, and arbitrary holomorphic functions of f can occur"
        )


@dataclass(frozen=True)
class OperatorSignature:
    source_degrees: tuple[int, ...]
    target_degree: int
    ambient_dim: int

    def __post_init__(self):
        object.__setattr__(self, "source_degrees", tuple(self.source_degrees))
        if not self.source_degrees:
            raise SignatureError("need at least one source bundle")
        if self.ambient_dim < 1:
            raise SignatureError(f"ambient dimension must be positive, got {self.ambient_dim}")
        for i, p in enumerate(self.source_degrees, start=1):
            if p == 0:
                raise ZeroDegreeSourceError(i)
            if p < 0:
                raise SignatureError(f"source degree p{i} = {p} is negative")
        q, n = self.target_degree, self.ambient_dim
        if not 0 <= q <= n:
            raise SignatureError(f"target degree q = {q} must satisfy 0 <= q <= n = {n}")

    @property
    def universe(self) -> Universe:
        return operator_universe(self.source_degrees)

    def to_json(self) -> dict:
        return {"p": list(self.source_degrees), "q": self.target_degree, "n": self.ambient_dim}


@dataclass(frozen=True)
class OperatorBasis:
    signature: OperatorSignature
    monomials: tuple[GradedMonomial, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.monomials)

    def polynomials(self) -> list[GradedPolynomial]:
        return [m.as_polynomial() for m in self.monomials]

    def rendered(self) -> list[str]:
        return [str(m) for m in self.monomials]

    def to_json(self) -> dict:
        return {
            "signature": self.signature.to_json(),
            "variables": [{"name": v.name, "degree": v.degree} for v in self.signature.universe],
            "exponents": [list(m.exponents) for m in self.monomials],
            "monomials": self.rendered(),
        }


def solve_degree_equation(sig: OperatorSignature) -> list[tuple[int, ...]]:
    """All ``(a1, b1, ..., am, bm)`` with ``sum a_i p_i + b_i (p_i + 1) = q``.

    Exponents of odd-degree variables are capped at 1. Output is in
    decreasing graded-lex order.
    """
    weights = [d for p in sig.source_degrees for d in (p, p + 1)]
    q = sig.target_degree
    out: list[tuple[int, ...]] = []

    def walk(i: int, remaining: int, acc: list[int]) -> None:
        if i == len(weights):
            if remaining == 0:
                out.append(tuple(acc))
            return
        w = weights[i]
        cap = remaining // w
        if w % 2:
            cap = min(cap, 1)
        for e in range(cap + 1):
            acc.append(e)
            walk(i + 1, remaining - e * w, acc)
            acc.pop()

    walk(0, q, [])
    out.sort(key=lambda e: (-sum(e), tuple(-x for x in e)))
    return out


def enumerate_basis(sig: OperatorSignature) -> OperatorBasis:
    universe = sig.universe
    return OperatorBasis(sig, tuple(GradedMonomial(universe, e) for e in solve_degree_equation(sig)))


def apply_operator(P: GradedPolynomial | GradedMonomial, forms: Sequence[Form], dim: int | None = None) -> Form:
    """``P(w1, dw1, ..., wm, dwm)``."""
    if isinstance(P, GradedMonomial):
        P = P.as_polynomial()
    universe = P.universe
    expected = operator_universe([f.degree for f in forms]) if forms else ()
    if len(universe) != 2 * len(forms) or universe != expected:
        got = [f.degree for f in forms]
        raise ValueError(
            f"polynomial variables {[(v.name, v.degree) for v in universe]} do not match "
            f"forms of degrees {got}"
        )
    dims = {f.dim for f in forms}
    if len(dims) > 1:
        raise ValueError(f"forms live in different dimensions {sorted(dims)}")
    assignment = {}
    for i, w in enumerate(forms):
        assignment[universe[2 * i].name] = w
        assignment[universe[2 * i + 1].name] = exterior_derivative(w)
    return evaluate(P, assignment, dim=dim)
