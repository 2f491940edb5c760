"""Graded anti-commutative polynomial algebras C{u1, ..., um}.

Variables carry positive degrees and obey ``ui uj = (-1)^(pi pj) uj ui``,
so odd variables square to zero. Monomials are stored as exponent tuples in
the declaration order of the variables, which makes the representation
unique.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from types import MappingProxyType

from .forms import Form, wedge
from .polynomials import Polynomial
from .render import coefficient_times
from .scalars import ONE, ZERO, Scalar, as_scalar

__all__ = [
    "GradedVariable",
    "Universe",
    "GradedMonomial",
    "GradedPolynomial",
    "gmul",
    "evaluate",
    "degree_and_homogeneity",
    "operator_universe",
]


@dataclass(frozen=True)
class GradedVariable:
    name: str
    degree: int

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"variable {self.name} needs a positive degree, got {self.degree}")

    @property
    def odd(self) -> bool:
        return self.degree % 2 == 1


Universe = tuple[GradedVariable, ...]


def operator_universe(source_degrees: Sequence[int]) -> Universe:
    """Variables ``u_i`` (degree p_i) and ``v_i`` (degree p_i + 1).

    A single source is written ``u, v``; several are ``u1, v1, u2, v2, ...``.
    """
    if len(source_degrees) == 1:
        (p,) = source_degrees
        return (GradedVariable("u", p), GradedVariable("v", p + 1))
    out: list[GradedVariable] = []
    for i, p in enumerate(source_degrees, start=1):
        out += [GradedVariable(f"u{i}", p), GradedVariable(f"v{i}", p + 1)]
    return tuple(out)


def _check_universe(universe: Universe) -> None:
    names = [v.name for v in universe]
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate variable names in {names}")


@dataclass(frozen=True)
class GradedMonomial:
    universe: Universe
    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.exponents) != len(self.universe):
            raise ValueError("exponent vector does not match the variable universe")
        for var, e in zip(self.universe, self.exponents):
            if e < 0:
                raise ValueError("negative exponent")
            if var.odd and e > 1:
                raise ValueError(f"odd variable {var.name} cannot appear squared")

    @property
    def degree(self) -> int:
        return sum(e * v.degree for e, v in zip(self.exponents, self.universe))

    def as_polynomial(self) -> GradedPolynomial:
        return GradedPolynomial(self.universe, {self.exponents: ONE})

    def __str__(self) -> str:
        return _monomial_str(self.universe, self.exponents) or "1"


def _monomial_str(universe: Universe, exps: tuple[int, ...]) -> str:
    factors = []
    for v, e in zip(universe, exps):
        if e == 1:
            factors.append(v.name)
        elif e > 1:
            factors.append(f"{v.name}^{e}")
    return "*".join(factors)


class GradedPolynomial:
    """An immutable element of C{universe} with Gaussian-rational coefficients."""

    __slots__ = ("universe", "_terms")

    def __init__(self, universe: Sequence[GradedVariable], terms: Mapping[tuple[int, ...], object] | None = None):
        universe = tuple(universe)
        _check_universe(universe)
        self.universe = universe
        clean: dict[tuple[int, ...], Scalar] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            GradedMonomial(universe, exps)  # validates
            c = as_scalar(c)
            if c:
                s = clean.get(exps, ZERO) + c
                if s:
                    clean[exps] = s
                else:
                    clean.pop(exps, None)
        self._terms = clean

    @classmethod
    def _from_clean(cls, universe: Universe, terms: dict) -> GradedPolynomial:
        p = object.__new__(cls)
        p.universe = universe
        p._terms = terms
        return p

    @classmethod
    def constant(cls, universe: Sequence[GradedVariable], value=1) -> GradedPolynomial:
        universe = tuple(universe)
        return cls(universe, {(0,) * len(universe): value})

    @classmethod
    def variable(cls, universe: Sequence[GradedVariable], name: str) -> GradedPolynomial:
        universe = tuple(universe)
        names = [v.name for v in universe]
        if name not in names:
            raise KeyError(f"no variable {name!r} in {names}")
        exps = [0] * len(universe)
        exps[names.index(name)] = 1
        return cls(universe, {tuple(exps): ONE})

    @property
    def terms(self) -> Mapping[tuple[int, ...], Scalar]:
        return MappingProxyType(self._terms)

    def monomials(self) -> list[GradedMonomial]:
        return [GradedMonomial(self.universe, e) for e in self._terms]

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        return self.universe == other.universe and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.universe, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"GradedPolynomial({self})"

    def __str__(self) -> str:
        parts = []
        for exps in sorted(self._terms, key=lambda e: _sort_key(self.universe, e)):
            parts.append(coefficient_times(self._terms[exps], _monomial_str(self.universe, exps)))
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    # algebra --------------------------------------------------------------

    def _same(self, other: GradedPolynomial) -> None:
        if self.universe != other.universe:
            raise ValueError("graded polynomials live in different variable universes")

    def __add__(self, other):
        if not isinstance(other, GradedPolynomial):
            c = as_scalar(other)
            if c is NotImplemented:
                return NotImplemented
            other = GradedPolynomial.constant(self.universe, c)
        self._same(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, ZERO) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return GradedPolynomial._from_clean(self.universe, out)

    __radd__ = __add__

    def __neg__(self) -> GradedPolynomial:
        return GradedPolynomial._from_clean(self.universe, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, GradedPolynomial):
            return gmul(self, other)
        c = as_scalar(other)
        if c is NotImplemented:
            return NotImplemented
        if not c:
            return GradedPolynomial._from_clean(self.universe, {})
        return GradedPolynomial._from_clean(self.universe, {e: v * c for e, v in self._terms.items()})

    def __rmul__(self, other):
        c = as_scalar(other)
        if c is NotImplemented:
            return NotImplemented
        return self * c

    def __pow__(self, k: int) -> GradedPolynomial:
        if not isinstance(k, int) or k < 0:
            raise ValueError("power needs a non-negative integer")
        result = GradedPolynomial.constant(self.universe)
        for _ in range(k):
            result = gmul(result, self)
        return result

    def degrees(self) -> set[int]:
        return {GradedMonomial(self.universe, e).degree for e in self._terms}


def _sort_key(universe: Universe, exps: tuple[int, ...]):
    # graded-lex, larger first
    return (-sum(exps), tuple(-e for e in exps))


def monomial_product(universe: Universe, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Sign and exponents of ``a * b``; sign 0 when an odd square appears.

    Moving each factor of ``b`` left past the factors of ``a`` that come later
    in canonical order costs ``(-1)^(pi pj)`` per odd-odd transposition.
    """
    out = []
    for v, x, y in zip(universe, a, b):
        if v.odd and x + y > 1:
            return 0, ()
        out.append(x + y)
    swaps = 0
    for j, (vj, bj) in enumerate(zip(universe, b)):
        if not bj or not vj.odd:
            continue
        for i in range(j + 1, len(universe)):
            if a[i] and universe[i].odd:
                swaps += a[i] * bj
    return (-1 if swaps & 1 else 1), tuple(out)


def gmul(a: GradedPolynomial, b: GradedPolynomial) -> GradedPolynomial:
    a._same(b)
    out: dict[tuple[int, ...], Scalar] = {}
    for ea, ca in a._terms.items():
        for eb, cb in b._terms.items():
            sign, e = monomial_product(a.universe, ea, eb)
            if not sign:
                continue
            c = ca * cb if sign > 0 else -(ca * cb)
            out[e] = out.get(e, ZERO) + c
    return GradedPolynomial._from_clean(a.universe, {e: c for e, c in out.items() if c})


def degree_and_homogeneity(P: GradedPolynomial) -> tuple[set[int], bool]:
    """Term degrees of ``P`` and whether there is at most one of them."""
    degs = P.degrees()
    return degs, len(degs) <= 1


def evaluate(P: GradedPolynomial, assignment: Mapping[str, Form], dim: int | None = None) -> Form:
    """Replace each variable by its form and products by wedge products.

    Only variables that actually occur in ``P`` need an assignment; every
    assigned form must have the variable's degree and the same ambient
    dimension. ``dim`` is required only when nothing is assigned.
    """
    by_name = {v.name: v for v in P.universe}
    dims = set()
    for name, form in assignment.items():
        if name not in by_name:
            raise KeyError(f"assignment for unknown variable {name!r}")
        if form.degree != by_name[name].degree:
            raise ValueError(
                f"variable {name} has degree {by_name[name].degree} "
                f"but was assigned a {form.degree}-form"
            )
        dims.add(form.dim)
    if dim is not None:
        dims.add(dim)
    if len(dims) != 1:
        raise ValueError("cannot determine a single ambient dimension" if not dims
                         else f"assigned forms live in different dimensions {sorted(dims)}")
    (n,) = dims

    powers: dict[tuple[int, int], Form] = {}

    def power(i: int, k: int) -> Form:
        if (i, k) not in powers:
            if k == 0:
                powers[(i, k)] = Form.function(Polynomial.constant(1, n))
            else:
                powers[(i, k)] = wedge(power(i, k - 1), assignment[P.universe[i].name])
        return powers[(i, k)]

    result = Form.zero(n, 0)
    for exps, c in P._terms.items():
        term = Form.function(Polynomial.constant(c, n))
        for i, k in enumerate(exps):
            if not k:
                continue
            if P.universe[i].name not in assignment:
                raise KeyError(f"missing assignment for variable {P.universe[i].name!r}")
            term = wedge(term, power(i, k))
            if not term:
                break
        result = result + term
    return result
