"""Holomorphic differential forms on C^n with polynomial coefficients.

A p-form is stored on the basis ``dz_I = dz_{i1} /\\ ... /\\ dz_{ip}`` with
``I`` strictly increasing and 1-based. With coefficients truncated at total
degree r the same type stores the jet j^r_0 of a form, and
:func:`taylor_component` picks out its homogeneous Taylor pieces.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from types import MappingProxyType

from .polynomials import Polynomial, Substitution
from .scalars import ONE, Scalar, as_scalar

__all__ = [
    "Form",
    "wedge",
    "wedge_all",
    "exterior_derivative",
    "pullback",
    "taylor_component",
    "sort_with_sign",
]

Index = tuple[int, ...]


def sort_with_sign(idx: Sequence[int]) -> tuple[int, Index]:
    """Sort an index tuple, returning ``(sign, sorted)``; sign 0 on repeats."""
    idx = list(idx)
    if len(set(idx)) != len(idx):
        return 0, ()
    inversions = sum(1 for a in range(len(idx)) for b in range(a + 1, len(idx)) if idx[a] > idx[b])
    return (-1 if inversions & 1 else 1), tuple(sorted(idx))


class Form:
    """An immutable degree-``degree`` form on C^``dim``."""

    __slots__ = ("dim", "degree", "_terms", "_hash")

    def __init__(self, dim: int, degree: int, terms: Mapping[Index, Polynomial] | None = None):
        if dim < 1:
            raise ValueError(f"ambient dimension must be positive, got {dim}")
        if degree < 0:
            raise ValueError(f"form degree must be non-negative, got {degree}")
        self.dim = dim
        self.degree = degree
        clean: dict[Index, Polynomial] = {}
        if terms and degree <= dim:
            for key, coeff in terms.items():
                key = tuple(key)
                if len(key) != degree or any(not 1 <= i <= dim for i in key):
                    raise ValueError(f"index {key} invalid for a {degree}-form on C^{dim}")
                if any(a >= b for a, b in zip(key, key[1:])):
                    raise ValueError(f"index {key} is not strictly increasing")
                if not isinstance(coeff, Polynomial):
                    coeff = Polynomial.constant(coeff, dim)
                elif coeff.dim != dim:
                    raise ValueError("coefficient dimension differs from the form's")
                if coeff:
                    clean[key] = coeff
        self._terms = clean
        self._hash = None

    @classmethod
    def _from_clean(cls, dim: int, degree: int, terms: dict[Index, Polynomial]) -> Form:
        f = object.__new__(cls)
        f.dim = dim
        f.degree = degree
        f._terms = terms if degree <= dim else {}
        f._hash = None
        return f

    @classmethod
    def from_unsorted(cls, dim: int, degree: int, terms: Iterable[tuple[Sequence[int], object]]) -> Form:
        """Build from arbitrary index tuples, sorting them with the wedge sign."""
        acc: dict[Index, Polynomial] = {}
        for idx, coeff in terms:
            sign, key = sort_with_sign(idx)
            if not sign:
                continue
            if not isinstance(coeff, Polynomial):
                coeff = Polynomial.constant(coeff, dim)
            coeff = coeff if sign > 0 else -coeff
            acc[key] = acc[key] + coeff if key in acc else coeff
        return cls(dim, degree, acc)

    # constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, dim: int, degree: int = 0) -> Form:
        return cls._from_clean(dim, degree, {})

    @classmethod
    def function(cls, f: Polynomial | object, dim: int | None = None) -> Form:
        """A 0-form. Scalars need ``dim``."""
        if not isinstance(f, Polynomial):
            if dim is None:
                raise ValueError("dim is required for a constant 0-form")
            f = Polynomial.constant(f, dim)
        return cls(f.dim, 0, {(): f})

    @classmethod
    def dz(cls, *indices: int, dim: int) -> Form:
        """``dz_{i1} /\\ ... /\\ dz_{ik}`` in the given order."""
        return cls.from_unsorted(dim, len(indices), [(indices, ONE)])

    # inspection -----------------------------------------------------------

    @property
    def terms(self) -> Mapping[Index, Polynomial]:
        return MappingProxyType(self._terms)

    def coefficient(self, key: Sequence[int]) -> Polynomial:
        return self._terms.get(tuple(key), Polynomial.zero(self.dim))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Form):
            return NotImplemented
        if not self._terms and not other._terms:
            return self.dim == other.dim
        return (
            self.dim == other.dim
            and self.degree == other.degree
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.dim, self.degree if self._terms else None,
                               frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Form(dim={self.dim}, degree={self.degree}, {self})"

    def __str__(self) -> str:
        from .render import render_form

        return render_form(self)

    def coefficient_degree(self) -> int:
        return max((c.total_degree() for c in self._terms.values()), default=-1)

    # linear structure -----------------------------------------------------

    def _check_same(self, other: Form) -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: C^{self.dim} vs C^{other.dim}")
        if self.degree != other.degree and self._terms and other._terms:
            raise ValueError(f"cannot add a {self.degree}-form and a {other.degree}-form")

    def __add__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        self._check_same(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            if k in out:
                s = out[k] + c
                if s:
                    out[k] = s
                else:
                    del out[k]
            else:
                out[k] = c
        return Form._from_clean(self.dim, self.degree, out)

    def __neg__(self) -> Form:
        return Form._from_clean(self.dim, self.degree, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        """Multiplication by a scalar or a polynomial function."""
        if isinstance(other, Form):
            raise TypeError("use wedge() (or ^) to multiply two forms")
        if isinstance(other, Polynomial):
            if other.dim != self.dim:
                raise ValueError("dimension mismatch")
            out = {k: c * other for k, c in self._terms.items()}
        else:
            s = as_scalar(other)
            if s is NotImplemented:
                return NotImplemented
            out = {k: c.scale(s) for k, c in self._terms.items()}
        return Form._from_clean(self.dim, self.degree, {k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __xor__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return wedge(self, other)

    def map_coefficients(self, fn) -> Form:
        out = {k: fn(c) for k, c in self._terms.items()}
        return Form._from_clean(self.dim, self.degree, {k: c for k, c in out.items() if c})

    def truncate(self, k: int) -> Form:
        """Drop coefficient terms of total degree above ``k`` (a jet j^k_0)."""
        return self.map_coefficients(lambda c: c.truncate(k))

    def at(self, point: Sequence[object]) -> Form:
        """Value at a point, as a form with constant coefficients."""
        return self.map_coefficients(lambda c: Polynomial.constant(c(tuple(point)), self.dim))

    def at_origin(self) -> Form:
        return taylor_component(self, 0)


def wedge(a: Form, b: Form) -> Form:
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: C^{a.dim} vs C^{b.dim}")
    degree = a.degree + b.degree
    out: dict[Index, Polynomial] = {}
    if degree <= a.dim:
        for ka, ca in a._terms.items():
            sa = set(ka)
            for kb, cb in b._terms.items():
                if sa.intersection(kb):
                    continue
                swaps = sum(1 for x in ka for y in kb if x > y)
                prod = ca * cb
                if swaps & 1:
                    prod = -prod
                key = tuple(sorted(ka + kb))
                if key in out:
                    out[key] = out[key] + prod
                else:
                    out[key] = prod
    return Form._from_clean(a.dim, degree, {k: c for k, c in out.items() if c})


def wedge_all(forms: Iterable[Form], dim: int) -> Form:
    result = Form.function(Polynomial.constant(1, dim))
    for f in forms:
        result = wedge(result, f)
    return result


def exterior_derivative(w: Form) -> Form:
    out: dict[Index, Polynomial] = {}
    for key, c in w._terms.items():
        for i in range(1, w.dim + 1):
            if i in key:
                continue
            dc = c.diff(i)
            if not dc:
                continue
            pos = sum(1 for j in key if j < i)
            if pos & 1:
                dc = -dc
            nk = key[:pos] + (i,) + key[pos:]
            out[nk] = out[nk] + dc if nk in out else dc
    return Form._from_clean(w.dim, w.degree + 1, {k: c for k, c in out.items() if c})


def _components(phi) -> tuple[Polynomial, ...]:
    comps = getattr(phi, "components", phi)
    return tuple(comps)


def pullback(w: Form, phi) -> Form:
    """Pull ``w`` back along the polynomial map ``phi``.

    ``phi`` is a sequence of ``w.dim`` polynomials (or anything with a
    ``components`` attribute holding one, such as a jet germ). Coefficients are
    composed with ``phi`` and each ``dz_i`` becomes ``d(phi_i)``.
    """
    comps = _components(phi)
    if len(comps) != w.dim:
        raise ValueError(f"map has {len(comps)} components, form lives on C^{w.dim}")
    m = comps[0].dim
    if any(c.dim != m for c in comps):
        raise ValueError("map components disagree on dimension")
    differentials = [exterior_derivative(Form.function(c)) for c in comps]
    cache: dict[Index, Form] = {(): Form.function(Polynomial.constant(1, m))}

    def d_of(key: Index) -> Form:
        if key not in cache:
            cache[key] = wedge(d_of(key[:-1]), differentials[key[-1] - 1])
        return cache[key]

    sub = Substitution(comps)
    result = Form.zero(m, w.degree)
    for key, c in w._terms.items():
        result = result + d_of(key) * sub(c)
    return result


def taylor_component(w: Form, s: int) -> Form:
    """The part of ``w`` whose coefficients are homogeneous of degree ``s``."""
    return w.map_coefficients(lambda c: c.homogeneous_part(s))
