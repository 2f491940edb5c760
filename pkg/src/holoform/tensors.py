"""Covariant tensors with polynomial coefficients, and the maps between them
and forms: flat covariant derivative, skew-symmetrization, alternating
embedding.

Conventions: :func:`nabla` puts the new differentiation slot *first*, and
:func:`skew_symmetrize` is the plain signed sum over permutations with no
``1/k!``. With these, ``h(T (x) T') = h(T) /\\ h(T')``, ``h(w) = q! w`` and
``h(nabla w) = q! dw`` hold as literal equalities.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from itertools import permutations
from types import MappingProxyType

from .forms import Form, sort_with_sign
from .polynomials import Polynomial
from .scalars import as_scalar

__all__ = ["CovariantTensor", "nabla", "skew_symmetrize", "alt_embed", "tensor_product"]

Index = tuple[int, ...]


class CovariantTensor:
    __slots__ = ("dim", "order", "_terms")

    def __init__(self, dim: int, order: int, terms: Mapping[Sequence[int], object] | None = None):
        if dim < 1 or order < 0:
            raise ValueError(f"bad tensor shape: dim={dim}, order={order}")
        self.dim = dim
        self.order = order
        clean: dict[Index, Polynomial] = {}
        for key, c in (terms or {}).items():
            key = tuple(key)
            if len(key) != order or any(not 1 <= i <= dim for i in key):
                raise ValueError(f"index {key} invalid for an order-{order} tensor on C^{dim}")
            if not isinstance(c, Polynomial):
                c = Polynomial.constant(c, dim)
            elif c.dim != dim:
                raise ValueError("coefficient dimension differs from the tensor's")
            if c:
                clean[key] = clean[key] + c if key in clean else c
                if not clean[key]:
                    del clean[key]
        self._terms = clean

    @classmethod
    def _from_clean(cls, dim: int, order: int, terms: dict[Index, Polynomial]) -> CovariantTensor:
        t = object.__new__(cls)
        t.dim, t.order, t._terms = dim, order, terms
        return t

    @classmethod
    def covector(cls, i: int, dim: int) -> CovariantTensor:
        return cls(dim, 1, {(i,): 1})

    @classmethod
    def unit(cls, dim: int) -> CovariantTensor:
        """The order-0 tensor 1."""
        return cls(dim, 0, {(): 1})

    @property
    def terms(self) -> Mapping[Index, Polynomial]:
        return MappingProxyType(self._terms)

    def coefficient(self, key: Sequence[int]) -> Polynomial:
        return self._terms.get(tuple(key), Polynomial.zero(self.dim))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CovariantTensor):
            return NotImplemented
        if not self._terms and not other._terms:
            return self.dim == other.dim
        return (self.dim, self.order, self._terms) == (other.dim, other.order, other._terms)

    def __hash__(self) -> int:
        return hash((self.dim, self.order if self._terms else None, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {c}" for k, c in sorted(self._terms.items()))
        return f"CovariantTensor(dim={self.dim}, order={self.order}, {{{body}}})"

    def __add__(self, other):
        if not isinstance(other, CovariantTensor):
            return NotImplemented
        if self.dim != other.dim or (self.order != other.order and self and other):
            raise ValueError("cannot add tensors of different shapes")
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out[k] + c if k in out else c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        order = self.order if self._terms else other.order
        return CovariantTensor._from_clean(self.dim, order, out)

    def __neg__(self) -> CovariantTensor:
        return CovariantTensor._from_clean(self.dim, self.order, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        s = as_scalar(other)
        if s is NotImplemented:
            return NotImplemented
        out = {k: c.scale(s) for k, c in self._terms.items()}
        return CovariantTensor._from_clean(self.dim, self.order, {k: c for k, c in out.items() if c})

    __rmul__ = __mul__


def tensor_product(t1: CovariantTensor, t2: CovariantTensor) -> CovariantTensor:
    if t1.dim != t2.dim:
        raise ValueError(f"dimension mismatch: C^{t1.dim} vs C^{t2.dim}")
    out: dict[Index, Polynomial] = {}
    for k1, c1 in t1._terms.items():
        for k2, c2 in t2._terms.items():
            c = c1 * c2
            if c:
                out[k1 + k2] = c
    return CovariantTensor._from_clean(t1.dim, t1.order + t2.order, out)


def nabla(t: CovariantTensor) -> CovariantTensor:
    """``(nabla T)_{i,J} = dT_J/dz_i``."""
    out: dict[Index, Polynomial] = {}
    for key, c in t._terms.items():
        for i in range(1, t.dim + 1):
            dc = c.diff(i)
            if dc:
                out[(i,) + key] = dc
    return CovariantTensor._from_clean(t.dim, t.order + 1, out)


def skew_symmetrize(t: CovariantTensor) -> Form:
    """``h(T)_I = sum over sigma of sgn(sigma) T_(i_sigma(1), ..., i_sigma(k))``."""
    if t.order > t.dim:
        return Form.zero(t.dim, t.order)
    out: dict[Index, Polynomial] = {}
    for key, c in t._terms.items():
        sign, sk = sort_with_sign(key)
        if not sign:
            continue
        c = c if sign > 0 else -c
        out[sk] = out[sk] + c if sk in out else c
    return Form(t.dim, t.order, {k: c for k, c in out.items() if c})


def alt_embed(w: Form) -> CovariantTensor:
    """The form as an alternating tensor: ``T_(j) = sgn * w_sorted(j)``."""
    out: dict[Index, Polynomial] = {}
    for key, c in w.terms.items():
        for perm in permutations(key):
            sign, _ = sort_with_sign(perm)
            out[perm] = c if sign > 0 else -c
    return CovariantTensor._from_clean(w.dim, w.degree, out)
