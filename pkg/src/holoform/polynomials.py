"""Sparse multivariate polynomials in z1..zn over the Gaussian rationals."""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from operator import add
from types import MappingProxyType

from gmpy2 import mpq

from .scalars import ONE, ZERO, Scalar, as_scalar

__all__ = ["Polynomial", "Exponent", "Substitution", "compose_maps", "identity_map"]

Exponent = tuple[int, ...]

_QZERO = mpq(0)


class Polynomial:
    """An immutable polynomial, stored as ``{exponent tuple: Scalar}``.

    Exponent tuples all have length ``dim`` and zero coefficients are never
    stored, so two polynomials are equal exactly when their term maps are.
    """

    __slots__ = ("dim", "_terms", "_hash")

    def __init__(self, dim: int, terms: Mapping[Exponent, object] | None = None):
        if dim < 1:
            raise ValueError(f"polynomial dimension must be positive, got {dim}")
        self.dim = dim
        clean: dict[Exponent, Scalar] = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(exp)
                if len(exp) != dim or any(e < 0 for e in exp):
                    raise ValueError(f"bad exponent {exp} for dimension {dim}")
                c = as_scalar(c)
                if c is NotImplemented:
                    raise TypeError(f"cannot use {c!r} as a coefficient")
                if c:
                    clean[exp] = clean.get(exp, ZERO) + c
                    if not clean[exp]:
                        del clean[exp]
        self._terms = clean
        self._hash = None

    @classmethod
    def _from_clean(cls, dim: int, terms: dict[Exponent, Scalar]) -> Polynomial:
        p = object.__new__(cls)
        p.dim = dim
        p._terms = terms
        p._hash = None
        return p

    # constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, dim: int) -> Polynomial:
        return cls._from_clean(dim, {})

    @classmethod
    def constant(cls, value, dim: int) -> Polynomial:
        return cls(dim, {(0,) * dim: value})

    @classmethod
    def variable(cls, i: int, dim: int) -> Polynomial:
        """The coordinate function z_i, with ``1 <= i <= dim``."""
        if not 1 <= i <= dim:
            raise ValueError(f"variable z{i} outside dimension {dim}")
        exp = [0] * dim
        exp[i - 1] = 1
        return cls._from_clean(dim, {tuple(exp): ONE})

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff=1) -> Polynomial:
        return cls(len(exp), {tuple(exp): coeff})

    # inspection -----------------------------------------------------------

    @property
    def terms(self) -> Mapping[Exponent, Scalar]:
        return MappingProxyType(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.dim == other.dim and self._terms == other._terms
        c = as_scalar(other)
        if c is NotImplemented:
            return NotImplemented
        return self == Polynomial.constant(c, self.dim)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.dim, frozenset(self._terms.items())))
        return self._hash

    def total_degree(self) -> int:
        """Largest total degree of a term; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def constant_term(self) -> Scalar:
        return self._terms.get((0,) * self.dim, ZERO)

    def is_constant(self) -> bool:
        zero = (0,) * self.dim
        return all(e == zero for e in self._terms)

    # arithmetic -----------------------------------------------------------

    def _check(self, other: Polynomial) -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        c = as_scalar(other)
        if c is NotImplemented:
            return NotImplemented
        return Polynomial.constant(c, self.dim)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial._from_clean(self.dim, out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._from_clean(self.dim, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def scale(self, c) -> Polynomial:
        c = as_scalar(c)
        if not c:
            return Polynomial.zero(self.dim)
        return Polynomial._from_clean(self.dim, {e: v * c for e, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = as_scalar(other)
            if c is NotImplemented:
                return NotImplemented
            return self.scale(c)
        self._check(other)
        # accumulate real and imaginary parts as bare mpq; this is the hot loop
        re: dict[Exponent, object] = {}
        im: dict[Exponent, object] = {}
        right = [(e2, c2.re, c2.im) for e2, c2 in other._terms.items()]
        for e1, c1 in self._terms.items():
            a, b = c1.re, c1.im
            for e2, c, d in right:
                e = tuple(map(add, e1, e2))
                if b or d:
                    x, y = a * c - b * d, a * d + b * c
                    re[e] = re[e] + x if e in re else x
                    im[e] = im[e] + y if e in im else y
                else:
                    x = a * c
                    re[e] = re[e] + x if e in re else x
        out: dict[Exponent, Scalar] = {}
        for e, x in re.items():
            y = im.pop(e, _QZERO)
            if x or y:
                out[e] = Scalar._raw(x, y)
        for e, y in im.items():
            if y:
                out[e] = Scalar._raw(_QZERO, y)
        return Polynomial._from_clean(self.dim, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers need a non-negative integer exponent")
        result = Polynomial.constant(1, self.dim)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # calculus and structure ----------------------------------------------

    def diff(self, i: int) -> Polynomial:
        """Partial derivative with respect to z_i (1-based)."""
        j = i - 1
        out: dict[Exponent, Scalar] = {}
        for e, c in self._terms.items():
            if e[j]:
                ne = e[:j] + (e[j] - 1,) + e[j + 1:]
                out[ne] = c * e[j]
        return Polynomial._from_clean(self.dim, out)

    def homogeneous_part(self, s: int) -> Polynomial:
        return Polynomial._from_clean(
            self.dim, {e: c for e, c in self._terms.items() if sum(e) == s}
        )

    def truncate(self, k: int) -> Polynomial:
        """Drop every term of total degree above ``k``."""
        return Polynomial._from_clean(
            self.dim, {e: c for e, c in self._terms.items() if sum(e) <= k}
        )

    def __call__(self, *point) -> Scalar:
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = tuple(point[0])
        if len(point) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(point)}")
        pt = [as_scalar(x) for x in point]
        total = ZERO
        for e, c in self._terms.items():
            t = c
            for x, k in zip(pt, e):
                if k:
                    t = t * x**k
            total = total + t
        return total

    def compose(self, subs: Sequence[Polynomial], truncate: int | None = None) -> Polynomial:
        """Substitute ``subs[i-1]`` for z_i.

        ``subs`` must have one entry per variable of ``self``; the result lives
        in the common dimension of the substituted polynomials. With
        ``truncate`` set, terms above that total degree are dropped as soon as
        they appear, which keeps jet compositions small.
        """
        if len(subs) != self.dim:
            raise ValueError(f"need {self.dim} substitutions, got {len(subs)}")
        return Substitution(subs, truncate)(self)

    # text -----------------------------------------------------------------

    def __repr__(self) -> str:
        return f"Polynomial({self.dim}, {self})"

    def __str__(self) -> str:
        from .render import render_polynomial

        return render_polynomial(self)


def identity_map(n: int) -> tuple[Polynomial, ...]:
    return tuple(Polynomial.variable(i, n) for i in range(1, n + 1))


class Substitution:
    """Reusable ``z_i -> subs[i-1]``.

    Powers of the substituted polynomials and products over exponent
    prefixes are cached, so substituting into many polynomials (the
    coefficients of a form, the components of a map) shares the work.
    """

    def __init__(self, subs: Sequence[Polynomial], truncate: int | None = None):
        dims = {q.dim for q in subs}
        if len(dims) != 1:
            raise ValueError("substituted polynomials disagree on dimension")
        (self.dim,) = dims
        self.subs = tuple(subs)
        self.truncate = truncate
        self._powers: list[dict[int, Polynomial]] = [{1: q} for q in self.subs]
        self._prefixes: dict[Exponent, Polynomial] = {(): Polynomial.constant(1, self.dim)}

    def _cut(self, p: Polynomial) -> Polynomial:
        return p if self.truncate is None else p.truncate(self.truncate)

    def _power(self, i: int, k: int) -> Polynomial:
        cache = self._powers[i]
        if k not in cache:
            half = self._power(i, k // 2)
            sq = self._cut(half * half)
            cache[k] = self._cut(sq * self.subs[i]) if k % 2 else sq
        return cache[k]

    def _prefix(self, e: Exponent) -> Polynomial:
        got = self._prefixes.get(e)
        if got is None:
            head = self._prefix(e[:-1])
            k = e[-1]
            got = self._cut(head * self._power(len(e) - 1, k)) if k else head
            self._prefixes[e] = got
        return got

    def __call__(self, p: Polynomial) -> Polynomial:
        if p.dim != len(self.subs):
            raise ValueError(f"need {p.dim} substitutions, got {len(self.subs)}")
        out: dict[Exponent, Scalar] = {}
        for e, c in p._terms.items():
            while e and not e[-1]:
                e = e[:-1]
            for f, x in self._prefix(e)._terms.items():
                s = out.get(f)
                out[f] = x * c if s is None else s + x * c
        return Polynomial._from_clean(self.dim, {f: x for f, x in out.items() if x})


def compose_maps(
    phi: Sequence[Polynomial], psi: Sequence[Polynomial], truncate: int | None = None
) -> tuple[Polynomial, ...]:
    """Polynomial map ``phi o psi``, i.e. ``z -> phi(psi(z))``."""
    if any(p.dim != len(psi) for p in phi):
        raise ValueError(f"need {len(psi)}-variable components to compose with psi")
    sub = Substitution(psi, truncate)
    return tuple(sub(p) for p in phi)


def sorted_terms(p: Polynomial) -> list[tuple[Exponent, Scalar]]:
    """Terms in a deterministic order: total degree, then reverse-lex exponent."""
    return sorted(p.terms.items(), key=lambda t: (sum(t[0]), tuple(-x for x in t[0])))


def iter_exponents(n: int, degree: int) -> Iterable[Exponent]:
    """All exponent tuples of length n and exactly the given total degree."""
    if n == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in iter_exponents(n - 1, degree - first):
            yield (first,) + rest
