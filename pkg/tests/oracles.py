"""Independent reference implementations used to compute expected values.

Forms here are sympy expressions on *all* ordered index tuples (fully
antisymmetric arrays), and wedge/d come straight from the permutation-sum
definitions, so nothing is shared with the production merge-sign code.
"""

from __future__ import annotations

from itertools import combinations, permutations, product
from math import factorial

import sympy as sp

from holoform import Form, Polynomial, Scalar


def zs(n):
    return sp.symbols(f"z1:{n + 1}")


def perm_sign(seq) -> int:
    """Sign of a permutation by bubble sort, counting transpositions."""
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(len(seq) - 1 - i):
            if seq[j] > seq[j + 1]:
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
                sign = -sign
    return sign


class RefForm:
    """A p-form as a dict over all ordered p-tuples of distinct indices."""

    def __init__(self, n: int, p: int, full: dict):
        self.n, self.p = n, p
        self.full = {k: sp.expand(v) for k, v in full.items() if sp.expand(v) != 0}

    @classmethod
    def from_sorted(cls, n, p, coeffs: dict):
        full = {}
        for key, c in coeffs.items():
            for perm in permutations(range(p)):
                full[tuple(key[i] for i in perm)] = perm_sign(perm) * c
        return cls(n, p, full)

    def get(self, key):
        return self.full.get(tuple(key), 0)

    def sorted_coeffs(self):
        return {k: v for k, v in self.full.items() if list(k) == sorted(k)}

    def __eq__(self, other):
        return self.n == other.n and self.sorted_coeffs() == other.sorted_coeffs()


def ref_wedge(a: RefForm, b: RefForm) -> RefForm:
    p, q, n = a.p, b.p, a.n
    out = {}
    for key in permutations(range(1, n + 1), p + q):
        total = 0
        for sigma in permutations(range(p + q)):
            idx = [key[s] for s in sigma]
            total += perm_sign(sigma) * a.get(idx[:p]) * b.get(idx[p:])
        out[key] = sp.Rational(1, factorial(p) * factorial(q)) * total
    return RefForm(n, p + q, out)


def ref_d(a: RefForm) -> RefForm:
    """(dw)_{i0..ip} = sum_k (-1)^k d_{ik} w_{i0..^ik..ip}."""
    z = zs(a.n)
    out = {}
    for key in permutations(range(1, a.n + 1), a.p + 1):
        total = 0
        for k in range(a.p + 1):
            rest = key[:k] + key[k + 1:]
            total += (-1) ** k * sp.diff(a.get(rest), z[key[k] - 1])
        out[key] = total
    return RefForm(a.n, a.p + 1, out)


def scalar_to_sympy(c: Scalar):
    return sp.Rational(int(c.re.numerator), int(c.re.denominator)) + sp.I * sp.Rational(
        int(c.im.numerator), int(c.im.denominator)
    )


def poly_to_sympy(p: Polynomial):
    z = zs(p.dim)
    return sp.expand(sum((scalar_to_sympy(c) * sp.Mul(*[zi**e for zi, e in zip(z, exp)])
                          for exp, c in p.terms.items()), sp.Integer(0)))


def to_ref(w: Form) -> RefForm:
    return RefForm.from_sorted(w.dim, w.degree, {k: poly_to_sympy(c) for k, c in w.terms.items()})


def ref_from_text(n, p, coeffs: dict) -> RefForm:
    """Coefficients given as sympy-parsable strings on sorted keys."""
    z = zs(n)
    loc = {f"z{i + 1}": z[i] for i in range(n)}
    return RefForm.from_sorted(n, p, {k: sp.sympify(v, locals=loc) for k, v in coeffs.items()})


def ref_pullback(a: RefForm, phi_exprs) -> RefForm:
    """Pullback by the definition: (phi* w)_J = sum_I w_I(phi) * det(d phi_I / d z_J)."""
    n = a.n
    z = zs(n)
    subs = dict(zip(z, phi_exprs))
    jac = sp.Matrix(n, n, lambda i, j: sp.diff(phi_exprs[i], z[j]))
    out = {}
    for J in combinations(range(1, n + 1), a.p):
        total = 0
        for I, c in a.sorted_coeffs().items():
            minor = jac.extract([i - 1 for i in I], [j - 1 for j in J]).det() if a.p else 1
            total += c.subs(subs, simultaneous=True) * minor
        out[J] = total
    return RefForm.from_sorted(n, a.p, out)


def brute_force_degree_solutions(weights, q):
    """Every exponent vector in a box, filtered by the degree equation and odd caps."""
    ranges = [range(0, (q // w if w else 0) + 2) for w in weights]
    out = []
    for e in product(*ranges):
        if sum(x * w for x, w in zip(e, weights)) != q:
            continue
        if any(w % 2 and x > 1 for x, w in zip(e, weights)):
            continue
        out.append(e)
    return sorted(out)


def full_tensor_indices(k, n):
    return list(product(range(1, n + 1), repeat=k))
