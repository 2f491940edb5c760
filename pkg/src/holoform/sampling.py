"""Seeded random inputs: forms, tensors and graded polynomials.

Coefficients come from {-2..2} + {-2..2}*i, and polynomial coefficients have
total degree at most ``max_degree`` (default 2). Every function takes an
explicit ``random.Random`` so there is no hidden generator state.
"""

from __future__ import annotations

import random
from itertools import combinations, product

from .forms import Form
from .graded import GradedPolynomial
from .polynomials import Polynomial, iter_exponents
from .scalars import Scalar
from .tensors import CovariantTensor


def gaussian(rng: random.Random, bound: int = 2) -> Scalar:
    return Scalar(rng.randint(-bound, bound), rng.randint(-bound, bound))


def nonzero_gaussian(rng: random.Random, bound: int = 2) -> Scalar:
    while True:
        c = gaussian(rng, bound)
        if c:
            return c


def random_polynomial(rng: random.Random, n: int, max_degree: int = 2, density: float = 1.0) -> Polynomial:
    terms = {}
    for deg in range(max_degree + 1):
        for e in iter_exponents(n, deg):
            if density >= 1.0 or rng.random() < density:
                terms[e] = gaussian(rng)
    return Polynomial(n, terms)


def random_form(rng: random.Random, n: int, p: int, max_degree: int = 2, density: float = 1.0) -> Form:
    return Form(n, p, {I: random_polynomial(rng, n, max_degree, density) for I in combinations(range(1, n + 1), p)})


def random_tensor(rng: random.Random, n: int, k: int, max_degree: int = 2, density: float = 0.5) -> CovariantTensor:
    terms = {}
    for J in product(range(1, n + 1), repeat=k):
        if rng.random() < density:
            terms[J] = random_polynomial(rng, n, max_degree, density)
    return CovariantTensor(n, k, terms)


def random_combination(rng: random.Random, monomials) -> GradedPolynomial:
    """Random non-zero linear combination of the given graded monomials."""
    universe = monomials[0].universe
    return GradedPolynomial(universe, {m.exponents: nonzero_gaussian(rng) for m in monomials})
