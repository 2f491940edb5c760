import random

from hypothesis import settings, strategies as st

from holoform import Scalar
from holoform.sampling import random_form, random_polynomial

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

small_ints = st.integers(min_value=-6, max_value=6)
scalars = st.builds(lambda a, b, c, d: Scalar(a, 1) * Scalar(b) / Scalar(c if c else 1) + Scalar(0, d),
                    small_ints, small_ints, small_ints, small_ints)
nonzero_scalars = scalars.filter(bool)
seeds = st.integers(min_value=0, max_value=10**6)
dims = st.integers(min_value=1, max_value=3)


@st.composite
def polynomials(draw, n=None, max_degree=2):
    n = draw(dims) if n is None else n
    rng = random.Random(draw(seeds))
    return random_polynomial(rng, n, max_degree, density=0.5)


@st.composite
def forms(draw, n, p=None, max_degree=2):
    p = draw(st.integers(0, n)) if p is None else p
    rng = random.Random(draw(seeds))
    return random_form(rng, n, p, max_degree, density=0.5)
