import sympy as sp
import pytest
from hypothesis import given, strategies as st

from holoform import Polynomial, Scalar
from holoform.polynomials import compose_maps, identity_map, iter_exponents

from conftest import polynomials, scalars
from oracles import poly_to_sympy, zs

z1, z2 = (Polynomial.variable(i, 2) for i in (1, 2))


def test_basic_arithmetic():
    p = (z1 + z2) ** 2
    assert p == z1 * z1 + 2 * z1 * z2 + z2 * z2
    assert p.total_degree() == 2
    assert (p - p) == Polynomial.zero(2)
    assert not Polynomial.zero(2)


def test_diff_and_parts():
    p = z1**3 * z2 + 5 * z2 + 7
    assert p.diff(1) == 3 * z1**2 * z2
    assert p.homogeneous_part(4) == z1**3 * z2
    assert p.truncate(1) == 5 * z2 + 7
    assert p.constant_term() == Scalar(7)
    assert p(Scalar(1), Scalar(2)) == Scalar(19)


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        z1 + Polynomial.variable(1, 3)


def test_variable_index_bounds():
    with pytest.raises(ValueError):
        Polynomial.variable(3, 2)


def test_iter_exponents_counts():
    assert len(list(iter_exponents(3, 2))) == 6
    assert all(sum(e) == 4 for e in iter_exponents(2, 4))


@given(polynomials(n=2), polynomials(n=2), polynomials(n=2))
def test_ring_laws_against_sympy(a, b, c):
    assert poly_to_sympy(a * (b + c)) == sp.expand(poly_to_sympy(a) * (poly_to_sympy(b) + poly_to_sympy(c)))
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)


@given(polynomials(n=2), st.sampled_from([1, 2]))
def test_diff_against_sympy(a, i):
    assert poly_to_sympy(a.diff(i)) == sp.expand(sp.diff(poly_to_sympy(a), zs(2)[i - 1]))


@given(polynomials(n=2), polynomials(n=2), polynomials(n=2))
def test_compose_against_sympy(a, f, g):
    z = zs(2)
    expected = sp.expand(poly_to_sympy(a).subs({z[0]: poly_to_sympy(f), z[1]: poly_to_sympy(g)}, simultaneous=True))
    assert poly_to_sympy(a.compose([f, g])) == expected


@given(polynomials(n=2), polynomials(n=2), polynomials(n=2), st.integers(0, 4))
def test_truncated_compose_is_truncation(a, f, g, k):
    assert a.compose([f, g], truncate=k) == a.compose([f, g]).truncate(k)


@given(polynomials(n=2), scalars)
def test_scale(a, c):
    assert a.scale(c) == a * Polynomial.constant(c, 2)


def test_compose_maps_identity():
    phi = (z1 + z2**2, z2)
    assert compose_maps(phi, identity_map(2)) == phi
    assert compose_maps(identity_map(2), phi) == phi


@given(st.lists(polynomials(n=2), min_size=1, max_size=4), polynomials(n=2), polynomials(n=2),
       st.one_of(st.none(), st.integers(0, 3)))
def test_shared_substitution_matches_single_use(ps, f, g, k):
    from holoform.polynomials import Substitution
    sub = Substitution([f, g], k)
    for p in ps:
        assert sub(p) == p.compose([f, g], truncate=k)
