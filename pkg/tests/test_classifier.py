import pytest
from hypothesis import given, strategies as st

from holoform import (Form, GradedPolynomial, OperatorSignature, Polynomial, apply_operator,
                      enumerate_basis, exterior_derivative, solve_degree_equation)
from holoform.classifier import SignatureError, ZeroDegreeSourceError

from oracles import brute_force_degree_solutions, ref_d, ref_from_text, ref_wedge, to_ref


def basis_of(p, q, n):
    return enumerate_basis(OperatorSignature(tuple(p), q, n)).rendered()


@pytest.mark.parametrize("p, q, expected", [((1,), 2, [(0, 1)]), ((1,), 4, [(0, 2)]), ((2,), 5, [(1, 1)])])
def test_degree_equation_examples(p, q, expected):
    assert solve_degree_equation(OperatorSignature(p, q, max(q, 1))) == expected


@given(st.lists(st.integers(1, 3), min_size=1, max_size=3), st.integers(0, 7))
def test_degree_equation_matches_brute_force(ps, q):
    sig = OperatorSignature(tuple(ps), q, max(q, 1))
    weights = [d for p in ps for d in (p, p + 1)]
    assert sorted(solve_degree_equation(sig)) == brute_force_degree_solutions(weights, q)


def test_basis_examples():
    assert basis_of([1], 3, 3) == ["u*v"]
    assert basis_of([1], 3, 5) == ["u*v"]
    assert sorted(basis_of([1, 1], 2, 2)) == sorted(["u1*u2", "v1", "v2"])
    assert basis_of([1], 0, 2) == ["1"]


@pytest.mark.parametrize("p", [1, 2, 3])
@pytest.mark.parametrize("n", [4, 5])
def test_only_d_raises_degree_by_one(p, n):
    assert basis_of([p], p + 1, n) == ["v"]


@given(st.integers(1, 4), st.integers(1, 6))
def test_below_source_degree_only_constants(p, q):
    if q < p:
        assert basis_of([p], q, 6) == []


def test_ordering_is_decreasing_graded_lex():
    exps = solve_degree_equation(OperatorSignature((1, 1), 2, 2))
    assert exps == [(1, 0, 1, 0), (0, 1, 0, 0), (0, 0, 0, 1)]


def test_signature_errors():
    with pytest.raises(ZeroDegreeSourceError, match="f\\*df"):
        OperatorSignature((0,), 1, 2)
    with pytest.raises(SignatureError):
        OperatorSignature((1,), 3, 2)
    with pytest.raises(SignatureError):
        OperatorSignature((1,), -1, 2)
    with pytest.raises(SignatureError):
        OperatorSignature((), 1, 2)


def test_apply_examples():
    n = 3
    sig = OperatorSignature((1,), 2, n)
    z1, z2 = Polynomial.variable(1, n), Polynomial.variable(2, n)
    w = Form.dz(2, dim=n) * z1
    v = GradedPolynomial.variable(sig.universe, "v")
    assert apply_operator(v, [w]) == Form.dz(1, 2, dim=n)
    one = GradedPolynomial.constant(sig.universe, 1)
    assert apply_operator(one, [w]) == Form.function(Polynomial.constant(1, n))
    w2 = w + Form.dz(3, dim=n) * z2
    uv = GradedPolynomial(sig.universe, {(1, 1): 1})
    ref = to_ref(w2)
    assert to_ref(apply_operator(uv, [w2])) == ref_wedge(ref, ref_d(ref))
    assert apply_operator(uv, [w2]) == Form.dz(1, 2, 3, dim=n) * z2


def test_apply_checks_degrees():
    sig = OperatorSignature((1,), 2, 2)
    v = GradedPolynomial.variable(sig.universe, "v")
    with pytest.raises(ValueError):
        apply_operator(v, [Form.dz(1, 2, dim=2)])


def test_to_json():
    data = enumerate_basis(OperatorSignature((1, 1), 2, 3)).to_json()
    assert data["signature"] == {"p": [1, 1], "q": 2, "n": 3}
    assert data["monomials"] == ["u1*u2", "v1", "v2"]
    assert data["variables"][1] == {"name": "v1", "degree": 2}
