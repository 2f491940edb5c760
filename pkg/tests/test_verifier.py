import random

import pytest

from holoform import Form, OperatorSignature, Polynomial, Scalar, enumerate_basis, exterior_derivative, I
from holoform.classifier import OperatorBasis
from holoform.jets import random_automorphism, scaling_germ
from holoform.forms import pullback
from holoform.sampling import random_form
from holoform.verifier import (CaseTag, WitnessCase, check_witness, homogeneity_certificate,
                               independence_certificate, naturality_check, run_verification,
                               witness_cases, witness_form)

from oracles import ref_d, ref_from_text, ref_wedge, to_ref


def dz(*idx, n):
    return Form.dz(*idx, dim=n)


def z(i, n):
    return Polynomial.variable(i, n)


def test_witness_form_examples():
    assert witness_form(WitnessCase(CaseTag.ODD_P_EVEN_Q, 1, 1, 2)) == dz(2, n=2) * z(1, 2)
    assert witness_form(WitnessCase(CaseTag.EVEN_P_EVEN_Q, 2, 1, 2)) == dz(1, 2, n=2)
    assert witness_form(WitnessCase(CaseTag.ODD_P_ODD_Q, 1, 0, 1)) == dz(1, n=1)


def test_check_witness_examples():
    assert check_witness(WitnessCase(CaseTag.ODD_P_EVEN_Q, 1, 1, 2))
    assert check_witness(WitnessCase(CaseTag.ODD_P_EVEN_Q, 1, 2, 4))
    assert check_witness(WitnessCase(CaseTag.EVEN_P_ODD_Q, 2, 1, 5))


def test_witness_v_squared_against_reference():
    # (d w) /\ (d w) for w = z1 dz2 + z3 dz4, expanded independently
    w = ref_from_text(4, 1, {(2,): "z1", (4,): "z3"})
    dw = ref_d(w)
    assert ref_wedge(dw, dw) == ref_from_text(4, 4, {(1, 2, 3, 4): "2"})
    assert to_ref(witness_form(WitnessCase(CaseTag.ODD_P_EVEN_Q, 1, 2, 4))) == w


def test_witness_u_v_against_reference():
    # p = 2, s = 1: w = z1 dz2 /\ dz3 + dz4 /\ dz5, and u v = w /\ dw
    w = ref_from_text(5, 2, {(2, 3): "z1", (4, 5): "1"})
    assert to_ref(witness_form(WitnessCase(CaseTag.EVEN_P_ODD_Q, 2, 1, 5))) == w
    assert ref_wedge(w, ref_d(w)) == ref_from_text(5, 5, {(1, 2, 3, 4, 5): "1"})


def test_witness_case_validation():
    with pytest.raises(ValueError):
        WitnessCase(CaseTag.ODD_P_EVEN_Q, 2, 1, 4)
    with pytest.raises(ValueError):
        WitnessCase(CaseTag.ODD_P_EVEN_Q, 1, 2, 3)


def test_witness_cases_cover_all_tags():
    cases = witness_cases(6)
    assert {c.case_tag for c in cases} == set(CaseTag)
    assert all(c.q <= 6 and c.n == max(c.q, 1) for c in cases)


def test_independence_examples():
    for p, q, n, rank in [((1,), 2, 2, 1), ((1, 1), 2, 3, 3), ((2,), 5, 5, 1)]:
        res = independence_certificate(enumerate_basis(OperatorSignature(p, q, n)))
        assert res.rank == res.size == rank and res.passed


def test_independence_detects_duplicates():
    basis = enumerate_basis(OperatorSignature((1,), 2, 2))
    dup = OperatorBasis(basis.signature, basis.monomials * 2)
    res = independence_certificate(dup)
    assert res.rank == 1 and not res.passed


def test_homogeneity_examples():
    n = 2
    sig = OperatorSignature((1,), 2, n)
    basis = enumerate_basis(sig)
    v = basis.polynomials()[0]
    w = dz(2, n=n) * z(1, n)
    assert homogeneity_certificate(v, [w], 1)
    assert homogeneity_certificate(v, [w], 2)
    tau = scaling_germ(2, n, 1)
    both = exterior_derivative(pullback(w, tau))
    assert both == pullback(exterior_derivative(w), tau) == dz(1, 2, n=n) * 4
    uv = enumerate_basis(OperatorSignature((1,), 3, 3)).polynomials()[0]
    w3 = random_form(random.Random(5), 3, 1)
    assert homogeneity_certificate(uv, [w3], Scalar(1) + I)


def test_homogeneity_rejects_zero_ratio():
    v = enumerate_basis(OperatorSignature((1,), 2, 2)).polynomials()[0]
    with pytest.raises(ValueError):
        homogeneity_certificate(v, [dz(1, n=2)], 0)


def test_naturality_example():
    sig = OperatorSignature((1, 1), 2, 3)
    P = sum(enumerate_basis(sig).polynomials()[1:], enumerate_basis(sig).polynomials()[0])
    rng = random.Random(3)
    forms = [random_form(rng, 3, 1), random_form(rng, 3, 1)]
    phi, _ = random_automorphism(3, 2, 11)
    assert naturality_check(P, forms, phi)


def test_run_verification_small():
    report = run_verification(["witnesses"], seed=0, max_q=3)
    assert report.passed
    data = report.to_json()
    assert data["summary"]["witnesses"]["failed"] == 0
    with pytest.raises(ValueError):
        run_verification(["bogus"])
