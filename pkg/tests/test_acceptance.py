"""Acceptance gate: one test per criterion, exact arithmetic, timed.

Each test prints a single ``criterion N: PASS|FAIL`` line (capture is
bypassed so the lines show up in a plain ``pytest`` run too).
"""

import random
import time
from contextlib import contextmanager
from math import factorial

import pytest

from holoform import (CovariantTensor, JetGerm, OperatorSignature, alt_embed, compose, enumerate_basis,
                      exterior_derivative as d, invert, nabla, pullback, skew_symmetrize, tensor_product)
from holoform.jets import random_automorphism, random_germ
from holoform.oracle import equivariant_hom_dimension, group_spot_check
from holoform.polynomials import compose_maps
from holoform.sampling import random_form, random_tensor
from holoform.verifier import (HOMOGENEITY_LAMBDAS, check_witness, homogeneity_certificate,
                               homogeneity_signatures, independence_certificate,
                               independence_signatures, witness_cases)
from holoform.sampling import random_combination


@contextmanager
def criterion(capsys, number: int, title: str, limit: float):
    state = {"ok": False, "detail": ""}
    start = time.perf_counter()
    try:
        yield state
    finally:
        elapsed = time.perf_counter() - start
        ok = state["ok"] and elapsed < limit
        detail = state["detail"] or ("" if elapsed < limit else f"over time limit {limit}s")
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} {title} "
                  f"({elapsed:.2f}s < {limit:g}s){' - ' + detail if detail else ''}")
    assert state["ok"], state["detail"]
    assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"


def test_criterion_1_only_d_raises_degree_by_one(capsys):
    with criterion(capsys, 1, "Lambda^p -> Lambda^(p+1) operators are multiples of d", 1) as st:
        bases = {p: enumerate_basis(OperatorSignature((p,), p + 1, 4)).rendered() for p in (1, 2, 3)}
        bad = {p: b for p, b in bases.items() if b != ["v"]}
        st["ok"], st["detail"] = not bad, f"bases {bad}" if bad else ""


def test_criterion_2_witness_suite(capsys):
    with criterion(capsys, 2, "witness forms give s! dz1../\\..dzq for q <= 6", 10) as st:
        cases = witness_cases(6)
        failures = [c for c in cases if not check_witness(c)]
        tags = {c.case_tag for c in cases}
        st["ok"] = not failures and len(tags) == 4
        st["detail"] = f"{len(failures)} failing cases" if failures else ""


def test_criterion_3_independence(capsys):
    with criterion(capsys, 3, "independence rank == |basis|, m<=2, p_i<=3, q<=n<=4", 60) as st:
        failures, count = [], 0
        for sig in independence_signatures(max_p=3, max_m=2, max_n=4):
            basis = enumerate_basis(sig)
            if not basis.monomials:
                continue
            count += 1
            res = independence_certificate(basis, seed=0)
            if not res.passed:
                failures.append((res.signature, res.rank, res.size))
        st["ok"] = not failures and count > 0
        st["detail"] = f"failures {failures[:3]}" if failures else ""


def test_criterion_4_invariant_theory_oracle(capsys):
    with criterion(capsys, 4, "equivariant maps to Lambda^q are multiples of h", 120) as st:
        problems = []
        for q, n in [(1, 2), (2, 2), (2, 3), (3, 3)]:
            sol = equivariant_hom_dimension(q, q, n)
            if not (sol.dimension == 1 and sol.matches_skew_symmetrization and sol.cross_checked
                    and group_spot_check(sol, trials=3)):
                problems.append((q, n, sol.dimension))
        for q, n in [(2, 1), (3, 2)]:
            if equivariant_hom_dimension(q, q, n).dimension != 0:
                problems.append((q, n))
        st["ok"], st["detail"] = not problems, f"{problems}" if problems else ""


def test_criterion_5_dga_laws(capsys):
    with criterion(capsys, 5, "DGA laws on 200 seeded forms", 30) as st:
        rng = random.Random(2024)
        failures = []
        for t in range(200):
            n = 1 + t % 3
            a = random_form(rng, n, rng.randint(0, n), 2, 0.4)
            b = random_form(rng, n, rng.randint(0, n), 2, 0.4)
            phi, _ = random_automorphism(n, 2, 10 * t)
            psi, _ = random_automorphism(n, 2, 10 * t + 1)
            checks = {
                "dd": not d(d(a)),
                "leibniz": d(a ^ b) == (d(a) ^ b) + (a ^ d(b)) * (-1) ** a.degree,
                "anticommute": (a ^ b) == (b ^ a) * (-1) ** (a.degree * b.degree),
                "pullback wedge": pullback(a ^ b, phi) == pullback(a, phi) ^ pullback(b, phi),
                "pullback d": pullback(d(a), phi) == d(pullback(a, phi)),
                "functorial": pullback(a, compose_maps(phi, psi)) == pullback(pullback(a, phi), psi),
            }
            failures += [(t, k) for k, ok in checks.items() if not ok]
        st["ok"], st["detail"] = not failures, f"{failures[:5]}" if failures else ""


def test_criterion_6_skew_symmetrization_identities(capsys):
    with criterion(capsys, 6, "h(T(x)T') = h(T)/\\h(T'), h(w) = q!w, h(nabla w) = q!dw", 10) as st:
        rng = random.Random(77)
        failures = []
        for t in range(100):
            n = 1 + t % 3
            k1 = rng.randint(0, 3)
            k2 = rng.randint(0, 3 - k1)
            T1, T2 = random_tensor(rng, n, k1, 2), random_tensor(rng, n, k2, 2)
            q = rng.randint(0, min(n, 3))
            w = random_form(rng, n, q, 2, 0.5)
            if skew_symmetrize(tensor_product(T1, T2)) != (skew_symmetrize(T1) ^ skew_symmetrize(T2)):
                failures.append((t, "product"))
            if skew_symmetrize(alt_embed(w)) != w * factorial(q):
                failures.append((t, "alt"))
            if q < 3 and skew_symmetrize(nabla(alt_embed(w))) != d(w) * factorial(q):
                failures.append((t, "nabla"))
        st["ok"], st["detail"] = not failures, f"{failures[:5]}" if failures else ""


def test_criterion_7_homogeneity(capsys):
    with criterion(capsys, 7, "homogeneity for lambda in {2, 3, 1+i, -1}", 30) as st:
        failures, sigs = [], list(homogeneity_signatures(max_p=2, max_q=4))
        for sig in sigs:
            basis = enumerate_basis(sig)
            rng = random.Random(f"acceptance:{sig.source_degrees}:{sig.target_degree}")
            for t in range(50):
                P = random_combination(rng, basis.monomials)
                forms = [random_form(rng, sig.ambient_dim, p) for p in sig.source_degrees]
                for lam in HOMOGENEITY_LAMBDAS:
                    if not homogeneity_certificate(P, forms, lam):
                        failures.append((sig.to_json(), t, str(lam)))
        st["ok"] = not failures and len(sigs) > 0
        st["detail"] = f"{failures[:3]}" if failures else ""


def test_criterion_8_two_one_forms_to_two_forms(capsys):
    with criterion(capsys, 8, "(1,1) -> Lambda^2 on C^3 has basis {u1u2, v1, v2}", 5) as st:
        basis = enumerate_basis(OperatorSignature((1, 1), 2, 3))
        res = independence_certificate(basis)
        same = set(basis.rendered()) == {"u1*u2", "v1", "v2"}
        st["ok"] = same and res.rank == 3
        st["detail"] = "" if st["ok"] else f"basis {basis.rendered()}, rank {res.rank}"


def test_criterion_9_jet_group_laws(capsys):
    with criterion(capsys, 9, "jet inverse and associativity modulo truncation", 10) as st:
        failures = []
        for t in range(50):
            n, k = 1 + t % 2, 1 + t % 4
            g, h, f = (random_germ(n, k, 1000 * t + i) for i in range(3))
            ident = JetGerm.identity(n, k)
            if compose(g, invert(g)) != ident or compose(invert(g), g) != ident:
                failures.append((t, "inverse"))
            if compose(compose(g, h), f) != compose(g, compose(h, f)):
                failures.append((t, "assoc"))
        st["ok"], st["detail"] = not failures, f"{failures[:5]}" if failures else ""
