"""Executable certificates for the classification.

* witness forms: for each parity case an explicit p-form on which the
  unique monomial of degree q evaluates to ``s! dz1 /\\ ... /\\ dzq``;
* independence: the basis monomials, evaluated on seeded random forms plus
  the witness forms, give a matrix of full rank over Q(i);
* homogeneity: operators commute with pullback by homotheties, so the value
  at the origin scales by ``lambda^q``;
* naturality: operators commute with pullback by exact polynomial
  automorphisms.
"""

from __future__ import annotations

import random
from collections.abc import Sequence
from dataclasses import asdict, dataclass, field
from enum import Enum
from itertools import product
from math import factorial

from .classifier import (
    OperatorBasis,
    OperatorSignature,
    apply_operator,
    enumerate_basis,
)
from .forms import Form, pullback
from .graded import GradedPolynomial
from .jets import random_automorphism, scaling_germ
from .linalg import rank
from .polynomials import Polynomial
from .sampling import random_combination, random_form
from .scalars import I, ONE, Scalar, as_scalar

__all__ = [
    "CaseTag",
    "WitnessCase",
    "CheckResult",
    "witness_form",
    "check_witness",
    "witness_cases",
    "independence_certificate",
    "homogeneity_certificate",
    "naturality_check",
    "VerificationReport",
    "run_verification",
    "SUITES",
]


class CaseTag(str, Enum):
    ODD_P_EVEN_Q = "odd_p_even_q"  # u^0 v^s
    ODD_P_ODD_Q = "odd_p_odd_q"  # u^1 v^s
    EVEN_P_EVEN_Q = "even_p_even_q"  # u^s v^0
    EVEN_P_ODD_Q = "even_p_odd_q"  # u^s v^1


def case_degree(tag: CaseTag, p: int, s: int) -> int:
    return {
        CaseTag.ODD_P_EVEN_Q: s * (p + 1),
        CaseTag.ODD_P_ODD_Q: p + s * (p + 1),
        CaseTag.EVEN_P_EVEN_Q: s * p,
        CaseTag.EVEN_P_ODD_Q: s * p + p + 1,
    }[tag]


@dataclass(frozen=True)
class WitnessCase:
    case_tag: CaseTag
    p: int
    s: int
    n: int

    def __post_init__(self):
        object.__setattr__(self, "case_tag", CaseTag(self.case_tag))
        if self.p < 1 or self.s < 0:
            raise ValueError(f"need p >= 1 and s >= 0, got p={self.p}, s={self.s}")
        odd = self.case_tag in (CaseTag.ODD_P_EVEN_Q, CaseTag.ODD_P_ODD_Q)
        if odd != bool(self.p % 2):
            raise ValueError(f"case {self.case_tag.value} does not fit p = {self.p}")
        if self.q > self.n:
            raise ValueError(f"case needs q = {self.q} coordinates but n = {self.n}")

    @property
    def q(self) -> int:
        return case_degree(self.case_tag, self.p, self.s)

    @property
    def exponents(self) -> tuple[int, int]:
        """``(a, b)`` of the monomial ``u^a v^b``."""
        s = self.s
        return {
            CaseTag.ODD_P_EVEN_Q: (0, s),
            CaseTag.ODD_P_ODD_Q: (1, s),
            CaseTag.EVEN_P_EVEN_Q: (s, 0),
            CaseTag.EVEN_P_ODD_Q: (s, 1),
        }[self.case_tag]

    def monomial(self) -> GradedPolynomial:
        sig = OperatorSignature((self.p,), self.q, self.n)
        return GradedPolynomial(sig.universe, {self.exponents: ONE})


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _block(n: int, coeff_var: int | None, dz_vars: Sequence[int]) -> Form:
    f = Polynomial.variable(coeff_var, n) if coeff_var else Polynomial.constant(1, n)
    return Form.dz(*dz_vars, dim=n) * f


def witness_form(c: WitnessCase) -> Form:
    """The witness p-form, with its q variables laid out as z1..zq."""
    p, s, n = c.p, c.s, c.n
    w = Form.zero(n, p)
    if c.case_tag is CaseTag.ODD_P_EVEN_Q:
        for j in range(s):
            base = j * (p + 1)
            w = w + _block(n, base + 1, range(base + 2, base + p + 2))
    elif c.case_tag is CaseTag.ODD_P_ODD_Q:
        w = w + _block(n, None, range(1, p + 1))
        for j in range(s):
            base = p + j * (p + 1)
            w = w + _block(n, base + 1, range(base + 2, base + p + 2))
    elif c.case_tag is CaseTag.EVEN_P_EVEN_Q:
        for j in range(s):
            w = w + _block(n, None, range(j * p + 1, j * p + p + 1))
    else:
        w = w + _block(n, 1, range(2, p + 2))
        for j in range(s):
            base = p + 1 + j * p
            w = w + _block(n, None, range(base + 1, base + p + 1))
    return w


def check_witness(c: WitnessCase) -> CheckResult:
    """Apply the case's monomial to its witness; expect ``s! dz1 /\\ ... /\\ dzq``."""
    got = apply_operator(c.monomial(), [witness_form(c)], dim=c.n)
    expected = Form.dz(*range(1, c.q + 1), dim=c.n) * factorial(c.s)
    if got == expected:
        return CheckResult(True)
    return CheckResult(False, f"expected {expected}, got {got}; difference {got - expected}")


def witness_cases(max_q: int = 6) -> list[WitnessCase]:
    """Every case with ``q <= max_q``, on ``n = q`` (``n = 1`` when q = 0)."""
    out = []
    for tag in CaseTag:
        odd = tag in (CaseTag.ODD_P_EVEN_Q, CaseTag.ODD_P_ODD_Q)
        for p in range(1 if odd else 2, max_q + 1, 2):
            s = 0
            while (q := case_degree(tag, p, s)) <= max_q:
                out.append(WitnessCase(tag, p, s, max(q, 1)))
                s += 1
    return out


# independence ----------------------------------------------------------------


@dataclass(frozen=True)
class IndependenceResult:
    signature: dict
    size: int
    rank: int
    trials: int
    seed: int

    @property
    def passed(self) -> bool:
        return self.rank == self.size


def _witness_inputs(sig: OperatorSignature) -> list[list[Form]]:
    """Deterministic inputs: the witness for each source, others set to zero."""
    n, q = sig.ambient_dim, sig.target_degree
    out = []
    for i, p in enumerate(sig.source_degrees):
        for tag in CaseTag:
            for s in range(q + 1):
                try:
                    c = WitnessCase(tag, p, s, n)
                except ValueError:
                    continue
                if c.q != q:
                    continue
                forms = [Form.zero(n, pj) for pj in sig.source_degrees]
                forms[i] = witness_form(c)
                out.append(forms)
    return out


def independence_certificate(basis: OperatorBasis, trials: int | None = None, seed: int = 0) -> IndependenceResult:
    """Exact rank of the matrix of basis-monomial evaluations.

    Rows are basis monomials; columns are the coefficients of the resulting
    q-forms, flattened over all inputs (witness inputs first, then ``trials``
    seeded random inputs).
    """
    if not basis.monomials:
        raise ValueError("independence certificate needs a non-empty basis")
    sig = basis.signature
    n = sig.ambient_dim
    trials = len(basis) + 2 if trials is None else trials
    rng = random.Random(seed)
    inputs = _witness_inputs(sig)
    inputs += [[random_form(rng, n, p) for p in sig.source_degrees] for _ in range(trials)]
    polys = basis.polynomials()
    columns: dict[tuple, int] = {}
    rows: list[dict[int, Scalar]] = [{} for _ in polys]
    for t, forms in enumerate(inputs):
        for r, P in enumerate(polys):
            val = apply_operator(P, forms, dim=n)
            for key, coeff in val.terms.items():
                for exp, c in coeff.terms.items():
                    col = columns.setdefault((t, key, exp), len(columns))
                    rows[r][col] = c
    dense = [[row.get(j, Scalar(0)) for j in range(len(columns))] for row in rows]
    rk = rank(dense) if columns else 0
    return IndependenceResult(sig.to_json(), len(basis), rk, trials, seed)


# homogeneity and naturality --------------------------------------------------


def homogeneity_certificate(P: GradedPolynomial, forms: Sequence[Form], lam) -> CheckResult:
    """``P(t*w, d t*w) == t*P(w, dw)`` for the homothety ``t(z) = lam z``,
    and the value at the origin scales by ``lam^q``.
    """
    lam = as_scalar(lam)
    if not lam:
        raise ValueError("homothety ratio must be non-zero")
    n = forms[0].dim
    tau = scaling_germ(lam, n, 1)
    out = apply_operator(P, forms, dim=n)
    lhs = apply_operator(P, [pullback(w, tau) for w in forms], dim=n)
    rhs = pullback(out, tau)
    if lhs != rhs:
        return CheckResult(False, f"pullback law fails: {lhs} != {rhs}")
    degs = P.degrees()
    if len(degs) == 1:
        (q,) = degs
        if lhs.at_origin() != out.at_origin() * lam**q:
            return CheckResult(False, f"origin value does not scale by lambda^{q}")
    return CheckResult(True)


def naturality_check(P: GradedPolynomial, forms: Sequence[Form], phi) -> CheckResult:
    """``phi*(P(w, dw)) == P(phi*w, d phi*w)``."""
    n = forms[0].dim
    lhs = pullback(apply_operator(P, forms, dim=n), phi)
    rhs = apply_operator(P, [pullback(w, phi) for w in forms], dim=n)
    if lhs == rhs:
        return CheckResult(True)
    return CheckResult(False, f"difference {lhs - rhs}")


# suites ----------------------------------------------------------------------


HOMOGENEITY_LAMBDAS = (Scalar(2), Scalar(3), ONE + I, Scalar(-1))


@dataclass
class CheckRecord:
    suite: str
    name: str
    passed: bool
    detail: str = ""
    data: dict = field(default_factory=dict)


@dataclass
class VerificationReport:
    seed: int
    checks: list[CheckRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def summary(self) -> dict[str, dict[str, int]]:
        out: dict[str, dict[str, int]] = {}
        for c in self.checks:
            s = out.setdefault(c.suite, {"passed": 0, "failed": 0})
            s["passed" if c.passed else "failed"] += 1
        return out

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "passed": self.passed,
            "summary": self.summary(),
            "checks": [asdict(c) for c in self.checks],
        }


def independence_signatures(max_p: int = 3, max_m: int = 2, max_n: int = 4):
    for m in range(1, max_m + 1):
        for ps in product(range(1, max_p + 1), repeat=m):
            for n in range(1, max_n + 1):
                for q in range(n + 1):
                    yield OperatorSignature(ps, q, n)


def witness_suite(report: VerificationReport, max_q: int = 6) -> None:
    for c in witness_cases(max_q):
        res = check_witness(c)
        report.checks.append(CheckRecord(
            "witnesses", f"{c.case_tag.value} p={c.p} s={c.s} n={c.n}", res.ok, res.detail,
            {"case": c.case_tag.value, "p": c.p, "s": c.s, "n": c.n, "q": c.q},
        ))


def independence_suite(report: VerificationReport, seed: int) -> None:
    for sig in independence_signatures():
        basis = enumerate_basis(sig)
        if not basis.monomials:
            continue
        res = independence_certificate(basis, seed=seed)
        report.checks.append(CheckRecord(
            "independence", f"p={list(sig.source_degrees)} q={sig.target_degree} n={sig.ambient_dim}",
            res.passed, "" if res.passed else f"rank {res.rank} < {res.size}",
            {"signature": res.signature, "size": res.size, "rank": res.rank, "trials": res.trials},
        ))


def homogeneity_signatures(max_p: int = 2, max_q: int = 4):
    for p in range(1, max_p + 1):
        for q in range(max_q + 1):
            sig = OperatorSignature((p,), q, max(q, p, 1))
            if enumerate_basis(sig).monomials:
                yield sig


def homogeneity_suite(report: VerificationReport, seed: int, pairs: int = 50) -> None:
    for sig in homogeneity_signatures():
        basis = enumerate_basis(sig)
        rng = random.Random(f"{seed}:{sig.source_degrees}:{sig.target_degree}")
        failures = []
        for t in range(pairs):
            P = random_combination(rng, basis.monomials)
            forms = [random_form(rng, sig.ambient_dim, p) for p in sig.source_degrees]
            for lam in HOMOGENEITY_LAMBDAS:
                res = homogeneity_certificate(P, forms, lam)
                if not res:
                    failures.append(f"pair {t}, lambda={lam}: {res.detail}")
        report.checks.append(CheckRecord(
            "homogeneity", f"p={list(sig.source_degrees)} q={sig.target_degree} n={sig.ambient_dim}",
            not failures, "; ".join(failures[:3]),
            {"signature": sig.to_json(), "pairs": pairs, "lambdas": [str(x) for x in HOMOGENEITY_LAMBDAS]},
        ))


NATURALITY_SIGNATURES = (
    OperatorSignature((1,), 0, 3),
    OperatorSignature((1,), 1, 3),
    OperatorSignature((1,), 2, 3),
    OperatorSignature((1,), 3, 3),
    OperatorSignature((2,), 2, 3),
    OperatorSignature((2,), 3, 3),
    OperatorSignature((1, 1), 2, 3),
    OperatorSignature((1, 2), 3, 3),
)


def naturality_suite(report: VerificationReport, seed: int, trials: int = 50) -> None:
    for t in range(trials):
        sig = NATURALITY_SIGNATURES[t % len(NATURALITY_SIGNATURES)]
        rng = random.Random(f"{seed}:naturality:{t}")
        basis = enumerate_basis(sig)
        P = random_combination(rng, basis.monomials)
        forms = [random_form(rng, sig.ambient_dim, p, max_degree=2, density=0.4) for p in sig.source_degrees]
        phi, _ = random_automorphism(sig.ambient_dim, 2, seed * 1000 + t)
        res = naturality_check(P, forms, phi)
        report.checks.append(CheckRecord(
            "naturality", f"trial {t} p={list(sig.source_degrees)} q={sig.target_degree}",
            res.ok, res.detail, {"signature": sig.to_json(), "operator": str(P)},
        ))


SUITES = ("witnesses", "independence", "homogeneity", "naturality")


def run_verification(suites: Sequence[str] = SUITES, seed: int = 0, max_q: int = 6) -> VerificationReport:
    report = VerificationReport(seed)
    for name in suites:
        if name == "witnesses":
            witness_suite(report, max_q)
        elif name == "independence":
            independence_suite(report, seed)
        elif name == "homogeneity":
            homogeneity_suite(report, seed)
        elif name == "naturality":
            naturality_suite(report, seed)
        else:
            raise ValueError(f"unknown verification suite {name!r}")
    return report
