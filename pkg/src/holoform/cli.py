"""Command line interface.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage or
parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from collections.abc import Sequence

from . import __version__
from .classifier import OperatorSignature, SignatureError, apply_operator, enumerate_basis
from .forms import exterior_derivative, pullback, wedge
from .graded import operator_universe
from .oracle import OracleLimitError, equivariant_hom_dimension
from .parsing import ParseError, parse_forms, parse_graded, parse_map
from .scalars import Scalar
from .verifier import SUITES, run_verification

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _default_seed() -> int:
    raw = os.environ.get("HOLOFORM_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"HOLOFORM_SEED must be an integer, got {raw!r}") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON report")
    common.add_argument("--no-timing", action="store_true",
                        help="omit the elapsed field so reports are byte-stable")

    parser = argparse.ArgumentParser(
        prog="holoform",
        description="Natural differential operators on holomorphic forms.",
    )
    parser.add_argument("--version", action="version", version=f"holoform {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("basis", parents=[common], help="enumerate the operator basis")
    p.add_argument("--p", type=_int_list, required=True, help="source degrees, e.g. 1 or 1,2")
    p.add_argument("--q", type=int, required=True, help="target degree")
    p.add_argument("--n", type=int, required=True, help="ambient dimension")

    p = sub.add_parser("apply", parents=[common], help="apply P(w, dw) to concrete forms")
    p.add_argument("--poly", required=True, help='graded polynomial, e.g. "u*v"')
    p.add_argument("--form", action="append", required=True, help="form expression (repeatable)")
    p.add_argument("--dim", type=int)
    p.add_argument("--at", help='evaluate at a point: "0" or comma-separated coordinates')

    p = sub.add_parser("d", parents=[common], help="exterior derivative")
    p.add_argument("--form", required=True)
    p.add_argument("--dim", type=int)

    p = sub.add_parser("wedge", parents=[common], help="wedge product of forms")
    p.add_argument("--form", action="append", required=True)
    p.add_argument("--dim", type=int)

    p = sub.add_parser("pullback", parents=[common], help="pull a form back along a polynomial map")
    p.add_argument("--form", required=True)
    p.add_argument("--map", required=True, help='map components, e.g. "(z2, z1 + z1^2)"')

    p = sub.add_parser("verify", parents=[common], help="run the certificate suites")
    p.add_argument("--all", action="store_true")
    for name in SUITES:
        p.add_argument(f"--{name}", action="store_true")
    p.add_argument("--seed", type=int)
    p.add_argument("--max-q", type=int, default=6)

    p = sub.add_parser("oracle", parents=[common], help="brute-force equivariant maps into Lambda^q")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    return parser


def _report(args, inputs: dict, result, seed: int | None, start: float) -> dict:
    out = {
        "command": args.command,
        "inputs": inputs,
        "result": result,
        "seed": seed,
        "version": __version__,
    }
    if not args.no_timing:
        out["elapsed"] = round(time.perf_counter() - start, 6)
    return out


def _point(text: str, n: int) -> list[Scalar]:
    if text.strip() == "0":
        return [Scalar(0)] * n
    coords = [Scalar.parse(x) for x in text.split(",")]
    if len(coords) != n:
        raise UsageError(f"--at needs {n} coordinates, got {len(coords)}")
    return coords


def _run(args) -> tuple[dict, str, int]:
    start = time.perf_counter()
    cmd = args.command

    if cmd == "basis":
        sig = OperatorSignature(tuple(args.p), args.q, args.n)
        basis = enumerate_basis(sig)
        result = basis.to_json()
        text = "monomials: " + json.dumps(result["monomials"])
        return _report(args, sig.to_json(), result, None, start), text, EXIT_OK

    if cmd == "apply":
        forms = parse_forms(args.form, args.dim)
        universe = operator_universe([w.degree for w in forms])
        P = parse_graded(args.poly, universe)
        value = apply_operator(P, forms, dim=forms[0].dim)
        if args.at is not None:
            value = value.at(_point(args.at, value.dim))
        inputs = {"poly": args.poly, "forms": args.form, "at": args.at}
        result = {"form": str(value), "degree": value.degree, "dim": value.dim}
        return _report(args, inputs, result, None, start), str(value), EXIT_OK

    if cmd in ("d", "wedge"):
        texts = [args.form] if cmd == "d" else args.form
        forms = parse_forms(texts, args.dim)
        if cmd == "d":
            value = exterior_derivative(forms[0])
        else:
            value = forms[0]
            for w in forms[1:]:
                value = wedge(value, w)
        result = {"form": str(value), "degree": value.degree, "dim": value.dim}
        return _report(args, {"forms": texts}, result, None, start), str(value), EXIT_OK

    if cmd == "pullback":
        phi = parse_map(args.map)
        (w,) = parse_forms([args.form], len(phi))
        value = pullback(w, phi)
        result = {"form": str(value), "degree": value.degree, "dim": value.dim}
        inputs = {"form": args.form, "map": args.map}
        return _report(args, inputs, result, None, start), str(value), EXIT_OK

    if cmd == "verify":
        seed = args.seed if args.seed is not None else _default_seed()
        chosen = [s for s in SUITES if getattr(args, s)]
        if args.all or not chosen:
            chosen = list(SUITES)
        report = run_verification(chosen, seed=seed, max_q=args.max_q)
        lines = [f"{suite}: {c['passed']} passed, {c['failed']} failed"
                 for suite, c in report.summary().items()]
        lines += [f"FAILED {c.suite} {c.name}: {c.detail}" for c in report.checks if not c.passed]
        lines.append("all checks passed" if report.passed else "verification FAILED")
        inputs = {"suites": chosen, "max_q": args.max_q}
        code = EXIT_OK if report.passed else EXIT_FAILED
        return _report(args, inputs, report.to_json(), seed, start), "\n".join(lines), code

    if cmd == "oracle":
        sol = equivariant_hom_dimension(args.k, args.q, args.n)
        result = sol.to_json(with_elapsed=False)
        text = (f"k={sol.k} q={sol.q} n={sol.n}: dimension {sol.dimension}, "
                f"matches skew-symmetrization: {str(sol.matches_skew_symmetrization).lower()}")
        inputs = {"k": args.k, "q": args.q, "n": args.n}
        return _report(args, inputs, result, None, start), text, EXIT_OK

    raise UsageError(f"unknown command {cmd!r}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, text, code = _run(args)
    except (ParseError, SignatureError, OracleLimitError, UsageError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        print(f"holoform {args.command}: error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
