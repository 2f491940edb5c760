"""Plain-text rendering that the parser in :mod:`holoform.parsing` reads back."""

from __future__ import annotations

from .scalars import Scalar


def scalar_factor(c: Scalar) -> str:
    """A scalar written so that it can be followed by ``*``."""
    s = str(c)
    if c.re and c.im:
        return f"({s})"
    return s


def _join(parts: list[str]) -> str:
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


def coefficient_times(c: Scalar, body: str) -> str:
    """``c*body`` with the usual shortcuts for c = 1 and c = -1."""
    if not body:
        return scalar_factor(c)
    if c == 1:
        return body
    if c == -1:
        return f"-{body}"
    return f"{scalar_factor(c)}*{body}"


def _monomial(exp: tuple[int, ...], prefix: str = "z") -> str:
    factors = []
    for i, k in enumerate(exp, start=1):
        if k == 1:
            factors.append(f"{prefix}{i}")
        elif k > 1:
            factors.append(f"{prefix}{i}^{k}")
    return "*".join(factors)


def render_polynomial(p) -> str:
    from .polynomials import sorted_terms

    return _join([coefficient_times(c, _monomial(e)) for e, c in sorted_terms(p)])


def render_form(w) -> str:
    if not w.terms:
        return "0"
    if w.degree == 0:
        return render_polynomial(w.terms[()])
    parts = []
    for key in sorted(w.terms):
        basis = " /\\ ".join(f"dz{i}" for i in key)
        c = w.terms[key]
        if len(c) == 1:
            ((exp, s),) = c.terms.items()
            mono = _monomial(exp)
            parts.append(coefficient_times(s, f"{mono}*{basis}" if mono else basis))
        else:
            parts.append(f"({c})*{basis}")
    return _join(parts)
