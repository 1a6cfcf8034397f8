"""Text, JSON and LaTeX renderings. Rationals are always exact ``p/q`` strings."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Optional

from ..algebra import Polynomial, fmt_rational

FORMATS = ("text", "json", "latex")


@dataclass(frozen=True)
class OutputDoc:
    """A command result: a JSON-ready payload plus text and LaTeX renderers."""

    format: str
    payload: dict
    text: Optional[Callable[[dict], str]] = None
    latex: Optional[Callable[[dict], str]] = None

    def render(self) -> str:
        if self.format == "json":
            return json.dumps(self.payload, indent=2, default=_json_default)
        if self.format == "latex" and self.latex is not None:
            return self.latex(self.payload)
        if self.text is not None:
            return self.text(self.payload)
        return json.dumps(self.payload, default=_json_default)


def _json_default(obj: Any):
    if isinstance(obj, Fraction):
        return fmt_rational(obj)
    if isinstance(obj, Polynomial):
        return [fmt_rational(c) for c in obj.coeffs]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def latex_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


def latex_terms(terms) -> str:
    """Join ``(coefficient, symbol)`` pairs; an empty symbol marks a constant."""
    parts = []
    for c, sym in terms:
        if not c:
            continue
        mag = abs(c)
        if sym:
            body = sym if mag == 1 else f"{latex_rational(mag)} {sym}"
        else:
            body = latex_rational(mag)
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts) if parts else "0"


def latex_poly(p: Polynomial) -> str:
    terms = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        sym = "" if i == 0 else ("x" if i == 1 else f"x^{{{i}}}")
        terms.append((p.coeffs[i], sym))
    return latex_terms(terms)


def latex_family(kind: str, n: int, r: Optional[int] = None, arg: str = "x") -> str:
    """``B_{n}(x)``, ``B_{n}^{(r)}(x)`` or ``E_{n}(x)``."""
    sup = "" if r is None else f"^{{({r})}}"
    return f"{kind}_{{{n}}}{sup}({arg})"
