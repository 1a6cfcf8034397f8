from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from .algebra import Polynomial, fmt_rational, format_poly
from .series import PowerSeries


def _render(value: Any) -> Any:
    if isinstance(value, Fraction):
        return fmt_rational(value)
    if isinstance(value, Polynomial):
        return format_poly(value)
    return value


@dataclass(frozen=True)
class Entry:
    identity: str
    params: tuple  # sorted (name, value) pairs
    passed: bool
    difference: Optional[str] = None  # rendered nonzero difference on failure

    def sort_key(self):
        return (self.identity, tuple((k, str(type(v)), v) for k, v in self.params))

    def to_dict(self) -> dict:
        d = {
            "identity": self.identity,
            "params": {k: _render(v) for k, v in self.params},
            "status": "pass" if self.passed else "fail",
        }
        if not self.passed:
            d["difference"] = self.difference
        return d


@dataclass
class IdentityReport:
    """Outcome of a batch of exact identity checks.

    An entry passes only when the two sides subtract to the zero polynomial
    or the zero rational.
    """

    entries: list = field(default_factory=list)
    seed: Optional[int] = None
    ranges: dict = field(default_factory=dict)

    def add(self, identity: str, params: dict, difference) -> bool:
        if isinstance(difference, Polynomial):
            zero = difference.is_zero()
        elif isinstance(difference, PowerSeries):
            zero = not any(difference.coeffs)
            difference = Polynomial(difference.coeffs)
        else:
            zero = not difference
        self.entries.append(
            Entry(
                identity,
                tuple(sorted(params.items())),
                zero,
                None if zero else str(_render(difference)),
            )
        )
        return zero

    def extend(self, other: "IdentityReport") -> None:
        self.entries.extend(other.entries)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    @property
    def failures(self) -> list:
        return [e for e in self.entries if not e.passed]

    def counts(self) -> dict:
        """``identity -> (passed, total)`` in sorted identity order."""
        total, ok = Counter(), Counter()
        for e in self.entries:
            total[e.identity] += 1
            ok[e.identity] += e.passed
        return {k: (ok[k], total[k]) for k in sorted(total)}

    def sorted_entries(self) -> list:
        return sorted(self.entries, key=Entry.sort_key)

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "ranges": self.ranges,
            "passed": self.passed,
            "total": len(self.entries),
            "failures": len(self.failures),
            "summary": {k: {"pass": p, "total": t} for k, (p, t) in self.counts().items()},
            "entries": [e.to_dict() for e in self.sorted_entries()],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)
