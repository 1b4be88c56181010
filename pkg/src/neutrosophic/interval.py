"""Closed subintervals of [0, 1] and the clamped interval arithmetic on them."""
from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import DomainError, ParseError

# Golden comparisons in the test-suite use this; laws use exact equality.
TOLERANCE = 1e-9


def fmt_num(x: float) -> str:
    """Short human form of a grade: at most 12 significant digits."""
    s = f"{x:.12g}"
    return "0" if s == "-0" else s


@dataclass(frozen=True, slots=True)
class UnitInterval:
    """A closed interval [inf, sup] with 0 <= inf <= sup <= 1.

    Construction validates and never clamps.
    """

    inf: float
    sup: float

    def __post_init__(self):
        lo, hi = float(self.inf), float(self.sup)
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise DomainError(f"interval endpoints must be finite, got [{lo}, {hi}]")
        if lo < 0.0 or hi > 1.0 or lo > hi:
            raise DomainError(f"not a subinterval of [0,1]: [{lo}, {hi}]")
        object.__setattr__(self, "inf", lo)
        object.__setattr__(self, "sup", hi)

    @classmethod
    def point(cls, v: float) -> "UnitInterval":
        return cls(v, v)

    @classmethod
    def parse(cls, text: str) -> "UnitInterval":
        """Parse ``[a,b]`` or a bare number ``v`` (meaning ``[v,v]``)."""
        s = text.strip()
        m = re.fullmatch(r"\[\s*([^,\]]+?)\s*,\s*([^,\]]+?)\s*\]", s)
        try:
            if m:
                return cls(float(m.group(1)), float(m.group(2)))
            return cls.point(float(s))
        except ValueError as exc:
            if isinstance(exc, DomainError):
                raise
            raise ParseError(f"bad interval {text!r}") from None

    @property
    def width(self) -> float:
        return self.sup - self.inf

    @property
    def midpoint(self) -> float:
        return (self.inf + self.sup) / 2.0

    def is_degenerate(self) -> bool:
        return self.inf == self.sup

    def le(self, other: "UnitInterval") -> bool:
        """Endpoint-wise order: inf <= inf' and sup <= sup'."""
        return self.inf <= other.inf and self.sup <= other.sup

    def close_to(self, other: "UnitInterval", tol: float = TOLERANCE) -> bool:
        return abs(self.inf - other.inf) <= tol and abs(self.sup - other.sup) <= tol

    def __str__(self):
        return f"[{fmt_num(self.inf)},{fmt_num(self.sup)}]"


ZERO = UnitInterval(0.0, 0.0)
ONE = UnitInterval(1.0, 1.0)


def iv_add(a: UnitInterval, b: UnitInterval) -> UnitInterval:
    """[min(a.inf+b.inf, 1), min(a.sup+b.sup, 1)]."""
    lo = min(a.inf + b.inf, 1.0)
    hi = min(a.sup + b.sup, 1.0)
    assert lo <= hi
    return UnitInterval(lo, hi)


def iv_sub(a: UnitInterval, b: UnitInterval) -> UnitInterval:
    """[max(a.inf-b.sup, 0), max(a.sup-b.inf, 0)]."""
    return UnitInterval(max(a.inf - b.sup, 0.0), max(a.sup - b.inf, 0.0))


def iv_one_minus(a: UnitInterval) -> UnitInterval:
    return UnitInterval(1.0 - a.sup, 1.0 - a.inf)


def iv_min(a: UnitInterval, b: UnitInterval) -> UnitInterval:
    return UnitInterval(min(a.inf, b.inf), min(a.sup, b.sup))


def iv_max(a: UnitInterval, b: UnitInterval) -> UnitInterval:
    return UnitInterval(max(a.inf, b.inf), max(a.sup, b.sup))


def iv_mul(a: UnitInterval, b: UnitInterval) -> UnitInterval:
    """Endpoint product; monotone on [0, 1] so inf*inf <= sup*sup."""
    return UnitInterval(a.inf * b.inf, a.sup * b.sup)


def iv_prob_sum(a: UnitInterval, b: UnitInterval) -> UnitInterval:
    """Endpoint probabilistic sum p + q - pq.

    Evaluated as 1 - (1-p)(1-q): each rounding step is monotone, so the
    result keeps inf <= sup and stays inside [0, 1].
    """
    return UnitInterval(1.0 - (1.0 - a.inf) * (1.0 - b.inf), 1.0 - (1.0 - a.sup) * (1.0 - b.sup))


def iv_scale(a: UnitInterval, k: float) -> UnitInterval:
    """[min(a.inf*k, 1), min(a.sup*k, 1)] for k > 0."""
    if not (k > 0 and math.isfinite(k)):
        raise DomainError(f"scale factor must be a positive finite number, got {k}")
    return UnitInterval(min(a.inf * k, 1.0), min(a.sup * k, 1.0))


def iv_div(a: UnitInterval, k: float) -> UnitInterval:
    """Scaling by 1/k, computed as a true division."""
    if not (k > 0 and math.isfinite(k)):
        raise DomainError(f"divisor must be a positive finite number, got {k}")
    return UnitInterval(min(a.inf / k, 1.0), min(a.sup / k, 1.0))
