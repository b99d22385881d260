"""Exact rational scalars.

Every coefficient in this package is an exact rational, canonical by
construction: lowest terms, positive denominator, zero has a single
representation. gmpy2's mpq is used when available (C-speed arithmetic,
which the window closures need); fractions.Fraction is a drop-in fallback.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as rational
except ImportError:  # pragma: no cover - exercised only without gmpy2
    rational = Fraction

ZERO = rational(0)
ONE = rational(1)


def rat(value=0, den=None):
    """Coerce ints, rationals, or 'p/q' strings to the scalar type."""
    if den is not None:
        return rational(value, den)
    if isinstance(value, str):
        txt = value.strip()
        if "/" in txt:
            num, d = txt.split("/", 1)
            return rational(int(num), int(d))
        return rational(int(txt))
    return rational(value)


def rat_str(value) -> str:
    """Decimal-free text form: 'p' or 'p/q'."""
    return str(rational(value))


def parse_tuple(text: str) -> tuple:
    """Parse a comma-separated rational tuple such as '1/3,1/2' or '0,0'."""
    parts = [p for p in text.split(",") if p.strip() != ""]
    if not parts:
        raise ValueError("empty rational tuple: %r" % text)
    return tuple(rat(p) for p in parts)
