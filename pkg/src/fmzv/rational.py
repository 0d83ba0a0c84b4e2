"""Exact rational scalars and their ``p/q`` text form."""

from __future__ import annotations

from fractions import Fraction

__all__ = ["Fraction", "format_rational", "parse_rational", "parse_rationals"]


def format_rational(x: Fraction | int) -> str:
    """Serialize ``x`` as ``p/q`` in lowest terms, integers included (``2/1``)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or ``p``; raises ``ValueError`` on anything else."""
    text = text.strip()
    if not text:
        raise ValueError("empty rational")
    try:
        num, sep, den = text.partition("/")
        value = Fraction(int(num), int(den)) if sep else Fraction(int(num))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc
    return value


def parse_rationals(text: str, sep: str = ",") -> tuple[Fraction, ...]:
    return tuple(parse_rational(t) for t in text.split(sep))
