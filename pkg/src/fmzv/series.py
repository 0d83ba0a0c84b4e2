"""Truncated power series with rational coefficients, and polylogarithms.

``Li_a(z)`` has ``z^n`` coefficient ``zeta_{n-1}(a2, ..., ar) / n^a1``, so
the cross sum ``R_N(a; b)`` is the ``z^N`` coefficient of
``Li_a(z) Li_b(z) / (1 - z)``.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .rational import Fraction, format_rational
from .words import as_composition, shuffle_compositions
from .zeta import values

__all__ = [
    "PowerSeries",
    "ShuffleCheck",
    "polylog_series",
    "series_mul",
    "divide_one_minus_z",
    "r_via_series",
    "check_polylog_shuffle",
]


@dataclass(frozen=True)
class PowerSeries:
    """Dense coefficients ``c_0 .. c_order`` of a series truncated at ``z^order``."""

    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable[object]):
        coefficients = tuple(Fraction(c) for c in coefficients)
        if not coefficients:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coefficients", coefficients)

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls([1] + [0] * order)

    @classmethod
    def monomial(cls, n: int, order: int, c: object = 1) -> "PowerSeries":
        coeffs = [Fraction(0)] * (order + 1)
        if n <= order:
            coeffs[n] = Fraction(c)
        return cls(coeffs)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coefficients[n]

    def truncate(self, order: int) -> "PowerSeries":
        return PowerSeries(self.coefficients[: order + 1])

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        order = min(self.order, other.order)
        return PowerSeries(x + y for x, y in zip(self.coefficients[: order + 1], other.coefficients))

    def scale(self, c: object) -> "PowerSeries":
        c = Fraction(c)
        return PowerSeries(c * x for x in self.coefficients)

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        return series_mul(self, other)

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coefficients]


def polylog_series(a: Iterable[int], order: int) -> PowerSeries:
    """``Li_a(z)`` up to ``z^order``.

    >>> polylog_series((3,), 2).coefficients
    (Fraction(0, 1), Fraction(1, 1), Fraction(1, 8))
    """
    a = as_composition(a)
    if not a:
        raise ValueError("polylogarithm needs a nonempty composition")
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    inner = values(a[1:], None, order)
    a1 = a[0]
    return PowerSeries([0] + [inner[n - 1] / n**a1 for n in range(1, order + 1)])


def series_mul(p: PowerSeries, q: PowerSeries) -> PowerSeries:
    """Cauchy product truncated to the smaller of the two orders."""
    order = min(p.order, q.order)
    pc, qc = p.coefficients, q.coefficients
    # skip zero coefficients: polylogs start at z^1
    nz = [(i, c) for i, c in enumerate(pc[: order + 1]) if c]
    out = [Fraction(0)] * (order + 1)
    for i, c in nz:
        for k in range(order + 1 - i):
            if qc[k]:
                out[i + k] += c * qc[k]
    return PowerSeries(out)


def divide_one_minus_z(p: PowerSeries) -> PowerSeries:
    """Multiply by ``1/(1 - z)``: running prefix sums of the coefficients."""
    out = []
    acc = Fraction(0)
    for c in p.coefficients:
        acc += c
        out.append(acc)
    return PowerSeries(out)


def r_via_series(N: int, a: Iterable[int], b: Iterable[int]) -> Fraction:
    """``[z^N] Li_a(z) Li_b(z) / (1 - z)``."""
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    prod = series_mul(polylog_series(a, N), polylog_series(b, N))
    return divide_one_minus_z(prod)[N]


class ShuffleCheck(NamedTuple):
    ok: bool
    first_mismatch: Optional[int]
    lhs: PowerSeries
    rhs: PowerSeries

    def __bool__(self) -> bool:
        return self.ok


def check_polylog_shuffle(a: Iterable[int], b: Iterable[int], order: int) -> ShuffleCheck:
    """Compare ``Li_a Li_b`` with ``sum c Li_w`` over the shuffle of ``a`` and ``b``."""
    a, b = as_composition(a), as_composition(b)
    if not a or not b:
        raise ValueError("both compositions must be nonempty")
    lhs = series_mul(polylog_series(a, order), polylog_series(b, order))
    rhs = PowerSeries.zero(order)
    for c, w in shuffle_compositions(a, b):
        rhs = rhs + polylog_series(w, order).scale(c)
    for n, (x, y) in enumerate(zip(lhs.coefficients, rhs.coefficients)):
        if x != y:
            return ShuffleCheck(False, n, lhs, rhs)
    return ShuffleCheck(True, None, lhs, rhs)
