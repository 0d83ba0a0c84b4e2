"""Finite multiple zeta values, plain and weighted, in exact arithmetic.

``zeta_finite(N, a)`` sums ``1/(n1^a1 ... nr^ar)`` over
``N >= n1 > n2 > ... > nr >= 1``.  Values are built from the innermost index
outwards as prefix tables, using ``zeta_n(a) = sum_{m<=n} zeta_{m-1}(a2..)/m^a1``,
and memoised per composition so that sweeps over N share the work.
The empty composition evaluates to 1 for every N.
"""

from __future__ import annotations

import threading
from collections.abc import Callable, Hashable, Iterable, Sequence
from dataclasses import dataclass
from typing import Optional

from .rational import Fraction
from .words import Composition, WordPolynomial, as_composition, word_to_composition

__all__ = [
    "WeightedComposition",
    "ZetaTable",
    "zeta_finite",
    "zeta_table",
    "zeta_weighted",
    "weighted_table",
    "z_eval",
    "values",
    "clear_caches",
]

Weights = Optional[tuple[Fraction, ...]]


@dataclass(frozen=True)
class WeightedComposition:
    """A composition with one nonzero rational weight per part."""

    parts: Composition
    weights: tuple[Fraction, ...]

    def __init__(self, parts: Iterable[int], weights: Iterable[object]):
        parts = as_composition(parts)
        weights = tuple(Fraction(w) for w in weights)
        if len(parts) != len(weights):
            raise ValueError(f"{len(parts)} parts but {len(weights)} weights")
        if any(w == 0 for w in weights):
            raise ValueError("weights must be nonzero")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def unweighted(cls, parts: Iterable[int]) -> "WeightedComposition":
        parts = tuple(parts)
        return cls(parts, (1,) * len(parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    @property
    def head(self) -> tuple[int, Fraction]:
        return self.parts[0], self.weights[0]

    @property
    def tail(self) -> "WeightedComposition":
        return WeightedComposition(self.parts[1:], self.weights[1:])

    def with_head(self, part: int, w: object) -> "WeightedComposition":
        return WeightedComposition((part,) + self.parts, (Fraction(w),) + self.weights)


class PrefixCache:
    """Memo of prefix tables ``key -> (v_0, v_1, ..., v_M)``.

    A lookup for ``n`` returns the stored table when it already reaches ``n``
    and rebuilds a longer one otherwise.  Racing builders store equal
    tables, so concurrent use can only duplicate work.
    """

    def __init__(self) -> None:
        self._tables: dict[Hashable, tuple] = {}
        self._lock = threading.Lock()

    def get(self, key: Hashable, n: int, build: Callable[[int], tuple]) -> tuple:
        table = self._tables.get(key)
        if table is not None and len(table) > n:
            return table
        table = build(n)
        with self._lock:
            old = self._tables.get(key)
            if old is None or len(old) < len(table):
                self._tables[key] = table
        return table

    def clear(self) -> None:
        with self._lock:
            self._tables.clear()


_cache = PrefixCache()


def values(parts: Composition, weights: Weights, n: int) -> tuple:
    """Table of ``zeta_m`` for ``m = 0..M`` with ``M >= n`` (possibly longer).

    ``weights=None`` means all weights are 1.  Internal fast path; the public
    wrappers validate and slice.
    """
    return _cache.get((parts, weights), n, lambda m: _build(parts, weights, m))


def _build(parts: Composition, weights: Weights, n: int) -> tuple:
    if not parts:
        return (Fraction(1),) * (n + 1)
    inner = values(parts[1:], weights[1:] if weights else None, n)
    a1 = parts[0]
    out = [Fraction(0)] * (n + 1)
    acc = Fraction(0)
    if weights is None:
        for m in range(1, n + 1):
            acc += inner[m - 1] / m**a1
            out[m] = acc
    else:
        s1 = weights[0]
        for m in range(1, n + 1):
            acc += inner[m - 1] / (m**a1 * s1**m)
            out[m] = acc
    return tuple(out)


@dataclass(frozen=True)
class ZetaTable:
    """``zeta_0 .. zeta_N`` of one (possibly weighted) composition."""

    composition: Composition
    values: tuple[Fraction, ...]
    weights: Weights = None

    @property
    def N(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


def _check_n(N: int) -> int:
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    return N


def zeta_finite(N: int, a: Iterable[int]) -> Fraction:
    """``zeta_N(a)``.

    >>> zeta_finite(3, (1,))
    Fraction(11, 6)
    >>> zeta_finite(4, (2, 1))
    Fraction(17, 32)
    """
    return values(as_composition(a), None, _check_n(N))[N]


def zeta_table(N: int, a: Iterable[int]) -> ZetaTable:
    a = as_composition(a)
    return ZetaTable(a, values(a, None, _check_n(N))[: N + 1])


def _weighted(aw: WeightedComposition | tuple) -> WeightedComposition:
    if isinstance(aw, WeightedComposition):
        return aw
    parts, weights = aw
    return WeightedComposition(parts, weights)


def zeta_weighted(N: int, aw: WeightedComposition | tuple[Sequence[int], Sequence[object]]) -> Fraction:
    """``sum 1/prod(n_i^a_i * s_i^n_i)`` over ``N >= n1 > ... > nr >= 1``."""
    aw = _weighted(aw)
    return values(aw.parts, aw.weights, _check_n(N))[N]


def weighted_table(N: int, aw: WeightedComposition | tuple) -> ZetaTable:
    aw = _weighted(aw)
    return ZetaTable(aw.parts, values(aw.parts, aw.weights, _check_n(N))[: N + 1], aw.weights)


def z_eval(N: int, p: WordPolynomial) -> Fraction:
    """Apply the linear map ``Z_N``: word of ``a`` -> ``zeta_N(a)``, empty word -> 1."""
    _check_n(N)
    total = Fraction(0)
    for w, q in p.items():
        total += q * values(word_to_composition(w), None, N)[N]
    return total


def clear_caches() -> None:
    _cache.clear()
