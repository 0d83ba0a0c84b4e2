"""Reciprocity relations for finite multiple zeta values.

The central quantity is the cross sum

    R_N(a; b) = sum_{k=1}^{N} zeta_{N-k}(b) zeta_{k-1}(a2, ..., ar) / k^a1

which equals ``Z_N(word(a) ⧢ word(b))``.  It is computed here by direct
summation, by the block-stripping recurrence that comes from the partial
fraction kernel, and through the shuffle product; :mod:`fmzv.series` adds
a fourth route.  The ``check_*`` functions evaluate both sides of each
reciprocity identity exactly and report the residual.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Optional

from .rational import Fraction, format_rational
from .words import (
    Composition,
    as_composition,
    composition_key,
    composition_to_word,
    format_composition,
    shuffle_recursive,
)
from .zeta import PrefixCache, WeightedComposition, values, z_eval

__all__ = [
    "ReciprocityReport",
    "PartialFractionTerms",
    "ORIENTATIONS",
    "partial_fraction_terms",
    "r_direct",
    "r_recurrence",
    "r_shuffle",
    "euler_depth2",
    "reciprocity_lhs",
    "check_reciprocity",
    "complementary_lhs",
    "check_complementary",
    "asymptotic_gap",
    "r_weighted_direct",
    "r_weighted_recurrence",
    "check_weighted_reciprocity",
]


@dataclass(frozen=True)
class ReciprocityReport:
    """Both sides of one identity instance at ``(N, j)``.

    ``route_residual`` is only set by :func:`check_complementary`, which
    also confirms how its identity follows from the main one.
    """

    N: int
    j: Optional[int]
    lhs: Fraction
    rhs: Fraction
    residual: Fraction
    a: Composition = ()
    b: Composition = ()
    sigma: Optional[tuple[Fraction, ...]] = None
    tau: Optional[tuple[Fraction, ...]] = None
    route_residual: Optional[Fraction] = None
    extra: dict = field(default_factory=dict, compare=False)

    @property
    def ok(self) -> bool:
        return self.residual == 0 and not self.route_residual

    def to_json(self) -> dict:
        out = {
            "N": self.N,
            "j": self.j,
            "lhs": format_rational(self.lhs),
            "rhs": format_rational(self.rhs),
            "residual": format_rational(self.residual),
            "ok": self.ok,
            "a": format_composition(self.a),
            "b": format_composition(self.b),
        }
        if self.sigma is not None:
            out["sigma"] = [format_rational(s) for s in self.sigma]
            out["tau"] = [format_rational(t) for t in self.tau]
        if self.route_residual is not None:
            out["route_residual"] = format_rational(self.route_residual)
        out.update(self.extra)
        return out


# -- partial fractions ---------------------------------------------------


@dataclass(frozen=True)
class PartialFractionTerms:
    """``1/(k^a (N-k)^b)`` split into pure powers of ``k`` and ``N-k``.

    ``k_side`` holds ``(c, n_exp, k_exp)`` for ``c / (N^n_exp k^k_exp)``;
    ``nk_side`` holds ``(c, n_exp, nk_exp)`` for ``c / (N^n_exp (N-k)^nk_exp)``.
    """

    a: int
    b: int
    k_side: tuple[tuple[Fraction, int, int], ...]
    nk_side: tuple[tuple[Fraction, int, int], ...]

    def evaluate(self, N: int, k: int) -> Fraction:
        total = Fraction(0)
        for c, ne, ke in self.k_side:
            total += c / (Fraction(N) ** ne * Fraction(k) ** ke)
        for c, ne, me in self.nk_side:
            total += c / (Fraction(N) ** ne * Fraction(N - k) ** me)
        return total

    def kernel(self, N: int, k: int) -> Fraction:
        return Fraction(1, k**self.a * (N - k) ** self.b)


def partial_fraction_terms(a: int, b: int) -> PartialFractionTerms:
    if a < 1 or b < 1:
        raise ValueError(f"exponents must be >= 1, got ({a}, {b})")
    k_side = tuple(
        (Fraction(comb(i + b - 2, b - 1)), i + b - 1, a + 1 - i) for i in range(1, a + 1)
    )
    nk_side = tuple(
        (Fraction(comb(i + a - 2, a - 1)), i + a - 1, b + 1 - i) for i in range(1, b + 1)
    )
    return PartialFractionTerms(a, b, k_side, nk_side)


# -- R_N -----------------------------------------------------------------


def r_direct(N: int, a: Iterable[int], b: Iterable[int]) -> Fraction:
    """``R_N(a; b)`` by its defining double sum (``a`` must be nonempty)."""
    a, b = as_composition(a), as_composition(b)
    if not a:
        raise ValueError("r_direct needs a nonempty first composition")
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    zb = values(b, None, N)
    za2 = values(a[1:], None, N)
    a1 = a[0]
    total = Fraction(0)
    for k in range(1, N + 1):
        total += zb[N - k] * za2[k - 1] / k**a1
    return total


_r_cache = PrefixCache()


def _r_table(a: Composition, b: Composition, n: int) -> tuple:
    return _r_cache.get((a, b), n, lambda m: _r_build(a, b, m))


def _r_build(a: Composition, b: Composition, n: int) -> tuple:
    if not a:
        return values(b, None, n)
    if not b:
        return values(a, None, n)
    a1, b1 = a[0], b[0]
    # (coefficient, power of n1, sub-table) for each term of the recurrence
    pieces = []
    for i in range(1, a1 + 1):
        sub = _r_table((a1 + 1 - i,) + a[1:], b[1:], n)
        pieces.append((comb(i + b1 - 2, b1 - 1), i + b1 - 1, sub))
    for i in range(1, b1 + 1):
        sub = _r_table(a[1:], (b1 + 1 - i,) + b[1:], n)
        pieces.append((comb(i + a1 - 2, a1 - 1), i + a1 - 1, sub))
    out = [Fraction(0)] * (n + 1)
    acc = Fraction(0)
    for m in range(1, n + 1):
        for c, e, sub in pieces:
            acc += c * sub[m - 1] / m**e
        out[m] = acc
    return tuple(out)


def r_recurrence(N: int, a: Iterable[int], b: Iterable[int]) -> Fraction:
    """``R_N(a; b)`` from the partial-fraction recurrence, memoised.

    Stripping the first block of either side bottoms out at
    ``R_N(a; ()) = zeta_N(a)``, ``R_N((); b) = zeta_N(b)`` and
    ``R_N((); ()) = 1``.
    """
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    return _r_table(as_composition(a), as_composition(b), N)[N]


def r_shuffle(N: int, a: Iterable[int], b: Iterable[int]) -> Fraction:
    """``Z_N(word(a) ⧢ word(b))``."""
    return z_eval(N, shuffle_recursive(composition_to_word(a), composition_to_word(b)))


def euler_depth2(a: int, b: int) -> list[tuple[Fraction, Composition]]:
    """Depth-two terms of ``zeta_N(a) zeta_N(b)``'s cross sum.

    >>> euler_depth2(2, 2)
    [(Fraction(2, 1), (2, 2)), (Fraction(4, 1), (3, 1))]
    """
    if a < 1 or b < 1:
        raise ValueError(f"a, b must be >= 1, got ({a}, {b})")
    acc: dict[Composition, Fraction] = {}
    for i in range(1, a + 1):
        c = (i + b - 1, a + 1 - i)
        acc[c] = acc.get(c, 0) + comb(i + b - 2, b - 1)
    for i in range(1, b + 1):
        c = (i + a - 1, b + 1 - i)
        acc[c] = acc.get(c, 0) + comb(i + a - 2, a - 1)
    return sorted(((Fraction(q), c) for c, q in acc.items()), key=lambda t: composition_key(t[1]))


# -- reciprocity checks --------------------------------------------------


def _check_window(N: int, j: int, a: Composition, b: Composition) -> None:
    if not a or not b:
        raise ValueError("both compositions must be nonempty")
    if not 1 <= j <= N:
        raise ValueError(f"need 1 <= j <= N, got N={N}, j={j}")


def _prefix_sums(terms) -> tuple:
    out = [Fraction(0)]
    for t in terms:
        out.append(out[-1] + t)
    return tuple(out)


@lru_cache(maxsize=4096)
def _split_sums(N: int, a: Composition, b: Composition) -> tuple[tuple, tuple]:
    """Prefix sums over k of the two summands, so any split j costs O(1)."""
    za, zb = values(a, None, N), values(b, None, N)
    za2, zb2 = values(a[1:], None, N), values(b[1:], None, N)
    a1, b1 = a[0], b[0]
    first = _prefix_sums(zb2[k - 1] * za[N - k] / k**b1 for k in range(1, N + 1))
    second = _prefix_sums(za2[k - 1] * zb[N - k] / k**a1 for k in range(1, N + 1))
    return first, second


def reciprocity_lhs(N: int, j: int, a: Iterable[int], b: Iterable[int]) -> Fraction:
    """The two partial cross sums split at ``j``.

    ``sum_{k<=j} zeta_{k-1}(b2) zeta_{N-k}(a) / k^b1
    + sum_{k<=N+1-j} zeta_{k-1}(a2) zeta_{N-k}(b) / k^a1``
    """
    a, b = as_composition(a), as_composition(b)
    _check_window(N, j, a, b)
    first, second = _split_sums(N, a, b)
    return first[j] + second[N + 1 - j]


def check_reciprocity(N: int, j: int, a: Iterable[int], b: Iterable[int]) -> ReciprocityReport:
    a, b = as_composition(a), as_composition(b)
    lhs = reciprocity_lhs(N, j, a, b)
    za, zb = values(a, None, N), values(b, None, N)
    za2, zb2 = values(a[1:], None, N), values(b[1:], None, N)
    boundary = zb2[j - 1] * za2[N - j] / (j ** b[0] * (N + 1 - j) ** a[0])
    rhs = za[N + 1 - j] * zb[j] - boundary + r_shuffle(N, a, b)
    return ReciprocityReport(N, j, lhs, rhs, lhs - rhs, a, b)


def complementary_lhs(N: int, j: int, a: Iterable[int], b: Iterable[int]) -> Fraction:
    a, b = as_composition(a), as_composition(b)
    _check_window(N, j, a, b)
    za, zb = values(a, None, N), values(b, None, N)
    za2, zb2 = values(a[1:], None, N), values(b[1:], None, N)
    a1, b1 = a[0], b[0]
    lhs = Fraction(0)
    for k in range(1, j):
        lhs += zb[k] * za2[N - k - 1] / (N - k) ** a1
    for k in range(1, N - j + 1):
        lhs += za[k] * zb2[N - k - 1] / (N - k) ** b1
    return lhs


def check_complementary(N: int, j: int, a: Iterable[int], b: Iterable[int]) -> ReciprocityReport:
    """Complementary identity, plus the sum-of-both-sides derivation.

    ``route_residual`` checks that the complementary and main left-hand
    sides add up to ``2 R_N`` plus the two terms at the overlapping index.
    """
    a, b = as_composition(a), as_composition(b)
    lhs = complementary_lhs(N, j, a, b)
    za, zb = values(a, None, N), values(b, None, N)
    za2, zb2 = values(a[1:], None, N), values(b[1:], None, N)
    a1, b1 = a[0], b[0]
    r = r_shuffle(N, a, b)
    overlap_a = zb[j - 1] * za2[N - j] / (N + 1 - j) ** a1
    overlap_b = za[N - j] * zb2[j - 1] / j**b1
    boundary = zb2[j - 1] * za2[N - j] / (j**b1 * (N + 1 - j) ** a1)
    rhs = overlap_a + overlap_b - za[N + 1 - j] * zb[j] + boundary + r
    route = lhs + reciprocity_lhs(N, j, a, b) - (2 * r + overlap_a + overlap_b)
    return ReciprocityReport(N, j, lhs, rhs, lhs - rhs, a, b, route_residual=route)


def asymptotic_gap(n: int, a: Iterable[int], b: Iterable[int], M: int) -> Fraction:
    """``|LHS(N=2n+1, j=n+1) - 2 zeta_M(a) zeta_M(b)|``.

    ``zeta_M`` stands in for the infinite value, so the gap shrinks with
    ``n`` only while ``2n+1`` stays well below ``M``.
    """
    a, b = as_composition(a), as_composition(b)
    if not a or not b or a[0] < 2 or b[0] < 2:
        raise ValueError("need nonempty a, b with a1 >= 2 and b1 >= 2 (otherwise divergent)")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if M < 2 * n + 1:
        raise ValueError(f"need M >= 2n+1 = {2 * n + 1}, got M={M}")
    lhs = reciprocity_lhs(2 * n + 1, n + 1, a, b)
    limit = 2 * values(a, None, M)[M] * values(b, None, M)[M]
    return abs(lhs - limit)


# -- weighted ------------------------------------------------------------

# Weight attached to the demoted first index when the recurrence strips a
# block.  "derived" follows from sigma1^k tau1^(N-k) = tau1^N (sigma1/tau1)^k;
# "printed" swaps the two ratios.
ORIENTATIONS = ("derived", "printed")


def _wc(x) -> WeightedComposition:
    if isinstance(x, WeightedComposition):
        return x
    parts, weights = x
    return WeightedComposition(parts, weights)


def _wvalues(x: WeightedComposition, n: int) -> tuple:
    return values(x.parts, x.weights, n)


def r_weighted_direct(N: int, aw, bw) -> Fraction:
    aw, bw = _wc(aw), _wc(bw)
    if not aw:
        raise ValueError("r_weighted_direct needs a nonempty first composition")
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    zb = _wvalues(bw, N)
    za2 = _wvalues(aw.tail, N)
    a1, s1 = aw.head
    total = Fraction(0)
    for k in range(1, N + 1):
        total += zb[N - k] * za2[k - 1] / (k**a1 * s1**k)
    return total


_rw_cache = PrefixCache()


def _rw_table(aw: WeightedComposition, bw: WeightedComposition, n: int, orientation: str) -> tuple:
    return _rw_cache.get((aw, bw, orientation), n, lambda m: _rw_build(aw, bw, m, orientation))


def _rw_build(aw: WeightedComposition, bw: WeightedComposition, n: int, orientation: str) -> tuple:
    if not aw:
        return _wvalues(bw, n)
    if not bw:
        return _wvalues(aw, n)
    (a1, s1), (b1, t1) = aw.head, bw.head
    rho_a, rho_b = (s1 / t1, t1 / s1) if orientation == "derived" else (t1 / s1, s1 / t1)
    pieces = []
    for i in range(1, a1 + 1):
        sub = _rw_table(aw.tail.with_head(a1 + 1 - i, rho_a), bw.tail, n, orientation)
        pieces.append((comb(i + b1 - 2, b1 - 1), i + b1 - 1, t1, sub))
    for i in range(1, b1 + 1):
        sub = _rw_table(aw.tail, bw.tail.with_head(b1 + 1 - i, rho_b), n, orientation)
        pieces.append((comb(i + a1 - 2, a1 - 1), i + a1 - 1, s1, sub))
    out = [Fraction(0)] * (n + 1)
    acc = Fraction(0)
    for m in range(1, n + 1):
        for c, e, w, sub in pieces:
            acc += c * sub[m - 1] / (m**e * w**m)
        out[m] = acc
    return tuple(out)


def r_weighted_recurrence(N: int, aw, bw, orientation: str = "derived") -> Fraction:
    """Weighted ``R_N`` from the block-stripping recurrence.

    Outer factors are ``1/(n1^(i+b1-1) tau1^n1)`` and
    ``1/(n1^(i+a1-1) sigma1^n1)``.  With ``orientation="derived"`` the
    demoted a-side index carries weight ``sigma1/tau1`` and the b-side one
    ``tau1/sigma1``; ``"printed"`` uses the reciprocals and disagrees with
    the direct sum whenever ``sigma1 != tau1``.
    """
    if orientation not in ORIENTATIONS:
        raise ValueError(f"orientation must be one of {ORIENTATIONS}")
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    return _rw_table(_wc(aw), _wc(bw), N, orientation)[N]


@lru_cache(maxsize=4096)
def _weighted_split_sums(N: int, aw: WeightedComposition, bw: WeightedComposition) -> tuple:
    za, zb = _wvalues(aw, N), _wvalues(bw, N)
    za2, zb2 = _wvalues(aw.tail, N), _wvalues(bw.tail, N)
    (a1, s1), (b1, t1) = aw.head, bw.head
    first = _prefix_sums(zb2[k - 1] * za[N - k] / (k**b1 * t1**k) for k in range(1, N + 1))
    second = _prefix_sums(za2[k - 1] * zb[N - k] / (k**a1 * s1**k) for k in range(1, N + 1))
    return first, second, r_weighted_direct(N, aw, bw)


def check_weighted_reciprocity(N: int, j: int, aw, bw) -> ReciprocityReport:
    aw, bw = _wc(aw), _wc(bw)
    _check_window(N, j, aw.parts, bw.parts)
    first, second, r = _weighted_split_sums(N, aw, bw)
    lhs = first[j] + second[N + 1 - j]
    za, zb = _wvalues(aw, N), _wvalues(bw, N)
    za2, zb2 = _wvalues(aw.tail, N), _wvalues(bw.tail, N)
    (a1, s1), (b1, t1) = aw.head, bw.head
    m = N + 1 - j
    boundary = zb2[j - 1] * za2[N - j] / (t1**j * j**b1 * s1**m * m**a1)
    rhs = za[m] * zb[j] - boundary + r
    return ReciprocityReport(
        N, j, lhs, rhs, lhs - rhs, aw.parts, bw.parts, sigma=aw.weights, tau=bw.weights
    )


def clear_caches() -> None:
    _split_sums.cache_clear()
    _weighted_split_sums.cache_clear()
    _r_cache.clear()
    _rw_cache.clear()
