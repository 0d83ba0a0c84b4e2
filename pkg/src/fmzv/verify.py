"""Grid sweeps that check the identities case by case.

A sweep is split into independent cases (one per composition pair or
exponent pair); each case returns its reports in grid order, so running the
cases in a process pool gives the same output as running them inline.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .identities import (
    ReciprocityReport,
    check_complementary,
    check_reciprocity,
    check_weighted_reciprocity,
    partial_fraction_terms,
    r_direct,
    r_recurrence,
    r_shuffle,
    r_weighted_direct,
    r_weighted_recurrence,
)
from .rational import Fraction, format_rational, parse_rational
from .series import check_polylog_shuffle, r_via_series
from .words import Composition, format_composition
from .zeta import WeightedComposition

__all__ = [
    "SELECTORS",
    "DEFAULT_POOL",
    "VerificationGrid",
    "Summary",
    "compositions",
    "composition_pairs",
    "cases",
    "run_case",
    "sweep",
]

SELECTORS = (
    "reciprocity",
    "complementary",
    "weighted",
    "weighted-recurrence",
    "shuffle-agreement",
    "polylog-shuffle",
    "partial-fraction",
)

DEFAULT_POOL = (Fraction(-1), Fraction(1), Fraction(2), Fraction(1, 2))


@dataclass(frozen=True)
class VerificationGrid:
    """Bounds of a sweep.

    ``max_N`` bounds N (the series order for ``polylog-shuffle``);
    ``max_weight`` bounds the total weight of a composition pair, or each
    exponent for ``partial-fraction``; ``max_depth`` bounds each side's depth.
    """

    selector: str
    max_N: int
    max_weight: int
    max_depth: int
    weight_pool: tuple[Fraction, ...] = DEFAULT_POOL

    def __post_init__(self):
        if self.selector not in SELECTORS:
            raise ValueError(f"unknown selector {self.selector!r}; choose from {', '.join(SELECTORS)}")
        if self.max_N < 1 or self.max_weight < 1 or self.max_depth < 1:
            raise ValueError("grid bounds must be positive")
        if not self.weight_pool or any(w == 0 for w in self.weight_pool):
            raise ValueError("weight pool must be nonempty and free of zeros")

    @classmethod
    def parse(cls, selector: str, spec: str) -> "VerificationGrid":
        """Parse ``N=10,weight=4[,depth=3][,pool=-1:1:2:1/2]``."""
        opts: dict[str, str] = {}
        for item in spec.split(","):
            key, sep, val = item.partition("=")
            if not sep or not val.strip():
                raise ValueError(f"bad grid item {item!r}; expected key=value")
            opts[key.strip()] = val.strip()
        unknown = set(opts) - {"N", "weight", "depth", "pool"}
        if unknown:
            raise ValueError(f"unknown grid keys: {', '.join(sorted(unknown))}")
        if "N" not in opts or "weight" not in opts:
            raise ValueError("grid needs at least N= and weight=")
        try:
            max_N, max_weight = int(opts["N"]), int(opts["weight"])
            max_depth = int(opts.get("depth", max_weight))
        except ValueError as exc:
            raise ValueError(f"grid bounds must be integers: {spec!r}") from exc
        pool = DEFAULT_POOL
        if "pool" in opts:
            pool = tuple(parse_rational(t) for t in opts["pool"].split(":"))
        return cls(selector, max_N, max_weight, max_depth, pool)

    def to_json(self) -> dict:
        return {
            "selector": self.selector,
            "N": self.max_N,
            "weight": self.max_weight,
            "depth": self.max_depth,
            "pool": [format_rational(w) for w in self.weight_pool],
        }


def compositions(w: int, max_depth: int | None = None) -> Iterator[Composition]:
    """Compositions of ``w`` in lexicographic order."""
    if w == 0:
        yield ()
        return
    if max_depth == 0:
        return
    for first in range(1, w + 1):
        for rest in compositions(w - first, None if max_depth is None else max_depth - 1):
            yield (first,) + rest


def composition_pairs(max_weight: int, max_depth: int) -> Iterator[tuple[Composition, Composition]]:
    """Nonempty pairs with total weight at most ``max_weight``, ordered by total weight."""
    for total in range(2, max_weight + 1):
        for wa in range(1, total):
            for a in compositions(wa, max_depth):
                for b in compositions(total - wa, max_depth):
                    yield a, b


def cases(grid: VerificationGrid) -> list[tuple]:
    if grid.selector == "partial-fraction":
        return [
            (grid.selector, grid.max_N, a, b)
            for a in range(1, grid.max_weight + 1)
            for b in range(1, grid.max_weight + 1)
        ]
    pairs = composition_pairs(grid.max_weight, grid.max_depth)
    if grid.selector in ("weighted", "weighted-recurrence"):
        out = []
        for a, b in pairs:
            for ws in itertools.product(grid.weight_pool, repeat=len(a) + len(b)):
                aw = WeightedComposition(a, ws[: len(a)])
                bw = WeightedComposition(b, ws[len(a):])
                out.append((grid.selector, grid.max_N, aw, bw))
        return out
    return [(grid.selector, grid.max_N, a, b) for a, b in pairs]


def run_case(case: tuple) -> list[ReciprocityReport]:
    selector, max_N, a, b = case
    if selector == "reciprocity":
        return [check_reciprocity(N, j, a, b) for N in range(1, max_N + 1) for j in range(1, N + 1)]
    if selector == "complementary":
        return [check_complementary(N, j, a, b) for N in range(1, max_N + 1) for j in range(1, N + 1)]
    if selector == "weighted":
        return [
            check_weighted_reciprocity(N, j, a, b)
            for N in range(1, max_N + 1)
            for j in range(1, N + 1)
        ]
    if selector == "weighted-recurrence":
        out = []
        for N in range(0, max_N + 1):
            ref = r_weighted_direct(N, a, b)
            got = r_weighted_recurrence(N, a, b)
            out.append(
                ReciprocityReport(
                    N, None, ref, got, ref - got, a.parts, b.parts, a.weights, b.weights,
                    extra={"check": "recurrence"},
                )
            )
        return out
    if selector == "shuffle-agreement":
        out = []
        for N in range(0, max_N + 1):
            ref = r_direct(N, a, b)
            for name, fn in (("recurrence", r_recurrence), ("shuffle", r_shuffle), ("series", r_via_series)):
                got = fn(N, a, b)
                out.append(ReciprocityReport(N, None, ref, got, ref - got, a, b, extra={"check": name}))
        return out
    if selector == "polylog-shuffle":
        res = check_polylog_shuffle(a, b, max_N)
        n = max_N if res.ok else res.first_mismatch
        lhs, rhs = res.lhs[n], res.rhs[n]
        return [
            ReciprocityReport(
                max_N, None, lhs, rhs, lhs - rhs, a, b, extra={"first_mismatch": res.first_mismatch}
            )
        ]
    if selector == "partial-fraction":
        terms = partial_fraction_terms(a, b)
        out = []
        for N in range(2, max_N + 1):
            for k in range(1, N):
                lhs, rhs = terms.kernel(N, k), terms.evaluate(N, k)
                out.append(ReciprocityReport(N, None, lhs, rhs, lhs - rhs, (a,), (b,), extra={"k": k}))
        return out
    raise ValueError(f"unknown selector {selector!r}")


@dataclass
class Summary:
    total: int = 0
    failed: int = 0

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {"total": self.total, "failed": self.failed, "ok": self.ok}


def sweep(grid: VerificationGrid, jobs: int = 1) -> Iterator[ReciprocityReport]:
    """Yield every report of the grid in deterministic grid order."""
    work = cases(grid)
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for reports in pool.map(run_case, work, chunksize=max(1, len(work) // (4 * jobs))):
                yield from reports
    else:
        for case in work:
            yield from run_case(case)


def describe(r: ReciprocityReport) -> str:
    """One human-readable line per report."""
    parts = [("ok  " if r.ok else "FAIL"), f"N={r.N}"]
    if r.j is not None:
        parts.append(f"j={r.j}")
    for key in ("check", "k", "first_mismatch"):
        if r.extra.get(key) is not None:
            parts.append(f"{key}={r.extra[key]}")
    parts.append(f"a={format_composition(r.a)}")
    parts.append(f"b={format_composition(r.b)}")
    if r.sigma is not None:
        parts.append("sigma=" + ",".join(format_rational(s) for s in r.sigma))
        parts.append("tau=" + ",".join(format_rational(t) for t in r.tau))
    parts.append(f"residual={format_rational(r.residual)}")
    if r.route_residual is not None:
        parts.append(f"route_residual={format_rational(r.route_residual)}")
    return " ".join(parts)
