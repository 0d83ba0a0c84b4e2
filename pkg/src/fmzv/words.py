"""Words over the two-letter alphabet {w0, w1} and the shuffle product.

A word is a plain ``str`` over the characters ``"0"`` (w0) and ``"1"`` (w1);
the empty string is the empty word.  A composition ``(a1, ..., ar)`` is
encoded block by block as ``w0^(a1-1) w1 ... w0^(ar-1) w1``::

    >>> composition_to_word((2, 1))
    '011'
    >>> word_to_composition('101')
    (1, 2)

Shuffle results are :class:`WordPolynomial` values, finite rational linear
combinations of words kept in canonical form (no zero coefficients).
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Mapping
from functools import lru_cache
from math import comb
from typing import Union

from .rational import Fraction, format_rational

__all__ = [
    "W0",
    "W1",
    "Word",
    "Composition",
    "WordPolynomial",
    "ENUMERATION_LIMIT",
    "ShuffleTooLarge",
    "as_composition",
    "check_word",
    "composition_to_word",
    "word_to_composition",
    "weight",
    "depth",
    "word_key",
    "composition_key",
    "shuffle_recursive",
    "shuffle_enumerate",
    "shuffle_polynomials",
    "shuffle_compositions",
    "lemma1_rhs",
    "depth1_shuffle",
    "parse_word",
    "parse_composition",
    "format_composition",
]

W0 = "0"
W1 = "1"

Word = str
Composition = tuple[int, ...]

# Interleavings beyond this count are refused by shuffle_enumerate.
ENUMERATION_LIMIT = 2**20


class ShuffleTooLarge(ValueError):
    """Raised when an enumerated shuffle would exceed ``ENUMERATION_LIMIT``."""


def check_word(w: str) -> Word:
    if any(c not in "01" for c in w):
        raise ValueError(f"word may only contain '0' and '1': {w!r}")
    return w


def as_composition(parts: Iterable[int]) -> Composition:
    parts = tuple(int(p) for p in parts)
    if any(p < 1 for p in parts):
        raise ValueError(f"composition parts must be >= 1: {parts}")
    return parts


def weight(a: Composition) -> int:
    return sum(a)


def depth(a: Composition) -> int:
    return len(a)


def word_key(w: Word) -> tuple[int, str]:
    """Sort key: by length, then lexicographically with w0 < w1."""
    return (len(w), w)


def composition_key(a: Composition) -> tuple[int, int, Composition]:
    return (sum(a), len(a), a)


def composition_to_word(a: Iterable[int]) -> Word:
    return "".join(W0 * (p - 1) + W1 for p in as_composition(a))


def word_to_composition(w: Word) -> Composition:
    """Inverse of :func:`composition_to_word`.

    Raises ``ValueError`` when ``w`` is nonempty and does not end in w1.
    """
    check_word(w)
    if w and not w.endswith(W1):
        raise ValueError(f"word {w!r} does not end in w1; no composition preimage")
    return tuple(len(block) + 1 for block in w.split(W1)[:-1])


class WordPolynomial(Mapping):
    """Finite map ``Word -> Fraction`` with zero coefficients removed.

    Behaves as a read-only mapping; arithmetic returns new instances.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, object] | Iterable[tuple[Word, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, Fraction] = {}
        for w, c in items:
            check_word(w)
            acc[w] = acc.get(w, 0) + Fraction(c)
        self._terms = {w: c for w, c in acc.items() if c}

    @classmethod
    def monomial(cls, w: Word, c: object = 1) -> "WordPolynomial":
        return cls({w: c})

    def __getitem__(self, w: Word) -> Fraction:
        return self._terms[w]

    def __iter__(self) -> Iterator[Word]:
        return iter(sorted(self._terms, key=word_key))

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, WordPolynomial):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "WordPolynomial") -> "WordPolynomial":
        return WordPolynomial(itertools.chain(self._terms.items(), other._terms.items()))

    def __sub__(self, other: "WordPolynomial") -> "WordPolynomial":
        return self + other.scale(-1)

    def __neg__(self) -> "WordPolynomial":
        return self.scale(-1)

    def scale(self, c: object) -> "WordPolynomial":
        c = Fraction(c)
        return WordPolynomial({w: c * q for w, q in self._terms.items()})

    def prefix(self, u: Word) -> "WordPolynomial":
        """Concatenate ``u`` in front of every monomial."""
        return WordPolynomial({u + w: q for w, q in self._terms.items()})

    def mass(self) -> Fraction:
        return sum(self._terms.values(), Fraction(0))

    def __repr__(self) -> str:
        return f"WordPolynomial({dict(self.items())!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{_coef_str(q)}*{w or 'eps'}" for w, q in self.items())


def _coef_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else format_rational(q)


@lru_cache(maxsize=None)
def _shuffle_terms(u: Word, v: Word) -> tuple[tuple[Word, int], ...]:
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    acc: dict[Word, int] = {}
    for w, c in _shuffle_terms(u[1:], v):
        acc[u[0] + w] = acc.get(u[0] + w, 0) + c
    for w, c in _shuffle_terms(u, v[1:]):
        acc[v[0] + w] = acc.get(v[0] + w, 0) + c
    return tuple(acc.items())


def shuffle_recursive(u: Word, v: Word) -> WordPolynomial:
    """Shuffle product by the recursion ``xw ⧢ yv = x(w ⧢ yv) + y(xw ⧢ v)``.

    >>> print(shuffle_recursive('01', '01'))
    4*0011 + 2*0101
    """
    return WordPolynomial(_shuffle_terms(check_word(u), check_word(v)))


def shuffle_enumerate(u: Word, v: Word) -> WordPolynomial:
    """Shuffle product as a sum over all order-preserving interleavings.

    Independent of :func:`shuffle_recursive`; meant as a test oracle.
    """
    check_word(u)
    check_word(v)
    n, m = len(u), len(v)
    count = comb(n + m, n)
    if count > ENUMERATION_LIMIT:
        raise ShuffleTooLarge(f"{count} interleavings exceed limit {ENUMERATION_LIMIT}")
    acc: dict[Word, int] = {}
    for positions in itertools.combinations(range(n + m), n):
        # positions: slots taken by the letters of u, in order
        taken = set(positions)
        out = []
        iu = iv = 0
        for slot in range(n + m):
            if slot in taken:
                out.append(u[iu])
                iu += 1
            else:
                out.append(v[iv])
                iv += 1
        w = "".join(out)
        acc[w] = acc.get(w, 0) + 1
    return WordPolynomial(acc)


PolyLike = Union[Word, WordPolynomial]


def _as_poly(p: PolyLike) -> WordPolynomial:
    return WordPolynomial.monomial(p) if isinstance(p, str) else p


def shuffle_polynomials(p: PolyLike, q: PolyLike) -> WordPolynomial:
    """Bilinear extension of the shuffle product to word polynomials."""
    p, q = _as_poly(p), _as_poly(q)
    acc: list[tuple[Word, Fraction]] = []
    for u, cu in p.items():
        for v, cv in q.items():
            acc.extend((w, cu * cv * c) for w, c in _shuffle_terms(u, v))
    return WordPolynomial(acc)


def shuffle_compositions(a: Iterable[int], b: Iterable[int]) -> list[tuple[Fraction, Composition]]:
    """Shuffle two compositions through their word encodings.

    Terms come back sorted by (weight, depth, parts).

    >>> shuffle_compositions((2,), (2,))
    [(Fraction(2, 1), (2, 2)), (Fraction(4, 1), (3, 1))]
    """
    poly = shuffle_recursive(composition_to_word(a), composition_to_word(b))
    terms = [(q, word_to_composition(w)) for w, q in poly.items()]
    return sorted(terms, key=lambda t: composition_key(t[1]))


def lemma1_rhs(a: Iterable[int], b: Iterable[int]) -> WordPolynomial:
    """First-block decomposition of ``word(a) ⧢ word(b)``.

    The leading block of every shuffled word closes on the first w1 of
    either factor.  If it closes on b's, it carries all ``b1 - 1`` zeros
    of b and ``i - 1`` zeros of a::

        sum_{i=1}^{a1} C(i+b1-2, b1-1) w0^(i+b1-2) w1 (A'_i ⧢ B_2)
      + sum_{i=1}^{b1} C(i+a1-2, a1-1) w0^(i+a1-2) w1 (A_2 ⧢ B'_i)

    with ``A'_i = w0^(a1-i) w1 word(a2..ar)`` and ``A_2 = word(a2..ar)``.
    """
    a, b = as_composition(a), as_composition(b)
    if not a or not b:
        raise ValueError("lemma1_rhs needs two nonempty compositions")
    a1, b1 = a[0], b[0]
    tail_a, tail_b = composition_to_word(a[1:]), composition_to_word(b[1:])
    out = WordPolynomial()
    for i in range(1, a1 + 1):
        a_i = W0 * (a1 - i) + W1 + tail_a
        head = W0 * (i + b1 - 2) + W1
        out += shuffle_recursive(a_i, tail_b).prefix(head).scale(comb(i + b1 - 2, b1 - 1))
    for i in range(1, b1 + 1):
        b_i = W0 * (b1 - i) + W1 + tail_b
        head = W0 * (i + a1 - 2) + W1
        out += shuffle_recursive(tail_a, b_i).prefix(head).scale(comb(i + a1 - 2, a1 - 1))
    return out


def depth1_shuffle(a: int, b: int) -> WordPolynomial:
    """Closed form of ``w0^(a-1) w1 ⧢ w0^(b-1) w1``."""
    if a < 1 or b < 1:
        raise ValueError(f"depth1_shuffle needs a, b >= 1, got ({a}, {b})")
    terms = [
        (W0 * (b - 1 + i) + W1 + W0 * (a - 1 - i) + W1, comb(b - 1 + i, b - 1))
        for i in range(a)
    ]
    terms += [
        (W0 * (a - 1 + i) + W1 + W0 * (b - 1 - i) + W1, comb(a - 1 + i, a - 1))
        for i in range(b)
    ]
    return WordPolynomial(terms)


def parse_word(text: str) -> Word:
    text = text.strip()
    if text in ("", "eps", "e"):
        return ""
    return check_word(text)


def parse_composition(text: str) -> Composition:
    """Parse ``"2,1"`` into ``(2, 1)``; ``""`` or ``"()"`` is the empty composition."""
    text = text.strip().strip("()").strip()
    if not text:
        return ()
    try:
        parts = tuple(int(t) for t in text.split(","))
    except ValueError as exc:
        raise ValueError(f"not a composition: {text!r}") from exc
    return as_composition(parts)


def format_composition(a: Composition) -> str:
    return "(" + ",".join(str(p) for p in a) + ")"
