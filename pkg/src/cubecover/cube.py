"""Subcubes of the n-dimensional hypercube.

A subcube is stored as two bit masks over the coordinates ``0..n-1``: the
free (star) coordinates and the coordinates fixed to 1.  Everything else is
fixed to 0.  The text form is a string over ``{0, 1, *}`` whose leftmost
character is coordinate 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterator

MAX_N = 24


class ParseError(ValueError):
    """Raised for malformed subcube text."""


@dataclass(frozen=True)
class Params:
    n: int
    d: int
    l: int

    def __post_init__(self):
        if not 0 <= self.l < self.d < self.n:
            raise ValueError(f"need 0 <= l < d < n, got n={self.n}, d={self.d}, l={self.l}")
        if self.n > MAX_N:
            raise ValueError(f"n={self.n} exceeds the maximum dimension {MAX_N}")


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _mask(coords) -> int:
    m = 0
    for c in coords:
        m |= 1 << c
    return m


@dataclass(frozen=True, order=True)
class Subcube:
    n: int
    star_mask: int
    one_mask: int

    def __post_init__(self):
        full = (1 << self.n) - 1
        if self.n < 1 or self.n > MAX_N:
            raise ValueError(f"ambient dimension {self.n} out of range 1..{MAX_N}")
        if self.star_mask & self.one_mask:
            raise ValueError("star and one coordinates overlap")
        if (self.star_mask | self.one_mask) & ~full:
            raise ValueError("coordinate outside 0..n-1")

    @classmethod
    def from_sets(cls, n: int, star=(), one=()) -> "Subcube":
        return cls(n, _mask(star), _mask(one))

    @property
    def zero_mask(self) -> int:
        return ((1 << self.n) - 1) & ~(self.star_mask | self.one_mask)

    @property
    def star(self) -> frozenset[int]:
        return frozenset(_bits(self.star_mask))

    @property
    def one(self) -> frozenset[int]:
        return frozenset(_bits(self.one_mask))

    @property
    def zero(self) -> frozenset[int]:
        return frozenset(_bits(self.zero_mask))

    @property
    def dim(self) -> int:
        return self.star_mask.bit_count()

    def vertices(self) -> Iterator[int]:
        """Yield every vertex of the subcube as an n-bit integer (bit i = coordinate i)."""
        stars = _bits(self.star_mask)
        for bits in itertools.product((0, 1), repeat=len(stars)):
            v = self.one_mask
            for c, b in zip(stars, bits):
                if b:
                    v |= 1 << c
            yield v

    def __str__(self) -> str:
        return format_subcube(self)


def parse_subcube(text: str) -> Subcube:
    if not text:
        raise ParseError("empty subcube string")
    star = one = 0
    for i, ch in enumerate(text):
        if ch == "*":
            star |= 1 << i
        elif ch == "1":
            one |= 1 << i
        elif ch != "0":
            raise ParseError(f"invalid character {ch!r} at index {i}")
    if len(text) > MAX_N:
        raise ParseError(f"length {len(text)} exceeds the maximum dimension {MAX_N}")
    return Subcube(len(text), star, one)


def format_subcube(q: Subcube) -> str:
    chars = []
    for i in range(q.n):
        bit = 1 << i
        chars.append("*" if q.star_mask & bit else "1" if q.one_mask & bit else "0")
    return "".join(chars)


def covers(lower: Subcube, upper: Subcube) -> bool:
    """True iff ``lower`` is contained in ``upper``."""
    if lower.n != upper.n:
        raise ValueError(f"ambient dimensions differ: {lower.n} != {upper.n}")
    return (
        upper.one_mask & ~lower.one_mask == 0
        and upper.zero_mask & ~lower.zero_mask == 0
    )


def count_subcubes(n: int, i: int) -> int:
    return comb(n, i) * 2 ** (n - i)


def enumerate_subcubes(n: int, i: int) -> Iterator[Subcube]:
    """All i-dimensional subcubes of Q_n in canonical order.

    Star sets come in lexicographic order; within one star set the fixed
    coordinates run through their bit patterns in ascending order, with the
    lowest fixed coordinate as the most significant bit.
    """
    if not 0 <= i <= n:
        raise ValueError(f"subcube dimension {i} out of range 0..{n}")
    if n > MAX_N:
        raise ValueError(f"n={n} exceeds the maximum dimension {MAX_N}")
    for stars in itertools.combinations(range(n), i):
        smask = _mask(stars)
        fixed = [c for c in range(n) if not smask >> c & 1]
        for bits in itertools.product((0, 1), repeat=len(fixed)):
            yield Subcube(n, smask, _mask(c for c, b in zip(fixed, bits) if b))


def subcubes_within(c: Subcube, i: int) -> Iterator[Subcube]:
    """All i-dimensional subcubes contained in ``c``."""
    stars = sorted(c.star)
    if not 0 <= i <= len(stars):
        raise ValueError(f"subcube dimension {i} out of range 0..{len(stars)}")
    for keep in itertools.combinations(stars, i):
        rest = [s for s in stars if s not in keep]
        for bits in itertools.product((0, 1), repeat=len(rest)):
            ones = c.one_mask | _mask(s for s, b in zip(rest, bits) if b)
            yield Subcube(c.n, _mask(keep), ones)


def signature(q: Subcube) -> tuple[int, ...]:
    """Count the one-coordinates of ``q`` in each gap around its sorted stars.

    Entry 0 counts ones below the first star, entry j ones strictly between
    stars j-1 and j, and the last entry ones above the last star.
    """
    w = [0] * (q.dim + 1)
    gap = 0
    for i in range(q.n):
        bit = 1 << i
        if q.star_mask & bit:
            gap += 1
        elif q.one_mask & bit:
            w[gap] += 1
    return tuple(w)
