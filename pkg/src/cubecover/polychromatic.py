"""Residue coloring of the l-dimensional subcubes.

Each Q_l is colored by its gap signature reduced gap-wise: the first ``r``
gaps modulo ``k = ceil((d+1)/(l+1))`` and the rest modulo
``kprime = floor((d+1)/(l+1))``.  Every Q_d then contains a Q_l of every
color, so each color class is a (d, l)-covering set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .constructions import CoveringSet
from .cube import Subcube, enumerate_subcubes, signature, subcubes_within

ColorTuple = tuple[int, ...]


@dataclass(frozen=True)
class ColorScheme:
    d: int
    l: int
    r: int
    k: int
    kprime: int

    @property
    def moduli(self) -> tuple[int, ...]:
        return (self.k,) * self.r + (self.kprime,) * (self.l + 1 - self.r)

    def palette(self) -> Iterator[ColorTuple]:
        """Every color in lexicographic order."""
        return itertools.product(*(range(m) for m in self.moduli))


@dataclass(frozen=True)
class PolychromaticReport:
    ok: bool
    witness: Optional[tuple[Subcube, ColorTuple]] = None


def scheme(d: int, l: int) -> ColorScheme:
    if not 0 <= l < d:
        raise ValueError(f"need 0 <= l < d, got d={d}, l={l}")
    parts = l + 1
    r = (d + 1) % parts or parts
    k = -(-(d + 1) // parts)
    kprime = (d + 1) // parts
    assert r * k + (parts - r) * kprime == d + 1
    return ColorScheme(d, l, r, k, kprime)


def palette_size(s: ColorScheme) -> int:
    return s.k ** s.r * s.kprime ** (s.l + 1 - s.r)


def color_of(q: Subcube, s: ColorScheme) -> ColorTuple:
    if q.dim != s.l:
        raise ValueError(f"subcube has dimension {q.dim}, scheme expects {s.l}")
    return tuple(w % m for w, m in zip(signature(q), s.moduli))


def _check_color(t: ColorTuple, s: ColorScheme) -> None:
    if len(t) != s.l + 1 or any(not 0 <= c < m for c, m in zip(t, s.moduli)):
        raise ValueError(f"color {t} is not in the palette with moduli {s.moduli}")


def find_colored_subcube(c: Subcube, target: ColorTuple, s: ColorScheme) -> Subcube:
    """Return a Q_l inside ``c`` whose color is ``target``.

    The stars of the result sit at fixed positions among the stars of ``c``
    so that the gap before the i-th chosen star holds exactly ``modulus_i - 1``
    spare stars of ``c``.  Each gap then receives the number of extra ones
    that brings its one-count to the target residue, placed on the lowest
    spare coordinates.
    """
    if c.dim != s.d:
        raise ValueError(f"subcube has dimension {c.dim}, scheme expects {s.d}")
    _check_color(target, s)
    a = sorted(c.star)
    moduli = s.moduli
    # 1-based positions in ``a`` of the chosen stars, with sentinels 0 and d+1
    cuts = [0]
    for m in moduli:
        cuts.append(cuts[-1] + m)
    assert cuts[-1] == s.d + 1

    star = one = 0
    for j in range(s.l + 1):
        lo, hi = cuts[j], cuts[j + 1]
        spare = a[lo:hi - 1]
        if j < s.l:
            star |= 1 << a[hi - 1]
        left = a[lo - 1] if lo > 0 else -1
        right = a[hi - 1] if j < s.l else c.n
        present = sum(1 for x in c.one if left < x < right)
        need = (target[j] - present) % moduli[j]
        for x in spare[:need]:
            one |= 1 << x
    return Subcube(c.n, star, one | c.one_mask)


def verify_polychromatic(
    n: int, s: ColorScheme, coloring: Callable[[Subcube], ColorTuple]
) -> PolychromaticReport:
    """Check that every Q_d of Q_n sees every color of ``s``.

    The witness is the first (Q_d, color) pair that fails, Q_d in canonical
    order and colors in lexicographic order.
    """
    if n <= s.d:
        raise ValueError(f"need n > d, got n={n}, d={s.d}")
    palette = list(s.palette())
    for c in enumerate_subcubes(n, s.d):
        seen = {coloring(q) for q in subcubes_within(c, s.l)}
        for t in palette:
            if t not in seen:
                return PolychromaticReport(False, (c, t))
    return PolychromaticReport(True)


def color_class(n: int, s: ColorScheme, t: ColorTuple) -> CoveringSet:
    if n <= s.d:
        raise ValueError(f"need n > d, got n={n}, d={s.d}")
    _check_color(t, s)
    members = [q for q in enumerate_subcubes(n, s.l) if color_of(q, s) == t]
    return CoveringSet(n, s.d, s.l, tuple(members))


def parse_color(text: str) -> ColorTuple:
    return tuple(int(x) for x in text.split(","))


def format_color(t: ColorTuple) -> str:
    return ",".join(str(x) for x in t)
