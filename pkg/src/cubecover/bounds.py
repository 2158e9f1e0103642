"""Closed-form bounds on covering sizes and polychromatic numbers.

All values are exact integers or ``Fraction``s.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

from .constructions import cut_count
from .cube import Params, count_subcubes
from .polychromatic import palette_size, scheme

# rational enclosure of e
E_LOW = Fraction(2718281828, 10 ** 9)
E_HIGH = Fraction(2718281829, 10 ** 9)


def lower_bound_f(p: Params) -> int:
    """Number of Q_d's divided by how many Q_d's one Q_l lies in, rounded up."""
    n, d, l = p.n, p.d, p.l
    return -(-(2 ** (n - d) * comb(n, d)) // comb(n - l, n - d))


def c_value(p: Params, f: int) -> Fraction:
    """Covering size as a fraction of all Q_l's."""
    return Fraction(f, count_subcubes(p.n, p.l))


def bounds_pc(d: int, l: int) -> tuple[int, int]:
    return palette_size(scheme(d, l)), comb(d + 1, l + 1)


def pc_outer_bound(d: int, l: int) -> tuple[Fraction, Fraction]:
    """Rational interval containing e^(l+1) ((d+1)/(l+1))^(l+1)."""
    base = Fraction(d + 1, l + 1) ** (l + 1)
    return E_LOW ** (l + 1) * base, E_HIGH ** (l + 1) * base


def bounds_c(d: int, l: int) -> tuple[Fraction, Fraction]:
    """Envelope for the limiting covering ratio; here r = (d - l) mod (l + 1) in [0, l]."""
    if not 0 <= l < d:
        raise ValueError(f"need 0 <= l < d, got d={d}, l={l}")
    r = (d - l) % (l + 1)
    k = -(-(d + 1) // (l + 1))
    kprime = (d + 1) // (l + 1)
    lower = Fraction(1, 2 ** (d - l) * comb(d, l))
    upper = Fraction(1, k ** r * kprime ** (l + 1 - r))
    return lower, upper


def c_codim_upper(n: int, d: int, l: int) -> Fraction:
    """Leading term of the fixed-codimension upper bound, without its (1 + o(1)) factor."""
    r = n - d
    if r < 2:
        raise ValueError(f"codimension n-d must be at least 2, got {r}")
    Params(n, d, l)
    return Fraction(cut_count(n - l, r), 2 ** (d - l) * comb(d, l))


def edge_count(n: int) -> int:
    return n * 2 ** (n - 1)


def turan_relation(n: int, d: int, f1: int) -> int:
    """ex(Q_n, Q_d) from the exact edge-covering number f1 = f^(1)(n, d)."""
    e = edge_count(n)
    if not 0 <= f1 <= e:
        raise ValueError(f"f1={f1} outside 0..e(Q_{n})={e}")
    return e - f1


def verify_binomial_identity(n: int, d: int, l: int) -> bool:
    return comb(n, d) * comb(d, d - l) == comb(n, l) * comb(n - l, d - l)


def _decimal(x: Fraction, floor: bool, places: int = 6) -> str:
    """Round outward to ``places`` decimals so the printed interval still encloses."""
    scale = 10 ** places
    q = math.floor(x * scale) if floor else math.ceil(x * scale)
    sign = "-" if q < 0 else ""
    whole, frac = divmod(abs(q), scale)
    return f"{sign}{whole}.{frac:0{places}d}"


@dataclass(frozen=True)
class BoundReport:
    params: Params
    f_lower: int
    c_lower: Fraction
    c_upper: Fraction
    pc_lower: int
    pc_upper: int
    pc_outer: tuple[Fraction, Fraction]
    c_codim_upper: Optional[Fraction]
    ex_upper: Optional[int]
    f_exact: Optional[int] = None

    def to_dict(self) -> dict:
        p = self.params
        out = {
            "n": p.n,
            "d": p.d,
            "l": p.l,
            "f_lower": self.f_lower,
            "c_at_f_lower": str(c_value(p, self.f_lower)),
            "c_lower": str(self.c_lower),
            "c_upper": str(self.c_upper),
            "c_bounds_note": "bounds on the n -> infinity limit; r = (d-l) mod (l+1) in [0, l]",
            "pc_lower": self.pc_lower,
            "pc_upper": self.pc_upper,
            "pc_outer": [_decimal(self.pc_outer[0], floor=True), _decimal(self.pc_outer[1], floor=False)],
            "pc_bounds_note": "bounds on the n -> infinity limit; r = (d+1) mod (l+1) in (0, l+1]",
            "c_codim_upper": None if self.c_codim_upper is None else str(self.c_codim_upper),
            "c_codim_note": "asymptotic envelope, not finite-n certified",
            "ex_upper": self.ex_upper,
        }
        if self.f_exact is not None:
            out["f_exact"] = self.f_exact
            out["c_exact"] = str(c_value(p, self.f_exact))
        return out


def bound_report(p: Params, f_exact: Optional[int] = None) -> BoundReport:
    f_lower = lower_bound_f(p)
    c_lo, c_hi = bounds_c(p.d, p.l)
    pc_lo, pc_hi = bounds_pc(p.d, p.l)
    codim = c_codim_upper(p.n, p.d, p.l) if p.n - p.d >= 2 else None
    ex_upper = None
    if p.l == 1:
        ex_upper = turan_relation(p.n, p.d, f_exact if f_exact is not None else f_lower)
    return BoundReport(
        p, f_lower, c_lo, c_hi, pc_lo, pc_hi, pc_outer_bound(p.d, p.l), codim, ex_upper, f_exact
    )
