"""Constructions and verification of (d, l)-covering sets.

A subcube is equivalently a labelling: the set of its fixed coordinates with
the bit each one is fixed to.  A Q_l covers a Q_d exactly when the labelled
(n-d)-set of the Q_d is a restriction of the labelled (n-l)-set of the Q_l,
so covering sets can be built as families of labelled (n-l)-sets.
"""

from __future__ import annotations

import itertools
import json
import logging
import math
import random
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .cube import Params, Subcube, count_subcubes, enumerate_subcubes, format_subcube, parse_subcube

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class LabelledSet:
    coords: frozenset[int]
    ones: frozenset[int] = frozenset()

    def __post_init__(self):
        if not self.ones <= self.coords:
            raise ValueError("labelled-1 coordinates must lie in the labelled set")

    @classmethod
    def from_labels(cls, labels: dict[int, int]) -> "LabelledSet":
        return cls(frozenset(labels), frozenset(c for c, b in labels.items() if b))

    @property
    def labels(self) -> dict[int, int]:
        return {c: int(c in self.ones) for c in sorted(self.coords)}

    def to_subcube(self, n: int) -> Subcube:
        fixed = sum(1 << c for c in self.coords)
        return Subcube(n, ((1 << n) - 1) & ~fixed, sum(1 << c for c in self.ones))

    @classmethod
    def from_subcube(cls, q: Subcube) -> "LabelledSet":
        return cls(q.one | q.zero, q.one)


@dataclass(frozen=True)
class CoveringSet:
    n: int
    d: int
    l: int
    members: tuple[Subcube, ...]

    def __post_init__(self):
        Params(self.n, self.d, self.l)
        object.__setattr__(self, "members", tuple(self.members))
        for q in self.members:
            if q.n != self.n or q.dim != self.l:
                raise ValueError(f"member {q} is not an {self.l}-subcube of Q_{self.n}")
        if len(set(self.members)) != len(self.members):
            raise ValueError("covering set contains duplicate members")

    @property
    def params(self) -> Params:
        return Params(self.n, self.d, self.l)

    def __len__(self) -> int:
        return len(self.members)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "l": self.l,
            "members": [format_subcube(q) for q in self.members],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CoveringSet":
        members = tuple(parse_subcube(s) for s in data["members"])
        return cls(int(data["n"]), int(data["d"]), int(data["l"]), members)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "CoveringSet":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class CoveringDesign:
    n: int
    k: int
    t: int
    blocks: tuple[tuple[int, ...], ...]

    def covers_all(self) -> bool:
        block_sets = [set(b) for b in self.blocks]
        return all(
            any(set(ts) <= b for b in block_sets)
            for ts in itertools.combinations(range(self.n), self.t)
        )


@dataclass(frozen=True)
class CoverageReport:
    ok: bool
    witness: Optional[Subcube]
    targets_checked: int

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "witness": None if self.witness is None else format_subcube(self.witness),
            "targets_checked": self.targets_checked,
        }


# A cut is a tuple of parts; each part is a tuple of vertices.
CutPartition = tuple[tuple[int, ...], ...]


def _dedup(items: Iterable) -> list:
    return list(dict.fromkeys(items))


def construct_facet_cover(n: int, l: int) -> CoveringSet:
    """Optimal (n-1, l)-covering set of size ceil(2n / (n - l)).

    Q_{n-1} is a facet: one coordinate fixed to one bit.  The 2n
    (coordinate, bit) pairs are listed as (0,0)..(n-1,0),(0,1)..(n-1,1) and
    cut cyclically into windows of n-l consecutive pairs.  A window never
    repeats a coordinate, so it is a labelled (n-l)-set, and every pair
    falls in some window.
    """
    if not 0 <= l <= n - 2:
        raise ValueError(f"facet cover needs 0 <= l <= n-2, got n={n}, l={l}")
    pairs = [(c, 0) for c in range(n)] + [(c, 1) for c in range(n)]
    m = n - l
    members = []
    for w in range(-(-2 * n // m)):
        window = [pairs[(w * m + j) % (2 * n)] for j in range(m)]
        members.append(LabelledSet.from_labels(dict(window)).to_subcube(n))
    return CoveringSet(n, n - 1, l, tuple(members))


def greedy_covering_design(n: int, k: int, t: int) -> CoveringDesign:
    """Greedy (n, k, t)-covering: add the k-set covering most uncovered t-sets.

    Ties go to the lexicographically first k-set.  ``k == n`` is accepted and
    yields the single full block.
    """
    if not 1 <= t < k <= n:
        raise ValueError(f"need 1 <= t < k <= n, got n={n}, k={k}, t={t}")
    tsets = {ts: i for i, ts in enumerate(itertools.combinations(range(n), t))}
    ksets = list(itertools.combinations(range(n), k))
    masks = []
    for ks in ksets:
        m = 0
        for ts in itertools.combinations(ks, t):
            m |= 1 << tsets[ts]
        masks.append(m)
    uncovered = (1 << len(tsets)) - 1
    blocks = []
    while uncovered:
        best, best_gain = -1, 0
        for i, m in enumerate(masks):
            gain = (m & uncovered).bit_count()
            if gain > best_gain:
                best, best_gain = i, gain
        blocks.append(ksets[best])
        uncovered &= ~masks[best]
    return CoveringDesign(n, k, t, tuple(blocks))


def cut_count(N: int, r: int) -> int:
    """Exact ceil(r ln N / ln(r^r / (r^r - r!))) for r >= 2.

    The base of the logarithm cancels; the ceiling is found with integer
    arithmetic: m works iff N^r (r^r - r!)^m <= (r^r)^m.
    """
    if r < 2:
        raise ValueError("cut count is defined for r >= 2")
    rr, rf = r ** r, math.factorial(r)
    m = max(0, int(r * math.log(N) / math.log(rr / (rr - rf))) - 2)
    while N ** r * (rr - rf) ** m > rr ** m:
        m += 1
    return m


def _transversal_mask(assign: Sequence[int], rsets: Sequence[tuple[int, ...]]) -> int:
    m = 0
    for i, rs in enumerate(rsets):
        if len({assign[v] for v in rs}) == len(rs):
            m |= 1 << i
    return m


def random_cut_cover(N: int, r: int, seed: int) -> list[CutPartition]:
    """Seeded random family of r-cuts of {0..N-1} covering every r-subset.

    Starts with one more than the cut count guaranteed by the probabilistic
    bound, each cut an independent uniform assignment of vertices to parts,
    then appends single random cuts until every r-subset is a transversal of
    some cut.  Empty parts are allowed.
    """
    if not 1 <= r <= N:
        raise ValueError(f"need 1 <= r <= N, got N={N}, r={r}")
    if r == 1:
        return [(tuple(range(N)),)]
    if r == N:
        return [tuple((v,) for v in range(N))]
    rng = random.Random(seed)
    rsets = list(itertools.combinations(range(N), r))
    full = (1 << len(rsets)) - 1

    def draw():
        return [rng.randrange(r) for _ in range(N)]

    assigns = [draw() for _ in range(cut_count(N, r) + 1)]
    covered = 0
    for a in assigns:
        covered |= _transversal_mask(a, rsets)
    while covered != full:
        a = draw()
        assigns.append(a)
        covered |= _transversal_mask(a, rsets)
    return [tuple(tuple(v for v in range(N) if a[v] == p) for p in range(r)) for a in assigns]


def expand_cuts_to_labellings(block: Iterable[int], cuts: Sequence[CutPartition]) -> list[LabelledSet]:
    """All labellings of ``block`` constant on the parts of some cut, deduplicated."""
    ground = frozenset(block)
    out = []
    for cut in cuts:
        flat = [v for part in cut for v in part]
        if len(flat) != len(set(flat)) or set(flat) != ground:
            raise ValueError(f"cut {cut} does not partition the block {sorted(ground)}")
        for bits in itertools.product((0, 1), repeat=len(cut)):
            ones = frozenset(v for part, b in zip(cut, bits) if b for v in part)
            out.append(LabelledSet(ground, ones))
    return _dedup(out)


def derive_seed(seed: int, index: int) -> int:
    return (seed ^ index) & 0xFFFFFFFFFFFFFFFF


def construct_pipeline_cover(n: int, d: int, l: int, seed: int = 0) -> CoveringSet:
    """Covering set from a covering design plus random cut covers.

    A greedy (n, n-l, n-d)-covering picks the labelled coordinate sets; on
    each block every labelled (n-d)-subset is reached through a cut of the
    block in which it is a transversal, labelling each part constantly.
    """
    Params(n, d, l)
    design = greedy_covering_design(n, n - l, n - d)
    log.debug("covering design (%d, %d, %d): %d blocks", n, n - l, n - d, len(design.blocks))
    members = []
    for i, block in enumerate(design.blocks):
        cuts = random_cut_cover(len(block), n - d, derive_seed(seed, i))
        absolute = [tuple(tuple(block[v] for v in part) for part in cut) for cut in cuts]
        for ls in expand_cuts_to_labellings(block, absolute):
            members.append(ls.to_subcube(n))
    return CoveringSet(n, d, l, tuple(_dedup(members)))


def verify_covering(cs: CoveringSet) -> CoverageReport:
    """Check that every Q_d contains some member; witness is the first miss."""
    members = [(q.one_mask, q.zero_mask) for q in cs.members]
    total = count_subcubes(cs.n, cs.d)
    for target in enumerate_subcubes(cs.n, cs.d):
        one, zero = target.one_mask, target.zero_mask
        if not any(one & ~mo == 0 and zero & ~mz == 0 for mo, mz in members):
            return CoverageReport(False, target, total)
    return CoverageReport(True, None, total)
