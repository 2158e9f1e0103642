"""Exact minimum (d, l)-covering sets by branch and bound.

Candidates are the Q_l's and targets the Q_d's of Q_n, both in canonical
order.  Coverage of a candidate is kept as an integer bit mask over target
indices.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from math import comb
from typing import Optional

from .constructions import CoveringSet
from .cube import Params, Subcube, count_subcubes, enumerate_subcubes

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10 ** 8
MAX_INCIDENCE = 5 * 10 ** 7


class ResourceError(RuntimeError):
    """An instance or enumeration is too large for the configured limits."""


@dataclass(frozen=True)
class IncidenceInstance:
    params: Params
    candidates: tuple[Subcube, ...]
    targets: tuple[Subcube, ...]
    cover_masks: tuple[int, ...]

    @property
    def incidence(self) -> list[frozenset[int]]:
        return [frozenset(j for j in range(len(self.targets)) if m >> j & 1) for m in self.cover_masks]

    @property
    def degree(self) -> int:
        p = self.params
        return comb(p.n - p.l, p.d - p.l)

    def to_covering_set(self, chosen) -> CoveringSet:
        p = self.params
        return CoveringSet(p.n, p.d, p.l, tuple(self.candidates[i] for i in sorted(chosen)))


@dataclass(frozen=True)
class SolveResult:
    size: int
    cover: CoveringSet
    nodes_explored: int
    proved_optimal: bool
    lower_bound: int

    def to_dict(self) -> dict:
        out = self.cover.to_dict()
        out.pop("members")
        out.update(
            f=self.size,
            cover=self.cover.to_dict()["members"],
            proved_optimal=self.proved_optimal,
            nodes_explored=self.nodes_explored,
            lower_bound=self.lower_bound,
        )
        return out


def build_incidence(p: Params, max_entries: int = MAX_INCIDENCE) -> IncidenceInstance:
    n_cand = count_subcubes(p.n, p.l)
    n_targ = count_subcubes(p.n, p.d)
    if n_cand * n_targ > max_entries:
        raise ResourceError(
            f"incidence of {n_cand} candidates x {n_targ} targets exceeds {max_entries} entries"
        )
    candidates = tuple(enumerate_subcubes(p.n, p.l))
    targets = tuple(enumerate_subcubes(p.n, p.d))
    index = {(t.star_mask, t.one_mask): j for j, t in enumerate(targets)}
    masks = []
    for q in candidates:
        fixed = [c for c in range(p.n) if not q.star_mask >> c & 1]
        m = 0
        # a covering Q_d frees d-l of the fixed coordinates of q
        for extra in itertools.combinations(fixed, p.d - p.l):
            free = sum(1 << c for c in extra)
            m |= 1 << index[(q.star_mask | free, q.one_mask & ~free)]
        masks.append(m)
    return IncidenceInstance(p, candidates, targets, tuple(masks))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def greedy_cover(inst: IncidenceInstance) -> list[int]:
    """Repeatedly take the candidate covering most uncovered targets, lowest index on ties."""
    uncovered = (1 << len(inst.targets)) - 1
    chosen = []
    while uncovered:
        best, best_gain = -1, 0
        for i, m in enumerate(inst.cover_masks):
            g = (m & uncovered).bit_count()
            if g > best_gain:
                best, best_gain = i, g
        chosen.append(best)
        uncovered &= ~inst.cover_masks[best]
    return chosen


class _BudgetExhausted(Exception):
    pass


def solve_min_cover(inst: IncidenceInstance, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Minimum covering set of the instance.

    Depth-first search branching on the uncovered target with the fewest
    remaining candidates (lowest index on ties); its candidates are tried in
    canonical order, each later sibling excluding the earlier ones.  Nodes
    are pruned with the fractional bound: every uncovered target charges
    1/g, where g is the largest number of uncovered targets any admissible
    candidate containing it still covers.  The greedy cover seeds the
    incumbent.  ``budget`` caps the number of search nodes.
    """
    masks = inst.cover_masks
    n_targets = len(inst.targets)
    cands_of = [[] for _ in range(n_targets)]
    for i, m in enumerate(masks):
        for j in _bits(m):
            cands_of[j].append(i)

    root_bound = -(-n_targets // inst.degree)
    best = greedy_cover(inst)
    nodes = 0

    def search(uncovered: int, chosen: list[int], excluded: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > budget:
            raise _BudgetExhausted
        if not uncovered:
            if len(chosen) < len(best):
                best = list(chosen)
                log.debug("incumbent %d after %d nodes", len(best), nodes)
            return
        room = len(best) - len(chosen)
        if room <= 1:
            return
        gains = {}
        bound = 0.0
        pick, pick_count = -1, 1 << 30
        for j in _bits(uncovered):
            top = count = 0
            for i in cands_of[j]:
                if excluded >> i & 1:
                    continue
                g = gains.get(i)
                if g is None:
                    g = gains[i] = (masks[i] & uncovered).bit_count()
                count += 1
                if g > top:
                    top = g
            if count == 0:
                return
            bound += 1.0 / top
            if count < pick_count:
                pick, pick_count = j, count
        # shaving the float sum before rounding up keeps the bound valid
        if math.ceil(bound - 1e-9) >= room:
            return
        for i in cands_of[pick]:
            if excluded >> i & 1:
                continue
            chosen.append(i)
            search(uncovered & ~masks[i], chosen, excluded)
            chosen.pop()
            excluded |= 1 << i

    proved = True
    if len(best) > root_bound:
        try:
            search((1 << n_targets) - 1, [], 0)
        except _BudgetExhausted:
            proved = False
            nodes = budget
    cover = inst.to_covering_set(best)
    return SolveResult(len(best), cover, nodes, proved, root_bound)


def brute_force_min_cover(
    inst: IncidenceInstance, max_size: int, max_subsets: int = 10 ** 9
) -> Optional[CoveringSet]:
    """Smallest cover of at most ``max_size`` members by plain subset enumeration.

    Sizes are tried in increasing order and subsets of one size in
    lexicographic order; the only pruning skips a prefix whose remaining
    candidates cannot jointly cover what is still uncovered.
    """
    masks = inst.cover_masks
    m = len(masks)
    if sum(comb(m, s) for s in range(max_size + 1)) > max_subsets:
        raise ResourceError(f"more than {max_subsets} subsets of {m} candidates up to size {max_size}")
    full = (1 << len(inst.targets)) - 1
    suffix = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        suffix[i] = suffix[i + 1] | masks[i]

    def extend(start: int, left: int, covered: int, chosen: list[int]) -> Optional[list[int]]:
        if covered == full:
            return chosen
        if left == 0 or (full & ~covered) & ~suffix[start]:
            return None
        for i in range(start, m - left + 1):
            chosen.append(i)
            found = extend(i + 1, left - 1, covered | masks[i], chosen)
            if found is not None:
                return found
            chosen.pop()
        return None

    for size in range(max_size + 1):
        found = extend(0, size, 0, [])
        if found is not None and len(found) == size:
            return inst.to_covering_set(found)
    return None
