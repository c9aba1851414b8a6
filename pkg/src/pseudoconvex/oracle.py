"""Exhaustive search for minimum pseudo-convex partitions of small point sets.

Blocks are enumerated in set-partition canonical form: each new block
contains the smallest point not yet covered, so every partition is visited
once.  Block feasibility (hole or empty pseudo-triangle) is memoised per
member set and pairwise disjointness per pair of parts.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exceptions import BudgetExhausted, SearchLimitExceeded
from .geometry import as_point_set
from .partition import (
    DEFAULT_SEARCH_LIMIT,
    Part,
    Partition,
    _hole_part,
    parts_disjoint,
    pseudo_triangles,
    verify_partition,
)


@dataclass(frozen=True)
class SearchBudget:
    max_parts: int = 3
    max_subset_size_for_polygonization: int = DEFAULT_SEARCH_LIMIT
    node_limit: int = 5_000_000
    allow_degenerate: bool = False

    def __post_init__(self):
        if min(self.max_parts, self.max_subset_size_for_polygonization, self.node_limit) <= 0:
            raise ValueError("budget fields must be positive")


class _Search:
    def __init__(self, S, budget: SearchBudget):
        self.S = S
        self.coords = S.coords
        self.n = len(S)
        self.budget = budget
        self.nodes = 0
        self._opts: dict = {}
        self._disj: dict = {}

    def options(self, mask: int) -> tuple:
        opts = self._opts.get(mask)
        if opts is None:
            members = [i for i in range(self.n) if mask >> i & 1]
            if len(members) < 3:
                opts = (Part.degenerate(members),) if self.budget.allow_degenerate else ()
            else:
                hole = _hole_part(members, self.coords)
                if hole is not None:
                    opts = (hole,)
                elif len(members) <= self.budget.max_subset_size_for_polygonization:
                    opts = tuple(Part(_pt_kind(), frozenset(members), cyc)
                                 for cyc in sorted(pseudo_triangles(members, self.coords, len(members))))
                else:
                    opts = ()
            self._opts[mask] = opts
        return opts

    def disjoint(self, a: Part, b: Part) -> bool:
        key = (a, b) if id(a) < id(b) else (b, a)
        v = self._disj.get(key)
        if v is None:
            v = self._disj[key] = parts_disjoint(a, b, self.coords).ok
        return v

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget.node_limit:
            raise BudgetExhausted(f"node limit {self.budget.node_limit} reached")

    def search(self, uncovered: int, chosen: list, left: int):
        if uncovered == 0:
            return list(chosen)
        if left == 0:
            return None
        low = uncovered & -uncovered
        rest = uncovered ^ low
        if left == 1:
            blocks = [uncovered]
        else:
            blocks = _submasks_desc(rest)
        for sub in blocks:
            block = sub | low if left > 1 else sub
            self.tick()
            for part in self.options(block):
                if all(self.disjoint(part, c) for c in chosen):
                    chosen.append(part)
                    found = self.search(uncovered & ~block, chosen, left - 1)
                    chosen.pop()
                    if found is not None:
                        return found
        return None


def _pt_kind():
    from .partition import PartKind

    return PartKind.PSEUDO_TRIANGLE


def _submasks_desc(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def min_partition(S, budget: SearchBudget | None = None) -> tuple[int, Partition]:
    """Exact minimum part count (within ``budget.max_parts``) and a witness partition.

    Raises :class:`BudgetExhausted` when the node limit is hit, or when no
    partition with at most ``max_parts`` blocks exists.
    """
    S = as_point_set(S)
    budget = budget or SearchBudget()
    if len(S) == 0:
        return 0, Partition((), "oracle", S)
    search = _Search(S, budget)
    full = (1 << len(S)) - 1
    for t in range(1, budget.max_parts + 1):
        found = search.search(full, [], t)
        if found is not None:
            P = Partition(tuple(found), "oracle", S)
            assert verify_partition(P).overall, "oracle produced an invalid witness"
            return len(found), P
    raise BudgetExhausted(f"no partition into at most {budget.max_parts} parts")


def admissible_3_partition(S, budget: SearchBudget | None = None) -> Partition:
    """First admissible partition of 13 points into at most 3 blocks, in enumeration order."""
    S = as_point_set(S)
    budget = budget or SearchBudget(max_parts=3)
    search = _Search(S, budget)
    full = (1 << len(S)) - 1
    for t in (1, 2, 3):
        found = search.search(full, [], t)
        if found is not None:
            P = Partition(tuple(found), "oracle", S)
            if not verify_partition(P).overall:
                raise AssertionError("verifier rejected an oracle witness")
            return P
    raise AssertionError(f"no admissible partition found for {S.coords}; verifier or search bug")


__all__ = ["SearchBudget", "min_partition", "admissible_3_partition", "SearchLimitExceeded"]
