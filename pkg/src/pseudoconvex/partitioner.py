"""Partition any point set into at most ceil(3n/13) holes or pseudo-triangles.

Points are swept along a direction with pairwise distinct projections and
cut into strips of 13; each strip is handled by :func:`partition_13`.  The
last strip (fewer than 13 points) is cut into consecutive groups of four.
Every cut is a line ``direction . x = offset`` with a rational offset
strictly between two consecutive projections, so parts from different
groups are line-separated.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .algo13 import partition_13
from .geometry import PointSet, as_point_set
from .partition import Part, Partition, find_pseudo_polygonization, make_part, verify_partition

BLOCK = 13


@dataclass(frozen=True)
class SweepPlan:
    direction: tuple[int, int]
    cut_lines: tuple[Fraction, ...]
    blocks: tuple[tuple[int, ...], ...]

    def separates(self, k: int, S) -> bool:
        """Cut ``k`` has block ``k`` strictly below and block ``k + 1`` strictly above."""
        dx, dy = self.direction
        t = self.cut_lines[k]
        proj = lambda i: dx * S[i][0] + dy * S[i][1]  # noqa: E731
        return all(proj(i) < t for i in self.blocks[k]) and all(proj(i) > t for i in self.blocks[k + 1])


def _distinct(S, d) -> bool:
    vals = [d[0] * p[0] + d[1] * p[1] for p in S]
    return len(set(vals)) == len(vals)


def choose_sweep_direction(S) -> tuple[int, int]:
    """First of (1,0), (1,1), (1,2), ... along which all projections differ."""
    for d in itertools.chain([(1, 0)], ((1, k) for k in itertools.count(1))):
        if _distinct(S, d):
            return d
    raise AssertionError("unreachable")


def sweep_plan(S, block: int = BLOCK) -> SweepPlan:
    S = as_point_set(S)
    d = choose_sweep_direction(S)
    proj = [d[0] * p.x + d[1] * p.y for p in S]
    order = sorted(range(len(S)), key=proj.__getitem__)
    blocks = tuple(tuple(order[i:i + block]) for i in range(0, len(order), block))
    cuts = tuple(Fraction(proj[blocks[k][-1]] + proj[blocks[k + 1][0]], 2) for k in range(len(blocks) - 1))
    return SweepPlan(d, cuts, blocks)


def quad_sweep(ids, S) -> list[Part]:
    """Consecutive groups of four along the sweep; the last group may be smaller."""
    S = as_point_set(S)
    d = choose_sweep_direction(S)
    order = sorted(ids, key=lambda i: d[0] * S[i][0] + d[1] * S[i][1])
    parts = []
    for k in range(0, len(order), 4):
        group = order[k:k + 4]
        if len(group) < 3:
            parts.append(make_part(group, S))
        else:
            part = find_pseudo_polygonization(group, S)
            assert part is not None, "three or four points always admit a hole or pseudo-triangle"
            parts.append(part)
    return parts


def _remap(part: Part, ids: tuple[int, ...]) -> Part:
    poly = None if part.polygon is None else tuple(ids[v] for v in part.polygon)
    return Part(part.kind, frozenset(ids[v] for v in part.members), poly)


def _solve_block(args) -> tuple[tuple[Part, ...], str]:
    coords, ids = args
    sub = PointSet([coords[i] for i in ids], check=False)
    P = partition_13(sub)
    return tuple(_remap(p, ids) for p in P.parts), P.branch


def part_bound(n: int) -> int:
    return ceil(3 * n / BLOCK)


def partition_any(S, *, jobs: int = 1) -> Partition:
    """At most ceil(3n/13) disjoint holes or pseudo-triangles (1-2 point blocks allowed)."""
    S = as_point_set(S)
    if len(S) == 0:
        return Partition((), "sweep", S)
    plan = sweep_plan(S)
    full = [b for b in plan.blocks if len(b) == BLOCK]
    tail = [b for b in plan.blocks if len(b) < BLOCK]
    coords = S.coords
    tasks = [(coords, b) for b in full]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            solved = list(pool.map(_solve_block, tasks))
    else:
        solved = [_solve_block(t) for t in tasks]
    parts: list[Part] = [p for ps, _ in solved for p in ps]
    for b in tail:
        parts.extend(quad_sweep(b, S))
    branches = sorted({br for _, br in solved})
    P = Partition(tuple(parts), "sweep" + (f"[{','.join(branches)}]" if branches else ""), S)
    assert len(parts) <= part_bound(len(S))
    return P


__all__ = ["SweepPlan", "choose_sweep_direction", "sweep_plan", "quad_sweep", "partition_any",
           "part_bound", "verify_partition"]
