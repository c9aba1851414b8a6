"""Exact planar primitives on integer points.

Every predicate works on Python integers, so no rounding ever happens.
Points are anything indexable as ``p[0], p[1]``; :class:`Point` adds a
stable ``id``.  Functions that return "points" return ids, i.e. indices
into the sequence they were given.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from enum import IntEnum
from fractions import Fraction
from functools import cmp_to_key
from math import gcd
from typing import NamedTuple

from .exceptions import BadInput, NotEnoughPoints, OutsideHull

COORD_LIMIT = 2**30


class Orientation(IntEnum):
    CW = -1
    COLLINEAR = 0
    CCW = 1


class Point(NamedTuple):
    x: int
    y: int
    id: int


def orient(a, b, c) -> int:
    """Twice the signed area of triangle abc (positive when counter-clockwise)."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def orientation(a, b, c) -> Orientation:
    d = orient(a, b, c)
    return Orientation.CCW if d > 0 else Orientation.CW if d < 0 else Orientation.COLLINEAR


class PointSet(Sequence):
    """Immutable ordered collection of integer points; ``id`` is the index."""

    __slots__ = ("points", "_coords")

    def __init__(self, coords: Iterable, *, check: bool = True):
        pts = []
        for i, c in enumerate(coords):
            x, y = c[0], c[1]
            if int(x) != x or int(y) != y:
                raise BadInput(f"point {i} has non-integer coordinates {c!r}")
            x, y = int(x), int(y)
            if abs(x) > COORD_LIMIT or abs(y) > COORD_LIMIT:
                raise BadInput(f"point {i} exceeds the coordinate bound 2**30")
            pts.append(Point(x, y, i))
        self.points = tuple(pts)
        self._coords = tuple((p.x, p.y) for p in pts)
        if check:
            bad = general_position_check(self.points)
            if bad is not None:
                kind = "coincident pair" if len(bad) == 2 else "collinear triple"
                raise BadInput(f"not in general position: {kind} {bad}", witness=bad)

    def __len__(self):
        return len(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __repr__(self):
        return f"PointSet({[(p.x, p.y) for p in self.points]})"

    def __eq__(self, other):
        return isinstance(other, PointSet) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def coords(self) -> tuple:
        return self._coords


def as_point_set(S) -> PointSet:
    return S if isinstance(S, PointSet) else PointSet(S)


def _direction_key(dx: int, dy: int) -> tuple[int, int]:
    g = gcd(dx, dy)
    dx, dy = dx // g, dy // g
    if dx < 0 or (dx == 0 and dy < 0):
        dx, dy = -dx, -dy
    return dx, dy


def general_position_check(points: Sequence) -> tuple | None:
    """Return the smallest offending id pair/triple, or ``None`` if none.

    A coincident pair is reported before any collinear triple.  Runs in
    O(n^2) by bucketing the directions seen from each point.
    """
    n = len(points)
    first: dict = {}
    best = None
    for j in range(n):
        k = (points[j][0], points[j][1])
        if k in first:
            if best is None or (first[k], j) < best:
                best = (first[k], j)
        else:
            first[k] = j
    if best is not None:
        return best

    for i in range(n):
        xi, yi = points[i][0], points[i][1]
        buckets: dict = {}
        best = None
        for j in range(i + 1, n):
            d = _direction_key(points[j][0] - xi, points[j][1] - yi)
            if d in buckets:
                cand = (buckets[d], j)
                if best is None or cand < best:
                    best = cand
            else:
                buckets[d] = j
        if best is not None:
            return (i, *best)
    return None


def convex_hull(points: Sequence, ids: Iterable[int] | None = None) -> list[int]:
    """Extreme points in counter-clockwise order, starting at the lexicographic minimum."""
    idx = sorted(range(len(points)) if ids is None else set(ids),
                 key=lambda i: (points[i][0], points[i][1]))
    if len(idx) <= 2:
        return idx

    def chain(order):
        out: list[int] = []
        for i in order:
            while len(out) >= 2 and orient(points[out[-2]], points[out[-1]], points[i]) <= 0:
                out.pop()
            out.append(i)
        return out

    lower = chain(idx)
    upper = chain(reversed(idx))
    return lower[:-1] + upper[:-1]


@dataclass(frozen=True)
class LayerDecomposition:
    layers: tuple[tuple[int, ...], ...]
    layer_of: dict = field(compare=False)

    def __len__(self):
        return len(self.layers)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(layer) for layer in self.layers)

    def layer(self, j: int) -> tuple[int, ...]:
        return self.layers[j] if j < len(self.layers) else ()


def convex_layers(points: Sequence) -> LayerDecomposition:
    remaining = set(range(len(points)))
    layers = []
    while remaining:
        hull = convex_hull(points, remaining)
        layers.append(tuple(hull))
        remaining.difference_update(hull)
    layer_of = {i: j for j, layer in enumerate(layers) for i in layer}
    return LayerDecomposition(tuple(layers), layer_of)


class DirectedLine(NamedTuple):
    p: tuple
    q: tuple

    def side(self, r) -> int:
        """+1 if r is left of p->q, -1 if right, 0 if on the line."""
        d = orient(self.p, self.q, r)
        return (d > 0) - (d < 0)


def halfplane_points(line: DirectedLine, side, points: Sequence) -> set[int]:
    """Ids of points strictly on one open side of ``line``.

    ``side`` is +1 (left), -1 (right) or a reference point whose side is
    selected.  Points on the line, including its endpoints, never qualify.
    """
    if not isinstance(side, int):
        side = line.side(side)
        if side == 0:
            raise ValueError("reference point lies on the line")
    return {i for i, r in enumerate(points) if line.side(r) == side}


@dataclass(frozen=True)
class Cone:
    """Open angular domain at ``apex`` between the rays to ``arm1`` and ``arm2``."""

    apex: tuple
    arm1: tuple
    arm2: tuple

    def __post_init__(self):
        if orient(self.apex, self.arm1, self.arm2) == 0:
            raise ValueError("degenerate cone")

    def contains(self, r) -> bool:
        s = orient(self.apex, self.arm1, self.arm2)
        if s > 0:
            return orient(self.apex, self.arm1, r) > 0 and orient(self.apex, r, self.arm2) > 0
        return orient(self.apex, self.arm1, r) < 0 and orient(self.apex, r, self.arm2) < 0

    __contains__ = contains


def angle_cmp(p, q) -> Callable:
    """Comparator on points by unsigned angle between ray p->q and ray p->r."""
    dx, dy = q[0] - p[0], q[1] - p[1]

    def local(r):
        ux, uy = r[0] - p[0], r[1] - p[1]
        return dx * ux + dy * uy, abs(dx * uy - dy * ux)

    def cmp(a, b):
        ax, ay = local(a[1])
        bx, by = local(b[1])
        c = ax * by - ay * bx
        if c != 0:
            return -1 if c > 0 else 1
        return (a[0] > b[0]) - (a[0] < b[0])

    return cmp


def angular_order(p, q, points: Sequence, ids: Iterable[int]) -> list[int]:
    """Ids sorted by increasing unsigned angle from ray p->q (ties: smaller id)."""
    items = sorted(((i, points[i]) for i in ids), key=cmp_to_key(angle_cmp(p, q)))
    return [i for i, _ in items]


def kth_angular_neighbor(p, q, k: int, points: Sequence, region=None) -> int:
    """The id ``s`` whose cone to ray p->q holds exactly ``k - 1`` region points.

    ``region`` is a :class:`Cone`, a predicate on points, or ``None`` for the
    whole set.  ``k = 1`` gives the nearest angular neighbor.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if region is None:
        member = lambda r: True  # noqa: E731
    elif isinstance(region, Cone):
        member = region.contains
    else:
        member = region
    cand = [i for i, r in enumerate(points)
            if member(r) and (r[0], r[1]) != (p[0], p[1]) and (r[0], r[1]) != (q[0], q[1])]
    if len(cand) < k:
        raise NotEnoughPoints(f"region holds {len(cand)} points, need {k}")
    return angular_order(p, q, points, cand)[k - 1]


def strictly_inside_convex(hull_pts: Sequence, r) -> bool:
    """True if r is strictly inside the CCW convex polygon ``hull_pts``."""
    m = len(hull_pts)
    if m < 3:
        return False
    return all(orient(hull_pts[i], hull_pts[(i + 1) % m], r) > 0 for i in range(m))


def ray_hull_exit(origin, through, hull_pts: Sequence) -> tuple[Fraction, Fraction]:
    """Where the ray origin->through leaves the CCW convex polygon ``hull_pts``."""
    if not strictly_inside_convex(hull_pts, origin):
        raise OutsideHull("ray origin is not strictly inside the hull")
    ox, oy = origin[0], origin[1]
    dx, dy = through[0] - ox, through[1] - oy
    if dx == 0 and dy == 0:
        raise ValueError("degenerate ray")
    m = len(hull_pts)
    for i in range(m):
        a, b = hull_pts[i], hull_pts[(i + 1) % m]
        ex, ey = b[0] - a[0], b[1] - a[1]
        den = dx * ey - dy * ex
        if den == 0:
            continue
        # origin + t*d = a + u*e
        wx, wy = a[0] - ox, a[1] - oy
        t = Fraction(wx * ey - wy * ex, den)
        u = Fraction(wx * dy - wy * dx, den)
        if t > 0 and 0 <= u <= 1:
            return ox + t * dx, oy + t * dy
    raise AssertionError("ray from an interior point must leave the hull")
