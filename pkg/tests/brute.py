"""Slow, independent reference implementations used as test oracles.

Nothing here imports the package's predicates: each routine re-derives its
answer from first principles (triangle containment, cosine ordering,
cyclic-order enumeration) so agreement is meaningful.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def in_closed_triangle(a, b, c, p) -> bool:
    d1, d2, d3 = cross(a, b, p), cross(b, c, p), cross(c, a, p)
    return (d1 >= 0 and d2 >= 0 and d3 >= 0) or (d1 <= 0 and d2 <= 0 and d3 <= 0)


def extreme_ids(pts, ids) -> set[int]:
    """O(n^4): a point is extreme iff no triangle of other points contains it."""
    ids = list(ids)
    if len(ids) <= 3:
        return set(ids)
    out = set()
    for i in ids:
        others = [j for j in ids if j != i]
        if not any(in_closed_triangle(pts[a], pts[b], pts[c], pts[i])
                   for a, b, c in itertools.combinations(others, 3)):
            out.add(i)
    return out


def hull_cycle(pts, ids) -> list[int]:
    """Extreme points in CCW order from the lexicographic minimum, by repeated wrapping."""
    ext = sorted(extreme_ids(pts, ids), key=lambda i: (pts[i][0], pts[i][1]))
    if len(ext) <= 2:
        return ext
    start = ext[0]
    cycle = [start]
    cur = start
    while True:
        # next vertex: every other extreme point lies to its left
        nxt = next(j for j in ext if j != cur and all(cross(pts[cur], pts[j], pts[k]) > 0
                                                   for k in ext if k not in (cur, j)))
        if nxt == start:
            return cycle
        cycle.append(nxt)
        cur = nxt


def layers(pts) -> list[list[int]]:
    remaining = set(range(len(pts)))
    out = []
    while remaining:
        h = hull_cycle(pts, remaining)
        out.append(h)
        remaining -= set(h)
    return out


def _cos_key(p, q, r):
    """Exact sortable key for -cos(angle q p r): larger means a wider unsigned angle."""
    dx, dy = q[0] - p[0], q[1] - p[1]
    ux, uy = r[0] - p[0], r[1] - p[1]
    dot = dx * ux + dy * uy
    norm2 = ux * ux + uy * uy
    # cos = dot / (|d| |u|); compare via sign(dot) * dot^2 / norm2
    return -Fraction(dot * abs(dot), norm2)


def kth_neighbor(p, q, k, pts, member=lambda r: True) -> int | None:
    cand = [i for i, r in enumerate(pts) if member(r) and tuple(r) != tuple(p) and tuple(r) != tuple(q)]
    for s in cand:
        ks = _cos_key(p, q, pts[s])
        before = sum(1 for r in cand if r != s and (_cos_key(p, q, pts[r]) < ks
                                                   or (_cos_key(p, q, pts[r]) == ks and r < s)))
        if before == k - 1:
            return s
    return None


def segments_intersect(a, b, c, d) -> bool:
    def on(p, q, r):
        return min(p[0], q[0]) <= r[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])
    d1, d2, d3, d4 = cross(c, d, a), cross(c, d, b), cross(a, b, c), cross(a, b, d)
    if ((d1 > 0) != (d2 > 0)) and d1 != 0 and d2 != 0 and ((d3 > 0) != (d4 > 0)) and d3 != 0 and d4 != 0:
        return True
    return ((d1 == 0 and on(c, d, a)) or (d2 == 0 and on(c, d, b))
            or (d3 == 0 and on(a, b, c)) or (d4 == 0 and on(a, b, d)))


def simple(poly) -> bool:
    m = len(poly)
    edges = [(poly[i], poly[(i + 1) % m]) for i in range(m)]
    for i, j in itertools.combinations(range(m), 2):
        if j == i + 1 or (i == 0 and j == m - 1):
            continue
        if segments_intersect(*edges[i], *edges[j]):
            return False
    return True


def strictly_inside(poly, r) -> bool:
    """Crossing-number test with exact rationals; r never lies on the boundary here."""
    inside = False
    m = len(poly)
    for i in range(m):
        (x1, y1), (x2, y2) = poly[i], poly[(i + 1) % m]
        if (y1 > r[1]) != (y2 > r[1]):
            x = x1 + Fraction((r[1] - y1) * (x2 - x1), y2 - y1)
            if x > r[0]:
                inside = not inside
    return inside


def convex_count(poly) -> int:
    m = len(poly)
    area = sum(poly[i][0] * poly[(i + 1) % m][1] - poly[(i + 1) % m][0] * poly[i][1] for i in range(m))
    sign = 1 if area > 0 else -1
    return sum(1 for i in range(m) if sign * cross(poly[i - 1], poly[i], poly[(i + 1) % m]) > 0)


def polygonizable(ids, pts) -> bool:
    """Some cyclic order of ``ids`` is an empty simple polygon with 3 convex vertices or all convex."""
    ids = list(ids)
    if len(ids) < 3:
        return False
    others = [pts[i] for i in range(len(pts)) if i not in ids]
    first, rest = ids[0], ids[1:]
    for perm in itertools.permutations(rest):
        if perm and perm[0] > perm[-1]:
            continue  # each cycle once up to reversal
        poly = [pts[first]] + [pts[i] for i in perm]
        if not simple(poly):
            continue
        c = convex_count(poly)
        if c != 3 and c != len(poly):
            continue
        if any(strictly_inside(poly, r) for r in others):
            continue
        return True
    return False
