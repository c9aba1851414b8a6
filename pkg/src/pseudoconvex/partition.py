"""Parts, partitions and an independent verifier.

A *part* is one block of a partition: a hole (empty convex polygon), an
empty pseudo-triangle, or a degenerate block of one or two points.  The
verifier re-derives every property from coordinates and never trusts the
producer of a partition.
"""

from __future__ import annotations

import itertools
import json
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from enum import Enum

from .exceptions import BadInput, MalformedPart, SearchLimitExceeded
from .geometry import PointSet, as_point_set, convex_hull, orient

DEFAULT_SEARCH_LIMIT = 9


class PartKind(str, Enum):
    HOLE = "hole"
    PSEUDO_TRIANGLE = "pseudo_triangle"
    POINT = "point"
    SEGMENT = "segment"


@dataclass(frozen=True)
class Part:
    kind: PartKind
    members: frozenset
    polygon: tuple | None = None

    @classmethod
    def degenerate(cls, members: Iterable[int]) -> Part:
        members = frozenset(members)
        if len(members) == 1:
            return cls(PartKind.POINT, members)
        if len(members) == 2:
            return cls(PartKind.SEGMENT, members)
        raise MalformedPart("degenerate parts have one or two members")

    def __len__(self):
        return len(self.members)

    def boundary(self) -> tuple:
        """Vertex ids in cyclic order (sorted ids for degenerate parts)."""
        return self.polygon if self.polygon is not None else tuple(sorted(self.members))

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "members": sorted(self.members),
                "polygon": list(self.boundary())}

    @classmethod
    def from_json(cls, d: dict) -> Part:
        kind = PartKind(d["kind"])
        poly = d.get("polygon")
        if kind in (PartKind.POINT, PartKind.SEGMENT):
            poly = None
        return cls(kind, frozenset(d["members"]), tuple(poly) if poly is not None else None)


@dataclass(frozen=True)
class Partition:
    parts: tuple
    branch: str
    points: PointSet

    def __len__(self):
        return len(self.parts)

    def labels(self) -> list[int]:
        out = [-1] * len(self.points)
        for k, part in enumerate(self.parts):
            for i in part.members:
                out[i] = k
        return out

    def to_json(self) -> dict:
        return {"n": len(self.points), "points": [list(c) for c in self.points.coords],
                "parts": [p.to_json() for p in self.parts], "branch": self.branch}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)

    @classmethod
    def from_json(cls, d: dict, *, check: bool = True) -> Partition:
        pts = PointSet([tuple(c) for c in d["points"]], check=check)
        if "n" in d and d["n"] != len(pts):
            raise BadInput(f"header n={d['n']} but {len(pts)} points listed")
        return cls(tuple(Part.from_json(p) for p in d["parts"]), d.get("branch", ""), pts)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""
    witness: object = None
    convex_vertices: tuple = ()

    def __bool__(self):
        return self.ok


@dataclass
class VerificationReport:
    per_part: list = field(default_factory=list)
    per_pair: list = field(default_factory=list)
    missing: list = field(default_factory=list)
    duplicated: list = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return (not self.missing and not self.duplicated
                and all(v.ok for _, v in self.per_part)
                and all(v.ok for _, _, v in self.per_pair))

    def __bool__(self):
        return self.overall

    def failures(self) -> list[str]:
        out = []
        if self.missing:
            out.append(f"points not covered: {self.missing}")
        if self.duplicated:
            out.append(f"points in several parts: {self.duplicated}")
        out += [f"part {i}: {v.reason} (witness {v.witness})" for i, v in self.per_part if not v.ok]
        out += [f"parts {i},{j}: {v.reason} (witness {v.witness})"
                for i, j, v in self.per_pair if not v.ok]
        return out


# -- polygon predicates ------------------------------------------------------

def _area2(pts: Sequence) -> int:
    return sum(pts[i - 1][0] * pts[i][1] - pts[i][0] * pts[i - 1][1] for i in range(len(pts)))


def _segments_cross(a, b, c, d) -> bool:
    """Closed segments ab and cd share a point (any overlap counts)."""
    d1, d2 = orient(c, d, a), orient(c, d, b)
    d3, d4 = orient(a, b, c), orient(a, b, d)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and ((d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)):
        return True

    def on(p, q, r):
        return min(p[0], q[0]) <= r[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])

    return ((d1 == 0 and on(c, d, a)) or (d2 == 0 and on(c, d, b))
            or (d3 == 0 and on(a, b, c)) or (d4 == 0 and on(a, b, d)))


def _proper_cross(a, b, c, d) -> bool:
    d1, d2 = orient(c, d, a), orient(c, d, b)
    d3, d4 = orient(a, b, c), orient(a, b, d)
    return d1 * d2 < 0 and d3 * d4 < 0


def is_simple(pts: Sequence) -> bool:
    m = len(pts)
    if m < 3 or len(set(map(tuple, pts))) != m:
        return False
    if m == 3:
        return orient(pts[0], pts[1], pts[2]) != 0
    for i in range(m):
        a, b, c = pts[i], pts[(i + 1) % m], pts[(i + 2) % m]
        # adjacent edges may only share their common vertex: no fold-back
        if orient(a, b, c) == 0 and (b[0] - a[0]) * (c[0] - b[0]) + (b[1] - a[1]) * (c[1] - b[1]) < 0:
            return False
        for j in range(i + 2, m):
            if i == 0 and j == m - 1:
                continue
            if _segments_cross(a, b, pts[j], pts[(j + 1) % m]):
                return False
    return True


def point_in_polygon(pts: Sequence, r) -> int:
    """+1 strictly inside, 0 on the boundary, -1 outside (exact crossing test)."""
    x, y = r[0], r[1]
    inside = False
    m = len(pts)
    for i in range(m):
        a, b = pts[i - 1], pts[i]
        if (a[0], a[1]) == (x, y):
            return 0
        if (a[1] > y) != (b[1] > y):
            s = orient(a, b, r)
            if s == 0:
                return 0
            # edge crosses the horizontal through r; count it if r is left of the upward edge
            if (s > 0) == (b[1] > a[1]):
                inside = not inside
        elif a[1] == y == b[1] and min(a[0], b[0]) <= x <= max(a[0], b[0]):
            return 0
    return 1 if inside else -1


def convex_vertex_flags(pts: Sequence) -> list[bool]:
    """Per vertex: interior angle below pi, after normalising to CCW."""
    sign = 1 if _area2(pts) > 0 else -1
    m = len(pts)
    return [sign * orient(pts[i - 1], pts[i], pts[(i + 1) % m]) > 0 for i in range(m)]


def canonical_cycle(ids: Sequence[int], coords: Sequence) -> tuple:
    """CCW cycle rotated to start at its smallest id."""
    ids = list(ids)
    if _area2([coords[i] for i in ids]) < 0:
        ids.reverse()
    k = ids.index(min(ids))
    return tuple(ids[k:] + ids[:k])


def _first_inside(poly_pts, members, coords) -> int | None:
    xs = [p[0] for p in poly_pts]
    ys = [p[1] for p in poly_pts]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    for i, r in enumerate(coords):
        if i in members or not (x0 < r[0] < x1 and y0 < r[1] < y1):
            continue
        if point_in_polygon(poly_pts, r) >= 0:
            return i
    return None


# -- classification ----------------------------------------------------------

def classify_part(part: Part, S) -> Verdict:
    """Check one part against its definition; emptiness is tested against all of S."""
    coords = S.coords if isinstance(S, PointSet) else S
    n = len(coords)
    members = part.members
    bad = [i for i in members if not 0 <= i < n]
    if bad:
        return Verdict(False, "member id out of range", bad[0])
    if part.kind is PartKind.POINT:
        return Verdict(len(members) == 1, "" if len(members) == 1 else "point part needs 1 member")
    if part.kind is PartKind.SEGMENT:
        return Verdict(len(members) == 2, "" if len(members) == 2 else "segment part needs 2 members")
    if part.polygon is None:
        raise MalformedPart(f"{part.kind.value} part has no polygon order")
    poly = part.polygon
    if len(poly) != len(members) or set(poly) != set(members):
        return Verdict(False, "polygon order does not list exactly the members")
    if len(poly) < 3:
        return Verdict(False, "polygon needs at least 3 vertices")
    pts = [coords[i] for i in poly]
    if not is_simple(pts):
        return Verdict(False, "polygon is not simple")
    flags = convex_vertex_flags(pts)
    convex = tuple(v for v, f in zip(poly, flags) if f)
    if part.kind is PartKind.HOLE:
        if len(convex) != len(poly):
            reflex = next(v for v, f in zip(poly, flags) if not f)
            return Verdict(False, "hole is not convex", reflex, convex)
    elif len(convex) != 3:
        return Verdict(False, f"pseudo-triangle has {len(convex)} convex vertices", None, convex)
    inside = _first_inside(pts, members, coords)
    if inside is not None:
        return Verdict(False, "polygon is not empty", inside, convex)
    return Verdict(True, "", None, convex)


def _hole_part(members, coords) -> Part | None:
    hull = convex_hull(coords, members)
    if len(hull) != len(members):
        return None
    poly = canonical_cycle(hull, coords)
    pts = [coords[i] for i in poly]
    if _first_inside(pts, set(members), coords) is not None:
        return None
    return Part(PartKind.HOLE, frozenset(members), poly)


def _chain(u, v, group, coords) -> list[int] | None:
    """Inward-bulging chain from corner u to corner v through ``group``, or None."""
    if not group:
        return []
    hull = convex_hull(coords, [u, v, *group])
    if len(hull) != len(group) + 2:
        return None
    k = hull.index(u)
    hull = hull[k:] + hull[:k]
    if hull[1] != v:
        return None
    # CCW hull is u, v, g..., so walking u -> chain -> v reverses the tail
    return hull[:1:-1]


def pseudo_triangles(members: Iterable[int], S, limit: int = DEFAULT_SEARCH_LIMIT):
    """Yield every empty pseudo-triangle polygon (canonical cycle) on ``members``."""
    coords = S.coords if isinstance(S, PointSet) else S
    members = sorted(set(members))
    if len(members) > limit:
        raise SearchLimitExceeded(f"{len(members)} members exceed the search limit {limit}")
    hull = convex_hull(coords, members)
    if len(hull) != 3 or len(members) < 4:
        return
    a, b, c = hull
    inner = [i for i in members if i not in hull]
    mset = set(members)
    seen = set()
    for assign in itertools.product(range(3), repeat=len(inner)):
        groups = ([], [], [])
        for i, g in zip(inner, assign):
            groups[g].append(i)
        ab = _chain(a, b, groups[0], coords)
        if ab is None:
            continue
        bc = _chain(b, c, groups[1], coords)
        if bc is None:
            continue
        ca = _chain(c, a, groups[2], coords)
        if ca is None:
            continue
        poly = [a, *ab, b, *bc, c, *ca]
        pts = [coords[i] for i in poly]
        if not is_simple(pts):
            continue
        flags = convex_vertex_flags(pts)
        if sum(flags) != 3:
            continue
        if _first_inside(pts, mset, coords) is not None:
            continue
        cyc = canonical_cycle(poly, coords)
        if cyc not in seen:
            seen.add(cyc)
            yield cyc


def find_pseudo_polygonization(members: Iterable[int], S, limit: int = DEFAULT_SEARCH_LIMIT) -> Part | None:
    """A hole on ``members`` if possible, else the lexicographically least empty pseudo-triangle."""
    coords = S.coords if isinstance(S, PointSet) else S
    members = frozenset(members)
    if len(members) < 3:
        raise ValueError("need at least 3 members")
    hole = _hole_part(members, coords)
    if hole is not None:
        return hole
    if len(convex_hull(coords, members)) != 3:
        return None  # a pseudo-triangle's hull is its three convex corners
    if len(members) > limit:
        raise SearchLimitExceeded(f"{len(members)} members exceed the search limit {limit}")
    best = min(pseudo_triangles(members, coords, limit), default=None)
    return None if best is None else Part(PartKind.PSEUDO_TRIANGLE, members, best)


def make_part(members: Iterable[int], S, limit: int = DEFAULT_SEARCH_LIMIT) -> Part | None:
    """Any valid part on ``members`` (degenerate for 1-2 points), or None."""
    members = frozenset(members)
    if len(members) <= 2:
        return Part.degenerate(members)
    return find_pseudo_polygonization(members, S, limit)


def polygon_part(poly: Sequence[int], S) -> Part:
    """Wrap an explicit polygon order as a hole or pseudo-triangle by its convex-vertex count."""
    coords = S.coords if isinstance(S, PointSet) else S
    poly = canonical_cycle(poly, coords)
    flags = convex_vertex_flags([coords[i] for i in poly])
    kind = PartKind.HOLE if all(flags) else PartKind.PSEUDO_TRIANGLE
    return Part(kind, frozenset(poly), poly)


# -- disjointness ------------------------------------------------------------

def parts_disjoint(a: Part, b: Part, S) -> Verdict:
    """Vertex sets disjoint, no vertex in the other's closed region, no proper edge crossing."""
    coords = S.coords if isinstance(S, PointSet) else S
    shared = a.members & b.members
    if shared:
        return Verdict(False, "parts share a vertex", min(shared))
    pa = [coords[i] for i in a.boundary()]
    pb = [coords[i] for i in b.boundary()]
    if _bbox_apart(pa, pb):
        return Verdict(True)
    for poly, other, ids in ((pa, pb, b.boundary()), (pb, pa, a.boundary())):
        if len(poly) >= 3:
            for i, r in zip(ids, other):
                if point_in_polygon(poly, r) >= 0:
                    return Verdict(False, "vertex lies in the other part", i)
    ea = _edges(pa)
    eb = _edges(pb)
    ia = _edges(list(a.boundary()))
    ib = _edges(list(b.boundary()))
    for (p, q), ida in zip(ea, ia):
        for (r, s), idb in zip(eb, ib):
            if _proper_cross(p, q, r, s):
                return Verdict(False, "boundaries cross", (ida, idb))
    return Verdict(True)


def _bbox_apart(pa, pb) -> bool:
    """Closed bounding boxes do not meet, so neither do the closed regions."""
    for axis in (0, 1):
        if max(p[axis] for p in pa) < min(p[axis] for p in pb):
            return True
        if max(p[axis] for p in pb) < min(p[axis] for p in pa):
            return True
    return False


def _edges(seq):
    m = len(seq)
    if m == 1:
        return []
    if m == 2:
        return [(seq[0], seq[1])]
    return [(seq[i], seq[(i + 1) % m]) for i in range(m)]


def verify_partition(P: Partition) -> VerificationReport:
    S = P.points
    rep = VerificationReport()
    counts: dict = {}
    for part in P.parts:
        for i in part.members:
            counts[i] = counts.get(i, 0) + 1
    rep.missing = [i for i in range(len(S)) if i not in counts]
    rep.duplicated = sorted(i for i, c in counts.items() if c > 1)
    for k, part in enumerate(P.parts):
        try:
            rep.per_part.append((k, classify_part(part, S)))
        except MalformedPart as exc:
            rep.per_part.append((k, Verdict(False, str(exc))))
    for i, j in itertools.combinations(range(len(P.parts)), 2):
        rep.per_pair.append((i, j, parts_disjoint(P.parts[i], P.parts[j], S)))
    return rep


def load_partition(path) -> Partition:
    with open(path) as fh:
        return Partition.from_json(json.load(fh))


def ensure_point_set(S) -> PointSet:
    return as_point_set(S)
