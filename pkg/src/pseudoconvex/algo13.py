"""Constructive 3-part partition of any 13 points in general position.

Dispatch follows the hull size of the input.  Each branch builds its
parts explicitly from the geometry of the configuration; every candidate
is checked by the independent verifier before it is returned.  When no
branch applies (an implementation gap, never an expected event) the
exhaustive search in :mod:`pseudoconvex.oracle` supplies the answer and
the result is labelled ``fallback``.
"""

from __future__ import annotations

import functools
import itertools
import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import BadInput, BranchMisfire, InvalidCertificate
from .geometry import (
    PointSet,
    angular_order,
    as_point_set,
    convex_hull,
    convex_layers,
    orient,
    ray_hull_exit,
)
from .partition import (
    Part,
    Partition,
    make_part,
    parts_disjoint,
    polygon_part,
    pseudo_triangles,
    verify_partition,
)

log = logging.getLogger(__name__)


def _sgn(v) -> int:
    return (v > 0) - (v < 0)


def _line_cross(a, b, c, d) -> tuple[Fraction, Fraction]:
    """Intersection of lines ab and cd (assumed non-parallel)."""
    d1x, d1y = b[0] - a[0], b[1] - a[1]
    d2x, d2y = d[0] - c[0], d[1] - c[1]
    den = d1x * d2y - d1y * d2x
    t = Fraction((c[0] - a[0]) * d2y - (c[1] - a[1]) * d2x, den)
    return a[0] + t * d1x, a[1] + t * d1y


class Instance:
    """A 13-point set with its layers and per-call caches."""

    def __init__(self, S: PointSet):
        self.S = S
        self.c = S.coords
        self.n = len(self.c)
        self.layers = convex_layers(self.c)
        self.hull = list(self.layers.layer(0))
        self.l2 = list(self.layers.layer(1))
        self.l3 = list(self.layers.layer(2))
        self.interior = [i for i in range(self.n) if i not in set(self.hull)]
        self._options: dict = {}

    # -- side tests on ids ---------------------------------------------------
    def side(self, p: int, q: int, r) -> int:
        rr = self.c[r] if isinstance(r, int) else r
        return _sgn(orient(self.c[p], self.c[q], rr))

    def same_side(self, p, q, ref, ids=None) -> list[int]:
        """Ids strictly on the side of line pq that contains ``ref``."""
        s = self.side(p, q, ref)
        ids = range(self.n) if ids is None else ids
        return [i for i in ids if i != p and i != q and self.side(p, q, i) == s]

    def other_side(self, p, q, ref, ids=None) -> list[int]:
        s = self.side(p, q, ref)
        ids = range(self.n) if ids is None else ids
        return [i for i in ids if i != p and i != q and self.side(p, q, i) == -s]

    def in_triangle(self, a, b, c, ids=None) -> list[int]:
        pa, pb, pc = self.c[a], self.c[b], self.c[c]
        s = _sgn(orient(pa, pb, pc))
        ids = range(self.n) if ids is None else ids
        out = []
        for i in ids:
            r = self.c[i]
            if (_sgn(orient(pa, pb, r)) == s and _sgn(orient(pb, pc, r)) == s
                    and _sgn(orient(pc, pa, r)) == s):
                out.append(i)
        return out

    def in_cone(self, apex, arm1, arm2, ids=None) -> list[int]:
        """Ids strictly inside the cone at ``apex`` spanned by two arm points (angle < pi)."""
        o = self.c[apex] if isinstance(apex, int) else apex
        a1 = self.c[arm1] if isinstance(arm1, int) else arm1
        a2 = self.c[arm2] if isinstance(arm2, int) else arm2
        s = _sgn(orient(o, a1, a2))
        ids = range(self.n) if ids is None else ids
        return [i for i in ids if _sgn(orient(o, a1, self.c[i])) == s and _sgn(orient(o, self.c[i], a2)) == s]

    # -- part construction ----------------------------------------------------
    def options(self, members) -> list[Part]:
        """Every valid part on ``members``: its hole, else all empty pseudo-triangles."""
        key = frozenset(members)
        if key not in self._options:
            if len(key) < 3:
                opts = []
            else:
                hole = make_part(key, self.c, limit=13) if len(key) > 9 else None
                if len(key) > 9:
                    opts = [hole] if hole is not None and hole.kind.value == "hole" else []
                else:
                    first = make_part(key, self.c)
                    if first is None:
                        opts = []
                    elif first.kind.value == "hole":
                        opts = [first]
                    else:
                        opts = [Part(first.kind, key, cyc) for cyc in sorted(pseudo_triangles(key, self.c))]
            self._options[key] = opts
        return self._options[key]

    def poly(self, order) -> Part:
        return polygon_part(order, self.c)

    def finish(self, parts: list[Part], branch: str) -> Partition | None:
        P = Partition(tuple(parts), branch, self.S)
        if len(parts) <= 3 and all(len(p) >= 3 for p in parts) and verify_partition(P).overall:
            return P
        return None


# -- residual split -----------------------------------------------------------

def _two_way_splits(rest: list[int]) -> Iterator[list[frozenset]]:
    first, others = rest[0], rest[1:]
    m = len(rest)
    for size in range(2, len(others) + 1):
        for combo in itertools.combinations(others, size):
            a = frozenset((first, *combo))
            if len(a) >= 3 and m - len(a) >= 3:
                yield [a, frozenset(rest) - a]


def residual_split(inst: Instance, fixed: list[Part], rest: Iterable[int],
                   hints: Iterable[list] = ()) -> list[Part]:
    """Cover ``rest`` by at most two parts compatible with the ``fixed`` parts.

    Hinted groupings come first, then the sweep split, then any 2-way split of
    the residue.  Raises :class:`BranchMisfire` if nothing fits.
    """
    rest = sorted(set(rest))
    if not rest:
        return []
    if len(rest) in (1, 2):
        raise BranchMisfire(f"cannot cover a residue of {len(rest)} points")
    tried = set()

    def candidates():
        for h in hints:
            yield [frozenset(g) for g in h if g]
        if len(rest) <= 5:
            yield [frozenset(rest)]
        if len(rest) > 5 and len(fixed) <= 1:
            for d in ((1, 0), (0, 1), (1, 1), (1, -1)):
                yield _balanced(rest, inst.c, d)
            if len(rest) <= 9:
                yield [frozenset(rest)]
            yield from _two_way_splits(rest)
        elif len(rest) > 5:
            yield [frozenset(rest)]

    for groups in candidates():
        key = tuple(sorted(tuple(sorted(g)) for g in groups))
        if key in tried or sum(len(g) for g in groups) != len(rest) or any(len(g) < 3 for g in groups):
            continue
        tried.add(key)
        if len(fixed) + len(groups) > 3:
            continue
        found = _fit(inst, fixed, groups)
        if found is not None:
            return found
    raise BranchMisfire("residue admits no compatible split")


def _balanced(rest, coords, direction) -> list[frozenset]:
    dx, dy = direction
    order = sorted(rest, key=lambda i: (dx * coords[i][0] + dy * coords[i][1], coords[i][1], i))
    k = (len(order) + 1) // 2
    return [frozenset(order[:k]), frozenset(order[k:])]


def _fit(inst: Instance, fixed: list[Part], groups: list[frozenset]) -> list[Part] | None:
    opts = [inst.options(g) for g in groups]
    if any(not o for o in opts):
        return None
    for combo in itertools.product(*opts):
        ok = True
        for k, part in enumerate(combo):
            for other in itertools.chain(fixed, combo[:k]):
                if not parts_disjoint(part, other, inst.c).ok:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return list(combo)
    return None


def _attempt(inst: Instance, fixed: list[Part], rest, branch: str, hints=()) -> Partition | None:
    try:
        tail = residual_split(inst, fixed, rest, hints)
    except BranchMisfire:
        return None
    return inst.finish(fixed + tail, branch)


# -- outer halfplane (second-layer edge with >= 3 hull points beyond it) -------

def outer_halfplane_partitions(inst: Instance, branch: str) -> Iterator[Partition]:
    l2 = inst.l2
    if len(l2) < 3:
        return
    for k in range(len(l2)):
        p, q = l2[k], l2[(k + 1) % len(l2)]
        ref = l2[(k + 2) % len(l2)]
        beyond = inst.other_side(p, q, ref, inst.hull)
        if len(beyond) < 3:
            continue
        opts = inst.options({p, q, *beyond})
        if not opts:
            continue
        rest = set(range(inst.n)) - {p, q, *beyond}
        P = _attempt(inst, [opts[0]], rest, branch)
        if P is not None:
            yield P


def try_outer_halfplane_split(S, branch: str = "halfplane") -> Partition | None:
    inst = S if isinstance(S, Instance) else Instance(as_point_set(S))
    return next(outer_halfplane_partitions(inst, branch), None)


# -- ears ----------------------------------------------------------------------

def ear_partition(inst: Instance, i: int, mirror: bool, branch: str) -> Partition | None:
    """Ear at hull vertex ``hull[i]``; ``mirror`` pivots from the other neighbour."""
    h = inst.hull
    k = len(h)
    prev, cur, nxt = h[(i - 1) % k], h[i], h[(i + 1) % k]
    if mirror:
        prev, nxt = nxt, prev
    inside = inst.in_triangle(prev, cur, nxt, inst.interior)
    if len(inside) < 2:
        return None
    p = angular_order(inst.c[prev], inst.c[cur], inst.c, inside)[0]
    keep = [j for j in range(inst.n) if j != p and j != cur]
    z = convex_hull(inst.c, keep)
    m = len(z)
    a = z.index(prev)
    # the new hull vertices sit between prev and nxt on the side where cur was
    fwd = []
    j = (a + 1) % m
    while z[j] != nxt:
        fwd.append(z[j])
        j = (j + 1) % m
    bwd = []
    j = (a - 1) % m
    while z[j] != nxt:
        bwd.append(z[j])
        j = (j - 1) % m
    hull_set = set(h)
    chain = fwd if fwd and not (set(fwd) & hull_set) else bwd
    if not chain or set(chain) & hull_set:
        return None
    order = [prev, p, cur, nxt, *reversed(chain)]
    first = inst.poly(order)
    rest = set(range(inst.n)) - set(order)
    return _attempt(inst, [first], rest, branch)


def ear_partitions(inst: Instance, branch: str) -> Iterator[Partition]:
    for i in range(len(inst.hull)):
        for mirror in (False, True):
            P = ear_partition(inst, i, mirror, branch)
            if P is not None:
                yield P


def try_ear(S, branch: str = "ear") -> Partition | None:
    inst = S if isinstance(S, Instance) else Instance(as_point_set(S))
    return next(ear_partitions(inst, branch), None)


# -- hearts ----------------------------------------------------------------------

@dataclass(frozen=True)
class HeartCertificate:
    pivot: int
    base: tuple[int, int]
    a: int
    b: int
    alpha: tuple[Fraction, Fraction]


def _heart_counts(inst: Instance, s1: int, s2: int, s3: int):
    far2 = inst.other_side(s1, s2, s3)
    far3 = inst.other_side(s1, s3, s2)
    return far2, far3


def heart_conditions(inst: Instance, s1: int, s2: int, s3: int) -> bool:
    far2, far3 = _heart_counts(inst, s1, s2, s3)
    if set(far2) & set(far3):
        return False
    if inst.other_side(s2, s3, s1):
        return False
    return len(far2) <= 4 and len(far3) <= 4


def _split_point(inst: Instance, s1, s2, s3, order: list[int], k: int) -> tuple[Fraction, Fraction]:
    """A point on segment s2s3 whose ray from s1 leaves exactly ``k`` of ``order`` on the s2 side."""
    c = inst.c
    lo = c[s2] if k == 0 else _line_cross(c[s1], c[order[k - 1]], c[s2], c[s3])
    hi = c[s3] if k == len(order) else _line_cross(c[s1], c[order[k]], c[s2], c[s3])
    return (Fraction(lo[0]) + hi[0]) / 2, (Fraction(lo[1]) + hi[1]) / 2


def find_heart(S, candidates: Iterable[tuple[int, int, int]]) -> HeartCertificate | None:
    inst = S if isinstance(S, Instance) else Instance(as_point_set(S))
    for s1, s2, s3 in candidates:
        if len({s1, s2, s3}) == 3 and heart_conditions(inst, s1, s2, s3):
            far2, far3 = _heart_counts(inst, s1, s2, s3)
            a, b = len(far2), len(far3)
            tri = angular_order(inst.c[s1], inst.c[s2], inst.c, inst.in_triangle(s1, s2, s3))
            return HeartCertificate(s1, (s2, s3), a, b, _split_point(inst, s1, s2, s3, tri, 5 - a))
    return None


def _hull_path(hull: list[int], u: int, v: int) -> list[int]:
    """Vertices strictly between u and v along the hull path that avoids edge uv."""
    m = len(hull)
    if m <= 2:
        return []
    i, j = hull.index(u), hull.index(v)
    fwd = [hull[(i + t) % m] for t in range(1, (j - i) % m)]
    bwd = [hull[(i - t) % m] for t in range(1, (i - j) % m)]
    return fwd if len(fwd) >= len(bwd) else bwd


def _heart_build(inst: Instance, s1, s2, s3, left: list[int], right: list[int],
                 far2: list[int], far3: list[int], branch: str) -> Partition | None:
    c = inst.c
    h1 = convex_hull(c, [s1, s2, *left])
    h2 = convex_hull(c, [s1, s3, *right])
    ch1 = _hull_path(h1, s1, s2)  # s1 -> s2
    ch2 = _hull_path(h2, s3, s1)  # s3 -> s1
    order = [s2, s3, *ch2, s1, *ch1]
    first = inst.poly(order)
    g2 = frozenset(set(left) - set(ch1)) | frozenset(far2)
    g3 = frozenset(set(right) - set(ch2)) | frozenset(far3)
    if len(g2) in (1, 2) or len(g3) in (1, 2):
        return None
    fixed = [first]
    groups = [g for g in (g2, g3) if g]
    fitted = _fit(inst, fixed, groups) if groups else []
    if fitted is None:
        return None
    return inst.finish(fixed + fitted, branch)


def heart_partition(cert: HeartCertificate, S, branch: str = "heart") -> Partition:
    inst = S if isinstance(S, Instance) else Instance(as_point_set(S))
    s1, (s2, s3) = cert.pivot, cert.base
    far2, far3 = _heart_counts(inst, s1, s2, s3)
    if (len(far2), len(far3)) != (cert.a, cert.b) or not heart_conditions(inst, s1, s2, s3):
        raise InvalidCertificate("certificate does not match the point set")
    tri = inst.in_triangle(s1, s2, s3)
    s2_side = _sgn(orient(inst.c[s1], cert.alpha, inst.c[s2]))
    left = [i for i in tri if _sgn(orient(inst.c[s1], cert.alpha, inst.c[i])) == s2_side]
    right = [i for i in tri if i not in set(left)]
    P = _heart_build(inst, s1, s2, s3, left, right, far2, far3, branch)
    if P is None:
        raise BranchMisfire("heart construction left an unusable residue")
    return P


def heart_attempt(inst: Instance, s1: int, s2: int, s3: int, branch: str) -> Partition | None:
    """Heart with pivot s1 and base s2s3, trying the prescribed split first."""
    if len({s1, s2, s3}) != 3 or not heart_conditions(inst, s1, s2, s3):
        return None
    far2, far3 = _heart_counts(inst, s1, s2, s3)
    tri = angular_order(inst.c[s1], inst.c[s2], inst.c, inst.in_triangle(s1, s2, s3))
    k0 = min(max(5 - len(far2), 0), len(tri))
    for k in sorted(range(len(tri) + 1), key=lambda t: (abs(t - k0), t)):
        P = _heart_build(inst, s1, s2, s3, tri[:k], tri[k:], far2, far3, branch)
        if P is not None:
            return P
    return None


def heart_partitions(inst: Instance, branch: str) -> Iterator[Partition]:
    for s1 in range(inst.n):
        for s2, s3 in itertools.permutations([j for j in range(inst.n) if j != s1], 2):
            if s2 < s3:
                P = heart_attempt(inst, s1, s2, s3, branch)
                if P is not None:
                    yield P


# -- |CH| <= 5 --------------------------------------------------------------------

def small_hull_partitions(inst: Instance) -> Iterator[Partition]:
    k = len(inst.hull)
    yield from ear_partitions(inst, f"hull{k}.ear")
    if k == 5:
        h = inst.hull
        for r in range(5):
            for hh in (h[r:] + h[:r], list(reversed(h[r + 1:] + h[:r + 1]))):
                P = heart_attempt(inst, hh[0], hh[2], hh[3], "hull5.heart")
                if P is not None:
                    yield P


# -- |CH| = 6 ----------------------------------------------------------------------

@dataclass(frozen=True)
class HexagonRegions:
    labels: tuple  # s1..s6 as point ids
    members: tuple  # members[j] = ids in region R_{j+1}

    def size(self, j: int) -> int:
        return len(self.members[j - 1])


@dataclass(frozen=True)
class SplitterProfile:
    counts: tuple  # per diagonal s_i s_{i+3}: (a, b), a <= b

    @property
    def all_34(self) -> bool:
        return all(c == (3, 4) for c in self.counts)


def _labelings(h: list[int], step: int = 1):
    m = len(h)
    for r in range(0, m, step):
        yield h[r:] + h[:r]
        yield list(reversed(h[r + 1:] + h[:r + 1]))


def splitter_profile(inst: Instance, lab: list[int]) -> SplitterProfile:
    out = []
    for i in range(3):
        a = len(inst.same_side(lab[i], lab[i + 3], lab[i + 1], inst.interior))
        b = len(inst.interior) - a
        out.append((min(a, b), max(a, b)))
    return SplitterProfile(tuple(out))


def hexagon_regions(inst: Instance, lab: list[int]) -> HexagonRegions | None:
    """Regions R1..R7 for labels s1..s6, or None if this labelling is not canonical.

    R1..R6 touch the hull edges s6s1, s1s2, ..., s5s6; R7 is the central
    triangle of the three main diagonals, which in the canonical pose lies on
    the s2 side of s1s4, the s1 side of s2s5 and the s4 side of s3s6.
    """
    c = inst.c
    s = [c[i] for i in lab]
    diags = [(0, 3, 1), (1, 4, 2), (2, 5, 3)]

    def signature(r):
        return tuple(_sgn(orient(s[i], s[j], r)) == _sgn(orient(s[i], s[j], s[ref])) for i, j, ref in diags)

    x12 = _line_cross(s[0], s[3], s[1], s[4])
    x23 = _line_cross(s[1], s[4], s[2], s[5])
    x13 = _line_cross(s[0], s[3], s[2], s[5])
    centre = ((x12[0] + x23[0] + x13[0]) / 3, (x12[1] + x23[1] + x13[1]) / 3)
    if signature(centre) != (True, False, True):
        return None
    edge_sig = {}
    for j in range(6):
        a, b = s[(j - 1) % 6], s[j]
        edge_sig[signature((Fraction(a[0] + b[0], 2), Fraction(a[1] + b[1], 2)))] = j
    members = [[] for _ in range(7)]
    for i in inst.interior:
        members[edge_sig.get(signature(c[i]), 6)].append(i)
    return HexagonRegions(tuple(lab), tuple(tuple(m) for m in members))


def iterative_pivot_search(regions: HexagonRegions, inst: Instance) -> int:
    """Point p of R1 that, with base s3s4, forms a heart (found by nested cones)."""
    R = regions
    s = regions.labels
    s3, s4, s6, s2 = s[2], s[3], s[5], s[1]
    if not (R.size(4) + R.size(7) >= 2 and R.size(1) >= 1):
        raise BranchMisfire("pivot search preconditions fail")
    b2 = R.size(5) + R.size(6)
    r1 = list(R.members[0])
    order = angular_order(inst.c[s3], inst.c[s6], inst.c, r1)
    k = 3 - b2
    if not 1 <= k <= len(order):
        raise BranchMisfire("no starting candidate in R1")
    q = order[k - 1]
    hull_pts = [inst.c[i] for i in inst.hull]
    for _ in range(len(r1)):
        cq = inst.c[q]
        # rays s3->q and s4->q continued past q, cast from q itself
        a1 = ray_hull_exit(cq, (2 * cq[0] - inst.c[s3][0], 2 * cq[1] - inst.c[s3][1]), hull_pts)
        a2 = ray_hull_exit(cq, (2 * cq[0] - inst.c[s4][0], 2 * cq[1] - inst.c[s4][1]), hull_pts)
        cone = inst.in_cone(q, a1, a2)
        if not cone:
            tri = set(inst.in_triangle(q, s3, s4))
            u = [i for i in inst.in_cone(s3, q, s4) if i not in tri]
            v = inst.same_side(s3, q, s2)
            if len(u) > 4 or len(v) > 4:
                raise BranchMisfire("pivot candidate violates the side bounds")
            return q
        nxt = [i for i in cone if i in set(r1)]
        if not nxt:
            raise BranchMisfire("exit cone holds no point of R1")
        q = angular_order(inst.c[s3], inst.c[q], inst.c, nxt)[0]
    raise BranchMisfire("pivot search did not terminate")


def hexagon_partitions(inst: Instance) -> Iterator[Partition]:
    h = inst.hull
    for lab in _labelings(h):
        # a diagonal s2s5 with at least 5 interior points on the s3 side
        if len(inst.same_side(lab[1], lab[4], lab[2], inst.interior)) >= 5:
            i4 = h.index(lab[3])
            if len(inst.in_triangle(lab[2], lab[3], lab[4], inst.interior)) >= 2:
                for mirror in (False, True):
                    P = ear_partition(inst, i4, mirror, "hull6.splitter.ear")
                    if P is not None:
                        yield P
            else:
                P = heart_attempt(inst, lab[4], lab[1], lab[2], "hull6.splitter.heart")
                if P is not None:
                    yield P
    prof = splitter_profile(inst, h)
    if not prof.all_34:
        return
    for lab in _labelings(h):
        R = hexagon_regions(inst, lab)
        if R is None:
            continue
        s = R.labels
        if R.size(4) + R.size(7) >= 2:
            if R.size(1) == 0:
                raise AssertionError("R1 empty contradicts the (3,4)-splitter profile")
            try:
                p = iterative_pivot_search(R, inst)
            except BranchMisfire:
                continue
            P = heart_attempt(inst, p, s[2], s[3], "hull6.case1")
            if P is not None:
                yield P
        elif R.size(2) + R.size(7) <= 1 and R.size(6) + R.size(7) <= 1 and R.size(1) >= 2:
            for p in R.members[3] + R.members[6]:
                P = heart_attempt(inst, p, s[0], s[5], "hull6.case3")
                if P is not None:
                    yield P


# -- |CH| >= 9 ----------------------------------------------------------------------

def _arc_parts(inst: Instance, arc: list[int], pieces: int) -> list[list[int]] | None:
    """Split a contiguous hull arc into ``pieces`` contiguous sub-arcs of size >= 3, as even as possible."""
    m = len(arc)
    if pieces == 0:
        return [] if m == 0 else None
    if m < 3 * pieces:
        return None
    sizes = [m // pieces + (1 if t < m % pieces else 0) for t in range(pieces)]
    out, k = [], 0
    for sz in sizes:
        out.append(arc[k:k + sz])
        k += sz
    return out


def high_hull_partitions(inst: Instance) -> Iterator[Partition]:
    k = len(inst.hull)
    h = inst.hull
    inner = inst.interior
    if len(inner) >= 3:
        yield from outer_halfplane_partitions(inst, f"hull{k}.halfplane")
        return
    if len(inner) == 0:
        # contiguous arcs 5, 4, 4
        parts = [inst.poly(h[0:5]), inst.poly(h[5:9]), inst.poly(h[9:13])]
        P = inst.finish(parts, "hull13.arcs")
        if P is not None:
            yield P
        return
    if len(inner) == 1:
        p = inner[0]
        c = inst.c
        # arcs cut off by a line through p, preferring 4 hull points on one side
        for want in (4, 5, 6, 3, 2, 7, 8, 9):
            for i in range(k):
                arc = [h[(i + t) % k] for t in range(want)]
                comp = [h[(i + want + t) % k] for t in range(k - want)]
                if orient(c[p], c[arc[0]], c[arc[-1]]) <= 0 or orient(c[p], c[comp[0]], c[comp[-1]]) <= 0:
                    continue
                split = _arc_parts(inst, comp, 1 if len(comp) <= 5 else 2)
                if split is None:
                    continue
                parts = [inst.poly([p, *arc])] + [inst.poly(a) for a in split]
                P = inst.finish(parts, "hull12.rotating_line")
                if P is not None:
                    yield P
                    return
        return
    # two interior points: the segment's sides act as outer halfplanes
    p, q = inner
    for ref_side in (1, -1):
        one = [i for i in h if inst.side(p, q, i) == ref_side]
        other = [i for i in h if inst.side(p, q, i) == -ref_side]
        if len(one) < 3:
            continue
        first = inst.poly(convex_hull(inst.c, [p, q, *one]))
        if len(other) == 0 or len(other) >= 3:
            arcs = _arc_parts(inst, _as_arc(h, other), 1 if len(other) <= 5 else 2) if other else []
            if arcs is not None:
                P = inst.finish([first] + [inst.poly(a) for a in arcs], "hull11.segment")
                if P is not None:
                    yield P
                    return
    # any contiguous arc whose union with both interior points is a hole
    for want in range(1, k):
        for i in range(k):
            arc = [h[(i + t) % k] for t in range(want)]
            comp = [h[(i + want + t) % k] for t in range(k - want)]
            opts = inst.options({p, q, *arc})
            if not opts:
                continue
            for pieces in (1, 2):
                split = _arc_parts(inst, comp, pieces)
                if split is None:
                    continue
                P = inst.finish([opts[0]] + [inst.poly(a) for a in split], "hull11.segment")
                if P is not None:
                    yield P
                    return


def _as_arc(h: list[int], subset: list[int]) -> list[int]:
    """Order a contiguous subset of the hull cycle from one end to the other."""
    sub = set(subset)
    k = len(h)
    start = next(i for i in range(k) if h[i] in sub and h[(i - 1) % k] not in sub)
    out = []
    i = start
    while h[i % k] in sub and len(out) < len(sub):
        out.append(h[i % k])
        i += 1
    return out


# -- regions outside the second layer ------------------------------------------------

def sweep_order(origin, start, toward, coords, ids) -> list[int]:
    """Ids by angle around ``origin``, starting at ray origin->start and turning toward ``toward``."""
    sense = _sgn(orient(origin, start, toward))
    dx, dy = start[0] - origin[0], start[1] - origin[1]

    def key(i):
        vx, vy = coords[i][0] - origin[0], coords[i][1] - origin[1]
        cr = sense * (dx * vy - dy * vx)
        dot = dx * vx + dy * vy
        half = 0 if cr > 0 or (cr == 0 and dot > 0) else 1
        return half, i, vx, vy

    def cmp(i, j):
        hi, _, ax, ay = key(i)
        hj, _, bx, by = key(j)
        if hi != hj:
            return hi - hj
        c = sense * (ax * by - ay * bx)
        return -1 if c > 0 else 1 if c < 0 else i - j

    return sorted(ids, key=functools.cmp_to_key(cmp))


def layer_regions(inst: Instance, lab: list[int]) -> tuple[dict, dict]:
    """Assign hull points outside the polygon ``lab`` to edge or wedge regions.

    Returns ``(edge, wedge)``: ``edge[j]`` holds points beyond edge
    lab[j]lab[j+1] only; ``wedge[j]`` holds points beyond both edges at
    vertex lab[j].  A point seeing a longer run of edges goes to the first
    wedge of the run.
    """
    m = len(lab)
    edge = {j: [] for j in range(m)}
    wedge = {j: [] for j in range(m)}
    for x in inst.hull:
        seen = [inst.side(lab[j], lab[(j + 1) % m], x) == -inst.side(lab[j], lab[(j + 1) % m], lab[(j + 2) % m])
                for j in range(m)]
        run = [j for j in range(m) if seen[j]]
        if not run:
            continue
        start = next(j for j in run if not seen[(j - 1) % m])
        length = 1
        while seen[(start + length) % m] and length < m:
            length += 1
        if length == 1:
            edge[start].append(x)
        else:
            wedge[(start + 1) % m].append(x)
    return edge, wedge


def _cap(inst: Instance, a: int, b: int, ref: int) -> list[int]:
    return inst.same_side(a, b, ref)


# -- |CH| = 8 -------------------------------------------------------------------------

def ch8_partitions(inst: Instance) -> Iterator[Partition]:
    m = len(inst.l2)
    yield from outer_halfplane_partitions(inst, "hull8.halfplane")
    c = inst.c
    if m == 4 and len(inst.l3) == 1:
        p = inst.l3[0]
        for lab in _labelings(inst.l2):
            p1, p2, p3, p4 = lab
            if inst.side(p1, p3, p) != inst.side(p1, p3, p2) or inst.side(p2, p4, p) != inst.side(p2, p4, p3):
                continue
            edge, wedge = layer_regions(inst, lab)
            r4 = edge[1]
            first = inst.options({p, p2, p3, *r4})
            if not first:
                continue
            alpha = _line_cross(c[p1], c[p3], c[p2], c[p4])
            rest = [i for i in range(inst.n) if i not in first[0].members]
            order = sweep_order(alpha, c[p2], c[p1], c, rest)
            P = _attempt(inst, [first[0]], rest, "hull8.case1", hints=[[order[:4], order[4:]]])
            if P is not None:
                yield P
    elif m == 5:
        for lab in _labelings(inst.l2):
            p1, p2, p3, p4, p5 = lab
            edge, wedge = layer_regions(inst, lab)
            r2 = edge[4]  # beyond p5p1
            if len(r2) != 2:
                continue
            r7 = wedge[2]  # at p3
            hull_set = set(inst.hull)
            z1 = [i for i in inst.same_side(p3, p5, p4) if i in hull_set and i not in r7]
            z2 = [i for i in inst.same_side(p3, p1, p2) if i in hull_set and i not in r7]
            first = inst.options({p1, p3, p5, *r2})
            if r7:
                if not first:
                    continue
                rest = [i for i in range(inst.n) if i not in first[0].members]
                order = sweep_order(c[p3], c[p1], c[p5], c, rest)
                P = _attempt(inst, [first[0]], rest, "hull8.case2.1", hints=[[order[:4], order[4:]]])
                if P is not None:
                    yield P
                continue
            if len(z1) == 3 and len(z2) == 3 and first:
                P = inst.finish([first[0]] + [o for o in (inst.options({*z1, p4}) or [None])[:1]]
                                + [o for o in (inst.options({*z2, p2}) or [None])[:1]], "hull8.case2.2") \
                    if inst.options({*z1, p4}) and inst.options({*z2, p2}) else None
                if P is not None:
                    yield P
                    continue
            if len(z1) == 4:
                r6 = edge[1]  # beyond p2p3
                if not r6:
                    continue
                si = angular_order(c[p1], c[p3], c, r6)[0]
                hole = inst.options({p1, p5, si, *r2})
                if not hole:
                    continue
                rest = [i for i in range(inst.n) if i not in hole[0].members]
                order = sweep_order(c[p3], c[p1], c[p5], c, [i for i in rest if i != p3])
                P = _attempt(inst, [hole[0]], rest, "hull8.case2.2")
                if P is not None:
                    yield P


# -- |CH| = 7 -------------------------------------------------------------------------

def _inner_pentagon(inst: Instance, lab: list[int], p: int) -> bool:
    return all(inst.side(lab[i - 1], lab[(i + 1) % 5], p) != inst.side(lab[i - 1], lab[(i + 1) % 5], lab[i])
               for i in range(5))


def _cone_pts(inst: Instance, apex: int, a: int, b: int) -> list[int]:
    return inst.in_cone(apex, a, b)


def _explicit(inst: Instance, groups: list, branch: str) -> Partition | None:
    """Partition from explicit member groups, checking every polygonization combination."""
    groups = [frozenset(g) for g in groups if g]
    if sum(len(g) for g in groups) != inst.n or len(set().union(*groups)) != inst.n:
        return None
    parts = _fit(inst, [], groups)
    return None if parts is None else inst.finish(parts, branch)


def ch7_partitions(inst: Instance) -> Iterator[Partition]:
    yield from outer_halfplane_partitions(inst, "hull7.halfplane")
    m = len(inst.l2)
    c = inst.c
    allpts = set(range(inst.n))
    if m == 4 and len(inst.l3) == 2:
        for lab in _labelings(inst.l2):
            p1, p2, p3, p4 = lab
            edge, wedge = layer_regions(inst, lab)
            r2, r4 = edge[0], edge[1]
            if len(r2) != 2 or len(r4) != 2:
                continue
            p, q = angular_order(c[p3], c[p2], c, inst.l3)
            r78 = wedge[3] + edge[3]  # wedge at p4 and edge p4p1
            k = len(r78)
            if k == 0:
                continue
            si = angular_order(c[p1], c[p4], c, r78)[k - 1]
            s2 = {p1, si, *r2}
            s1 = {p2, p3, p, *r4}
            label = "hull7.case1.1" if k == 1 else "hull7.case1.2"
            if k == 2:
                for sj in [x for x in edge[3] if inst.side(p3, p, x) == inst.side(p3, p, p2)]:
                    big = s1 | {sj}
                    P = _explicit(inst, [big, s2, allpts - big - s2], label)
                    if P is not None:
                        yield P
            P = _explicit(inst, [s1, s2, allpts - s1 - s2], label)
            if P is not None:
                yield P
            for first in inst.options(s1):
                P = _attempt(inst, [first], allpts - s1, label, hints=[[s2, allpts - s1 - s2]])
                if P is not None:
                    yield P
    elif m == 5 and len(inst.l3) == 1:
        p = inst.l3[0]
        for lab in _labelings(inst.l2):
            p1, p2, p3, p4, p5 = lab
            R = [_cone_pts(inst, p, lab[i], lab[(i + 1) % 5]) for i in range(5)]
            R = [[x for x in r if x in set(inst.hull)] for r in R]
            n1, n2, n3, n4, n5 = (len(r) for r in R)
            if _inner_pentagon(inst, lab, p):
                if n1 != 2:
                    continue
                s1 = {p, p1, p2, *R[0]}
                if n2 + n3 == 2 and n4 + n5 == 3:
                    g2 = set(_cone_pts(inst, p, p1, p4))
                    g3 = set(_cone_pts(inst, p, p2, p4)) | {p4}
                    P = _explicit(inst, [s1, g2, g3], "hull7.case2.1")
                    if P is not None:
                        yield P
                if n2 + n3 == 4:
                    t1 = {p, p2, p3, *R[1]}
                    a, b = set(_cone_pts(inst, p, p2, p5)), set(_cone_pts(inst, p, p3, p5))
                    for g2, g3 in ((a | {p5}, b), (a, b | {p5})):
                        P = _explicit(inst, [t1, g2, g3], "hull7.case2.1")
                        if P is not None:
                            yield P
            elif p in inst.in_triangle(p1, p2, p5):
                if n1 + n5 <= 3:
                    far = set(inst.other_side(p3, p4, p1))
                    g2 = {p1, *R[0], *R[4]}
                    g1 = {p, p2, p3, p4, p5} | (set(R[1]) | set(R[3])) - far
                    P = _explicit(inst, [g1, g2, far], "hull7.case2.2")
                    if P is not None:
                        yield P
                    # the far cap can be too small to stand alone; keep S2 and re-split the rest
                    for first in inst.options(g2):
                        P = _attempt(inst, [first], allpts - g2, "hull7.case2.2", hints=[[g1, far]])
                        if P is not None:
                            yield P
                elif n1 == 2 and n5 == 2:
                    g = {p, p1, p5, *R[4]}
                    if n2 <= 1:
                        P = _explicit(inst, [g, set(_cone_pts(inst, p, p1, p3)), set(_cone_pts(inst, p, p5, p3))],
                                      "hull7.case2.2")
                        if P is not None:
                            yield P
                    rest = sorted(allpts - g)
                    order = sweep_order(c[p], c[p1], c[p2], c, rest)
                    for first in inst.options(g):
                        P = _attempt(inst, [first], rest, "hull7.case2.2", hints=[[order[:4], order[4:]]])
                        if P is not None:
                            yield P
    elif m == 6:
        for lab in _labelings(inst.l2):
            edge, wedge = layer_regions(inst, lab)
            # R_{2j+1} is edge lab[j-1]lab[j]; R7 is edge p3p4 = edge[2]
            odd = {2 * j + 1: edge[(j - 1) % 6] for j in range(6)}
            r7 = odd[7]
            if len(r7) == 2:
                label = "hull7.case3.1"
                pairs = (5, 0)
            elif len(r7) == 1 and all(len(v) <= 1 for v in odd.values()):
                label = "hull7.case3.2"
                pairs = (5, 0, 1)
            else:
                continue
            for a in pairs:
                P = _opposite_edges(inst, lab, a, edge, label)
                if P is not None:
                    yield P


def _opposite_edges(inst: Instance, lab: list[int], a: int, edge: dict, branch: str) -> Partition | None:
    """Quadrilateral on two opposite second-layer edges plus the points beyond them; caps form the rest."""
    e1 = (lab[a], lab[(a + 1) % 6])
    e2 = (lab[(a + 3) % 6], lab[(a + 4) % 6])
    first = {*e1, *e2, *edge[a], *edge[(a + 3) % 6]}
    cap1 = set(_cap(inst, lab[(a + 1) % 6], lab[(a + 3) % 6], lab[(a + 2) % 6])) - first
    cap2 = set(_cap(inst, lab[(a + 4) % 6], lab[a], lab[(a + 5) % 6])) - first
    P = _explicit(inst, [first, cap1, cap2], branch)
    if P is not None:
        return P
    for part in inst.options(first):
        P = _attempt(inst, [part], set(range(inst.n)) - first, branch, hints=[[cap1, cap2]])
        if P is not None:
            return P
    return None


# -- dispatch ---------------------------------------------------------------------------

def _case_partitions(inst: Instance) -> Iterator[Partition]:
    k = len(inst.hull)
    if k <= 5:
        yield from small_hull_partitions(inst)
    elif k == 6:
        yield from hexagon_partitions(inst)
    elif k == 7:
        yield from ch7_partitions(inst)
    elif k == 8:
        yield from ch8_partitions(inst)
    else:
        yield from high_hull_partitions(inst)


def _generic_partitions(inst: Instance) -> Iterator[Partition]:
    k = len(inst.hull)
    yield from outer_halfplane_partitions(inst, f"hull{k}.generic.halfplane")
    yield from ear_partitions(inst, f"hull{k}.generic.ear")
    yield from heart_partitions(inst, f"hull{k}.generic.heart")
    yield from line_cut_partitions(inst, f"hull{k}.generic.line_cut")


def line_cut_partitions(inst: Instance, branch: str) -> Iterator[Partition]:
    """Cut by the line through two points; one open side plus the pair is a part.

    Used when the case constructions leave an unusable residue: the part on
    one side is convex-separated from the other side, so only the residue on
    the far side needs completing.
    """
    everyone = range(inst.n)
    for a, b in itertools.combinations(everyone, 2):
        for sign in (1, -1):
            near = [i for i in everyone if i not in (a, b) and inst.side(a, b, i) == sign]
            far = [i for i in everyone if i not in (a, b) and inst.side(a, b, i) == -sign]
            for extra in ((a, b), (a,), (b,), ()):
                block = {*near, *extra}
                rest = set(far) | ({a, b} - set(extra))
                if len(block) < 3 or len(rest) > 9:
                    continue
                opts = inst.options(block)
                for part in opts[:2]:
                    P = _attempt(inst, [part], rest, branch)
                    if P is not None:
                        yield P
                        break


def partition_13(S, *, fallback: bool = True) -> Partition:
    """At most three disjoint holes or empty pseudo-triangles covering 13 points."""
    S = as_point_set(S)
    if len(S) != 13:
        raise BadInput(f"expected 13 points, got {len(S)}")
    inst = Instance(S)
    P = next(_case_partitions(inst), None)
    if P is None:
        P = next(_generic_partitions(inst), None)
    if P is None:
        if not fallback:
            raise BranchMisfire("no construction applies")
        from .oracle import admissible_3_partition

        log.warning("case analysis found nothing for %s; using exhaustive search", S.coords)
        P = admissible_3_partition(S)
        P = Partition(P.parts, "fallback", S)
    return P


def _single(gen: Iterator[Partition], what: str) -> Partition:
    P = next(gen, None)
    if P is None:
        raise BranchMisfire(f"{what}: no construction applies")
    return P


def hexagon_partition(S) -> Partition:
    inst = Instance(as_point_set(S))
    if len(inst.hull) != 6:
        raise BadInput("hexagon_partition needs |CH(S)| = 6")
    return _single(hexagon_partitions(inst), "hexagon")


def ch7_partition(S) -> Partition:
    inst = Instance(as_point_set(S))
    if len(inst.hull) != 7:
        raise BadInput("ch7_partition needs |CH(S)| = 7")
    return _single(ch7_partitions(inst), "|CH|=7")


def ch8_partition(S) -> Partition:
    inst = Instance(as_point_set(S))
    if len(inst.hull) != 8:
        raise BadInput("ch8_partition needs |CH(S)| = 8")
    return _single(ch8_partitions(inst), "|CH|=8")


def high_hull_partition(S) -> Partition:
    inst = Instance(as_point_set(S))
    if len(inst.hull) < 9:
        raise BadInput("high_hull_partition needs |CH(S)| >= 9")
    return _single(high_hull_partitions(inst), "|CH|>=9")
