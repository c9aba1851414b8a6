"""Seeded point-set generators and the text point-file format.

Randomness comes from numpy's PCG64 seeded through ``SeedSequence`` with
the spec fields mixed in, so a given ``GenSpec`` yields the same points on
every platform.  Collinear or coincident draws are repaired by re-drawing
only the newest point.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .exceptions import BadInput, BadSpec
from .geometry import COORD_LIMIT, PointSet, convex_hull, convex_layers

KINDS = ("uniform", "convex_position", "fixed_hull_size", "fixed_layer_profile", "fixture")
_KIND_CODE = {k: i for i, k in enumerate(KINDS)}
MAX_TRIES = 10_000


@dataclass(frozen=True)
class GenSpec:
    kind: str = "uniform"
    n: int = 13
    seed: int = 0
    bbox: int = 10**6
    hull: int | None = None
    profile: tuple = field(default_factory=tuple)
    name: str | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise BadSpec(f"unknown kind {self.kind!r}")
        if self.kind != "fixture" and self.n < 1:
            raise BadSpec("n must be at least 1")
        if not 1 <= self.bbox <= COORD_LIMIT:
            raise BadSpec("bbox must lie in [1, 2**30]")
        if self.kind == "fixed_hull_size":
            if self.hull is None or not 3 <= self.hull <= self.n:
                raise BadSpec(f"hull size {self.hull} infeasible for n={self.n}")
        if self.kind == "fixed_layer_profile":
            prof = tuple(self.profile)
            if sum(prof) != self.n or not prof:
                raise BadSpec("layer profile must sum to n")
            if any(m < 3 for m in prof[:-1]) or prof[-1] < 1:
                raise BadSpec("only the innermost layer may have fewer than 3 points")
        if self.kind == "fixture" and self.name is None:
            raise BadSpec("fixture kind needs a name")

    def rng(self) -> np.random.Generator:
        words = [self.seed & 0xFFFFFFFFFFFFFFFF, _KIND_CODE[self.kind], self.n, self.bbox,
                 self.hull or 0, *self.profile]
        return np.random.Generator(np.random.PCG64(np.random.SeedSequence(words)))


def _direction(dx: int, dy: int):
    g = gcd(dx, dy)
    if g == 0:
        return None
    dx, dy = dx // g, dy // g
    return (-dx, -dy) if dx < 0 or (dx == 0 and dy < 0) else (dx, dy)


def _fits(pts: list, cand: tuple) -> bool:
    """Adding ``cand`` keeps the set free of coincidences and collinear triples."""
    seen = set()
    for p in pts:
        d = _direction(cand[0] - p[0], cand[1] - p[1])
        if d is None or d in seen:
            return False
        seen.add(d)
    return True


def _draw(pts: list, sampler) -> None:
    for _ in range(MAX_TRIES):
        cand = sampler()
        if _fits(pts, cand):
            pts.append(cand)
            return
    raise BadSpec("could not place a point in general position; enlarge bbox")


def _uniform(spec: GenSpec, rng) -> list:
    b = spec.bbox
    pts: list = []
    for _ in range(spec.n):
        _draw(pts, lambda: (int(rng.integers(-b, b + 1)), int(rng.integers(-b, b + 1))))
    return pts


def _ring_sampler(rng, radius: float, k: int, m: int, phase: float, jitter: float = 0.3):
    def sample():
        theta = phase + 2 * math.pi * (k + jitter * (rng.random() - 0.5)) / m
        return int(round(radius * math.cos(theta))), int(round(radius * math.sin(theta)))
    return sample


def _rings(spec: GenSpec, rng, sizes: Sequence[int]) -> list:
    """Concentric rings, each shrunk enough to sit inside the previous one."""
    radius = 0.95 * spec.bbox
    pts: list = []
    for depth, m in enumerate(sizes):
        phase = 2 * math.pi * rng.random()
        if m == 1:
            _draw(pts, lambda r=radius: (int(rng.integers(-int(r * 0.3), int(r * 0.3) + 1)),
                                         int(rng.integers(-int(r * 0.3), int(r * 0.3) + 1))))
        elif m == 2:
            for k in range(2):
                _draw(pts, _ring_sampler(rng, radius * 0.5, k, 2, phase))
        else:
            for k in range(m):
                _draw(pts, _ring_sampler(rng, radius, k, m, phase))
        inner = math.cos(math.pi * 1.3 / max(m, 3)) if m >= 3 else 0.5
        radius *= inner * (0.55 + 0.3 * rng.random())
    return pts


def _convex(spec: GenSpec, rng) -> list:
    for _ in range(100):
        pts = _rings(spec, rng, [spec.n])
        if len(convex_hull(pts)) == spec.n:
            return pts
    raise BadSpec("could not draw points in convex position; enlarge bbox")


def _hull_size(spec: GenSpec, rng) -> list:
    h, n = spec.hull, spec.n
    for _ in range(200):
        pts = _rings(spec, rng, [h])
        r = 0.95 * spec.bbox * math.cos(math.pi * 1.3 / h) * 0.8
        for _ in range(n - h):
            _draw(pts, lambda: _disk(rng, r))
        if len(convex_hull(pts)) == h:
            return pts
    raise BadSpec(f"could not draw hull size {h}")


def _disk(rng, r: float) -> tuple:
    while True:
        x, y = rng.random() * 2 - 1, rng.random() * 2 - 1
        if x * x + y * y <= 1:
            return int(round(r * x)), int(round(r * y))


def _profile(spec: GenSpec, rng) -> list:
    want = tuple(spec.profile)
    for _ in range(500):
        pts = _rings(spec, rng, want)
        if convex_layers(pts).sizes == want:
            return pts
    raise BadSpec(f"could not realise layer profile {want}")


def generate(spec: GenSpec) -> PointSet:
    """Deterministic general-position point set for ``spec``."""
    if spec.kind == "fixture":
        from .fixtures import FIXTURES

        if spec.name not in FIXTURES:
            raise BadSpec(f"unknown fixture {spec.name!r}")
        return PointSet(FIXTURES[spec.name])
    rng = spec.rng()
    build = {"uniform": _uniform, "convex_position": _convex,
             "fixed_hull_size": _hull_size, "fixed_layer_profile": _profile}[spec.kind]
    if spec.kind == "convex_position" and spec.n < 3:
        pts = _uniform(spec, rng)
    else:
        pts = build(spec, rng)
    return PointSet(pts)


# -- point files -----------------------------------------------------------------

def format_points(S) -> str:
    coords = S.coords if isinstance(S, PointSet) else [tuple(p[:2]) for p in S]
    return f"{len(coords)}\n" + "".join(f"{x} {y}\n" for x, y in coords)


def parse_points(text: str, *, check: bool = True) -> PointSet:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise BadInput("empty point file")
    try:
        n = int(lines[0])
        coords = [tuple(int(v) for v in ln.split()) for ln in lines[1:]]
    except ValueError as exc:
        raise BadInput(f"malformed point file: {exc}") from None
    if any(len(c) != 2 for c in coords):
        raise BadInput("each point line must hold exactly two integers")
    if len(coords) != n:
        raise BadInput(f"header says {n} points, file lists {len(coords)}")
    return PointSet(coords, check=check)


def read_points(path, *, check: bool = True) -> PointSet:
    with open(path) as fh:
        return parse_points(fh.read(), check=check)


def write_points(S, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_points(S))
