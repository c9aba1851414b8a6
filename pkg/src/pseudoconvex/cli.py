"""Command-line front end.

Exit status: 0 on success, 1 when a partition fails verification, 2 on bad
input (malformed files, points not in general position, bad flags).
"""

from __future__ import annotations

import csv
import hashlib
import json
import sys
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

import click

from .algo13 import partition_13
from .exceptions import BadInput, BadSpec, BudgetExhausted, MalformedPart, PseudoConvexError
from .fixtures import BRANCH_FIXTURES
from .oracle import SearchBudget, min_partition
from .partition import Partition, verify_partition
from .partitioner import partition_any, sweep_plan
from .pointgen import GenSpec, format_points, generate, parse_points
from .svg import render_svg

EXIT_OK, EXIT_UNVERIFIED, EXIT_INPUT = 0, 1, 2


@dataclass(frozen=True)
class RunRecord:
    seed: int
    source: str
    n: int
    digest: str
    command: str
    branch: str
    parts: int
    verified: bool
    wall_time: float


def digest(S) -> str:
    """SHA-256 of the canonical point-file text."""
    return hashlib.sha256(format_points(S).encode()).hexdigest()


class InputError(click.ClickException):
    exit_code = EXIT_INPUT


def _read_points(path):
    try:
        with click.open_file(path) as fh:
            return parse_points(fh.read())
    except BadInput as exc:
        raise InputError(f"{path}: {exc}") from None
    except OSError as exc:
        raise InputError(str(exc)) from None


def _read_partition(path) -> Partition:
    try:
        with click.open_file(path) as fh:
            return Partition.from_json(json.load(fh))
    except (BadInput, MalformedPart) as exc:
        raise InputError(f"{path}: {exc}") from None
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: malformed partition JSON ({exc})") from None
    except OSError as exc:
        raise InputError(str(exc)) from None


def _emit(text: str, out) -> None:
    with click.open_file(out or "-", "w") as fh:
        fh.write(text)


def _result(P: Partition, extra: dict | None = None) -> tuple[str, bool]:
    rep = verify_partition(P)
    doc = P.to_json()
    doc["verified"] = rep.overall
    if not rep.overall:
        doc["failures"] = rep.failures()
    doc.update(extra or {})
    return json.dumps(doc, indent=1) + "\n", rep.overall


def _finish(P: Partition, out, svg, extra=None, plan=None) -> None:
    text, ok = _result(P, extra)
    _emit(text, out)
    if svg:
        cuts = plan.cut_lines if plan else ()
        with open(svg, "w") as fh:
            fh.write(render_svg(P, cuts, plan.direction if plan else None))
    if not ok:
        sys.exit(EXIT_UNVERIFIED)


@click.group()
@click.version_option(package_name="pseudoconvex")
def main():
    """Partition planar point sets into disjoint holes and empty pseudo-triangles."""


def _spec(kind, n, seed, bbox, hull, profile, name) -> GenSpec:
    prof = tuple(int(v) for v in profile.split(",")) if profile else ()
    try:
        return GenSpec(kind=kind, n=n, seed=seed, bbox=bbox, hull=hull, profile=prof, name=name)
    except BadSpec as exc:
        raise InputError(str(exc)) from None


_kind = click.option("--kind", type=click.Choice(["uniform", "convex_position", "fixed_hull_size",
                                                  "fixed_layer_profile", "fixture"]), default="uniform")


@main.command()
@_kind
@click.option("--n", type=int, default=13, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--bbox", type=int, default=10**6, show_default=True, help="Coordinates lie in [-bbox, bbox].")
@click.option("--hull", type=int, default=None, help="Hull size for fixed_hull_size.")
@click.option("--profile", default=None, help="Comma-separated layer sizes for fixed_layer_profile.")
@click.option("--name", default=None, help="Fixture name for kind=fixture.")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def gen(kind, n, seed, bbox, hull, profile, name, out):
    """Write a seeded point set in point-file format."""
    spec = _spec(kind, n, seed, bbox, hull, profile, name)
    try:
        S = generate(spec)
    except BadSpec as exc:
        raise InputError(str(exc)) from None
    _emit(format_points(S), out)


@main.command()
@click.argument("points", type=click.Path(dir_okay=False, allow_dash=True))
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--svg", type=click.Path(dir_okay=False), default=None)
def partition13(points, out, svg):
    """Split exactly 13 points into at most three parts."""
    S = _read_points(points)
    try:
        P = partition_13(S)
    except BadInput as exc:
        raise InputError(str(exc)) from None
    _finish(P, out, svg)


@main.command()
@click.argument("points", type=click.Path(dir_okay=False, allow_dash=True))
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--svg", type=click.Path(dir_okay=False), default=None)
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True)
def partition(points, out, svg, jobs):
    """Split any point set into at most ceil(3n/13) parts."""
    S = _read_points(points)
    P = partition_any(S, jobs=jobs)
    plan = sweep_plan(S)
    extra = {"direction": list(plan.direction), "cut_lines": [str(c) for c in plan.cut_lines]}
    _finish(P, out, svg, extra, plan)


@main.command()
@click.argument("parts", type=click.Path(dir_okay=False, allow_dash=True))
def verify(parts):
    """Check a partition JSON file; exit 1 with a witness if it is not admissible."""
    P = _read_partition(parts)
    rep = verify_partition(P)
    if rep.overall:
        click.echo(f"ok: {len(P.parts)} parts, n={len(P.points)}")
        return
    for line in rep.failures():
        click.echo(line)
    sys.exit(EXIT_UNVERIFIED)


@main.command()
@click.argument("points", type=click.Path(dir_okay=False, allow_dash=True))
@click.option("--max-parts", type=click.IntRange(min=1), default=3, show_default=True)
@click.option("--degenerate/--no-degenerate", default=False, help="Allow 1- and 2-point blocks.")
@click.option("--node-limit", type=click.IntRange(min=1), default=5_000_000, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def oracle(points, max_parts, degenerate, node_limit, out):
    """Exact minimum partition by exhaustive search (small inputs only)."""
    S = _read_points(points)
    budget = SearchBudget(max_parts=max_parts, node_limit=node_limit, allow_degenerate=degenerate)
    try:
        value, P = min_partition(S, budget)
    except BudgetExhausted as exc:
        click.echo(f"search gave up: {exc}", err=True)
        sys.exit(EXIT_UNVERIFIED)
    _finish(P, out, None, {"value": value})


@main.command()
@click.argument("parts", type=click.Path(dir_okay=False, allow_dash=True))
@click.option("--svg", "--out", "svg", type=click.Path(dir_okay=False), default=None)
def render(parts, svg):
    """Draw a partition JSON file as SVG."""
    P = _read_partition(parts)
    plan = sweep_plan(P.points) if P.branch.startswith("sweep") else None
    _emit(render_svg(P, plan.cut_lines if plan else (), plan.direction if plan else None), svg)


def run_one(args) -> RunRecord:
    command, spec = args
    S = generate(spec)
    t = time.perf_counter()
    P = partition_13(S) if command == "partition13" else partition_any(S)
    ok = verify_partition(P).overall
    wall = time.perf_counter() - t
    source = spec.name if spec.kind == "fixture" else spec.kind
    return RunRecord(spec.seed, source, len(S), digest(S), command, P.branch, len(P.parts), ok, round(wall, 6))


@main.command()
@_kind
@click.option("--n", type=int, default=13, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True, help="First seed.")
@click.option("--count", type=click.IntRange(min=0), default=100, show_default=True)
@click.option("--bbox", type=int, default=10**6, show_default=True)
@click.option("--hull", type=int, default=None)
@click.option("--profile", default=None)
@click.option("--fixtures", "with_fixtures", is_flag=True, help="Also run every branch fixture.")
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="CSV of run records.")
def sweep(kind, n, seed, count, bbox, hull, profile, with_fixtures, jobs, out):
    """Batch run with a CSV of run records and a branch histogram."""
    command = "partition13" if n == 13 else "partition"
    specs = [_spec(kind, n, s, bbox, hull, profile, None) for s in range(seed, seed + count)] if kind != "fixture" else []
    if with_fixtures or kind == "fixture":
        specs += [GenSpec(kind="fixture", seed=-1 - k, name=name) for k, name in enumerate(BRANCH_FIXTURES)]
    tasks = [("partition13" if s.kind == "fixture" else command, s) for s in specs]
    try:
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                records = list(pool.map(run_one, tasks, chunksize=16))
        else:
            records = [run_one(t) for t in tasks]
    except PseudoConvexError as exc:
        raise InputError(str(exc)) from None
    records.sort(key=lambda r: r.seed)
    with click.open_file(out or "-", "w") as fh:
        w = csv.DictWriter(fh, fieldnames=list(RunRecord.__dataclass_fields__))
        w.writeheader()
        for r in records:
            w.writerow(asdict(r))
    hist = Counter(r.branch for r in records)
    bad = sum(not r.verified for r in records)
    for branch, k in sorted(hist.items()):
        click.echo(f"{branch:32s} {k}", err=True)
    click.echo(f"runs={len(records)} unverified={bad} fallback={hist.get('fallback', 0)}", err=True)
    if bad:
        sys.exit(EXIT_UNVERIFIED)


def run(argv: list[str]) -> int:
    """Run the command line ``argv`` in-process and return its exit status."""
    try:
        main.main(args=list(argv), prog_name="pseudoconvex", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.exceptions.Abort:
        return 1
    except SystemExit as exc:
        return int(exc.code or 0)
    return EXIT_OK


if __name__ == "__main__":
    main()
