"""Command-line front end: generate, color, verify, and benchmark.

Subcommands
-----------
``gen``     write a cycle, complete, or Mycielski-construction graph as
            JSON (or DOT).
``color``   color assignments — either on a single odd cycle (pass
            ``--len``/``--n``) or on an arbitrary host graph through the
            cycle-cache pipeline (pass ``--graph``).
``verify``  run one brute-force verification suite (or ``all``),
            emitting one JSON report per line plus a summary table on
            stderr.
``bench``   time the O(n) per-vertex coloring and the exponential
            baseline.

Exit codes are stable API: 0 success, 1 verification violations,
2 usage, 3 parity-domain error, 4 isolated assignment, 5 capacity.

Cycle vertices are 0-based ids; ``--edge A,B`` names the distinguished
edge by those ids (default ``0,2n``).  The ``EXPO_CACHE`` environment
variable supplies a default cycle-cache path for ``color --graph``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import bench as bench_mod
from . import verify as verify_mod
from .coloring import CycleCache, color_in_kh, color_vertex, color_vertex_ck
from .errors import (
    CapacityError,
    IsolatedFunctionError,
    NoEvenCycleError,
    ParityDomainError,
)
from .graphs import (
    Graph,
    graph_to_dot,
    graph_to_json_dict,
    load_graph,
    make_complete,
    make_cycle,
    make_mycielski,
)
from .winding import OddCycleCtx

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_USAGE = 2
EXIT_PARITY = 3
EXIT_ISOLATED = 4
EXIT_CAPACITY = 5

_VERIFY_SUITES = (
    "chord-step",
    "label-congruence",
    "label-invariance",
    "little-path",
    "proper-k3",
    "proper-ck",
    "hitting-set",
    "baseline",
    "end-to-end",
    "all",
)


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _write_text(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")


# ---------------------------------------------------------------------------
# gen


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        if args.kind == "cycle":
            if args.len is None:
                raise ValueError("gen cycle requires --len")
            graph = make_cycle(args.len)
        elif args.kind == "complete":
            if args.k is None:
                raise ValueError("gen complete requires --k")
            graph = make_complete(args.k)
        else:  # mycielski
            if args.of is None:
                raise ValueError("gen mycielski requires --of BASE_GRAPH_JSON")
            graph = make_mycielski(load_graph(args.of))
        if args.format == "dot":
            _write_text(graph_to_dot(graph), args.out)
        else:
            _write_text(json.dumps(graph_to_json_dict(graph)), args.out)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        return _fail(str(exc), EXIT_USAGE)
    return EXIT_OK


# ---------------------------------------------------------------------------
# color


def _read_assignments(path: str | None) -> list[tuple[int, ...]]:
    """Accept one JSON array, an array of arrays, or JSON lines."""
    if path is None or path == "-":
        text = sys.stdin.read()
    else:
        text = Path(path).read_text()
    text = text.strip()
    if not text:
        raise ValueError("no assignments supplied")
    rows: list = []
    try:
        payload = json.loads(text)
    except json.JSONDecodeError:
        payload = None
    if isinstance(payload, list) and payload and all(
        isinstance(x, int) for x in payload
    ):
        rows = [payload]
    elif isinstance(payload, list) and payload and all(
        isinstance(x, list) for x in payload
    ):
        rows = payload
    elif payload is None:
        rows = [json.loads(line) for line in text.splitlines() if line.strip()]
    else:
        raise ValueError(
            "assignments must be a JSON array of colors, an array of such "
            "arrays, or one array per line"
        )
    out = []
    for row in rows:
        if not isinstance(row, list) or not all(isinstance(x, int) for x in row):
            raise ValueError(f"assignment rows must be integer arrays, got {row!r}")
        out.append(tuple(row))
    return out


def _parse_edge(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"--edge expects two comma-separated ids, got {text!r}")
    return int(parts[0]), int(parts[1])


def _color_on_cycle(args: argparse.Namespace, rows: list[tuple[int, ...]]) -> int:
    if args.len is not None:
        if args.len % 2 == 0 or args.len < 3:
            raise ParityDomainError(
                f"cycle length must be odd and >= 3, got {args.len}"
            )
        n = (args.len - 1) // 2
    else:
        n = args.n
    edge = _parse_edge(args.edge) if args.edge else None
    ctx = OddCycleCtx.make(n, args.k, edge)
    for row in rows:
        verdict = (
            color_vertex(row, ctx) if args.k == 3 else color_vertex_ck(row, ctx)
        )
        print(json.dumps(verdict.to_json_dict()))
    return EXIT_OK


def _color_on_host(args: argparse.Namespace, rows: list[tuple[int, ...]]) -> int:
    if args.k != 3:
        raise ValueError("general-host coloring supports only --k 3")
    host = load_graph(args.graph)
    cache_path = args.cache or os.environ.get("EXPO_CACHE")
    cache = CycleCache()
    if cache_path and Path(cache_path).exists():
        cache = CycleCache.loads(Path(cache_path).read_text())
    try:
        for row in rows:
            verdict, cache = color_in_kh(host, row, cache)
            print(json.dumps(verdict.to_json_dict()))
    finally:
        if cache_path:
            Path(cache_path).write_text(cache.dumps() + "\n")
    return EXIT_OK


def cmd_color(args: argparse.Namespace) -> int:
    try:
        if (args.graph is None) == (args.len is None and args.n is None):
            raise ValueError(
                "pass exactly one host: --len/--n for a cycle, or --graph"
            )
        rows = _read_assignments(args.input)
        if args.graph is not None:
            return _color_on_host(args, rows)
        return _color_on_cycle(args, rows)
    except ParityDomainError as exc:
        return _fail(str(exc), EXIT_PARITY)
    except (IsolatedFunctionError, NoEvenCycleError) as exc:
        return _fail(str(exc), EXIT_ISOLATED)
    except CapacityError as exc:
        return _fail(str(exc), EXIT_CAPACITY)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        return _fail(str(exc), EXIT_USAGE)


# ---------------------------------------------------------------------------
# verify

_BUILTIN_HOST = "complete graph on 4 vertices"


def _verify_ns(args: argparse.Namespace) -> list[int]:
    if args.cycle_len is not None:
        if args.cycle_len % 2 == 0 or args.cycle_len < 3:
            raise ValueError(
                f"--cycle-len must be odd and >= 3, got {args.cycle_len}"
            )
        return [(args.cycle_len - 1) // 2]
    if args.n is not None:
        return [args.n]
    return list(range(1, args.n_max + 1))


def _verify_jobs(args: argparse.Namespace) -> list[tuple[str, dict]]:
    ns = _verify_ns(args)
    k = args.k
    cap = args.cap
    host = load_graph(args.graph) if args.graph else make_complete(4)
    per_n = {
        "chord-step": lambda n: {"n": n, "cap": cap},
        "label-congruence": lambda n: {"n": n, "cap": cap},
        "label-invariance": lambda n: {"n": n, "k": k, "cap": cap},
        "little-path": lambda n: {"n": n, "k": k, "cap": cap},
        "proper-k3": lambda n: {"n": n, "cap": cap},
        "proper-ck": lambda n: {"n": n, "k": k, "cap": cap},
        "hitting-set": lambda n: {"n": n, "cap": cap},
        "baseline": lambda n: {"n": n, "cap": cap},
    }
    end_to_end = (
        "end-to-end",
        {"host": host, "cap": cap, "samples": args.samples, "seed": args.seed},
    )
    if args.suite == "all":
        jobs = []
        for suite in (
            "chord-step",
            "label-congruence",
            "label-invariance",
            "little-path",
            "proper-k3",
            "hitting-set",
            "baseline",
        ):
            jobs.extend((suite, per_n[suite](n)) for n in ns)
        if k >= 5:
            jobs.extend(("proper-ck", per_n["proper-ck"](n)) for n in ns)
        jobs.append(end_to_end)
        return jobs
    if args.suite == "end-to-end":
        return [end_to_end]
    if args.suite == "proper-ck" and k < 5:
        raise ValueError("proper-ck requires an odd --k >= 5")
    return [(args.suite, per_n[args.suite](n)) for n in ns]


_VERIFY_DISPATCH = {
    "chord-step": verify_mod.verify_chord_step_identity,
    "label-congruence": verify_mod.verify_label_congruences,
    "label-invariance": verify_mod.verify_label_invariance,
    "little-path": verify_mod.verify_little_path_bound,
    "proper-k3": verify_mod.verify_proper_coloring_k3,
    "proper-ck": verify_mod.verify_proper_ck,
    "hitting-set": verify_mod.verify_hitting_set,
    "baseline": verify_mod.verify_baseline,
    "end-to-end": verify_mod.verify_end_to_end,
}


def _run_verify_job(job: tuple[str, dict]):
    suite, kwargs = job
    return _VERIFY_DISPATCH[suite](**kwargs)


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        jobs = _verify_jobs(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        return _fail(str(exc), EXIT_USAGE)
    try:
        if args.threads > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=args.threads) as pool:
                reports = list(pool.map(_run_verify_job, jobs))
        else:
            reports = [_run_verify_job(job) for job in jobs]
    except CapacityError as exc:
        return _fail(str(exc), EXIT_CAPACITY)
    except ValueError as exc:
        return _fail(str(exc), EXIT_USAGE)
    lines = [json.dumps(report.to_json_dict()) for report in reports]
    _write_text("\n".join(lines), args.out)
    for report in reports:
        status = "PASS" if report.passed else "FAIL"
        params = " ".join(f"{key}={val}" for key, val in report.params.items())
        print(
            f"[{status}] {report.statement:<38} {params:<28} "
            f"checked={report.checked:<10} "
            f"violations={len(report.violations):<4} "
            f"{report.wall_time:8.2f}s",
            file=sys.stderr,
        )
    return EXIT_OK if all(report.passed for report in reports) else EXIT_VIOLATIONS


# ---------------------------------------------------------------------------
# bench

_BASELINE_SWEEP = (1, 2, 3)


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        if args.mode == "explicit":
            ns = [args.n] if args.n is not None else list(bench_mod.DEFAULT_SWEEP)
            results = [
                bench_mod.bench_explicit(n, reps=args.reps, seed=args.seed)
                for n in ns
            ]
        else:
            ns = [args.n] if args.n is not None else list(_BASELINE_SWEEP)
            results = [
                bench_mod.bench_baseline(n, reps=args.reps, seed=args.seed)
                for n in ns
            ]
        slope = (
            bench_mod.fit_latency_slope(results)
            if args.mode == "explicit" and len(results) >= 2
            else None
        )
    except (ValueError, CapacityError) as exc:
        return _fail(str(exc), EXIT_USAGE)
    if args.format == "json":
        for res in results:
            print(json.dumps(res.to_json_dict()))
        if slope is not None:
            print(json.dumps({"mode": "slope", "slope": slope, "ns": ns}))
    else:
        print(f"{'mode':<10}{'n':>10}{'reps':>6}{'median_s':>14}  notes")
        for res in results:
            if res.mode == "explicit":
                note = f"cycle_length={res.details['cycle_length']}"
            else:
                note = f"assignments={res.details['assignments_touched']}"
            print(
                f"{res.mode:<10}{res.n:>10}{res.reps:>6}"
                f"{res.median_seconds:>14.6f}  {note}"
            )
        if slope is not None:
            print(f"log-log slope over n={ns}: {slope:.3f}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="expocolor",
        description="Explicit colorings of exponential graphs over odd cycles.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    gen = sub.add_parser("gen", help="write a generated graph as JSON or DOT")
    gen.add_argument("kind", choices=("cycle", "complete", "mycielski"))
    gen.add_argument("--len", type=int, help="cycle length (odd, >= 3)")
    gen.add_argument("--k", type=int, help="number of vertices for 'complete'")
    gen.add_argument("--of", help="base graph JSON for 'mycielski'")
    gen.add_argument("--out", help="output path (default stdout)")
    gen.add_argument("--format", choices=("json", "dot"), default="json")
    gen.set_defaults(func=cmd_gen)

    color = sub.add_parser("color", help="color assignments")
    color.add_argument("--len", type=int, help="host cycle length (odd)")
    color.add_argument("--n", type=int, help="host cycle half-length")
    color.add_argument("--k", type=int, default=3, help="codomain size (odd)")
    color.add_argument(
        "--edge", help="distinguished edge as two 0-based ids, e.g. 0,4"
    )
    color.add_argument("--graph", help="host graph JSON (general-host mode)")
    color.add_argument(
        "--cache", help="cycle-cache path (general-host mode; env EXPO_CACHE)"
    )
    color.add_argument(
        "--input", help="assignments file (default '-' for stdin)"
    )
    color.set_defaults(func=cmd_color)

    ver = sub.add_parser("verify", help="run brute-force verification suites")
    ver.add_argument("suite", choices=_VERIFY_SUITES)
    ver.add_argument("--n", type=int, help="single cycle half-length")
    ver.add_argument(
        "--n-max", type=int, default=2, help="run n = 1..n_max (default 2)"
    )
    ver.add_argument("--cycle-len", type=int, help="cycle length instead of --n")
    ver.add_argument("--k", type=int, default=3, help="codomain size (odd)")
    ver.add_argument("--cap", type=int, default=verify_mod.DEFAULT_CAP)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument(
        "--samples",
        type=int,
        help="sampled end-to-end sweep size (default exhaustive)",
    )
    ver.add_argument(
        "--graph", help=f"end-to-end host JSON (default: {_BUILTIN_HOST})"
    )
    ver.add_argument("--threads", type=int, default=1)
    ver.add_argument("--out", help="report JSONL path (default stdout)")
    ver.set_defaults(func=cmd_verify)

    ben = sub.add_parser("bench", help="time explicit vs. baseline coloring")
    ben.add_argument("--mode", choices=("explicit", "baseline"), default="explicit")
    ben.add_argument(
        "--n", type=int, help="half-length (default: sweep per mode)"
    )
    ben.add_argument("--reps", type=int, default=bench_mod.DEFAULT_REPS)
    ben.add_argument("--seed", type=int, default=0)
    ben.add_argument("--format", choices=("table", "json"), default="table")
    ben.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
