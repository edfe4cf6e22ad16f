"""Command line front end.

Every command prints one JSON report to stdout ({"schema_version": 1, ...})
and exits 0 on success, 1 on an input or numeric problem, and 2 when a
proved bound fails to hold, so automation can tell "bad input" from "bug".
Reports are deterministic for a fixed (config, seed) apart from the
timings block.
"""
from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from fractions import Fraction
from math import comb
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .counterexample import (
    CounterexampleConfig,
    build_points,
    sweep,
    verify_counterexample,
)
from .covering import (
    DilationSign,
    john_positive_cover,
    min_dilation,
)
from .errors import (
    EnumerationCapError,
    InputFormatError,
    LPInternalError,
    NumericalBreakdownError,
    TheoremViolationError,
)
from .geometry import PointSet, dilate_about_center, make_simplex
from .mvs import DEFAULT_ENUM_CAP, mvs_exact, mvs_local_search, verify_local_maximality
from .render import SimplexStyle, render_scene_2d
from .sampling import BODIES, sample_body
from .scalars import DEFAULT_FLOAT_TOL, ScalarMode, scalar_to_str
from .serialization import (
    dumps_report,
    parse_points_file,
    sweep_rows_to_csv,
    to_jsonable,
)

SCHEMA_VERSION = 1

COMMANDS = (
    "mvs", "dilation", "john", "counterexample", "sweep", "random-trials", "render",
)


@dataclass
class RunConfig:
    command: str
    input: Optional[str] = None
    fmt: str = "auto"
    output: Optional[str] = None
    mode: ScalarMode = ScalarMode.EXACT
    tol: Optional[float] = None
    seed: int = 0
    enum_cap: int = DEFAULT_ENUM_CAP
    body: Optional[str] = None
    n: Optional[int] = None
    dim: Optional[int] = None
    local: bool = False
    simplex: Optional[str] = None
    sign: str = "positive"
    epsilon: Optional[str] = None
    delta: Optional[str] = None
    epsilons: Optional[str] = None
    deltas: Optional[str] = None
    csv: Optional[str] = None
    trials: int = 1
    jobs: int = 1

    @property
    def check_tol(self) -> float:
        """Tolerance for CLI-level verification; 0 in exact mode."""
        if self.mode is ScalarMode.EXACT:
            return 0
        return self.tol if self.tol is not None else DEFAULT_FLOAT_TOL


def _load_points(cfg: RunConfig) -> PointSet:
    if cfg.input is not None:
        return parse_points_file(cfg.input, cfg.fmt, cfg.mode)
    if cfg.body is not None:
        if cfg.n is None or cfg.dim is None:
            raise InputFormatError("--sample needs --n and --dim")
        return sample_body(cfg.body, cfg.n, cfg.dim, cfg.seed, cfg.mode)
    raise InputFormatError("no input: pass --input FILE or --sample BODY")


def _cmd_mvs(cfg: RunConfig) -> Tuple[Dict[str, Any], List[str]]:
    x = _load_points(cfg)
    if cfg.local:
        res = mvs_local_search(x, seed=cfg.seed)
    else:
        res = mvs_exact(x, enum_cap=cfg.enum_cap)
    lm = verify_local_maximality(res.simplex, x, tol=cfg.check_tol)
    violations = [] if lm.ok else ["maximum simplex fails the swap-local slab check"]
    return {"mvs": res, "local_maximality": lm}, violations


def _cmd_dilation(cfg: RunConfig) -> Tuple[Dict[str, Any], List[str]]:
    x = _load_points(cfg)
    if cfg.simplex is None:
        raise InputFormatError("dilation needs --simplex FILE with d+1 vertices")
    t_pts = parse_points_file(cfg.simplex, cfg.fmt, cfg.mode)
    if t_pts.dim != x.dim or len(t_pts) != x.dim + 1:
        raise InputFormatError(
            f"--simplex must hold exactly {x.dim + 1} points of dimension {x.dim}"
        )
    t = make_simplex(t_pts.points)
    sign = DilationSign(cfg.sign)
    res = min_dilation(t, x, sign, cfg.mode)
    return {"dilation": res}, []


def _cmd_john(cfg: RunConfig) -> Tuple[Dict[str, Any], List[str]]:
    x = _load_points(cfg)
    report = john_positive_cover(x, cfg.mode, enum_cap=cfg.enum_cap, seed=cfg.seed)
    violations = []
    if not report.sandwich.ok:
        violations.append("maximum simplex fails the swap-local slab check")
    if not report.centered_containment_ok:
        violations.append("points escape the centered (d+2)-dilation")
    if not report.bounds_ok:
        violations.append("a dilation optimum exceeds its guaranteed bound")
    return {"cover": report}, violations


def _counterexample_config(cfg: RunConfig) -> CounterexampleConfig:
    try:
        return CounterexampleConfig(
            Fraction(cfg.epsilon or "1/5"), Fraction(cfg.delta or "1/5")
        )
    except (ValueError, ZeroDivisionError) as exc:
        raise InputFormatError(f"bad epsilon/delta: {exc}") from exc


def _cmd_counterexample(cfg: RunConfig) -> Tuple[Dict[str, Any], List[str]]:
    rep = verify_counterexample(_counterexample_config(cfg))
    violations = []
    if rep.feasible:
        if not rep.all_exceed_two:
            violations.append("some triangle covers at dilation 2 or below")
        if not rep.certificates_ok:
            violations.append("an LP dual certificate failed re-verification")
        if not rep.mirror_symmetric:
            violations.append("mirror-symmetric triangles disagree")
        if not rep.implications_ok:
            violations.append("an analytic chord bound contradicts the LP")
    return {"counterexample": rep}, violations


def _parse_fraction_list(text: str, flag: str) -> List[Fraction]:
    try:
        vals = [Fraction(part.strip()) for part in text.split(",") if part.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputFormatError(f"{flag}: {exc}") from exc
    if not vals:
        raise InputFormatError(f"{flag}: empty list")
    return vals


def _cmd_sweep(cfg: RunConfig) -> Tuple[Dict[str, Any], List[str]]:
    if cfg.epsilons is None or cfg.deltas is None:
        raise InputFormatError("sweep needs --epsilons and --deltas")
    rows = sweep(
        _parse_fraction_list(cfg.epsilons, "--epsilons"),
        _parse_fraction_list(cfg.deltas, "--deltas"),
    )
    if cfg.csv is not None:
        with open(cfg.csv, "w", encoding="utf-8") as fh:
            fh.write(sweep_rows_to_csv(rows))
    return {"rows": rows, "csv_path": cfg.csv}, []


def _trial_worker(args: Tuple[str, int, int, int, str, int]) -> Dict[str, Any]:
    body, n, dim, seed, mode_value, enum_cap = args
    mode = ScalarMode(mode_value)
    x = sample_body(body, n, dim, seed, mode)
    rep = john_positive_cover(x, mode, enum_cap=enum_cap, seed=seed)
    ok = rep.bounds_ok and rep.sandwich.ok and rep.centered_containment_ok
    return {
        "seed": seed,
        "mvs_method": rep.mvs.method,
        "lambda_negative": scalar_to_str(rep.negative.lam),
        "lambda_positive": scalar_to_str(rep.positive.lam),
        "bounds_ok": rep.bounds_ok,
        "sandwich_ok": rep.sandwich.ok,
        "centered_containment_ok": rep.centered_containment_ok,
        "ok": ok,
    }


def _cmd_random_trials(cfg: RunConfig) -> Tuple[Dict[str, Any], List[str]]:
    if cfg.body is None or cfg.n is None or cfg.dim is None:
        raise InputFormatError("random-trials needs --sample, --n and --dim")
    if cfg.trials < 1:
        raise InputFormatError("--trials must be positive")
    work = [
        (cfg.body, cfg.n, cfg.dim, cfg.seed + i, cfg.mode.value, cfg.enum_cap)
        for i in range(cfg.trials)
    ]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(_trial_worker, work))
    else:
        results = [_trial_worker(w) for w in work]
    failures = [r["seed"] for r in results if not r["ok"]]
    violations = (
        [f"covering bounds failed on {len(failures)} trial(s): seeds {failures}"]
        if failures
        else []
    )
    summary = {
        "trials": cfg.trials,
        "ok_count": sum(1 for r in results if r["ok"]),
        "results": results,
    }
    return summary, violations


def _john_scene(cfg: RunConfig, x: PointSet):
    d = x.dim
    if cfg.local or comb(len(x), d + 1) > cfg.enum_cap:
        m = mvs_local_search(x, seed=cfg.seed)
    else:
        m = mvs_exact(x, enum_cap=cfg.enum_cap)
    t = m.simplex
    return [
        (t, SimplexStyle(stroke="#d62728", label="T")),
        (dilate_about_center(t, d + 2), SimplexStyle(stroke="#1f77b4", label="T'")),
        (dilate_about_center(t, -d), SimplexStyle(stroke="#2ca02c", label="T~")),
    ]


def _cmd_render(cfg: RunConfig) -> Tuple[Dict[str, Any], List[str]]:
    if cfg.output is None:
        raise InputFormatError("render needs --output FILE.svg")
    if cfg.epsilon is not None or cfg.delta is not None:
        ccfg = _counterexample_config(cfg)
        x = build_points(ccfg)
        tri = make_simplex([x.points[0], x.points[3], x.points[4]], (0, 3, 4))
        simplices = [
            (tri, SimplexStyle(stroke="#d62728", label="ADE")),
            (
                dilate_about_center(tri, 2),
                SimplexStyle(stroke="#1f77b4", label="2 ADE"),
            ),
        ]
    else:
        x = _load_points(cfg)
        simplices = _john_scene(cfg, x)
    render_scene_2d(x, simplices, cfg.output)
    return {
        "svg_path": cfg.output,
        "points": len(x),
        "polygons": len(simplices),
    }, []


_DISPATCH = {
    "mvs": _cmd_mvs,
    "dilation": _cmd_dilation,
    "john": _cmd_john,
    "counterexample": _cmd_counterexample,
    "sweep": _cmd_sweep,
    "random-trials": _cmd_random_trials,
    "render": _cmd_render,
}


def _config_echo(cfg: RunConfig) -> Dict[str, Any]:
    out = {}
    for f in fields(cfg):
        v = getattr(cfg, f.name)
        out[f.name] = v.value if isinstance(v, ScalarMode) else v
    return out


def run(cfg: RunConfig) -> Tuple[int, Dict[str, Any]]:
    """Execute one command; returns (exit code, JSON-ready report)."""
    t0 = time.perf_counter()
    envelope: Dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "command": cfg.command,
        "config": _config_echo(cfg),
    }
    try:
        result, violations = _DISPATCH[cfg.command](cfg)
    except (TheoremViolationError, LPInternalError) as exc:
        envelope["error"] = str(exc)
        envelope["error_kind"] = "theorem-violation"
        code = 2
    except (
        InputFormatError,
        EnumerationCapError,
        NumericalBreakdownError,
        ValueError,
        TypeError,
        OSError,
    ) as exc:
        envelope["error"] = str(exc)
        envelope["error_kind"] = "input-error"
        code = 1
    else:
        envelope["result"] = to_jsonable(result)
        envelope["violations"] = violations
        code = 2 if violations else 0
    envelope["timings"] = {"total_seconds": time.perf_counter() - t0}
    return code, envelope


class _Parser(argparse.ArgumentParser):
    """argparse maps usage errors to exit 2; the report contract wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(
        prog="simplexcover",
        description="Maximum-volume simplices and simplex covering bounds.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--mode", default="exact", choices=("float", "exact"))
        p.add_argument("--tol", type=float, default=None,
                       help="float-mode verification tolerance")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--output", default=None,
                       help="also write the JSON report here (SVG path for render)")

    def inputs(p, sampling=True):
        p.add_argument("--input", default=None, help="point file (CSV or JSON)")
        p.add_argument("--format", dest="fmt", default="auto",
                       choices=("auto", "csv", "json"))
        if sampling:
            p.add_argument("--sample", dest="body", default=None, choices=BODIES)
            p.add_argument("--n", type=int, default=None)
            p.add_argument("--dim", type=int, default=None)

    p = sub.add_parser("mvs", parents=[], help="maximum-volume simplex")
    common(p)
    inputs(p)
    p.add_argument("--enum-cap", dest="enum_cap", type=int, default=DEFAULT_ENUM_CAP)
    p.add_argument("--local", action="store_true",
                   help="use swap local search instead of exact enumeration")

    p = sub.add_parser("dilation", help="minimal covering dilation of a simplex")
    common(p)
    inputs(p, sampling=False)
    p.add_argument("--simplex", required=True, help="file with the d+1 vertices")
    p.add_argument("--sign", default="positive", choices=("positive", "negative"))

    p = sub.add_parser("john", help="full covering report for a point set")
    common(p)
    inputs(p)
    p.add_argument("--enum-cap", dest="enum_cap", type=int, default=DEFAULT_ENUM_CAP)

    p = sub.add_parser("counterexample",
                       help="exact check of the five-point family")
    common(p)
    p.add_argument("--epsilon", default="1/5")
    p.add_argument("--delta", default="1/5")

    p = sub.add_parser("sweep", help="grid scan of the five-point family")
    common(p)
    p.add_argument("--epsilons", required=True, help="comma-separated rationals")
    p.add_argument("--deltas", required=True, help="comma-separated rationals")
    p.add_argument("--csv", default=None, help="write a CSV table here")

    p = sub.add_parser("random-trials", help="batch covering checks on samples")
    common(p)
    p.add_argument("--sample", dest="body", required=True, choices=BODIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--enum-cap", dest="enum_cap", type=int, default=DEFAULT_ENUM_CAP)

    p = sub.add_parser("render", help="SVG scene for a planar input")
    common(p)
    inputs(p)
    p.add_argument("--enum-cap", dest="enum_cap", type=int, default=DEFAULT_ENUM_CAP)
    p.add_argument("--local", action="store_true")
    p.add_argument("--epsilon", default=None,
                   help="render the five-point scene instead of --input")
    p.add_argument("--delta", default=None)

    return top


def parse_argv(argv: Sequence[str]) -> RunConfig:
    parser = build_parser()
    ns = parser.parse_args(list(argv))
    mode = ScalarMode.from_str(ns.mode)
    if ns.tol is not None and mode is ScalarMode.EXACT:
        parser.error("--tol applies to float mode only")
    if mode is ScalarMode.FLOAT and ns.command in ("counterexample", "sweep"):
        parser.error(f"{ns.command} is exact-only; float mode is not accepted")
    if getattr(ns, "input", None) is not None and getattr(ns, "body", None) is not None:
        parser.error("--input and --sample are mutually exclusive")
    known = {f.name for f in fields(RunConfig)}
    kwargs = {k: v for k, v in vars(ns).items() if k in known and v is not None}
    kwargs["mode"] = mode
    return RunConfig(**kwargs)


def main(argv: Optional[Sequence[str]] = None) -> int:
    cfg = parse_argv(sys.argv[1:] if argv is None else argv)
    code, report = run(cfg)
    text = dumps_report(report)
    sys.stdout.write(text)
    if cfg.output is not None and cfg.command != "render":
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    if "error" in report:
        print(f"simplexcover: {report['error']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
