"""Batch runner: parse experiment configs, run verification suites and flows,
emit machine-readable reports.

Subcommands:
  verify <config>      run the configured checker suite; exit 0 iff all pass
  flow <config>        run the configured gradient flow, write its trace CSV
  constants --p --n    print sharp constants as JSON
  list-checkers        table of registered checkers

Config files are TOML or JSON (by extension).  Reports are deterministic:
fixed seeds, no timestamps inside the comparable payload (a .meta.json
sidecar carries wall-clock data).  WASSINEQ_THREADS caps suite parallelism.
Exit codes: 0 pass, 1 check failure, 2 usage/config error.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import dataclasses
import json
import os
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from .errors import ConfigError, HypothesisError, WassineqError
from .flow import check_dissipation, dt_max, estimate_rate, evolve
from .inequalities import (
    DEFAULT_TOL,
    DEFAULT_TOL_EQ,
    REGISTRY,
    CheckContext,
    IneqReport,
)
from .measures import Grid1D, normalize
from .models import EntropyModel, PotentialPair, make_young, parse_expression

__all__ = ["ExperimentConfig", "build_context", "run_verify", "run_flow", "main"]


@dataclass
class ExperimentConfig:
    name: str
    grid: dict
    entropy: dict
    potential: dict
    young: dict
    suite: list
    seeds: dict = field(default_factory=lambda: {"start": 1, "stop": 10})
    tolerances: dict = field(default_factory=dict)
    floor: float = 1e-8
    flow: Optional[dict] = None

    @classmethod
    def from_dict(cls, obj: dict) -> "ExperimentConfig":
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = set(obj) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        missing = {"name", "grid", "entropy", "potential", "young", "suite"} - set(obj)
        if missing:
            raise ConfigError(f"missing config keys: {sorted(missing)}")
        cfg = cls(**obj)
        for entry in cfg.suite:
            checker = entry.get("checker")
            if checker not in REGISTRY:
                raise ConfigError(
                    f"unknown checker {checker!r}; see `wassineq list-checkers`"
                )
        return cfg

    def to_dict(self) -> dict:
        out = dataclasses.asdict(self)
        if out["flow"] is None:
            out.pop("flow")
        return out


def load_config(path: str | Path) -> ExperimentConfig:
    path = Path(path)
    text = path.read_text()
    if path.suffix.lower() == ".json":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}")
    elif path.suffix.lower() == ".toml":
        try:
            import tomllib  # py >= 3.11
        except ModuleNotFoundError:
            import tomli as tomllib
        try:
            obj = tomllib.loads(text)
        except tomllib.TOMLDecodeError as exc:
            raise ConfigError(f"{path}: {exc}")
    else:
        raise ConfigError(f"config must be .toml or .json, got {path.suffix!r}")
    return ExperimentConfig.from_dict(obj)


def _entropy_from(cfg: dict) -> EntropyModel:
    kind = cfg.get("kind", "boltzmann")
    dim_n = int(cfg.get("dim_n", 1))
    if kind == "boltzmann":
        return EntropyModel.boltzmann(dim_n=dim_n)
    if kind == "power":
        return EntropyModel.power(float(cfg["gamma"]), dim_n=dim_n)
    raise ConfigError(f"unknown entropy kind {kind!r}")


def _potential_from(cfg: dict) -> PotentialPair:
    lam = float(cfg.get("lambda", 0.0))
    nu = float(cfg.get("nu", 0.0))
    v_expr = cfg.get("v", "")
    w_expr = cfg.get("w", "")
    V = parse_expression(v_expr, l=lam) if v_expr else None
    W = parse_expression(w_expr, l=nu) if w_expr else None
    kwargs = {"lam": lam}
    if V is not None:
        kwargs["V"] = V
    if W is not None:
        kwargs["W"] = W
        kwargs["nu"] = nu
    return PotentialPair(**kwargs)


def _young_from(cfg: dict) -> object:
    kind = cfg.get("kind", "quadratic")
    params = {k: v for k, v in cfg.items() if k != "kind"}
    return make_young(kind, **params)


def build_context(config: ExperimentConfig) -> CheckContext:
    grid = Grid1D(float(config.grid["a"]), float(config.grid["b"]), int(config.grid["n"]))
    seeds = list(range(int(config.seeds["start"]), int(config.seeds["stop"]) + 1))
    pot = _potential_from(config.potential)
    if not pot.validate(grid):
        raise ConfigError(
            "declared moduli (lambda, nu) exceed the actual convexity of the "
            "configured potentials on this grid"
        )
    return CheckContext(
        grid=grid,
        m=_entropy_from(config.entropy),
        pot=pot,
        yp=_young_from(config.young),
        seeds=seeds,
        floor=float(config.floor),
        tol=float(config.tolerances.get("tol", DEFAULT_TOL)),
        tol_eq=float(config.tolerances.get("tol_eq", DEFAULT_TOL_EQ)),
    )


def _failure_report(name: str, reason: str) -> IneqReport:
    return IneqReport(
        name=name,
        lhs=float("nan"),
        rhs=float("nan"),
        slack=float("nan"),
        scale=1.0,
        tol=DEFAULT_TOL,
        tol_eq=DEFAULT_TOL_EQ,
        passed=False,
        equality_case=False,
        inputs_digest="",
        notes=reason,
    )


def _run_suite_entry(ctx: CheckContext, entry: dict) -> tuple[str, list[IneqReport]]:
    checker = entry["checker"]
    params = {k: v for k, v in entry.items() if k != "checker"}
    try:
        reports = REGISTRY[checker].runner(ctx, params)
    except HypothesisError as exc:
        reports = [_failure_report(checker, f"hypothesis: {exc}")]
    return checker, reports


def run_verify(config: ExperimentConfig, out_dir: str | Path = ".") -> int:
    """Run every configured checker; write <name>.report.json / .summary.csv."""
    ctx = build_context(config)
    threads = int(os.environ.get("WASSINEQ_THREADS", "1"))
    entries = list(config.suite)
    results: list[tuple[str, list[IneqReport]]] = []
    if threads > 1 and len(entries) > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda e: _run_suite_entry(ctx, e), entries))
    else:
        results = [_run_suite_entry(ctx, e) for e in entries]

    all_reports: list[IneqReport] = []
    lines = []
    for checker, reports in sorted(results, key=lambda kv: kv[0]):
        reports = sorted(reports, key=lambda r: r.name)
        all_reports.extend(reports)
        ok = all(r.passed for r in reports)
        worst = min((r.slack / r.scale for r in reports if r.scale > 0), default=0.0)
        lines.append(
            f"{'PASS' if ok else 'FAIL'} {checker} slack={worst:.6e} checks={len(reports)}"
        )

    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    payload = {
        "config": config.to_dict(),
        "reports": [r.to_dict() for r in all_reports],
    }
    (out_dir / f"{config.name}.report.json").write_text(
        json.dumps(payload, indent=2, sort_keys=True) + "\n"
    )
    csv_lines = ["name,lhs,rhs,slack,scale,pass"]
    for r in all_reports:
        csv_lines.append(
            f"{r.name},{r.lhs!r},{r.rhs!r},{r.slack!r},{r.scale!r},{r.passed}"
        )
    (out_dir / f"{config.name}.summary.csv").write_text("\n".join(csv_lines) + "\n")
    (out_dir / f"{config.name}.meta.json").write_text(
        json.dumps({"generated_at": time.strftime("%Y-%m-%dT%H:%M:%S%z")}) + "\n"
    )
    for line in lines:
        print(line)
    return 0 if all(r.passed for r in all_reports) else 1


def run_flow(config: ExperimentConfig, out_dir: str | Path = ".") -> int:
    """Run the configured gradient flow and write its trace CSV."""
    if not config.flow:
        raise ConfigError("config has no [flow] table")
    ctx = build_context(config)
    fl = config.flow
    grid = ctx.grid
    mean = float(fl.get("initial_mean", 0.0))
    sigma = float(fl.get("initial_sigma", 1.0))
    vals = np.exp(-((grid.x - mean) ** 2) / (2 * sigma**2))
    rho0 = normalize(vals, grid, floor=ctx.floor)
    dt = fl.get("dt", "auto")
    dt = dt_max(rho0, ctx.m) if dt == "auto" else float(dt)
    trace = evolve(
        rho0,
        ctx.m,
        ctx.pot,
        t_end=float(fl["t_end"]),
        dt=dt,
        sample_every=int(fl.get("sample_every", 100)),
    )
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / f"{config.name}.trace.csv").write_text(trace.to_csv())
    diss = check_dissipation(trace)
    summary = {
        "dt": dt,
        "samples": len(trace.times),
        "H_final": float(trace.energies[-1]),
        "W2_final": float(trace.w2s[-1]),
        "max_mass_error": float(np.max(trace.mass_errors)),
        "dissipation_defect": diss.max_relative_defect,
    }
    positive = trace.energies > 0
    if positive.all() and trace.energies[0] > 1e-14:
        summary["H_rate"] = estimate_rate(trace.times, trace.energies)
    if (trace.w2s > 0).all() and trace.w2s[0] > 1e-12:
        summary["W2_rate"] = estimate_rate(trace.times, trace.w2s)
    print(json.dumps(summary, indent=2, sort_keys=True))
    return 0 if diss.ok else 1


def _cmd_constants(args) -> int:
    from .inequalities import plsi_constant
    from .stationary import sigma_c, sobolev_constants

    p, n = args.p, args.n
    out = {"p": p, "n": n, "C_p": plsi_constant(p, n)}
    if p > 1:
        q = p / (p - 1.0)
        out["sigma_c"] = sigma_c(p, q, n)
    if 1 < p < n:
        c_pn, c_inf = sobolev_constants(p, n)
        out["C_sobolev"] = c_pn
        out["C_inf"] = c_inf
    else:
        out["C_sobolev"] = None
        out["C_inf"] = None
    print(json.dumps(out, indent=2, sort_keys=True))
    return 0


def _cmd_list_checkers(_args) -> int:
    width = max(len(name) for name in REGISTRY)
    for name in sorted(REGISTRY):
        print(f"{name.ljust(width)}  {REGISTRY[name].anchor}")
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="wassineq",
        description="Verify mass-transport inequalities over grid densities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run a checker suite from a config")
    p_verify.add_argument("config")
    p_verify.add_argument("--out-dir", default=".")

    p_flow = sub.add_parser("flow", help="run the configured gradient flow")
    p_flow.add_argument("config")
    p_flow.add_argument("--out-dir", default=".")

    p_const = sub.add_parser("constants", help="print sharp constants as JSON")
    p_const.add_argument("--p", type=float, required=True)
    p_const.add_argument("--n", type=int, required=True)

    sub.add_parser("list-checkers", help="list registered checkers")

    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return run_verify(load_config(args.config), args.out_dir)
        if args.command == "flow":
            return run_flow(load_config(args.config), args.out_dir)
        if args.command == "constants":
            return _cmd_constants(args)
        if args.command == "list-checkers":
            return _cmd_list_checkers(args)
    except (ConfigError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except WassineqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 2


if __name__ == "__main__":
    sys.exit(main())
