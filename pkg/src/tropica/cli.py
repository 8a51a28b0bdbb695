"""Command-line entry point: ``tropica <subcommand> [files] [flags]``.

Exit codes: 0 ok, 1 law failure, 2 parse/validation error, 3 internal
verification failure, 4 size cap exceeded, 5 unbounded residuation.
"""
from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import jsonio
from .errors import (
    DimensionMismatch,
    NotATopology,
    NotMember,
    ParseError,
    TooLarge,
    UnboundedCoordinate,
    VerificationFailed,
)
from .function_space import contains, make_meet_subspace, meet_project, usc_violation
from .laws import run_axioms
from .semifield import Semifield, get_semifield
from .semimodule import mat_apply, mat_residuate
from .spectral import DEFAULT_MAX_N, all_eigenvalues, max_cycle_mean, orbit_simulate, principal_eigenpair

DEFAULT_SEED = 42
DEFAULT_SAMPLES = 10_000
DEFAULT_STEPS = 200

EXIT_OK, EXIT_LAW, EXIT_PARSE, EXIT_VERIFY, EXIT_SIZE, EXIT_UNBOUNDED = range(6)


@dataclass
class RunConfig:
    command: str
    inputs: list[str]
    semifield: str | None
    fmt: str
    seed: int
    samples: int
    max_n: int
    steps: int
    out: str | None


class UsageError(Exception):
    pass


def fmt_scalar(value, sf: Semifield) -> str:
    if value == sf.zero:
        return "bottom"
    return f"{float(value):.9g}"


def fmt_vector(x, sf: Semifield) -> str:
    return "(" + ", ".join(fmt_scalar(v, sf) for v in x) + ")"


def _requested(cfg: RunConfig) -> Semifield | None:
    if cfg.semifield is None:
        return None
    try:
        return get_semifield(cfg.semifield)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _matrix(cfg, path):
    return jsonio.parse_matrix(jsonio.load_json(path), _requested(cfg))


def _vector(cfg, path, sf):
    x, _ = jsonio.parse_vector(jsonio.load_json(path), sf)
    return x


def cmd_eigen(cfg: RunConfig):
    a, sf = _matrix(cfg, cfg.inputs[0])
    sol = principal_eigenpair(a, sf)
    doc = {
        "lambda": jsonio.scalar_to_json(sol.eigenvalue, sf),
        "eigenvector": jsonio.vector_to_json(sol.eigenvector, sf),
        "critical_nodes": sol.critical_nodes,
        "residual": sol.residual,
    }
    text = [
        f"eigenvalue: {fmt_scalar(sol.eigenvalue, sf)}",
        f"eigenvector: {fmt_vector(sol.eigenvector, sf)}",
        f"critical nodes: {sol.critical_nodes}",
        f"residual: {sol.residual:.9g}",
    ]
    return EXIT_OK, doc, text


def cmd_spectrum(cfg: RunConfig):
    a, sf = _matrix(cfg, cfg.inputs[0])
    report = all_eigenvalues(a, cfg.max_n, sf)
    rho = max_cycle_mean(a, sf)
    entries = [
        {
            "lambda": jsonio.scalar_to_json(e.eigenvalue, sf),
            "eigenvector": jsonio.vector_to_json(e.eigenvector, sf),
            "support": e.support,
            "archimedean": e.archimedean,
        }
        for e in report.entries
    ]
    doc = {"method": report.method, "max_cycle_mean": jsonio.scalar_to_json(rho, sf), "eigenvalues": entries}
    text = [f"method: {report.method}", f"max cycle mean: {fmt_scalar(rho, sf)}"]
    for e in report.entries:
        tag = " [archimedean]" if e.archimedean else ""
        text.append(f"lambda = {fmt_scalar(e.eigenvalue, sf)}: x = {fmt_vector(e.eigenvector, sf)}{tag}")
    return EXIT_OK, doc, text


def cmd_axioms(cfg: RunConfig):
    names = [cfg.semifield] if cfg.semifield else ["rmax", "maxtimes"]
    laws, text, failed = [], [], False
    for name in names:
        sf = get_semifield(name)
        for res in run_axioms(sf, cfg.seed, cfg.samples):
            entry = {"semifield": name, "law": res.law, "passed": res.passed, "checked": res.checked}
            status = "PASS" if res.passed else "FAIL"
            text.append(f"[{status}] {name}: {res.law} ({res.checked} samples)")
            if not res.passed:
                failed = True
                entry["counterexample"] = {k: _json_value(v, sf) for k, v in res.counterexample.items()}
                text.append(f"    counterexample: {entry['counterexample']}")
            laws.append(entry)
    doc = {"seed": cfg.seed, "samples": cfg.samples, "passed": not failed, "laws": laws}
    return (EXIT_LAW if failed else EXIT_OK), doc, text


def _json_value(v, sf):
    v = np.asarray(v)
    if v.dtype.kind in "iu":
        return v.tolist()
    if v.ndim == 0:
        return jsonio.scalar_to_json(v, sf)
    return jsonio.vector_to_json(v.ravel(), sf) if v.ndim == 1 else jsonio.matrix_to_json(v, sf)


def cmd_residuate(cfg: RunConfig):
    a, sf = _matrix(cfg, cfg.inputs[0])
    b = _vector(cfg, cfg.inputs[1], sf)
    x = mat_residuate(a, b, sf)
    achieved = mat_apply(a, x, sf)
    doc = {"solution": jsonio.vector_to_json(x, sf), "achieved": jsonio.vector_to_json(achieved, sf)}
    text = [f"greatest solution: {fmt_vector(x, sf)}", f"A x = {fmt_vector(achieved, sf)}"]
    return EXIT_OK, doc, text


def cmd_simulate(cfg: RunConfig):
    if cfg.steps < 1:
        raise UsageError("--steps must be at least 1")
    a, sf = _matrix(cfg, cfg.inputs[0])
    x0 = _vector(cfg, cfg.inputs[1], sf)
    orbit = orbit_simulate(a, x0, cfg.steps, sf)
    rho = max_cycle_mean(a, sf)
    live = ~sf.is_zero(orbit.cycle_time)
    deviation = float(np.abs(orbit.cycle_time[live] - rho).max()) if live.any() and not sf.is_zero(rho) else None
    doc = {
        "steps": cfg.steps,
        "window": orbit.window,
        "orbit": [jsonio.vector_to_json(x, sf) for x in orbit.states],
        "cycle_time": jsonio.vector_to_json(orbit.cycle_time, sf),
        "max_cycle_mean": jsonio.scalar_to_json(rho, sf),
        "deviation": deviation,
    }
    text = [f"t={t}: {fmt_vector(x, sf)}" for t, x in enumerate(orbit.states, start=1)]
    text.append(f"cycle-time estimate over last {orbit.window} steps: {fmt_vector(orbit.cycle_time, sf)}")
    text.append(f"max cycle mean: {fmt_scalar(rho, sf)}")
    if deviation is not None:
        text.append(f"largest deviation: {deviation:.9g}")
    return EXIT_OK, doc, text


def cmd_usc(cfg: RunConfig):
    t = jsonio.parse_topology(jsonio.load_json(cfg.inputs[0]))
    f, sf = jsonio.parse_vector(jsonio.load_json(cfg.inputs[1]), _requested(cfg))
    bad = usc_violation(t, f, sf)
    doc = {"usc": bad is None, "threshold": None, "superlevel_set": None}
    text = [f"upper semicontinuous: {'yes' if bad is None else 'no'}"]
    if bad is not None:
        doc["threshold"] = jsonio.scalar_to_json(bad[0], sf)
        doc["superlevel_set"] = bad[1]
        text.append(f"superlevel set at threshold {fmt_scalar(bad[0], sf)} is {bad[1]}, which is not closed")
    return EXIT_OK, doc, text


def cmd_project(cfg: RunConfig):
    gens, sf = _matrix(cfg, cfg.inputs[0])
    f = _vector(cfg, cfg.inputs[1], sf)
    w = make_meet_subspace(gens, sf=sf)
    p = meet_project(w, f)
    member = contains(w, f)
    doc = {"projection": jsonio.vector_to_json(p, sf), "member": member}
    text = [f"projection: {fmt_vector(p, sf)}", f"member: {'yes' if member else 'no'}"]
    return EXIT_OK, doc, text


COMMANDS = {
    "eigen": (cmd_eigen, ["matrix"]),
    "spectrum": (cmd_spectrum, ["matrix"]),
    "axioms": (cmd_axioms, []),
    "residuate": (cmd_residuate, ["matrix", "vector"]),
    "simulate": (cmd_simulate, ["matrix", "vector"]),
    "usc": (cmd_usc, ["topology", "function"]),
    "project": (cmd_project, ["generators", "function"]),
}


def _default_seed() -> int:
    env = os.environ.get("TROPICA_SEED")
    return int(env) if env else DEFAULT_SEED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--semifield", choices=["rmax", "maxtimes"], default=None)
    common.add_argument("--format", dest="fmt", choices=["text", "json"], default="text")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    common.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    common.add_argument("--steps", type=int, default=DEFAULT_STEPS)
    common.add_argument("--out", default=None, help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(prog="tropica", description="Idempotent linear algebra toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, files) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common])
        for f in files:
            p.add_argument(f)
    return parser


def _config(argv) -> RunConfig:
    args = build_parser().parse_args(argv)
    files = [getattr(args, f) for f in COMMANDS[args.command][1]]
    seed = args.seed if args.seed is not None else _default_seed()
    return RunConfig(args.command, files, args.semifield, args.fmt, seed, args.samples, args.max_n, args.steps, args.out)


def main(argv=None) -> int:
    try:
        cfg = _config(argv)
    except SystemExit as exc:  # argparse usage errors
        return int(exc.code or 0)
    handler = COMMANDS[cfg.command][0]
    try:
        code, doc, text = handler(cfg)
    except UsageError as exc:
        print(f"tropica: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ParseError, DimensionMismatch, NotATopology, NotMember) as exc:
        print(f"tropica: invalid input: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except VerificationFailed as exc:
        print(f"tropica: verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except TooLarge as exc:
        print(f"tropica: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except UnboundedCoordinate as exc:
        print(f"tropica: {exc}", file=sys.stderr)
        return EXIT_UNBOUNDED
    rendered = jsonio.dumps(doc) if cfg.fmt == "json" else "\n".join(text) + "\n"
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(rendered)
    else:
        sys.stdout.write(rendered)
    return code


if __name__ == "__main__":
    sys.exit(main())
