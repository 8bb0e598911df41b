"""Command-line front end.

Exit status is 0 when every check passes, 1 when any check fails and 2 on
malformed input.  Reports are deterministic: the same arguments and inputs
give byte-identical output, whatever ``--jobs`` is.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass, field, replace
from pathlib import Path

from . import constructions as cons
from . import io
from ._sweep import JOBS_ENV, map_chunks, resolve_jobs
from .cube import check_theorem42, cube
from .errors import InputError
from .exactlin import format_rational
from .extendder import build_delta, solve_extendability, verify_diagram
from .extension import (
    assemble,
    check_exact_sequence,
    check_module_criterion,
    check_theorem31,
    h_block,
)
from .random_specs import small_spec, spec_corpus
from .report import DEFAULT_WITNESS_CAP, CheckReport, Collector
from .repmod import check_lemma21, check_representation
from .trilie import check_fundamental_identity, derivation_algebra, is_derivation, is_ideal

COMMANDS = ("make", "validate", "derivations", "check-extension", "extend", "cube", "rep-check")


@dataclass
class RunConfig:
    command: str
    input_paths: list[str] = field(default_factory=list)
    report_format: str = "text"
    seed: int = 0
    trials: int = 200
    witness_cap: int = DEFAULT_WITNESS_CAP
    jobs: int | None = None
    output: str | None = None
    name: str | None = None


# fixtures ---------------------------------------------------------------------

def _algebra_fixtures() -> dict:
    return {k.replace("_", "-"): v for k, v in cons.corpus().items()}


def make_fixture(name: str) -> dict:
    """Document for a named fixture.

    Algebras: ``abelian:<n>``, ``gl:<m>`` and the corpus names.  Extension
    specs: ``spec:<name>``.
    """
    if name.startswith("abelian:") or name.startswith("gl:"):
        kind, _, arg = name.partition(":")
        try:
            k = int(arg)
        except ValueError:
            raise InputError(f"fixture '{name}': expected an integer after ':'") from None
        A = cons.abelian(k) if kind == "abelian" else cons.gl_trace_form(k)
        return io.algebra_to_dict(A)
    if name.startswith("spec:"):
        specs = spec_corpus()
        key = name[5:].replace("-", "_")
        if key not in specs:
            raise InputError(f"unknown spec fixture '{name[5:]}'; known: {', '.join(sorted(specs))}")
        return io.spec_to_dict(specs[key])
    fixtures = _algebra_fixtures()
    if name not in fixtures:
        known = sorted(fixtures) + ["abelian:<n>", "gl:<m>"] + [f"spec:{k}" for k in sorted(spec_corpus())]
        raise InputError(f"unknown fixture '{name}'; known: {', '.join(known)}")
    return io.algebra_to_dict(fixtures[name])


# rendering ----------------------------------------------------------------------

def _fmt(x) -> str:
    if isinstance(x, tuple) and x and isinstance(x[0], tuple):
        return "[" + ", ".join(_fmt(r) for r in x) + "]"
    if isinstance(x, (tuple, list)):
        return "(" + ", ".join(_fmt(v) for v in x) + ")"
    if hasattr(x, "numerator"):
        return format_rational(x)
    return str(x)


def render_report(r: CheckReport) -> list[str]:
    if r.passed:
        lines = [f"{r.name}: pass ({r.checked} tuples)"]
    else:
        lines = [f"{r.name}: FAIL ({r.violations} of {r.checked} tuples violate)"]
        for w in r.witnesses:
            lines.append(f"  {w.identity} at {list(w.indices)}: lhs={_fmt(w.lhs)} rhs={_fmt(w.rhs)}")
        if r.violations > len(r.witnesses):
            lines.append(f"  ... {r.violations - len(r.witnesses)} more not shown")
    lines.extend(f"  note: {n}" for n in r.notes)
    return lines


class Output:
    def __init__(self, fmt: str, command: str):
        self.fmt = fmt
        self.doc: dict = {"command": command, "checks": []}
        self.lines: list[str] = []

    def check(self, r: CheckReport) -> None:
        self.doc["checks"].append(io.report_to_dict(r))
        self.lines.extend(render_report(r))

    def value(self, key: str, value, text: str | None = None) -> None:
        self.doc[key] = value
        if text is not None:
            self.lines.append(text)

    def passed(self) -> bool:
        return all(c["passed"] for c in self.doc["checks"])

    def render(self) -> str:
        self.doc["passed"] = self.passed()
        if self.fmt == "json":
            return io.dumps(self.doc)
        return "\n".join(self.lines + [f"overall: {'pass' if self.doc['passed'] else 'FAIL'}"]) + "\n"


# commands ------------------------------------------------------------------------

def _named(r: CheckReport, name: str) -> CheckReport:
    return replace(r, name=name)


def _need_inputs(cfg: RunConfig, n: int, what: str) -> list[str]:
    if len(cfg.input_paths) != n:
        raise InputError(f"{cfg.command} expects {n} --input file(s): {what}")
    return cfg.input_paths


def _cmd_validate(cfg: RunConfig, out: Output) -> None:
    (path,) = _need_inputs(cfg, 1, "an algebra")
    A = io.load_algebra(path)
    out.value("dim", A.dim, f"algebra: dim {A.dim}")
    out.check(check_fundamental_identity(A, witness_cap=cfg.witness_cap, jobs=cfg.jobs))


def _cmd_derivations(cfg: RunConfig, out: Output) -> None:
    (path,) = _need_inputs(cfg, 1, "an algebra")
    A = io.load_algebra(path)
    ders = derivation_algebra(A)
    out.value("dimension", len(ders), f"Der(A): dimension {len(ders)}")
    out.value("basis", [io.dump_matrix(d) for d in ders])
    for k, d in enumerate(ders):
        out.lines.append(f"  d{k + 1} = {_fmt(d.to_rows())}")


def _cmd_check_extension(cfg: RunConfig, out: Output) -> None:
    if not cfg.input_paths:
        _randomized_sweep(cfg, out)
        return
    (path,) = _need_inputs(cfg, 1, "an extension spec")
    spec = io.load_spec(path)
    ledger = check_theorem31(spec, witness_cap=cfg.witness_cap)
    for r in ledger.reports():
        out.check(r)
    A = assemble(spec)
    direct = check_fundamental_identity(A, witness_cap=cfg.witness_cap, jobs=cfg.jobs)
    out.check(direct)
    out.value("ledger_passed", ledger.passed, f"ledger verdict: {'pass' if ledger.passed else 'FAIL'}")
    if direct.passed:
        out.check(check_exact_sequence(spec, witness_cap=cfg.witness_cap))
        is_module, beta_mu_zero = check_module_criterion(spec)
        out.value(
            "module_criterion",
            {"is_module": is_module, "beta_mu_zero": beta_mu_zero},
            f"module criterion: is_module={is_module}, beta_mu_zero={beta_mu_zero}",
        )
        out.value("h_is_ideal", is_ideal(A, h_block(spec)), f"H is an ideal: {is_ideal(A, h_block(spec))}")


def _sweep_chunk(cap: int, specs) -> list[tuple[bool, bool]]:
    return [
        (check_theorem31(s, witness_cap=cap).passed, check_fundamental_identity(assemble(s), witness_cap=cap).passed)
        for s in specs
    ]


def _randomized_sweep(cfg: RunConfig, out: Output) -> None:
    """Seeded comparison of the condition ledger with the direct check.

    Specs are drawn serially from the seed, then checked in contiguous
    chunks across ``--jobs`` workers, so the report does not depend on the
    worker count.
    """
    rng = random.Random(cfg.seed)
    specs = [small_spec(rng) for _ in range(cfg.trials)]
    verdicts = [v for chunk in map_chunks(_sweep_chunk, 1, specs, cfg.jobs) for v in chunk]
    col = Collector("ledger_matches_direct_check", cfg.witness_cap)
    for t, (ledger, direct) in enumerate(verdicts):
        col.compare("ledger_matches_direct_check", (t,), ledger, direct)
    lie = sum(direct for _, direct in verdicts)
    out.value("seed", cfg.seed, f"seed: {cfg.seed}")
    out.value("trials", cfg.trials, f"trials: {cfg.trials} ({lie} assemble to 3-Lie algebras)")
    out.value("lie_count", lie)
    out.check(col.report())


def _cmd_extend(cfg: RunConfig, out: Output) -> None:
    spec_path, pair_path = _need_inputs(cfg, 2, "an extension spec, then a derivation pair")
    spec = io.load_spec(spec_path)
    pair = io.pair_from_dict(io.read_json(pair_path), spec.m, spec.h, pair_path)
    pre = [
        check_fundamental_identity(assemble(spec), witness_cap=cfg.witness_cap, jobs=cfg.jobs),
        _named(is_derivation(spec.M, pair.sigma, witness_cap=cfg.witness_cap), "sigma_is_derivation"),
        _named(is_derivation(spec.H, pair.tau, witness_cap=cfg.witness_cap), "tau_is_derivation"),
    ]
    if not all(r.passed for r in pre):
        for r in pre:
            out.check(r)
        out.value("solvable", None, "solvable: not attempted (preconditions fail)")
        return
    sol = solve_extendability(spec, pair)
    out.value("solvable", sol.solvable, f"solvable: {sol.solvable}")
    if not sol.solvable:
        out.value("gamma", None)
        out.value("delta", None)
        col = Collector("extendable", cfg.witness_cap)
        col.compare("extendable", (), False, True)
        out.check(col.report())
        return
    delta = build_delta(pair, sol.particular)
    out.value("gamma", io.dump_matrix(sol.particular), f"gamma = {_fmt(sol.particular.to_rows())}")
    out.value("family_dimension", sol.homogeneous.dim, f"solution family dimension: {sol.homogeneous.dim}")
    out.value("delta", io.dump_matrix(delta), f"delta = {_fmt(delta.to_rows())}")
    out.check(verify_diagram(spec, pair, delta, witness_cap=cfg.witness_cap))


def _cmd_cube(cfg: RunConfig, out: Output) -> None:
    (path,) = _need_inputs(cfg, 1, "an algebra")
    A = io.load_algebra(path)
    base = check_fundamental_identity(A, witness_cap=cfg.witness_cap, jobs=cfg.jobs)
    if not base.passed:
        out.check(_named(base, "input_fundamental_identity"))
        return
    C = cube(A, check=False)
    out.value("dim", C.carrier.dim, f"cube: dim {C.carrier.dim}")
    out.check(check_fundamental_identity(C.carrier, witness_cap=cfg.witness_cap, jobs=cfg.jobs))
    out.check(check_theorem42(C))
    out.value("cube", io.algebra_to_dict(C.carrier))


def _cmd_rep_check(cfg: RunConfig, out: Output) -> None:
    alg_path, rho_path = _need_inputs(cfg, 2, "an algebra, then a pair action")
    A = io.load_algebra(alg_path)
    doc = io.read_json(rho_path)
    target = doc.get("dim") if isinstance(doc, dict) else None
    if target is None:
        pairs = doc.get("pairs") if isinstance(doc, dict) else None
        if not pairs:
            raise InputError(f"{rho_path}: give 'dim' when 'pairs' is empty")
        target = len(io._list(pairs[0].get("matrix"), f"{rho_path}.pairs[0].matrix"))
    rho = io.pair_action_from_dict(doc, A.dim, io._int(target, f"{rho_path}.dim"), rho_path)
    out.check(check_representation(A, rho, witness_cap=cfg.witness_cap))
    out.check(check_lemma21(A, rho, witness_cap=cfg.witness_cap))


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute one command; returns ``(exit status, report text)``."""
    try:
        cfg.jobs = resolve_jobs(cfg.jobs)
        if cfg.witness_cap < 0:
            raise InputError("--witness-cap must be non-negative")
        if cfg.trials < 0:
            raise InputError("--trials must be non-negative")
        if cfg.command == "make":
            if not cfg.name:
                raise InputError("make needs a fixture name")
            return 0, io.dumps(make_fixture(cfg.name))
        out = Output(cfg.report_format, cfg.command)
        handler = {
            "validate": _cmd_validate,
            "derivations": _cmd_derivations,
            "check-extension": _cmd_check_extension,
            "extend": _cmd_extend,
            "cube": _cmd_cube,
            "rep-check": _cmd_rep_check,
        }[cfg.command]
        handler(cfg, out)
        return (0 if out.passed() else 1), out.render()
    except InputError as exc:
        return 2, f"input error: {exc}\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="filippov-lab", description="Exact checks for 3-Lie algebras and their extensions.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", action="append", default=[], help="input file (repeatable)")
    common.add_argument("--report", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=200)
    common.add_argument("--witness-cap", type=int, default=DEFAULT_WITNESS_CAP)
    common.add_argument(
        "--jobs", type=int, default=None, help=f"parallel sweep workers (default: ${JOBS_ENV} or 1)"
    )
    common.add_argument("--output", help="write the report here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)
    mk = sub.add_parser("make", parents=[common], help="write a named fixture")
    mk.add_argument("name")
    for name, text in (
        ("validate", "fundamental identity sweep"),
        ("derivations", "basis of the derivation algebra"),
        ("check-extension", "condition ledger of an extension (randomized sweep without --input)"),
        ("extend", "extend a derivation pair to the extension"),
        ("cube", "exterior direct sum and its block structure"),
        ("rep-check", "representation identities"),
    ):
        sub.add_parser(name, parents=[common], help=text)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        input_paths=list(args.input),
        report_format=args.report,
        seed=args.seed,
        trials=args.trials,
        witness_cap=args.witness_cap,
        jobs=args.jobs,
        output=args.output,
        name=getattr(args, "name", None),
    )
    status, text = run(cfg)
    if cfg.output and status != 2:
        Path(cfg.output).write_text(text, encoding="utf-8")
    else:
        (sys.stderr if status == 2 else sys.stdout).write(text)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
