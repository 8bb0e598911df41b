"""Acceptance criteria 1-10, exact arithmetic, zero tolerance.

Each criterion prints one ``PASS``/``FAIL`` line.  Run with
``pytest tests/test_acceptance.py -v`` or directly as a script.
"""

from __future__ import annotations

import os
import random
import subprocess
import sys
import time
from itertools import combinations

import pytest

from filippov_lab.constructions import (
    MetricForm,
    abelian,
    corpus,
    from_lie_functional,
    gl_trace_form,
    heisenberg_lie,
    metric_lie_extension,
    simple4,
    so3,
    solvable_lie_r2_plus_line,
)
from filippov_lab.cube import check_lemma41, check_theorem42, cube
from filippov_lab.exactlin import Matrix, rank
from filippov_lab.extendder import (
    build_delta,
    corpus_pairs,
    search_delta,
    solve_extendability,
    solve_lemma43,
    verify_diagram,
)
from filippov_lab.extension import assemble, check_module_criterion, check_theorem31
from filippov_lab.random_specs import small_spec, spec_corpus
from filippov_lab.trilie import ad, check_fundamental_identity, derivation_algebra, in_span

SEED = 20240601


def _valid_specs():
    specs = spec_corpus()
    return {n: s for n, s in sorted(specs.items()) if check_fundamental_identity(assemble(s), witness_cap=1).passed}


# criteria -----------------------------------------------------------------------------

def criterion_1():
    t0 = time.perf_counter()
    fixtures = {
        "simple4": simple4(),
        "gl_trace_form(2)": gl_trace_form(2),
        "gl_trace_form(3)": gl_trace_form(3),
        "metric_so3": metric_lie_extension(so3(), MetricForm(Matrix.identity(3))),
        "functional_heisenberg": from_lie_functional(heisenberg_lie(), (1, 0, 0)),
        "functional_r2": from_lie_functional(solvable_lie_r2_plus_line(), (1, 0, 1)),
        "functional_gl2": corpus()["functional_gl2"],
    }
    fixtures.update({f"abelian({n})": abelian(n) for n in range(5)})
    failed = [name for name, A in fixtures.items() if not check_fundamental_identity(A, witness_cap=1).passed]
    dt = time.perf_counter() - t0
    return not failed and dt < 5, f"{len(fixtures) - len(failed)}/{len(fixtures)} fixtures pass in {dt:.2f}s (budget 5s)"


def criterion_2():
    t0 = time.perf_counter()
    A = simple4()
    ders = derivation_algebra(A)
    inner = [ad(A, i, j) for i, j in combinations(range(4), 2)]
    independent = rank(Matrix([d.flatten() for d in inner])) == 6
    contained = all(in_span(ders, d) for d in inner)
    dt = time.perf_counter() - t0
    ok = len(ders) == 6 and independent and contained and dt < 1
    return ok, f"dim Der = {len(ders)}, inner independent={independent}, contained={contained}, {dt:.2f}s (budget 1s)"


def criterion_3():
    t0 = time.perf_counter()
    rng = random.Random(SEED)
    specs = [small_spec(rng, max_m=2) for _ in range(200)]
    targeted = []
    while len(targeted) < 60:
        s = small_spec(rng, max_m=3)
        if s.m == 3:
            targeted.append(s)
    agree = lie = 0
    for s in specs + targeted:
        direct = check_fundamental_identity(assemble(s), witness_cap=1).passed
        lie += direct
        agree += check_theorem31(s, witness_cap=1).passed == direct
    total = len(specs) + len(targeted)
    dt = time.perf_counter() - t0
    ok = agree == total and 0 < lie < total and dt < 30
    return ok, f"{agree}/{total} agree ({lie} assemble to 3-Lie, {len(targeted)} with dim M = 3), {dt:.1f}s (budget 30s)"


def criterion_4():
    t0 = time.perf_counter()
    algebras = dict(corpus())
    algebras["heisenberg_like"] = assemble(spec_corpus()["heisenberg"])
    failed = [n for n, A in algebras.items() if not check_fundamental_identity(cube(A).carrier, witness_cap=1).passed]
    r = check_fundamental_identity(cube(simple4()).carrier)
    dt = time.perf_counter() - t0
    ok = not failed and r.passed and r.checked == 14520 and dt < 60
    return ok, f"{len(algebras) - len(failed)}/{len(algebras)} cubes pass; cube(simple4) {r.checked} tuples; {dt:.1f}s (budget 60s)"


def criterion_5():
    results = []
    for name, A in (("simple4", simple4()), ("heisenberg_like", assemble(spec_corpus()["heisenberg"]))):
        r = check_theorem42(cube(A))
        failing = sorted({w.identity for w in r.witnesses})
        results.append((name, r.checked - r.violations, r.checked, failing))
    ok = all(p == c == 5 for _, p, c, _ in results)
    detail = "; ".join(f"{n}: {p}/{c}" + (f" (failing: {', '.join(f)})" if f else "") for n, p, c, f in results)
    return ok, detail


def criterion_6():
    rng = random.Random(SEED)
    total = agree = ders = 0
    for name, A in sorted(corpus().items()):
        n = A.dim
        basis = derivation_algebra(A)
        for k in range(50):
            if k % 2 == 0 and basis:
                d = Matrix.zeros(n, n)
                for b in basis:
                    d = d + b.scale(rng.randint(-2, 2))
                if k % 4 == 0 and n:
                    d = d + Matrix([[int(r == c == 0) for c in range(n)] for r in range(n)])
            else:
                d = Matrix([[rng.randint(-1, 1) for _ in range(n)] for _ in range(n)])
            is_der, is_hom = check_lemma41(A, d)
            total += 1
            ders += is_der
            agree += is_der == is_hom
    return agree == total, f"{agree}/{total} verdicts agree ({ders} derivations)"


def criterion_7():
    solved = passed = unsolved = oracle_checked = oracle_clean = 0
    for name, s in _valid_specs().items():
        for pair in corpus_pairs(s):
            sol = solve_extendability(s, pair)
            if sol.solvable:
                solved += 1
                passed += verify_diagram(s, pair, build_delta(pair, sol.particular), witness_cap=1).passed
            else:
                unsolved += 1
                if s.m <= 2 and s.h <= 2:
                    oracle_checked += 1
                    oracle_clean += search_delta(s, pair) is None
    ok = passed == solved and oracle_clean == oracle_checked
    return ok, (
        f"{passed}/{solved} solved pairs verify; reverse oracle found nothing in "
        f"{oracle_clean}/{oracle_checked} small unsolvable cases ({unsolved} unsolvable overall)"
    )


def criterion_8():
    total = agree = 0
    for name, s in _valid_specs().items():
        for pair in corpus_pairs(s):
            total += 1
            agree += solve_extendability(s, pair).solvable == (solve_lemma43(s, pair) is not None)
    return agree == total, f"{agree}/{total} (spec, pair) verdicts agree"


def criterion_9():
    specs = _valid_specs()
    rows = {n: check_module_criterion(s) for n, s in specs.items()}
    bad = [n for n, (a, b) in rows.items() if a != b]
    return not bad, f"{len(rows) - len(bad)}/{len(rows)} valid extensions agree" + (f" (disagree: {bad})" if bad else "")


def _cli(args, env_jobs=None):
    env = dict(os.environ)
    env.pop("FILIPPOV_LAB_JOBS", None)
    if env_jobs is not None:
        env["FILIPPOV_LAB_JOBS"] = str(env_jobs)
    p = subprocess.run([sys.executable, "-m", "filippov_lab.cli", *args], capture_output=True, env=env)
    return p.returncode, p.stdout


def criterion_10():
    runs = {
        "serial": _cli(["check-extension", "--seed", "11", "--report", "json"]),
        "serial again": _cli(["check-extension", "--seed", "11", "--report", "json"]),
        "--jobs 4": _cli(["check-extension", "--seed", "11", "--report", "json", "--jobs", "4"]),
        "env jobs 3": _cli(["check-extension", "--seed", "11", "--report", "json"], env_jobs=3),
        "text --jobs 4": _cli(["check-extension", "--seed", "11", "--jobs", "4"]),
        "text serial": _cli(["check-extension", "--seed", "11"]),
    }
    json_runs = [runs[k] for k in ("serial", "serial again", "--jobs 4", "env jobs 3")]
    same_json = all(r == json_runs[0] for r in json_runs)
    same_text = runs["text --jobs 4"] == runs["text serial"]
    differs = _cli(["check-extension", "--seed", "12", "--trials", "50", "--report", "json"])[1] != json_runs[0][1]
    ok = same_json and same_text and json_runs[0][0] == 0 and differs
    return ok, f"json identical across 4 runs={same_json}, text identical={same_text}, seed sensitive={differs}"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def _line(k: int, ok: bool, detail: str) -> str:
    return f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}"


@pytest.mark.parametrize("k", range(1, 11))
def test_criterion(k, capsys):
    ok, detail = CRITERIA[k - 1]()
    with capsys.disabled():
        print("\n" + _line(k, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    status = 0
    for k, fn in enumerate(CRITERIA, start=1):
        ok, detail = fn()
        print(_line(k, ok, detail), flush=True)
        status |= not ok
    sys.exit(status)
