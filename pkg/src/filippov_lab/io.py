"""Reading and writing the JSON-shaped file formats.

Algebra::

    {"dim": 4, "basis": ["e1", ...],
     "brackets": [{"args": [0, 1, 2], "value": [{"basis": 3, "coeff": "1"}]}, ...]}

Pair action (rho)::

    {"pairs": [{"args": [0, 1], "matrix": [["0", "1"], ["0", "0"]]}, ...]}

Mixed action (beta)::

    {"entries": [{"args": [i, a], "matrix": [[...], ...]}, ...]}

Trilinear map (mu) uses the algebra bracket layout with H-indices in ``basis``::

    {"triples": [{"args": [0, 1, 2], "value": [{"basis": 0, "coeff": "1"}]}]}

Extension spec::

    {"M": <algebra or path>, "H": <algebra or path>, "mu": ..., "rho": ..., "beta": ...}

Derivation pair::

    {"sigma": [[...]], "tau": [[...]]}

Indices are 0-based.  Rationals are strings ``"p/q"`` or ``"p"``; plain JSON
integers are accepted too.  Every malformed input raises :class:`InputError`
whose message names the offending field (and the line and column for JSON
syntax errors).
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .errors import InputError
from .exactlin import Matrix, Subspace, format_rational, parse_rational
from .extendder import DerivationPair
from .extension import ConditionLedger, ExtensionSpec, MixedAction, TriMapToH
from .repmod import PairAction
from .report import CheckReport, Witness
from .trilie import ThreeLieAlgebra


# generic helpers ----------------------------------------------------------------

def parse_json(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def read_json(path: str | Path) -> Any:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{p}: cannot read file ({exc.strerror})") from None
    return parse_json(text, str(p))


def _field(doc: Any, key: str, where: str) -> Any:
    if not isinstance(doc, dict):
        raise InputError(f"{where}: expected an object")
    if key not in doc:
        raise InputError(f"{where}: missing field '{key}'")
    return doc[key]


def _int(x: Any, where: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise InputError(f"{where}: expected an integer, got {x!r}")
    return x


def _rational(x: Any, where: str) -> Fraction:
    if isinstance(x, bool):
        raise InputError(f"{where}: expected a rational, got {x!r}")
    try:
        return parse_rational(x)
    except (ValueError, TypeError, ZeroDivisionError):
        raise InputError(f"{where}: not a rational number: {x!r}") from None


def _list(x: Any, where: str) -> list:
    if not isinstance(x, list):
        raise InputError(f"{where}: expected a list")
    return x


def _index_tuple(x: Any, length: int, bound: int, where: str, increasing: bool = True) -> tuple[int, ...]:
    x = _list(x, where)
    if len(x) != length:
        raise InputError(f"{where}: expected {length} indices, got {len(x)}")
    t = tuple(_int(v, f"{where}[{k}]") for k, v in enumerate(x))
    if any(not 0 <= v < bound for v in t):
        raise InputError(f"{where}: index out of range 0..{bound - 1}: {list(t)}")
    if increasing and any(t[k] >= t[k + 1] for k in range(length - 1)):
        raise InputError(f"{where}: indices must be strictly increasing: {list(t)}")
    return t


def _sparse_value(x: Any, dim: int, where: str) -> list[Fraction]:
    out = [Fraction(0)] * dim
    for k, term in enumerate(_list(x, where)):
        w = f"{where}[{k}]"
        b = _int(_field(term, "basis", w), f"{w}.basis")
        if not 0 <= b < dim:
            raise InputError(f"{w}.basis: index {b} out of range 0..{dim - 1}")
        out[b] += _rational(_field(term, "coeff", w), f"{w}.coeff")
    return out


def _sparse_dump(v) -> list[dict]:
    return [{"basis": l, "coeff": format_rational(c)} for l, c in enumerate(v) if c]


def parse_matrix(x: Any, rows: int | None, cols: int | None, where: str) -> Matrix:
    data = _list(x, where)
    if rows is not None and len(data) != rows:
        raise InputError(f"{where}: expected {rows} rows, got {len(data)}")
    parsed = []
    for r, row in enumerate(data):
        row = _list(row, f"{where}[{r}]")
        if cols is not None and len(row) != cols:
            raise InputError(f"{where}[{r}]: expected {cols} entries, got {len(row)}")
        parsed.append([_rational(v, f"{where}[{r}][{c}]") for c, v in enumerate(row)])
    if parsed and cols is None:
        cols = len(parsed[0])
        if any(len(r) != cols for r in parsed):
            raise InputError(f"{where}: rows have different lengths")
    return Matrix(parsed, len(parsed), cols or 0)


def dump_matrix(m: Matrix) -> list[list[str]]:
    return [[format_rational(x) for x in row] for row in m.to_rows()]


# algebras ----------------------------------------------------------------------

def algebra_from_dict(doc: Any, where: str = "algebra") -> ThreeLieAlgebra:
    n = _int(_field(doc, "dim", where), f"{where}.dim")
    if n < 0:
        raise InputError(f"{where}.dim: must be non-negative")
    basis = doc.get("basis")
    if basis is not None:
        basis = _list(basis, f"{where}.basis")
        if len(basis) != n or not all(isinstance(b, str) for b in basis):
            raise InputError(f"{where}.basis: expected {n} strings")
    brackets = {}
    for k, entry in enumerate(_list(doc.get("brackets", []), f"{where}.brackets")):
        w = f"{where}.brackets[{k}]"
        t = _index_tuple(_field(entry, "args", w), 3, n, f"{w}.args")
        if t in brackets:
            raise InputError(f"{w}.args: duplicate triple {list(t)}")
        brackets[t] = _sparse_value(_field(entry, "value", w), n, f"{w}.value")
    return ThreeLieAlgebra(n, brackets, basis)


def algebra_to_dict(A: ThreeLieAlgebra) -> dict:
    return {
        "dim": A.dim,
        "basis": list(A.basis),
        "brackets": [{"args": list(t), "value": _sparse_dump(v)} for t, v in A.sc.items()],
    }


def load_algebra(path: str | Path) -> ThreeLieAlgebra:
    return algebra_from_dict(read_json(path), str(path))


def dumps(doc: Any) -> str:
    """Canonical text for any document produced here."""
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


# maps ------------------------------------------------------------------------------

def pair_action_from_dict(doc: Any, algebra_dim: int, target_dim: int, where: str = "rho") -> PairAction:
    table = {}
    for k, entry in enumerate(_list(_field(doc, "pairs", where), f"{where}.pairs")):
        w = f"{where}.pairs[{k}]"
        t = _index_tuple(_field(entry, "args", w), 2, algebra_dim, f"{w}.args")
        if t in table:
            raise InputError(f"{w}.args: duplicate pair {list(t)}")
        table[t] = parse_matrix(_field(entry, "matrix", w), target_dim, target_dim, f"{w}.matrix")
    return PairAction(algebra_dim, target_dim, table)


def pair_action_to_dict(rho: PairAction) -> dict:
    return {"pairs": [{"args": list(t), "matrix": dump_matrix(m)} for t, m in rho.table.items()]}


def mixed_action_from_dict(doc: Any, m: int, h: int, where: str = "beta") -> MixedAction:
    table = {}
    for k, entry in enumerate(_list(_field(doc, "entries", where), f"{where}.entries")):
        w = f"{where}.entries[{k}]"
        args = _list(_field(entry, "args", w), f"{w}.args")
        if len(args) != 2:
            raise InputError(f"{w}.args: expected [M-index, H-index]")
        i, a = _int(args[0], f"{w}.args[0]"), _int(args[1], f"{w}.args[1]")
        if not (0 <= i < m and 0 <= a < h):
            raise InputError(f"{w}.args: index out of range for M x H = {m} x {h}")
        if (i, a) in table:
            raise InputError(f"{w}.args: duplicate entry {[i, a]}")
        table[(i, a)] = parse_matrix(_field(entry, "matrix", w), h, h, f"{w}.matrix")
    return MixedAction(m, h, table)


def mixed_action_to_dict(beta: MixedAction) -> dict:
    return {"entries": [{"args": list(t), "matrix": dump_matrix(m)} for t, m in beta.table.items()]}


def trimap_from_dict(doc: Any, m: int, h: int, where: str = "mu") -> TriMapToH:
    table = {}
    for k, entry in enumerate(_list(_field(doc, "triples", where), f"{where}.triples")):
        w = f"{where}.triples[{k}]"
        t = _index_tuple(_field(entry, "args", w), 3, m, f"{w}.args")
        if t in table:
            raise InputError(f"{w}.args: duplicate triple {list(t)}")
        table[t] = _sparse_value(_field(entry, "value", w), h, f"{w}.value")
    return TriMapToH(m, h, table)


def trimap_to_dict(mu: TriMapToH) -> dict:
    return {"triples": [{"args": list(t), "value": _sparse_dump(v)} for t, v in mu.table.items()]}


# specs and pairs ------------------------------------------------------------------------

def _algebra_ref(x: Any, base: Path | None, where: str) -> ThreeLieAlgebra:
    if isinstance(x, str):
        p = Path(x)
        if base is not None and not p.is_absolute():
            p = base / p
        return algebra_from_dict(read_json(p), str(p))
    return algebra_from_dict(x, where)


def spec_from_dict(doc: Any, base: Path | None = None, where: str = "spec") -> ExtensionSpec:
    M = _algebra_ref(_field(doc, "M", where), base, f"{where}.M")
    H = _algebra_ref(_field(doc, "H", where), base, f"{where}.H")
    m, h = M.dim, H.dim
    mu = trimap_from_dict(doc.get("mu", {"triples": []}), m, h, f"{where}.mu")
    rho = pair_action_from_dict(doc.get("rho", {"pairs": []}), m, h, f"{where}.rho")
    beta = mixed_action_from_dict(doc.get("beta", {"entries": []}), m, h, f"{where}.beta")
    try:
        return ExtensionSpec(M, H, mu, rho, beta)
    except InputError as exc:
        raise InputError(f"{where}: {exc}") from None


def spec_to_dict(spec: ExtensionSpec) -> dict:
    return {
        "M": algebra_to_dict(spec.M),
        "H": algebra_to_dict(spec.H),
        "mu": trimap_to_dict(spec.mu),
        "rho": pair_action_to_dict(spec.rho),
        "beta": mixed_action_to_dict(spec.beta),
    }


def load_spec(path: str | Path) -> ExtensionSpec:
    p = Path(path)
    return spec_from_dict(read_json(p), p.parent, str(p))


def pair_from_dict(doc: Any, m: int, h: int, where: str = "pair") -> DerivationPair:
    sigma = parse_matrix(_field(doc, "sigma", where), m, m, f"{where}.sigma")
    tau = parse_matrix(_field(doc, "tau", where), h, h, f"{where}.tau")
    return DerivationPair(sigma, tau)


def pair_to_dict(pair: DerivationPair) -> dict:
    return {"sigma": dump_matrix(pair.sigma), "tau": dump_matrix(pair.tau)}


# reports ----------------------------------------------------------------------------

def _jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, Matrix):
        return dump_matrix(x)
    if isinstance(x, Subspace):
        return [_jsonable(v) for v in x.basis]
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def witness_to_dict(w: Witness) -> dict:
    return {"identity": w.identity, "indices": list(w.indices), "lhs": _jsonable(w.lhs), "rhs": _jsonable(w.rhs)}


def report_to_dict(r: CheckReport) -> dict:
    return {
        "name": r.name,
        "passed": r.passed,
        "checked": r.checked,
        "violations": r.violations,
        "witnesses": [witness_to_dict(w) for w in r.witnesses],
        "notes": list(r.notes),
    }


def ledger_to_dict(ledger: ConditionLedger) -> dict:
    out = {r.name: report_to_dict(r) for r in ledger.reports()}
    out["passed"] = ledger.passed
    return out
