"""Seeded generators for extension data and derivation pairs.

Every generator takes a :class:`random.Random` so a run is reproducible from
its seed.  Coefficients are small integers, which keeps exact arithmetic fast
while still exercising signs and cancellation.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .constructions import abelian, corpus, from_lie_functional, heisenberg_lie, simple4
from .exactlin import ONE, ZERO, Matrix, inverse, nullspace
from .extension import ExtensionSpec, MixedAction, TriMapToH, decompose
from .repmod import PairAction
from .trilie import ThreeLieAlgebra, change_basis, derivation_algebra, derivation_system, direct_sum

COEFFS = (-2, -1, -1, 0, 0, 0, 1, 1, 2)


def small(rng: random.Random) -> Fraction:
    return Fraction(rng.choice(COEFFS))


def _combo(rng: random.Random, basis, shape, density: float) -> Matrix:
    acc = Matrix.zeros(*shape)
    for b in basis:
        if rng.random() < density:
            acc = acc + b.scale(small(rng))
    return acc


@lru_cache(maxsize=64)
def _beta_basis(H: ThreeLieAlgebra) -> tuple[tuple[Matrix, ...], ...]:
    """Basis of the space of admissible ``beta(x, .)`` for a single x.

    An element is a tuple ``(B_1, ..., B_h)`` of derivations of H with
    ``B_a e_b = -B_b e_a``.
    """
    h = H.dim
    hh = h * h
    rows = []
    der = derivation_system(H)
    for a in range(h):
        for r in der.to_rows():
            row = [ZERO] * (h * hh)
            row[a * hh : (a + 1) * hh] = r
            rows.append(row)
    for a in range(h):
        for b in range(a, h):
            for r in range(h):
                row = [ZERO] * (h * hh)
                row[a * hh + r * h + b] += ONE
                row[b * hh + r * h + a] += ONE
                rows.append(row)
    ker = nullspace(Matrix(rows, len(rows), h * hh)) if rows else nullspace(Matrix.zeros(0, h * hh))
    return tuple(
        tuple(Matrix((v[a * hh + r * h : a * hh + (r + 1) * h] for r in range(h)), h, h) for a in range(h))
        for v in ker.basis
    )


@lru_cache(maxsize=64)
def _der_basis(H: ThreeLieAlgebra) -> tuple[Matrix, ...]:
    return tuple(derivation_algebra(H))


def random_spec(
    rng: random.Random,
    M: ThreeLieAlgebra,
    H: ThreeLieAlgebra,
    *,
    mu_density: float = 0.5,
    rho_density: float = 0.4,
    beta_density: float = 0.4,
) -> ExtensionSpec:
    """Arbitrary admissible data on (M, H); usually not a 3-Lie extension."""
    m, h = M.dim, H.dim
    mu = TriMapToH(
        m, h, {t: [small(rng) for _ in range(h)] for t in combinations(range(m), 3) if rng.random() < mu_density}
    )
    ders = _der_basis(H)
    rho = PairAction(
        m, h, {p: _combo(rng, ders, (h, h), 0.5) for p in combinations(range(m), 2) if rng.random() < rho_density}
    )
    table = {}
    bbasis = _beta_basis(H)
    for i in range(m):
        if rng.random() >= beta_density:
            continue
        parts = [Matrix.zeros(h, h) for _ in range(h)]
        for elem in bbasis:
            if rng.random() < 0.5:
                c = small(rng)
                parts = [p + e.scale(c) for p, e in zip(parts, elem)]
        for a, p in enumerate(parts):
            table[(i, a)] = p
    return ExtensionSpec(M, H, mu, rho, MixedAction(m, h, table))


def _flag_basis_change(rng: random.Random, n: int, h: int) -> Matrix:
    """Invertible matrix mapping span(e_{n-h}, ..., e_{n-1}) to itself."""
    m = n - h
    while True:
        rows = []
        for r in range(n):
            row = []
            for c in range(n):
                if r == c:
                    row.append(Fraction(rng.choice((1, -1, 2))))
                elif r >= m and c < m:
                    row.append(small(rng))
                elif (r < m and c < m) or (r >= m and c >= m):
                    row.append(small(rng) if rng.random() < 0.3 else ZERO)
                else:
                    row.append(ZERO)
            rows.append(row)
        P = Matrix(rows, n, n)
        try:
            inverse(P)
            return P
        except ValueError:
            continue


def _ideal_sources() -> list[tuple[ThreeLieAlgebra, int]]:
    """Algebras together with h such that the last h basis vectors span an ideal."""
    c = corpus()
    return [
        (c["metric_so3"], 1),
        (c["functional_heisenberg"], 1),
        (c["functional_r2"], 2),
        (direct_sum(abelian(2), simple4()), 4),
        (direct_sum(simple4(), abelian(1)), 1),
        (direct_sum(abelian(1), c["functional_heisenberg"]), 1),
        (heisenberg_spec_algebra(), 1),
    ]


def heisenberg_spec_algebra() -> ThreeLieAlgebra:
    """``[e1, e2, e3] = e4``, everything else zero."""
    return ThreeLieAlgebra(4, {(0, 1, 2): (0, 0, 0, 1)})


def random_lie_spec(rng: random.Random) -> ExtensionSpec:
    """A spec whose assembled algebra is 3-Lie by construction.

    A known algebra with an ideal on its last coordinates is rewritten in a
    random basis that keeps the ideal in place, then split.
    """
    A, h = rng.choice(_ideal_sources())
    P = _flag_basis_change(rng, A.dim, h)
    return decompose(change_basis(A, P), h)


def perturb(rng: random.Random, spec: ExtensionSpec) -> ExtensionSpec:
    """Add nonzero random admissible noise to one of mu, rho, beta."""
    for _ in range(100):
        noise = random_spec(rng, spec.M, spec.H, mu_density=0.6, rho_density=0.6, beta_density=0.6)
        which = rng.choice(("mu", "rho", "beta"))
        if not getattr(noise, which).is_zero():
            break
    else:
        return spec
    m, h = spec.m, spec.h
    if which == "mu":
        table = {t: [a + b for a, b in zip(spec.mu(*t), noise.mu(*t))] for t in combinations(range(m), 3)}
        return spec.replace(mu=TriMapToH(m, h, table))
    if which == "rho":
        table = {p: spec.rho(*p) + noise.rho(*p) for p in combinations(range(m), 2)}
        return spec.replace(rho=PairAction(m, h, table))
    table = {(i, a): spec.beta(i, a) + noise.beta(i, a) for i in range(m) for a in range(h)}
    return spec.replace(beta=MixedAction(m, h, table))


def random_small_spec(rng: random.Random) -> ExtensionSpec:
    """Mixed stream used by the randomized sweeps: one third built to be 3-Lie,
    one third perturbed from such a spec, one third unstructured."""
    r = rng.random()
    if r < 1 / 3:
        return random_lie_spec(rng)
    if r < 2 / 3:
        return perturb(rng, random_lie_spec(rng))
    pool = [abelian(1), abelian(2), abelian(3), heisenberg_spec_algebra(), simple4()]
    M = rng.choice(pool[:4] + [corpus()["functional_heisenberg"]])
    H = rng.choice([abelian(1), abelian(2), simple4()] if M.dim <= 3 else [abelian(1), abelian(2)])
    return random_spec(rng, M, H)


# named specs --------------------------------------------------------------------

def spec_corpus() -> dict[str, ExtensionSpec]:
    """Named extension data used by tests and demos."""
    c = corpus()
    H1 = abelian(1)
    heis = decompose(heisenberg_spec_algebra(), 1)
    # rho(x1, x2) nilpotent on an abelian plane, no mu, no beta.  The assembled
    # algebra is 3-Lie although rho does not commute with Der(H) = gl(2).
    nil = ExtensionSpec(
        abelian(2),
        abelian(2),
        TriMapToH(2, 2),
        PairAction(2, 2, {(0, 1): Matrix([[0, 1], [0, 0]])}),
        MixedAction(2, 2),
    )
    bad_mu = ExtensionSpec(simple4(), H1, TriMapToH(4, 1, {(0, 1, 2): [1]}), PairAction(4, 1), MixedAction(4, 1))
    scalar = ExtensionSpec(
        abelian(4), abelian(2), TriMapToH(4, 2),
        PairAction(4, 2, {(0, 1): Matrix.identity(2), (2, 3): Matrix.identity(2)}),
        MixedAction(4, 2),
    )
    beta_only = ExtensionSpec(
        abelian(2), abelian(2), TriMapToH(2, 2), PairAction(2, 2),
        MixedAction(2, 2, {(0, 0): Matrix([[0, 1], [0, 0]]), (0, 1): Matrix([[-1, 0], [0, 0]])}),
    )
    return {
        "direct_sum": ExtensionSpec.zero(simple4(), abelian(2)),
        "direct_sum_nonabelian_h": ExtensionSpec.zero(abelian(2), simple4()),
        "heisenberg": heis,
        "metric_so3": decompose(c["metric_so3"], 1),
        "functional_r2": decompose(c["functional_r2"], 2),
        "nilpotent_rho": nil,
        "scalar_rho": scalar,
        "mu_on_simple": bad_mu,
        "beta_only": beta_only,
        "simple_over_line": decompose(direct_sum(simple4(), H1), 1),
        "heisenberg_functional": decompose(from_lie_functional(heisenberg_lie(), (1, 0, 0)), 1),
    }


UNIT_COEFFS = (-1, 0, 1)


def _unit(rng: random.Random) -> Fraction:
    return Fraction(rng.choice(UNIT_COEFFS))


def small_spec(rng: random.Random, *, max_m: int = 3, max_h: int = 2) -> ExtensionSpec:
    """Low-dimensional spec with every coefficient in {-1, 0, 1}.

    ``dim M`` is drawn from ``0..max_m``, weighted towards 2 and 3 (only the
    three-dimensional case has an MMM bracket), and ``dim H`` from
    ``1..max_h``.  Each of mu, rho and beta is switched off with probability
    one half so that a fair share of the draws assemble to 3-Lie algebras.
    """
    m = rng.choice([d for d in (0, 1, 2, 2, 3, 3) if d <= max_m])
    h = rng.randint(1, max_h)
    if m == 3:
        M = ThreeLieAlgebra(3, {(0, 1, 2): [_unit(rng) for _ in range(3)]})
    else:
        M = abelian(m)
    H = abelian(h)
    use_mu, use_rho, use_beta = (rng.random() < 0.5 for _ in range(3))
    mu = TriMapToH(m, h, {t: [_unit(rng) for _ in range(h)] for t in combinations(range(m), 3)} if use_mu else {})
    rho = PairAction(
        m,
        h,
        {p: Matrix([[_unit(rng) for _ in range(h)] for _ in range(h)], h, h) for p in combinations(range(m), 2)}
        if use_rho
        else {},
    )
    table = {}
    if use_beta:
        for i in range(m):
            # beta(x_i, h_a) h_b = v_ab with v_ab = -v_ba and v_aa = 0
            cols = {(a, b): [_unit(rng) for _ in range(h)] for a, b in combinations(range(h), 2)}
            for a in range(h):
                columns = []
                for b in range(h):
                    if a < b:
                        columns.append(cols[(a, b)])
                    elif a > b:
                        columns.append([-x for x in cols[(b, a)]])
                    else:
                        columns.append([ZERO] * h)
                table[(i, a)] = Matrix.from_columns(columns, h)
    return ExtensionSpec(M, H, mu, rho, MixedAction(m, h, table))
