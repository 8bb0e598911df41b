"""Extending a pair of derivations ``(sigma, tau)`` of ``M`` and ``H`` to a
derivation of the extension ``A = M + H``.

The pair is extendable exactly when some linear ``gamma: M -> H`` solves
three families of linear equations, named here the mu rule, the rho rule
and the beta rule:

    mu rule    tau mu(x1,x2,x3) + gamma[x1,x2,x3]
             = sum of mu with sigma in each slot
               + rho(x1,x2)gamma(x3) + rho(x3,x1)gamma(x2) + rho(x2,x3)gamma(x1)
    rho rule   [tau, rho(x1,x2)] = rho(sigma x1,x2) + rho(x1,sigma x2)
             - beta(x2, gamma(x1)) + beta(x1, gamma(x2))
    beta rule  [tau, beta(x,h)] = beta(sigma x,h) + beta(x,tau h) + ad(gamma(x), h)

and then ``delta = [[sigma, 0], [gamma, tau]]``.  Every system here is
assembled by probing an exactly affine residual function at zero and at
each unit vector of the unknown space, so the assembled rows and the
re-verification after solving share one implementation.

``gamma`` is stored as an ``h x m`` matrix; unknown ``gamma[a][i]`` (the a-th
coordinate of ``gamma(x_i)``) sits at index ``a*m + i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable, Iterator, Sequence

from .cube import cube, f_delta, triple_map
from .errors import DimensionError, PreconditionError
from .exactlin import Matrix, Subspace, Vector, solve_affine, unit_vector, zero_vector
from .extension import ExtensionSpec, _ops, assemble, inclusion, projection
from .report import DEFAULT_WITNESS_CAP, CheckReport, Collector
from .repmod import check_representation
from .trilie import center, check_fundamental_identity, derivation_algebra, is_derivation, is_homomorphism


@dataclass(frozen=True)
class DerivationPair:
    sigma: Matrix
    tau: Matrix

    def validate(self, spec: ExtensionSpec) -> None:
        m, h = spec.m, spec.h
        if self.sigma.shape != (m, m):
            raise DimensionError(f"sigma must be {m}x{m}, got {self.sigma.rows}x{self.sigma.cols}")
        if self.tau.shape != (h, h):
            raise DimensionError(f"tau must be {h}x{h}, got {self.tau.rows}x{self.tau.cols}")
        if not is_derivation(spec.M, self.sigma, witness_cap=1).passed:
            raise PreconditionError("sigma is not a derivation of M")
        if not is_derivation(spec.H, self.tau, witness_cap=1).passed:
            raise PreconditionError("tau is not a derivation of H")

    @classmethod
    def zero(cls, spec: ExtensionSpec) -> DerivationPair:
        return cls(Matrix.zeros(spec.m, spec.m), Matrix.zeros(spec.h, spec.h))


@dataclass(frozen=True)
class GammaSolution:
    """Affine family of solutions ``particular + homogeneous``.

    ``homogeneous`` lives in the flattened unknown space.  When ``solvable``
    is false the particular map is ``None``.
    """

    solvable: bool
    particular: Matrix | None
    homogeneous: Subspace
    rows: int = 0

    def member(self, coeffs: Sequence) -> Matrix:
        """``particular + sum coeffs[k] * homogeneous.basis[k]`` as an h x m map."""
        if not self.solvable:
            raise PreconditionError("the system has no solution")
        p = self.particular
        flat = list(p.flatten())
        for c, v in zip(coeffs, self.homogeneous.basis):
            for idx, x in enumerate(v):
                flat[idx] += c * x
        return Matrix((flat[r * p.cols : (r + 1) * p.cols] for r in range(p.rows)), p.rows, p.cols)


@dataclass(frozen=True)
class TripleGamma:
    gamma1: Matrix
    gamma2: Matrix
    gamma3: Matrix


# residuals ---------------------------------------------------------------------

def _gamma_from_flat(x: Sequence, h: int, m: int) -> Matrix:
    return Matrix((x[a * m : (a + 1) * m] for a in range(h)), h, m)


def _cols(mat: Matrix) -> list[Vector]:
    return [mat.column(j) for j in range(mat.cols)]


def _res18(spec: ExtensionSpec, pair: DerivationPair, gamma: Matrix) -> list:
    """mu-rule residual on i<j<k, h entries each."""
    o = _ops(spec)
    m = spec.m
    sig, tau = pair.sigma, pair.tau
    scols = _cols(sig)
    out = []
    for i, j, k in combinations(range(m), 3):
        ei, ej, ek = unit_vector(m, i), unit_vector(m, j), unit_vector(m, k)
        lhs = tau.apply(o.mu(i, j, k))
        lhs = tuple(a + b for a, b in zip(lhs, gamma.apply(o.Mb[(i, j, k)])))
        rhs = o.mu_v(scols[i], ej, ek)
        rhs = _add(rhs, o.mu_v(ei, scols[j], ek))
        rhs = _add(rhs, o.mu_v(ei, ej, scols[k]))
        rhs = _add(rhs, o.R[i][j].apply(gamma.column(k)))
        rhs = _add(rhs, o.R[k][i].apply(gamma.column(j)))
        rhs = _add(rhs, o.R[j][k].apply(gamma.column(i)))
        out.extend(a - b for a, b in zip(lhs, rhs))
    return out


def _res19(spec: ExtensionSpec, pair: DerivationPair, gamma: Matrix) -> list:
    """rho-rule residual on i<j, applied to each basis vector of H."""
    o = _ops(spec)
    m, h = spec.m, spec.h
    sig, tau = pair.sigma, pair.tau
    scols = _cols(sig)
    out = []
    for i, j in combinations(range(m), 2):
        diff = (
            tau.commutator(o.R[i][j])
            - o.rho_vx(scols[i], j)
            - o.rho_xv(i, scols[j])
            + o.beta_xh(j, gamma.column(i))
            - o.beta_xh(i, gamma.column(j))
        )
        for c in range(h):
            out.extend(diff.column(c))
    return out


def _res20(spec: ExtensionSpec, pair: DerivationPair, gamma: Matrix) -> list:
    """beta-rule residual on each (i, d), applied to each basis vector of H."""
    o = _ops(spec)
    m, h = spec.m, spec.h
    sig, tau = pair.sigma, pair.tau
    scols = _cols(sig)
    out = []
    for i in range(m):
        gi = gamma.column(i)
        for d in range(h):
            diff = (
                tau.commutator(o.B[i][d])
                - o.beta_vh(scols[i], d)
                - o.beta_xh(i, tau.column(d))
                - o.ad_h(gi, o.eh(d))
            )
            for c in range(h):
                out.extend(diff.column(c))
    return out


def _add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _probe(residual: Callable[[Sequence], list], nvars: int) -> tuple[Matrix, Vector]:
    """Turn an affine residual ``r(x) = L x + c`` into ``(L, -c)``."""
    c = residual(zero_vector(nvars))
    cols = []
    for u in range(nvars):
        r = residual(unit_vector(nvars, u))
        cols.append(tuple(a - b for a, b in zip(r, c)))
    L = Matrix.from_columns(cols, len(c)) if cols else Matrix.zeros(len(c), 0)
    return L, tuple(-x for x in c)


def _solve(L: Matrix, rhs: Vector) -> tuple[Vector, Subspace] | None:
    if L.cols == 0:
        return ((), Subspace.zero(0)) if not any(rhs) else None
    if L.rows == 0:
        return zero_vector(L.cols), Subspace.whole(L.cols)
    return solve_affine(L, rhs)


def _require_valid(spec: ExtensionSpec, pair: DerivationPair) -> None:
    pair.validate(spec)
    if not check_fundamental_identity(assemble(spec), witness_cap=1).passed:
        raise PreconditionError("the extension does not satisfy the fundamental identity")


# the main system -------------------------------------------------------------------

def extendability_residual(spec: ExtensionSpec, pair: DerivationPair, gamma: Matrix) -> list:
    """mu-rule rows, then rho-rule rows, then beta-rule rows, each block in
    lexicographic tuple order."""
    return _res18(spec, pair, gamma) + _res19(spec, pair, gamma) + _res20(spec, pair, gamma)


def build_extendability_system(spec: ExtensionSpec, pair: DerivationPair) -> tuple[Matrix, Vector]:
    """``(L, b)`` with ``L . vec(gamma) = b`` equivalent to the three rules.

    Row counts: ``C(m,3)*h`` for the mu rule, ``C(m,2)*h*h`` for the rho rule
    and ``m*h*h*h`` for the beta rule (``m*h*h`` vector equations of length h).
    """
    _require_valid(spec, pair)
    m, h = spec.m, spec.h
    return _probe(lambda x: extendability_residual(spec, pair, _gamma_from_flat(x, h, m)), m * h)


def solve_extendability(spec: ExtensionSpec, pair: DerivationPair) -> GammaSolution:
    L, b = build_extendability_system(spec, pair)
    m, h = spec.m, spec.h
    sol = _solve(L, b)
    if sol is None:
        return GammaSolution(False, None, Subspace.zero(m * h), L.rows)
    x, kernel = sol
    gamma = _gamma_from_flat(x, h, m)
    if any(extendability_residual(spec, pair, gamma)):
        raise AssertionError("solver returned a map that does not satisfy the system")
    return GammaSolution(True, gamma, kernel, L.rows)


def build_delta(pair: DerivationPair, gamma: Matrix) -> Matrix:
    """``[[sigma, 0], [gamma, tau]]`` on ``M + H``."""
    m, h = pair.sigma.rows, pair.tau.rows
    if gamma.shape != (h, m):
        raise DimensionError(f"gamma must be {h}x{m}, got {gamma.rows}x{gamma.cols}")
    if h == 0:
        return pair.sigma
    if m == 0:
        return pair.tau
    return Matrix.block([[pair.sigma, Matrix.zeros(m, h)], [gamma, pair.tau]])


def verify_diagram(
    spec: ExtensionSpec, pair: DerivationPair, delta: Matrix, *, witness_cap: int = DEFAULT_WITNESS_CAP
) -> CheckReport:
    """``p delta = sigma p``, ``delta i = i tau`` and delta a derivation of A."""
    n = spec.m + spec.h
    if delta.shape != (n, n):
        raise DimensionError(f"delta must be {n}x{n}")
    A = assemble(spec)
    col = Collector("diagram", witness_cap)
    p, i = projection(spec), inclusion(spec)
    col.compare("projection_square", (), (p @ delta).to_rows(), (pair.sigma @ p).to_rows())
    col.compare("inclusion_square", (), (delta @ i).to_rows(), (i @ pair.tau).to_rows())
    return CheckReport.combine("diagram", [col.report(), is_derivation(A, delta, witness_cap=witness_cap)], witness_cap)


def search_delta(spec: ExtensionSpec, pair: DerivationPair, pool: Sequence = (-1, 0, 1)) -> Matrix | None:
    """Brute force over gamma-blocks with entries in ``pool``.

    Returns the first ``delta = [[sigma, 0], [gamma, tau]]`` that passes
    :func:`verify_diagram`, in lexicographic order of the flattened gamma, or
    ``None``.  Any delta making the diagram commute has this block shape, so
    only the gamma block is searched.
    """
    m, h = spec.m, spec.h
    for flat in product(pool, repeat=m * h):
        delta = build_delta(pair, _gamma_from_flat(flat, h, m))
        if verify_diagram(spec, pair, delta, witness_cap=1).passed:
            return delta
    return None


# beta = 0 ---------------------------------------------------------------------------

def check_tau_rho_compatibility(spec: ExtensionSpec, pair: DerivationPair, *, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """``tau rho(x1,x2) - rho(x1,x2) tau = rho(sigma x1,x2) + rho(x1,sigma x2)``."""
    o = _ops(spec)
    scols = _cols(pair.sigma)
    col = Collector("tau_rho_compatibility", witness_cap)
    for i, j in combinations(range(spec.m), 2):
        lhs = pair.tau.commutator(o.R[i][j])
        rhs = o.rho_vx(scols[i], j) + o.rho_xv(i, scols[j])
        col.compare("tau_rho_compatibility", (i, j), lhs.to_rows(), rhs.to_rows())
    return col.report()


def _centrality_residual(H, gamma: Matrix) -> list:
    """``[gamma(x_i), h_j, h_k]`` for every i and j < k."""
    h = H.dim
    out = []
    for i in range(gamma.cols):
        g = gamma.column(i)
        for j, k in combinations(range(h), 2):
            out.extend(H.bracket(g, unit_vector(h, j), unit_vector(h, k)))
    return out


def solve_corollary41(spec: ExtensionSpec, pair: DerivationPair) -> GammaSolution:
    """Extendability when beta = 0 and (H, rho) is an M-module.

    The gamma-free condition is tested first; if it holds, the mu rule is solved
    together with ``gamma(M) in Z(H)``.
    """
    if not spec.beta.is_zero():
        raise PreconditionError("requires beta = 0")
    if not check_representation(spec.M, spec.rho, witness_cap=1).passed:
        raise PreconditionError("requires (H, rho) to be an M-module")
    _require_valid(spec, pair)
    m, h = spec.m, spec.h
    if not check_tau_rho_compatibility(spec, pair, witness_cap=1).passed:
        return GammaSolution(False, None, Subspace.zero(m * h), 0)

    def residual(x):
        g = _gamma_from_flat(x, h, m)
        return _res18(spec, pair, g) + _centrality_residual(spec.H, g)

    L, b = _probe(residual, m * h)
    sol = _solve(L, b)
    if sol is None:
        return GammaSolution(False, None, Subspace.zero(m * h), L.rows)
    x, kernel = sol
    gamma = _gamma_from_flat(x, h, m)
    if any(residual(x)):
        raise AssertionError("solver returned a map that does not satisfy the system")
    return GammaSolution(True, gamma, kernel, L.rows)


# homomorphism form ---------------------------------------------------------------------

def _lemma43_residual(spec: ExtensionSpec, pair: DerivationPair, g1: Matrix, g2: Matrix, g3: Matrix) -> list:
    o = _ops(spec)
    m, h = spec.m, spec.h
    out: list = []
    for gj in (g2, g3):
        out += _centrality_residual(spec.H, gj)
        # beta(gamma_j(x_i), x_k) + beta(x_i, gamma_j(x_k)) = 0, i.e.
        # -beta(x_k, gamma_j x_i) + beta(x_i, gamma_j x_k) = 0
        for i, k in combinations(range(m), 2):
            diff = o.beta_xh(i, gj.column(k)) - o.beta_xh(k, gj.column(i))
            for c in range(h):
                out.extend(diff.column(c))
        for i, j, k in combinations(range(m), 3):
            lhs = gj.apply(o.Mb[(i, j, k)])
            rhs = _add(_add(o.R[i][j].apply(gj.column(k)), o.R[k][i].apply(gj.column(j))), o.R[j][k].apply(gj.column(i)))
            out.extend(a - b for a, b in zip(lhs, rhs))
    shifted = g1 - g2 @ pair.sigma
    out += _res19(spec, pair, shifted)
    out += _res20(spec, pair, g1)
    out += _res18(spec, pair, shifted)
    return out


def lemma43_residual(spec: ExtensionSpec, pair: DerivationPair, triple: TripleGamma) -> list:
    """Centrality, the beta-balance and the rho-twisted Leibniz rule for
    gamma2 and gamma3, then the rho and mu rules with ``gamma1 - gamma2 sigma`` and the
    beta rule with gamma1."""
    return _lemma43_residual(spec, pair, triple.gamma1, triple.gamma2, triple.gamma3)


def _split3(x: Sequence, h: int, m: int) -> tuple[Matrix, Matrix, Matrix]:
    k = h * m
    return tuple(_gamma_from_flat(x[s * k : (s + 1) * k], h, m) for s in range(3))


def induced_homomorphism(spec: ExtensionSpec, pair: DerivationPair, triple: TripleGamma) -> Matrix:
    """``g(x + h) = (gamma1 x + sigma x + tau h, gamma2 x + x + h, gamma3 x + x + h)``."""
    m, h = spec.m, spec.h
    eye_m, eye_h, z = Matrix.identity(m), Matrix.identity(h), Matrix.zeros(m, h)

    def blk(top_left, lower_left, lower_right):
        if m == 0:
            return lower_right
        if h == 0:
            return top_left
        return Matrix.block([[top_left, z], [lower_left, lower_right]])

    g1 = blk(pair.sigma, triple.gamma1, pair.tau)
    g2 = blk(eye_m, triple.gamma2, eye_h)
    g3 = blk(eye_m, triple.gamma3, eye_h)
    return Matrix.block([[g1], [g2], [g3]])


def check_induced_homomorphism(
    spec: ExtensionSpec, pair: DerivationPair, triple: TripleGamma, *, witness_cap: int = DEFAULT_WITNESS_CAP
) -> CheckReport:
    """g is a homomorphism ``A -> A^3`` and both squares of the cube diagram commute."""
    A = assemble(spec)
    g = induced_homomorphism(spec, pair, triple)
    col = Collector("cube_diagram", witness_cap)
    i3, p3 = triple_map(inclusion(spec)), triple_map(projection(spec))
    col.compare("inclusion_square", (), (g @ inclusion(spec)).to_rows(), (i3 @ f_delta(spec.H, pair.tau)).to_rows())
    col.compare("projection_square", (), (p3 @ g).to_rows(), (f_delta(spec.M, pair.sigma) @ projection(spec)).to_rows())
    hom = is_homomorphism(g, A, cube(A).carrier, witness_cap=witness_cap)
    return CheckReport.combine("cube_diagram", [col.report(), hom], witness_cap)


def build_lemma43_system(spec: ExtensionSpec, pair: DerivationPair) -> tuple[Matrix, Vector]:
    """Unknowns ``(gamma1, gamma2, gamma3)``, 3*m*h of them, blocks in that order."""
    _require_valid(spec, pair)
    m, h = spec.m, spec.h
    return _probe(lambda x: _lemma43_residual(spec, pair, *_split3(x, h, m)), 3 * m * h)


def solve_lemma43(spec: ExtensionSpec, pair: DerivationPair) -> TripleGamma | None:
    """A solution of the homomorphism-form system, or ``None``.

    The returned triple is re-checked: its induced map is a homomorphism
    into the cube of A and the cube diagram commutes.
    """
    L, b = build_lemma43_system(spec, pair)
    sol = _solve(L, b)
    if sol is None:
        return None
    x, _ = sol
    triple = TripleGamma(*_split3(x, spec.h, spec.m))
    if any(lemma43_residual(spec, pair, triple)):
        raise AssertionError("solver returned a triple that does not satisfy the system")
    if not check_induced_homomorphism(spec, pair, triple, witness_cap=1).passed:
        raise AssertionError("induced map of a solved triple is not a homomorphism")
    return triple


def center_extension(spec: ExtensionSpec, gamma: Matrix) -> Matrix:
    """Extend ``gamma: M -> Z(H)`` to ``A -> A`` by zero on H (block ``[[0,0],[gamma,0]]``)."""
    m, h = spec.m, spec.h
    if gamma.shape != (h, m):
        raise DimensionError(f"gamma must be {h}x{m}")
    z = center(spec.H)
    if not all(z.contains(gamma.column(i)) for i in range(m)):
        raise PreconditionError("gamma does not take values in Z(H)")
    if m == 0 or h == 0:
        return Matrix.zeros(m + h, m + h)
    return Matrix.block([[Matrix.zeros(m, m), Matrix.zeros(m, h)], [gamma, Matrix.zeros(h, h)]])


def delta_from_g(spec: ExtensionSpec, pair: DerivationPair, triple: TripleGamma, gamma_center: Matrix) -> Matrix:
    """``delta(x) = sigma x + gamma1(x) - gamma_c(sigma x)``, ``delta(h) = tau h``.

    ``gamma_center`` is the ``(m+h) x (m+h)`` extension of a center-valued map
    that vanishes on H, normally ``center_extension(spec, triple.gamma2)``.
    """
    m, h = spec.m, spec.h
    n = m + h
    if gamma_center.shape != (n, n):
        raise DimensionError(f"gamma_center must be {n}x{n}")
    if any(lemma43_residual(spec, pair, triple)):
        raise PreconditionError("the triple does not solve the homomorphism-form system")
    for c in range(m, n):
        if any(gamma_center.column(c)):
            raise PreconditionError("gamma_center must vanish on H")
    for c in range(m):
        if any(gamma_center.column(c)[:m]):
            raise PreconditionError("gamma_center must take values in H")
    gc = Matrix((gamma_center.row(r)[:m] for r in range(m, n)), h, m)
    delta = build_delta(pair, triple.gamma1 - gc @ pair.sigma)
    return delta


def corpus_pairs(spec: ExtensionSpec) -> Iterator[DerivationPair]:
    """Zero pair, then each basis derivation of M with tau = 0, then each of H
    with sigma = 0, then a few sums."""
    zm, zh = Matrix.zeros(spec.m, spec.m), Matrix.zeros(spec.h, spec.h)
    yield DerivationPair(zm, zh)
    dm, dh = derivation_algebra(spec.M), derivation_algebra(spec.H)
    for s in dm:
        yield DerivationPair(s, zh)
    for t in dh:
        yield DerivationPair(zm, t)
    for s, t in zip(dm, dh):
        yield DerivationPair(s, t)
