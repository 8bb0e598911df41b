"""(mu, rho, beta)-extensions of a 3-Lie algebra H by a 3-Lie algebra M.

The extension lives on ``A = M + H`` (M's basis first) with

    [x, y, z]_A   = [x, y, z]_M + mu(x, y, z)
    [x, y, h]_A   = rho(x, y) h
    [x, h1, h2]_A = beta(x, h1) h2
    [h1, h2, h3]_A = [h1, h2, h3]_H

for x, y, z in M and h, h1, h2, h3 in H.  The functions ``check_eq*`` test
the individual identities that decide whether A satisfies the fundamental
identity, each on every ordered tuple of basis vectors.

``beta`` takes an M-argument and an H-argument.  Where an identity writes
``beta(h, x)`` with the arguments swapped it means ``-beta(x, h)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Mapping, Sequence

from .errors import DimensionError, InputError, PreconditionError
from .exactlin import ZERO, Matrix, Subspace, Vector, nullspace, unit_vector, vec_add, vec_sub, vector, zero_vector
from .repmod import PairAction, anticommutator, check_representation
from .report import DEFAULT_WITNESS_CAP, CheckReport, Collector
from .trilie import (
    ThreeLieAlgebra,
    center,
    check_fundamental_identity,
    derivation_algebra,
    inner_derivation,
    is_derivation,
    is_homomorphism,
    is_ideal,
    sort3,
)


class TriMapToH:
    """Skew trilinear map ``M^3 -> H`` stored on strictly increasing triples."""

    def __init__(self, m_dim: int, h_dim: int, table: Mapping[tuple[int, int, int], Sequence] | None = None):
        self.m_dim = m_dim
        self.h_dim = h_dim
        self._table: dict[tuple[int, int, int], Vector] = {}
        for t, v in (table or {}).items():
            i, j, k = t
            if not (0 <= i < j < k < m_dim):
                raise InputError(f"triple {t} is not strictly increasing in range(0, {m_dim})")
            v = vector(v)
            if len(v) != h_dim:
                raise DimensionError(f"value for {t} has length {len(v)}, expected {h_dim}")
            if any(v):
                self._table[(i, j, k)] = v
        self._zero = zero_vector(h_dim)

    @property
    def table(self) -> dict[tuple[int, int, int], Vector]:
        return dict(sorted(self._table.items()))

    def is_zero(self) -> bool:
        return not self._table

    def __call__(self, i: int, j: int, k: int) -> Vector:
        sign, canon = sort3(i, j, k)
        if not sign or canon not in self._table:
            return self._zero
        v = self._table[canon]
        return v if sign > 0 else tuple(-x for x in v)

    def of_vectors(self, u: Sequence, v: Sequence, w: Sequence) -> Vector:
        acc = list(self._zero)
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b or j == i:
                    continue
                for k, c in enumerate(w):
                    if not c or k == i or k == j:
                        continue
                    val = self(i, j, k)
                    if any(val):
                        abc = a * b * c
                        for l, x in enumerate(val):
                            acc[l] += abc * x
        return tuple(acc)


class MixedAction:
    """Bilinear map ``M x H -> End(H)`` given on pairs of basis vectors."""

    def __init__(self, m_dim: int, h_dim: int, table: Mapping[tuple[int, int], Matrix] | None = None):
        self.m_dim = m_dim
        self.h_dim = h_dim
        self._zero = Matrix.zeros(h_dim, h_dim)
        self._table: dict[tuple[int, int], Matrix] = {}
        for (i, a), mat in (table or {}).items():
            if not (0 <= i < m_dim and 0 <= a < h_dim):
                raise InputError(f"index pair {(i, a)} out of range for M x H = {m_dim} x {h_dim}")
            if not isinstance(mat, Matrix):
                mat = Matrix(mat, h_dim, h_dim)
            if mat.shape != (h_dim, h_dim):
                raise DimensionError(f"matrix for {(i, a)} must be {h_dim}x{h_dim}")
            if not mat.is_zero():
                self._table[(i, a)] = mat

    @property
    def table(self) -> dict[tuple[int, int], Matrix]:
        return dict(sorted(self._table.items()))

    def is_zero(self) -> bool:
        return not self._table

    def __call__(self, i: int, a: int) -> Matrix:
        return self._table.get((i, a), self._zero)

    def with_h(self, i: int, h: Sequence) -> Matrix:
        """``beta(x_i, h)`` for an H-vector ``h``."""
        acc = self._zero
        for a, c in enumerate(h):
            if c and (i, a) in self._table:
                acc = acc + self._table[(i, a)].scale(c)
        return acc

    def with_x(self, x: Sequence, a: int) -> Matrix:
        """``beta(x, h_a)`` for an M-vector ``x``."""
        acc = self._zero
        for i, c in enumerate(x):
            if c and (i, a) in self._table:
                acc = acc + self._table[(i, a)].scale(c)
        return acc


@dataclass(frozen=True)
class ExtensionSpec:
    """The datum ``(M, H, mu, rho, beta)``.

    Construction checks that every ``rho(x_i, x_j)`` and ``beta(x_i, h_a)`` is a
    derivation of H, and that ``beta(x, h1) h2`` is skew in ``(h1, h2)`` so the
    assembled bracket is well defined on ``A ^ A ^ A``.
    """

    M: ThreeLieAlgebra
    H: ThreeLieAlgebra
    mu: TriMapToH
    rho: PairAction
    beta: MixedAction
    _ops: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        m, h = self.M.dim, self.H.dim
        if (self.mu.m_dim, self.mu.h_dim) != (m, h):
            raise DimensionError(f"mu is {self.mu.m_dim}->{self.mu.h_dim}, expected {m}->{h}")
        if (self.rho.algebra_dim, self.rho.target_dim) != (m, h):
            raise DimensionError(f"rho acts {self.rho.algebra_dim}->End({self.rho.target_dim}), expected {m}->End({h})")
        if (self.beta.m_dim, self.beta.h_dim) != (m, h):
            raise DimensionError(f"beta is on {self.beta.m_dim}x{self.beta.h_dim}, expected {m}x{h}")
        for (i, j), mat in self.rho.table.items():
            if not is_derivation(self.H, mat).passed:
                raise PreconditionError(f"rho(x{i + 1}, x{j + 1}) is not a derivation of H")
        for (i, a), mat in self.beta.table.items():
            if not is_derivation(self.H, mat).passed:
                raise PreconditionError(f"beta(x{i + 1}, h{a + 1}) is not a derivation of H")
        for i in range(m):
            for a in range(h):
                for b in range(a, h):
                    if self.beta(i, a).column(b) != tuple(-x for x in self.beta(i, b).column(a)):
                        raise PreconditionError(
                            f"beta(x{i + 1}, h{a + 1}) h{b + 1} != -beta(x{i + 1}, h{b + 1}) h{a + 1}; "
                            "the [x, h1, h2] bracket would not be skew"
                        )

    @property
    def m(self) -> int:
        return self.M.dim

    @property
    def h(self) -> int:
        return self.H.dim

    @classmethod
    def zero(cls, M: ThreeLieAlgebra, H: ThreeLieAlgebra) -> ExtensionSpec:
        return cls(M, H, TriMapToH(M.dim, H.dim), PairAction(M.dim, H.dim), MixedAction(M.dim, H.dim))

    def replace(self, **changes) -> ExtensionSpec:
        fields = {"M": self.M, "H": self.H, "mu": self.mu, "rho": self.rho, "beta": self.beta}
        fields.update(changes)
        return ExtensionSpec(**fields)


# evaluation helpers -------------------------------------------------------

class _Ops:
    """Dense lookup tables for one spec."""

    def __init__(self, spec: ExtensionSpec):
        self.spec = spec
        m, h = spec.m, spec.h
        self.m, self.h = m, h
        self.zero_op = Matrix.zeros(h, h)
        self.zero_h = zero_vector(h)
        self.R = [[spec.rho(i, j) for j in range(m)] for i in range(m)]
        self.B = [[spec.beta(i, a) for a in range(h)] for i in range(m)]
        self.Mb = {}
        for i, j, k in product(range(m), repeat=3):
            self.Mb[(i, j, k)] = spec.M.bracket(unit_vector(m, i), unit_vector(m, j), unit_vector(m, k)) if m else ()
        self._mu = {t: spec.mu(*t) for t in product(range(m), repeat=3)}

    def rho_xv(self, i: int, w: Sequence) -> Matrix:
        """``rho(x_i, w)`` for an M-vector ``w``."""
        acc = self.zero_op
        for a, c in enumerate(w):
            if c and a != i:
                acc = acc + self.R[i][a].scale(c)
        return acc

    def rho_vx(self, w: Sequence, j: int) -> Matrix:
        return -self.rho_xv(j, w)

    def beta_xh(self, i: int, hv: Sequence) -> Matrix:
        acc = self.zero_op
        for a, c in enumerate(hv):
            if c:
                acc = acc + self.B[i][a].scale(c)
        return acc

    def beta_vh(self, w: Sequence, a: int) -> Matrix:
        acc = self.zero_op
        for i, c in enumerate(w):
            if c:
                acc = acc + self.B[i][a].scale(c)
        return acc

    def mu(self, i: int, j: int, k: int) -> Vector:
        return self._mu[(i, j, k)]

    def mu_v(self, u: Sequence, v: Sequence, w: Sequence) -> Vector:
        return self.spec.mu.of_vectors(u, v, w)

    def hb(self, u: Sequence, v: Sequence, w: Sequence) -> Vector:
        return self.spec.H.bracket(u, v, w)

    def ad_h(self, u: Sequence, v: Sequence) -> Matrix:
        return inner_derivation(self.spec.H, u, v)

    def eh(self, a: int) -> Vector:
        return unit_vector(self.h, a)

    def em(self, i: int) -> Vector:
        return unit_vector(self.m, i)


def _ops(spec: ExtensionSpec) -> _Ops:
    if "ops" not in spec._ops:
        spec._ops["ops"] = _Ops(spec)
    return spec._ops["ops"]


def _rows(m: Matrix):
    return m.to_rows()


# the identities -----------------------------------------------------------

def check_condition_eq4(spec: ExtensionSpec, *, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """rho(x,u)rho(y,z) + rho(y,z)rho(x,u) + rho(x,y)rho(z,u) + rho(z,u)rho(x,y)
    - rho(x,z)rho(y,u) - rho(y,u)rho(x,z) = 0."""
    o = _ops(spec)
    R = o.R
    col = Collector("eq4", witness_cap)
    zero = _rows(o.zero_op)
    for t in product(range(o.m), repeat=4):
        x, y, z, u = t
        lhs = anticommutator(R[x][u], R[y][z]) + anticommutator(R[x][y], R[z][u]) - anticommutator(R[x][z], R[y][u])
        col.compare("eq4", t, _rows(lhs), zero)
    return col.report()


def check_condition_eq6(spec: ExtensionSpec, *, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """rho(x4,[x1,x2,x3]) = rho(x3,x1)rho(x4,x2) - rho(x2,x1)rho(x4,x3)
    + rho(x2,x3)rho(x4,x1) - beta(x4, mu(x1,x2,x3))."""
    o = _ops(spec)
    R = o.R
    col = Collector("eq6", witness_cap)
    for t in product(range(o.m), repeat=4):
        x1, x2, x3, x4 = t
        lhs = o.rho_xv(x4, o.Mb[(x1, x2, x3)])
        rhs = R[x3][x1] @ R[x4][x2] - R[x2][x1] @ R[x4][x3] + R[x2][x3] @ R[x4][x1] - o.beta_xh(x4, o.mu(x1, x2, x3))
        col.compare("eq6", t, _rows(lhs), _rows(rhs))
    return col.report()


def check_condition_eq7(spec: ExtensionSpec, *, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """rho(x4,[x1,x2,x3]) = rho(x3,[x1,x2,x4]) - beta(x4,mu(x1,x2,x3))
    + beta(x3,mu(x1,x2,x4)) - rho(x1,x2)rho(x3,x4) + rho(x3,x4)rho(x1,x2)."""
    o = _ops(spec)
    R = o.R
    col = Collector("eq7", witness_cap)
    for t in product(range(o.m), repeat=4):
        x1, x2, x3, x4 = t
        lhs = o.rho_xv(x4, o.Mb[(x1, x2, x3)])
        rhs = (
            o.rho_xv(x3, o.Mb[(x1, x2, x4)])
            - o.beta_xh(x4, o.mu(x1, x2, x3))
            + o.beta_xh(x3, o.mu(x1, x2, x4))
            - R[x1][x2].commutator(R[x3][x4])
        )
        col.compare("eq7", t, _rows(lhs), _rows(rhs))
    return col.report()


def check_condition_eq8(spec: ExtensionSpec, *, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """beta(y,h2)beta(x,h1)h - beta(y,h)beta(x,h1)h2 - beta(x,h1)beta(y,h2)h
    = [rho(x,y)h1, h2, h]."""
    o = _ops(spec)
    B, R = o.B, o.R
    col = Collector("eq8", witness_cap)
    for t in product(range(o.m), range(o.m), range(o.h), range(o.h), range(o.h)):
        x, y, h1, h2, h = t
        lhs = vec_sub(
            vec_sub(B[y][h2].apply(B[x][h1].column(h)), B[y][h].apply(B[x][h1].column(h2))),
            B[x][h1].apply(B[y][h2].column(h)),
        )
        rhs = o.hb(R[x][y].column(h1), o.eh(h2), o.eh(h))
        col.compare("eq8", t, lhs, rhs)
    return col.report()


def check_condition_eq9(spec: ExtensionSpec, *, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """rho(x,y)[h1,h2,h] + beta(y,h1)beta(x,h2)h - beta(x,h1)beta(y,h2)h
    = [rho(x,y)h1, h2, h]."""
    o = _ops(spec)
    B, R = o.B, o.R
    col = Collector("eq9", witness_cap)
    for t in product(range(o.m), range(o.m), range(o.h), range(o.h), range(o.h)):
        x, y, h1, h2, h = t
        lhs = vec_sub(
            vec_add(R[x][y].apply(o.hb(o.eh(h1), o.eh(h2), o.eh(h))), B[y][h1].apply(B[x][h2].column(h))),
            B[x][h1].apply(B[y][h2].column(h)),
        )
        rhs = o.hb(R[x][y].column(h1), o.eh(h2), o.eh(h))
        col.compare("eq9", t, lhs, rhs)
    return col.report()


def check_condition_eq10(spec: ExtensionSpec, *, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """ad(beta(x,h1)h3, h2) + ad(h3, beta(x,h1)h2) + ad(beta(x,h3)h2, h1)
    = beta(x, [h1,h2,h3]), as operators on H."""
    o = _ops(spec)
    B = o.B
    col = Collector("eq10", witness_cap)
    for t in product(range(o.m), range(o.h), range(o.h), range(o.h)):
        x, h1, h2, h3 = t
        lhs = (
            o.ad_h(B[x][h1].column(h3), o.eh(h2))
            + o.ad_h(o.eh(h3), B[x][h1].column(h2))
            + o.ad_h(B[x][h3].column(h2), o.eh(h1))
        )
        rhs = o.beta_xh(x, o.hb(o.eh(h1), o.eh(h2), o.eh(h3)))
        col.compare("eq10", t, _rows(lhs), _rows(rhs))
    return col.report()


def check_condition_eq11(spec: ExtensionSpec, *, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """[h1,h2,beta(x,h3)h4] - beta(x,[h1,h2,h3])h4 - [h3,h4,beta(x,h1)h2]
    = beta(x,h3)[h1,h2,h4]."""
    o = _ops(spec)
    B = o.B
    col = Collector("eq11", witness_cap)
    for t in product(range(o.m), range(o.h), range(o.h), range(o.h), range(o.h)):
        x, h1, h2, h3, h4 = t
        e1, e2, e3, e4 = o.eh(h1), o.eh(h2), o.eh(h3), o.eh(h4)
        lhs = vec_sub(
            vec_sub(o.hb(e1, e2, B[x][h3].column(h4)), o.beta_xh(x, o.hb(e1, e2, e3)).column(h4)),
            o.hb(e3, e4, B[x][h1].column(h2)),
        )
        rhs = B[x][h3].apply(o.hb(e1, e2, e4))
        col.compare("eq11", t, lhs, rhs)
    return col.report()


def check_condition_eq12(spec: ExtensionSpec, *, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """[mu(x1,x2,x3), h1, h2] = rho(x2,x3)beta(x1,h1)h2 - rho(x1,x3)beta(x2,h1)h2
    + rho(x1,x2)beta(x3,h1)h2 - beta([x1,x2,x3], h1)h2."""
    o = _ops(spec)
    B, R = o.B, o.R
    col = Collector("eq12", witness_cap)
    for t in product(range(o.m), range(o.m), range(o.m), range(o.h), range(o.h)):
        x1, x2, x3, h1, h2 = t
        lhs = o.hb(o.mu(x1, x2, x3), o.eh(h1), o.eh(h2))
        rhs = R[x2][x3].apply(B[x1][h1].column(h2))
        rhs = vec_sub(rhs, R[x1][x3].apply(B[x2][h1].column(h2)))
        rhs = vec_add(rhs, R[x1][x2].apply(B[x3][h1].column(h2)))
        rhs = vec_sub(rhs, o.beta_vh(o.Mb[(x1, x2, x3)], h1).column(h2))
        col.compare("eq12", t, lhs, rhs)
    return col.report()


def check_condition_eq13(spec: ExtensionSpec, *, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """beta(x1,h1)rho(x2,x3)h2 + beta(x3,h2)rho(x1,x2)h1
    = rho(x2,x3)beta(x1,h1)h2 + beta(x2,h2)rho(x1,x3)h1."""
    o = _ops(spec)
    B, R = o.B, o.R
    col = Collector("eq13", witness_cap)
    for t in product(range(o.m), range(o.m), range(o.m), range(o.h), range(o.h)):
        x1, x2, x3, h1, h2 = t
        lhs = vec_add(B[x1][h1].apply(R[x2][x3].column(h2)), B[x3][h2].apply(R[x1][x2].column(h1)))
        rhs = vec_add(R[x2][x3].apply(B[x1][h1].column(h2)), B[x2][h2].apply(R[x1][x3].column(h1)))
        col.compare("eq13", t, lhs, rhs)
    return col.report()


def check_condition_eq14(spec: ExtensionSpec, *, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """mu(x1,x2,[x3,x4,x5]) - mu([x1,x2,x3],x4,x5) - mu(x3,[x1,x2,x4],x5) - mu(x3,x4,[x1,x2,x5])
    = rho(x3,x4)mu(x1,x2,x5) - rho(x3,x5)mu(x1,x2,x4) - rho(x1,x2)mu(x3,x4,x5) + rho(x4,x5)mu(x1,x2,x3)."""
    o = _ops(spec)
    R = o.R
    col = Collector("eq14", witness_cap)
    em = o.em
    for t in product(range(o.m), repeat=5):
        x1, x2, x3, x4, x5 = t
        lhs = o.mu_v(em(x1), em(x2), o.Mb[(x3, x4, x5)])
        lhs = vec_sub(lhs, o.mu_v(o.Mb[(x1, x2, x3)], em(x4), em(x5)))
        lhs = vec_sub(lhs, o.mu_v(em(x3), o.Mb[(x1, x2, x4)], em(x5)))
        lhs = vec_sub(lhs, o.mu_v(em(x3), em(x4), o.Mb[(x1, x2, x5)]))
        rhs = R[x3][x4].apply(o.mu(x1, x2, x5))
        rhs = vec_sub(rhs, R[x3][x5].apply(o.mu(x1, x2, x4)))
        rhs = vec_sub(rhs, R[x1][x2].apply(o.mu(x3, x4, x5)))
        rhs = vec_add(rhs, R[x4][x5].apply(o.mu(x1, x2, x3)))
        col.compare("eq14", t, lhs, rhs)
    return col.report()


CONDITIONS: dict[str, Callable[..., CheckReport]] = {
    "eq4": check_condition_eq4,
    "eq6": check_condition_eq6,
    "eq8": check_condition_eq8,
    "eq10": check_condition_eq10,
    "eq12": check_condition_eq12,
    "eq13": check_condition_eq13,
    "eq14": check_condition_eq14,
}


@dataclass(frozen=True)
class ConditionLedger:
    eq4: CheckReport
    eq6: CheckReport
    eq8: CheckReport
    eq10: CheckReport
    eq12: CheckReport
    eq13: CheckReport
    eq14: CheckReport

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports())

    def reports(self) -> list[CheckReport]:
        return [getattr(self, name) for name in CONDITIONS]

    def failed(self) -> list[str]:
        return [r.name for r in self.reports() if not r.passed]


def check_theorem31(spec: ExtensionSpec, *, witness_cap: int = DEFAULT_WITNESS_CAP) -> ConditionLedger:
    """Run the seven conditions whose conjunction decides whether A is 3-Lie."""
    return ConditionLedger(**{name: fn(spec, witness_cap=witness_cap) for name, fn in CONDITIONS.items()})


# assembly -------------------------------------------------------------------

def _labels(spec: ExtensionSpec) -> tuple[str, ...]:
    return tuple(f"M.{b}" for b in spec.M.basis) + tuple(f"H.{b}" for b in spec.H.basis)


def assemble(spec: ExtensionSpec) -> ThreeLieAlgebra:
    """The 3-algebra on ``M + H`` with M's basis first.

    The result is skew by construction; whether it satisfies the fundamental
    identity is left to the caller to check.
    """
    m, h = spec.m, spec.h
    n = m + h
    brackets = {}
    for i, j, k in combinations(range(n), 3):
        v = [ZERO] * n
        if k < m:
            for l, c in enumerate(spec.M.bracket(unit_vector(m, i), unit_vector(m, j), unit_vector(m, k))):
                v[l] += c
            for a, c in enumerate(spec.mu(i, j, k)):
                v[m + a] += c
        elif j < m:
            for a, c in enumerate(spec.rho(i, j).column(k - m)):
                v[m + a] += c
        elif i < m:
            for a, c in enumerate(spec.beta(i, j - m).column(k - m)):
                v[m + a] += c
        else:
            hb = spec.H.bracket(unit_vector(h, i - m), unit_vector(h, j - m), unit_vector(h, k - m))
            for a, c in enumerate(hb):
                v[m + a] += c
        brackets[(i, j, k)] = v
    return ThreeLieAlgebra(n, brackets, _labels(spec))


def decompose(A: ThreeLieAlgebra, h: int) -> ExtensionSpec:
    """Read off ``(M, H, mu, rho, beta)`` from an algebra whose last ``h``
    basis vectors span an ideal.

    M is the quotient ``A / H`` carried on the first ``n - h`` basis vectors.
    ``assemble(decompose(A, h)) == A`` whenever the precondition holds.
    """
    n = A.dim
    m = n - h
    if not 0 <= h <= n:
        raise DimensionError(f"cannot split off {h} dimensions from an algebra of dimension {n}")
    if not is_ideal(A, Subspace(n, (unit_vector(n, m + a) for a in range(h)))):
        raise PreconditionError(f"the last {h} basis vectors do not span an ideal")

    def br(i, j, k):
        return A.bracket(unit_vector(n, i), unit_vector(n, j), unit_vector(n, k))

    M = ThreeLieAlgebra(m, {t: br(*t)[:m] for t in combinations(range(m), 3)}, A.basis[:m])
    H = ThreeLieAlgebra(
        h, {(a, b, c): br(m + a, m + b, m + c)[m:] for a, b, c in combinations(range(h), 3)}, A.basis[m:]
    )
    mu = TriMapToH(m, h, {t: br(*t)[m:] for t in combinations(range(m), 3)})
    rho = PairAction(
        m, h, {(i, j): Matrix.from_columns([br(i, j, m + b)[m:] for b in range(h)], h) for i, j in combinations(range(m), 2)}
    )
    beta = MixedAction(
        m,
        h,
        {
            (i, a): Matrix.from_columns([br(i, m + a, m + b)[m:] for b in range(h)], h)
            for i in range(m)
            for a in range(h)
        },
    )
    return ExtensionSpec(M, H, mu, rho, beta)


def inclusion(spec: ExtensionSpec) -> Matrix:
    """``i: H -> A``."""
    m, h = spec.m, spec.h
    return Matrix.block([[Matrix.zeros(m, h)], [Matrix.identity(h)]]) if h else Matrix.zeros(m, 0)


def projection(spec: ExtensionSpec) -> Matrix:
    """``p: A -> M``."""
    m, h = spec.m, spec.h
    return Matrix.block([[Matrix.identity(m), Matrix.zeros(m, h)]]) if m else Matrix.zeros(0, h)


def h_block(spec: ExtensionSpec) -> Subspace:
    n = spec.m + spec.h
    return Subspace(n, (unit_vector(n, spec.m + a) for a in range(spec.h)))


# consequences -----------------------------------------------------------------

def check_lemma_implications(spec: ExtensionSpec, *, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Three conditional claims, each read over the whole spec:

    * if eq6 holds then eq4 holds exactly when eq7 holds;
    * if eq8 holds then eq9 holds;
    * if eq10 holds then eq11 holds.

    A failed implication contributes the witnesses of the failing conclusion.
    """
    col = Collector("lemma_implications", witness_cap)
    pieces = []
    eq6 = check_condition_eq6(spec, witness_cap=witness_cap)
    if eq6.passed:
        eq4, eq7 = check_condition_eq4(spec, witness_cap=witness_cap), check_condition_eq7(spec, witness_cap=witness_cap)
        col.checked += 1
        if eq4.passed != eq7.passed:
            col.violations += 1
            pieces.append(eq7 if eq4.passed else eq4)
        col.notes.append(f"lemma31: premise eq6 holds; eq4={eq4.passed}, eq7={eq7.passed}")
    else:
        col.notes.append("lemma31: premise eq6 fails (vacuous)")
    for premise, conclusion, label in ((check_condition_eq8, check_condition_eq9, "lemma32"), (check_condition_eq10, check_condition_eq11, "lemma33")):
        pre = premise(spec, witness_cap=witness_cap)
        if not pre.passed:
            col.notes.append(f"{label}: premise {pre.name} fails (vacuous)")
            continue
        con = conclusion(spec, witness_cap=witness_cap)
        col.checked += 1
        col.notes.append(f"{label}: premise {pre.name} holds; {con.name}={con.passed}")
        if not con.passed:
            col.violations += 1
            pieces.append(con)
    rep = col.report()
    if pieces:
        merged = CheckReport.combine(rep.name, pieces, witness_cap)
        rep = CheckReport(rep.name, False, rep.checked, rep.violations, merged.witnesses, rep.notes)
    return rep


def _require_lie(spec: ExtensionSpec, what: str) -> ThreeLieAlgebra:
    A = assemble(spec)
    if not check_fundamental_identity(A, witness_cap=1).passed:
        raise PreconditionError(f"{what} needs an extension that satisfies the fundamental identity")
    return A


def beta_mu_vanishes(spec: ExtensionSpec) -> bool:
    """``beta(x_i, mu(x_j, x_k, x_l)) = 0`` for all i and j < k < l."""
    o = _ops(spec)
    for j, k, l in combinations(range(spec.m), 3):
        mu = o.mu(j, k, l)
        if not any(mu):
            continue
        for i in range(spec.m):
            if not o.beta_xh(i, mu).is_zero():
                return False
    return True


def check_module_criterion(spec: ExtensionSpec) -> tuple[bool, bool]:
    """``(H, rho)`` is an M-module, and ``beta(M, mu(M, M, M)) = 0``.

    For an extension satisfying the fundamental identity the two answers
    coincide.
    """
    _require_lie(spec, "the module criterion")
    return check_representation(spec.M, spec.rho, witness_cap=1).passed, beta_mu_vanishes(spec)


def check_theorem34(spec: ExtensionSpec, *, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Three conditions for a (mu, rho)-extension over an M-module:

    * mu_in_center: every ``mu(x_i, x_j, x_k)`` lies in Z(H);
    * rho_commutes_with_der: every ``rho(x_i, x_j)`` commutes with Der(H);
    * eq14.
    """
    if not spec.beta.is_zero():
        raise PreconditionError("requires beta = 0")
    if not check_representation(spec.M, spec.rho, witness_cap=1).passed:
        raise PreconditionError("requires (H, rho) to be an M-module")
    col = Collector("theorem34", witness_cap)
    z = center(spec.H)
    for t in combinations(range(spec.m), 3):
        mu = spec.mu(*t)
        col.checked += 1
        if not z.contains(mu):
            col.fail("mu_in_center", t, mu, None)
    ders = derivation_algebra(spec.H)
    for i, j in combinations(range(spec.m), 2):
        r = spec.rho(i, j)
        for q, d in enumerate(ders):
            col.compare("rho_commutes_with_der", (i, j, q), _rows(r @ d), _rows(d @ r))
    eq14 = check_condition_eq14(spec, witness_cap=witness_cap)
    rep = col.report()
    return CheckReport.combine("theorem34", [rep, eq14], witness_cap)


def check_exact_sequence(spec: ExtensionSpec, *, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """``0 -> H -i-> A -p-> M -> 0`` with i, p homomorphisms and im i = ker p."""
    A = _require_lie(spec, "the exact sequence")
    i, p = inclusion(spec), projection(spec)
    parts = [is_homomorphism(i, spec.H, A, witness_cap=witness_cap), is_homomorphism(p, A, spec.M, witness_cap=witness_cap)]
    col = Collector("exactness", witness_cap)
    n = A.dim
    image = Subspace(n, (i.column(a) for a in range(spec.h)))
    kernel = nullspace(p) if spec.m else Subspace.whole(n)
    col.compare("image_equals_kernel", (), image.basis, kernel.basis)
    col.compare("i_injective", (), image.dim, spec.h)
    p_image = Subspace(spec.m, (p.column(c) for c in range(n)))
    col.compare("p_surjective", (), p_image.dim, spec.m)
    parts.append(col.report())
    return CheckReport.combine("exact_sequence", parts, witness_cap)
