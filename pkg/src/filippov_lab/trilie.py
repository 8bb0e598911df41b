"""3-Lie algebras given by structure constants, and the checks built on them.

A :class:`ThreeLieAlgebra` stores ``[e_i, e_j, e_k]`` only for strictly
increasing triples; every other ordering is recovered from the sign of the
sorting permutation and any repeated index brackets to zero.  The identity
sweeps below only visit canonical index tuples, which is enough because both
sides of each identity are multilinear and antisymmetric in the swept slots.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from . import _sweep
from .errors import DimensionError, InputError
from .exactlin import (
    ZERO,
    Matrix,
    Subspace,
    Vector,
    nullspace,
    unit_vector,
    vector,
)
from .report import DEFAULT_WITNESS_CAP, CheckReport, Collector

Sparse = dict[int, Fraction]
LinearMap = Matrix


def sort3(i: int, j: int, k: int) -> tuple[int, tuple[int, int, int] | None]:
    """Sign and sorted form of an index triple (sign 0 on repeats)."""
    if i == j or j == k or i == k:
        return 0, None
    sign = 1
    if i > j:
        i, j, sign = j, i, -sign
    if j > k:
        j, k, sign = k, j, -sign
    if i > j:
        i, j, sign = j, i, -sign
    return sign, (i, j, k)


def _to_sparse(v: Sequence[Fraction]) -> Sparse:
    return {i: x for i, x in enumerate(v) if x}


def _to_dense(s: Mapping[int, Fraction], n: int) -> Vector:
    return tuple(s.get(i, ZERO) for i in range(n))


def _axpy(acc: Sparse, c: Fraction, s: Mapping[int, Fraction]) -> None:
    for k, x in s.items():
        val = acc.get(k, ZERO) + c * x
        if val:
            acc[k] = val
        else:
            acc.pop(k, None)


class ThreeLieAlgebra:
    """A finite-dimensional skew-symmetric ternary algebra over Q.

    Whether the fundamental identity holds is a property to be checked with
    :func:`check_fundamental_identity`, not an invariant of the type.  Two
    algebras compare equal when they have the same dimension and structure
    constants; basis labels are cosmetic.
    """

    def __init__(
        self,
        dim: int,
        brackets: Mapping[tuple[int, int, int], Sequence] | None = None,
        basis: Sequence[str] | None = None,
    ):
        if dim < 0:
            raise InputError("dimension must be non-negative")
        self.dim = dim
        self.basis = tuple(basis) if basis is not None else tuple(f"e{i + 1}" for i in range(dim))
        if len(self.basis) != dim:
            raise InputError(f"{len(self.basis)} basis labels for dimension {dim}")
        self._sc: dict[tuple[int, int, int], Sparse] = {}
        for triple, value in (brackets or {}).items():
            i, j, k = triple
            if not (0 <= i < j < k < dim):
                raise InputError(f"bracket triple {triple} is not strictly increasing in range(0, {dim})")
            value = vector(value)
            if len(value) != dim:
                raise DimensionError(f"bracket value for {triple} has length {len(value)}, expected {dim}")
            sp = _to_sparse(value)
            if sp:
                self._sc[(i, j, k)] = sp
        self._cache: dict[tuple[int, int, int], Sparse] = {}

    @property
    def sc(self) -> dict[tuple[int, int, int], Vector]:
        """Nonzero structure constants on canonical triples."""
        return {t: _to_dense(s, self.dim) for t, s in sorted(self._sc.items())}

    def is_abelian(self) -> bool:
        return not self._sc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ThreeLieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self._sc == other._sc

    def __hash__(self) -> int:
        return hash((self.dim, tuple(sorted((t, tuple(sorted(s.items()))) for t, s in self._sc.items()))))

    def __repr__(self) -> str:
        return f"ThreeLieAlgebra(dim={self.dim}, nonzero_brackets={len(self._sc)})"

    def __getstate__(self):
        return {"dim": self.dim, "basis": self.basis, "_sc": self._sc}

    def __setstate__(self, state):
        self.__dict__.update(state)
        self._cache = {}

    # evaluation -----------------------------------------------------------
    def bb(self, i: int, j: int, k: int) -> Sparse:
        """``[e_i, e_j, e_k]`` as a sparse vector (shared; do not mutate)."""
        key = (i, j, k)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        sign, canon = sort3(i, j, k)
        if not sign or canon not in self._sc:
            out: Sparse = {}
        elif sign > 0:
            out = self._sc[canon]
        else:
            out = {l: -c for l, c in self._sc[canon].items()}
        self._cache[key] = out
        return out

    def sbracket(self, u: Mapping[int, Fraction], v: Mapping[int, Fraction], w: Mapping[int, Fraction]) -> Sparse:
        acc: Sparse = {}
        for i, a in u.items():
            for j, b in v.items():
                if j == i:
                    continue
                ab = a * b
                for k, c in w.items():
                    if k == i or k == j:
                        continue
                    s = self.bb(i, j, k)
                    if s:
                        _axpy(acc, ab * c, s)
        return acc

    def bracket(self, u: Sequence, v: Sequence, w: Sequence) -> Vector:
        for x in (u, v, w):
            if len(x) != self.dim:
                raise DimensionError(f"vector of length {len(x)} in an algebra of dimension {self.dim}")
        return _to_dense(self.sbracket(_to_sparse(vector(u)), _to_sparse(vector(v)), _to_sparse(vector(w))), self.dim)

    def canonical_triples(self) -> list[tuple[int, int, int]]:
        return list(combinations(range(self.dim), 3))


def bracket(A: ThreeLieAlgebra, u: Sequence, v: Sequence, w: Sequence) -> Vector:
    return A.bracket(u, v, w)


def _check_map_shape(d: Matrix, rows: int, cols: int, what: str) -> None:
    if d.shape != (rows, cols):
        raise DimensionError(f"{what} must be {rows}x{cols}, got {d.shape[0]}x{d.shape[1]}")


def _map_sparse(d: Matrix, s: Mapping[int, Fraction]) -> Sparse:
    acc: Sparse = {}
    for j, c in s.items():
        for i in range(d.rows):
            x = d[i, j]
            if x:
                val = acc.get(i, ZERO) + c * x
                if val:
                    acc[i] = val
                else:
                    acc.pop(i, None)
    return acc


def _columns_sparse(d: Matrix) -> list[Sparse]:
    return [_to_sparse(d.column(j)) for j in range(d.cols)]


# fundamental identity ---------------------------------------------------------

def _fi_chunk(context: tuple[ThreeLieAlgebra, int], items) -> CheckReport:
    A, cap = context
    col = Collector("fundamental_identity", cap)
    n = A.dim
    for x, y, z, u, v in items:
        w = A.bb(x, y, z)
        lhs: Sparse = {}
        for l, c in w.items():
            _axpy(lhs, c, A.bb(l, u, v))
        rhs: Sparse = {}
        for l, c in A.bb(x, u, v).items():
            _axpy(rhs, c, A.bb(l, y, z))
        for l, c in A.bb(y, u, v).items():
            _axpy(rhs, c, A.bb(x, l, z))
        for l, c in A.bb(z, u, v).items():
            _axpy(rhs, c, A.bb(x, y, l))
        col.checked += 1
        if lhs != rhs:
            col.fail("fundamental_identity", (x, y, z, u, v), _to_dense(lhs, n), _to_dense(rhs, n))
    return col.report()


def fundamental_identity_tuples(n: int) -> list[tuple[int, int, int, int, int]]:
    pairs = list(combinations(range(n), 2))
    return [t + p for t in combinations(range(n), 3) for p in pairs]


def check_fundamental_identity(
    A: ThreeLieAlgebra, *, witness_cap: int = DEFAULT_WITNESS_CAP, jobs: int | None = 1
) -> CheckReport:
    """Sweep ``[[x,y,z],u,v] = [[x,u,v],y,z] + [x,[y,u,v],z] + [x,y,[z,u,v]]``.

    Visits x<y<z and u<v, C(n,3)*C(n,2) tuples.  With ``jobs > 1`` the tuple
    list is split across worker processes; the merged report is identical to
    the serial one.
    """
    parts = _sweep.map_chunks(_fi_chunk, (A, witness_cap), fundamental_identity_tuples(A.dim), jobs)
    return CheckReport.combine("fundamental_identity", parts, witness_cap)


# derivations ----------------------------------------------------------------

def is_derivation(A: ThreeLieAlgebra, d: Matrix, *, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Leibniz rule ``d[x,y,z] = [dx,y,z] + [x,dy,z] + [x,y,dz]`` on basis triples."""
    n = A.dim
    _check_map_shape(d, n, n, "derivation candidate")
    cols = _columns_sparse(d)
    col = Collector("derivation", witness_cap)
    for i, j, k in combinations(range(n), 3):
        lhs = _map_sparse(d, A.bb(i, j, k))
        rhs: Sparse = {}
        for l, c in cols[i].items():
            _axpy(rhs, c, A.bb(l, j, k))
        for l, c in cols[j].items():
            _axpy(rhs, c, A.bb(i, l, k))
        for l, c in cols[k].items():
            _axpy(rhs, c, A.bb(i, j, l))
        col.checked += 1
        if lhs != rhs:
            col.fail("derivation", (i, j, k), _to_dense(lhs, n), _to_dense(rhs, n))
    return col.report()


def inner_derivation(A: ThreeLieAlgebra, x: Sequence, y: Sequence) -> Matrix:
    """The map ``w -> [x, y, w]``."""
    n = A.dim
    if len(x) != n or len(y) != n:
        raise DimensionError("inner_derivation arguments must have length A.dim")
    sx, sy = _to_sparse(vector(x)), _to_sparse(vector(y))
    cols = [_to_dense(A.sbracket(sx, sy, {w: Fraction(1)}), n) for w in range(n)]
    return Matrix.from_columns(cols, n)


def ad(A: ThreeLieAlgebra, i: int, j: int) -> Matrix:
    """Inner derivation of a pair of basis vectors."""
    return inner_derivation(A, unit_vector(A.dim, i), unit_vector(A.dim, j))


def _rows_to_matrix(rows: Iterable[Mapping[int, Fraction]], ncols: int) -> Matrix:
    seen = set()
    dense = []
    for r in rows:
        if not r:
            continue
        key = tuple(sorted(r.items()))
        if key in seen:
            continue
        seen.add(key)
        dense.append(_to_dense(r, ncols))
    return Matrix(dense, len(dense), ncols)


def derivation_system(A: ThreeLieAlgebra) -> Matrix:
    """Homogeneous system whose kernel is Der(A).

    Unknown ``d[a][b]`` (row a, column b) sits at position ``a*n + b``.
    """
    n = A.dim
    rows = []
    for i, j, k in combinations(range(n), 3):
        eq: dict[int, Sparse] = {}
        for a, c in A.bb(i, j, k).items():
            for l in range(n):
                _axpy(eq.setdefault(l, {}), c, {l * n + a: Fraction(1)})
        for b in range(n):
            for l, c in A.bb(b, j, k).items():
                _axpy(eq.setdefault(l, {}), -c, {b * n + i: Fraction(1)})
            for l, c in A.bb(i, b, k).items():
                _axpy(eq.setdefault(l, {}), -c, {b * n + j: Fraction(1)})
            for l, c in A.bb(i, j, b).items():
                _axpy(eq.setdefault(l, {}), -c, {b * n + k: Fraction(1)})
        rows.extend(eq[l] for l in sorted(eq))
    return _rows_to_matrix(rows, n * n)


def derivation_algebra(A: ThreeLieAlgebra) -> list[Matrix]:
    """A basis of Der(A), in the canonical order of the kernel's RREF basis."""
    n = A.dim
    ker = nullspace(derivation_system(A))
    return [Matrix((v[a * n : (a + 1) * n] for a in range(n)), n, n) for v in ker.basis]


def in_span(maps: Sequence[Matrix], d: Matrix) -> bool:
    if not maps:
        return d.is_zero()
    n = len(maps[0].flatten())
    return Subspace(n, (m.flatten() for m in maps)).contains(d.flatten())


# center, subalgebras, ideals ------------------------------------------------

def center(A: ThreeLieAlgebra) -> Subspace:
    """``{z : [z, e_j, e_k] = 0 for all j < k}``."""
    n = A.dim
    rows = []
    for j, k in combinations(range(n), 2):
        eq: dict[int, Sparse] = {}
        for a in range(n):
            for l, c in A.bb(a, j, k).items():
                _axpy(eq.setdefault(l, {}), c, {a: Fraction(1)})
        rows.extend(eq.values())
    return nullspace(_rows_to_matrix(rows, n))


def _check_subspace(A: ThreeLieAlgebra, S: Subspace) -> None:
    if S.ambient_dim != A.dim:
        raise DimensionError(f"subspace of Q^{S.ambient_dim} in an algebra of dimension {A.dim}")


def is_subalgebra(A: ThreeLieAlgebra, S: Subspace) -> bool:
    """``[S, S, S]`` lies in ``S``."""
    _check_subspace(A, S)
    sb = [_to_sparse(v) for v in S.basis]
    return all(S.contains(_to_dense(A.sbracket(sb[a], sb[b], sb[c]), A.dim)) for a, b, c in combinations(range(len(sb)), 3))


def is_ideal(A: ThreeLieAlgebra, S: Subspace) -> bool:
    """``[S, A, A]`` lies in ``S``."""
    _check_subspace(A, S)
    n = A.dim
    for v in S.basis:
        sv = _to_sparse(v)
        for j, k in combinations(range(n), 2):
            if not S.contains(_to_dense(A.sbracket(sv, {j: Fraction(1)}, {k: Fraction(1)}), n)):
                return False
    return True


def is_abelian_ideal(A: ThreeLieAlgebra, S: Subspace) -> bool:
    """Ideal with ``[S, S, A] = 0`` (hence also ``[S, S, S] = 0``)."""
    if not is_ideal(A, S):
        return False
    sb = [_to_sparse(v) for v in S.basis]
    for a, b in combinations(range(len(sb)), 2):
        for k in range(A.dim):
            if A.sbracket(sb[a], sb[b], {k: Fraction(1)}):
                return False
    return True


# homomorphisms --------------------------------------------------------------

def is_homomorphism(
    f: Matrix, A: ThreeLieAlgebra, B: ThreeLieAlgebra, *, witness_cap: int = DEFAULT_WITNESS_CAP
) -> CheckReport:
    """``f[x,y,z]_A = [fx, fy, fz]_B`` on basis triples of A."""
    _check_map_shape(f, B.dim, A.dim, "homomorphism candidate")
    cols = _columns_sparse(f)
    col = Collector("homomorphism", witness_cap)
    for i, j, k in combinations(range(A.dim), 3):
        lhs = _map_sparse(f, A.bb(i, j, k))
        rhs = B.sbracket(cols[i], cols[j], cols[k])
        col.checked += 1
        if lhs != rhs:
            col.fail("homomorphism", (i, j, k), _to_dense(lhs, B.dim), _to_dense(rhs, B.dim))
    return col.report()


def direct_sum(A: ThreeLieAlgebra, B: ThreeLieAlgebra) -> ThreeLieAlgebra:
    """Block direct sum, A's basis first."""
    n = A.dim + B.dim
    brackets = {}
    for t, v in A.sc.items():
        brackets[t] = tuple(v) + (ZERO,) * B.dim
    for (i, j, k), v in B.sc.items():
        brackets[(i + A.dim, j + A.dim, k + A.dim)] = (ZERO,) * A.dim + tuple(v)
    return ThreeLieAlgebra(n, brackets, A.basis + B.basis)


def change_basis(A: ThreeLieAlgebra, P: Matrix, basis: Sequence[str] | None = None) -> ThreeLieAlgebra:
    """The same algebra written in the basis given by the columns of ``P``."""
    from .exactlin import inverse

    n = A.dim
    _check_map_shape(P, n, n, "change of basis")
    Pinv = inverse(P)
    cols = _columns_sparse(P)
    brackets = {}
    for i, j, k in combinations(range(n), 3):
        brackets[(i, j, k)] = Pinv.apply(_to_dense(A.sbracket(cols[i], cols[j], cols[k]), n))
    return ThreeLieAlgebra(n, brackets, basis if basis is not None else A.basis)
