"""Representations ``rho: A ^ A -> End(V)`` of a 3-Lie algebra."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from typing import Mapping, Sequence

from .errors import DimensionError, InputError
from .exactlin import Matrix
from .report import DEFAULT_WITNESS_CAP, CheckReport, Collector
from .trilie import ThreeLieAlgebra, ad


class PairAction:
    """Skew bilinear map from pairs of basis vectors to square matrices.

    Only pairs ``i < j`` are stored; ``rho(j, i) = -rho(i, j)`` and
    ``rho(i, i) = 0``.
    """

    def __init__(self, algebra_dim: int, target_dim: int, table: Mapping[tuple[int, int], Matrix] | None = None):
        self.algebra_dim = algebra_dim
        self.target_dim = target_dim
        self._zero = Matrix.zeros(target_dim, target_dim)
        self._table: dict[tuple[int, int], Matrix] = {}
        for (i, j), mat in (table or {}).items():
            if not (0 <= i < j < algebra_dim):
                raise InputError(f"pair {(i, j)} is not strictly increasing in range(0, {algebra_dim})")
            if not isinstance(mat, Matrix):
                mat = Matrix(mat, target_dim, target_dim)
            if mat.shape != (target_dim, target_dim):
                raise DimensionError(f"matrix for pair {(i, j)} must be {target_dim}x{target_dim}")
            if not mat.is_zero():
                self._table[(i, j)] = mat
        self._full = [[self._lookup(i, j) for j in range(algebra_dim)] for i in range(algebra_dim)]

    def _lookup(self, i: int, j: int) -> Matrix:
        if i == j:
            return self._zero
        if i < j:
            return self._table.get((i, j), self._zero)
        return -self._table.get((j, i), self._zero)

    @property
    def table(self) -> dict[tuple[int, int], Matrix]:
        return dict(sorted(self._table.items()))

    def is_zero(self) -> bool:
        return not self._table

    def __call__(self, i: int, j: int) -> Matrix:
        return self._full[i][j]

    def of_vectors(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Matrix:
        """Bilinear extension ``rho(u, v)``."""
        if len(u) != self.algebra_dim or len(v) != self.algebra_dim:
            raise DimensionError("pair-action arguments must have length algebra_dim")
        acc = self._zero
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    if b and i != j:
                        m = self._full[i][j]
                        if not m.is_zero():
                            acc = acc + m.scale(a * b)
        return acc

    def with_vector_first(self, u: Sequence[Fraction], j: int) -> Matrix:
        acc = self._zero
        for i, a in enumerate(u):
            if a and i != j:
                m = self._full[i][j]
                if not m.is_zero():
                    acc = acc + m.scale(a)
        return acc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PairAction):
            return NotImplemented
        return (self.algebra_dim, self.target_dim, self._table) == (other.algebra_dim, other.target_dim, other._table)

    def __repr__(self) -> str:
        return f"PairAction({self.algebra_dim} -> End(Q^{self.target_dim}), {len(self._table)} nonzero pairs)"


def adjoint_action(A: ThreeLieAlgebra) -> PairAction:
    """``rho(x, y) = ad(x, y)`` acting on A itself."""
    return PairAction(A.dim, A.dim, {(i, j): ad(A, i, j) for i, j in combinations(range(A.dim), 2)})


def _check_dims(A: ThreeLieAlgebra, rho: PairAction) -> None:
    if rho.algebra_dim != A.dim:
        raise DimensionError(f"pair action on a {rho.algebra_dim}-dimensional algebra applied to dimension {A.dim}")


def _rho_bracket_first(A: ThreeLieAlgebra, rho: PairAction, i: int, j: int, k: int, l: int) -> Matrix:
    """``rho([e_i, e_j, e_k], e_l)``."""
    acc = rho._zero
    for a, c in A.bb(i, j, k).items():
        m = rho(a, l)
        if not m.is_zero():
            acc = acc + m.scale(c)
    return acc


def check_representation(
    A: ThreeLieAlgebra, rho: PairAction, *, witness_cap: int = DEFAULT_WITNESS_CAP
) -> CheckReport:
    """Both defining identities of a module, on every basis 4-tuple.

    commutator:  [rho(x1,x2), rho(x3,x4)] = rho([x1,x2,x3],x4) - rho([x1,x2,x4],x3)
    expansion:   rho([x1,x2,x3],x4) = rho(x1,x2)rho(x3,x4) + rho(x2,x3)rho(x1,x4) + rho(x3,x1)rho(x2,x4)
    """
    _check_dims(A, rho)
    col = Collector("representation", witness_cap)
    n = A.dim
    for t in product(range(n), repeat=4):
        x1, x2, x3, x4 = t
        r123_4 = _rho_bracket_first(A, rho, x1, x2, x3, x4)
        r124_3 = _rho_bracket_first(A, rho, x1, x2, x4, x3)
        col.compare("commutator", t, rho(x1, x2).commutator(rho(x3, x4)).to_rows(), (r123_4 - r124_3).to_rows())
        rhs = rho(x1, x2) @ rho(x3, x4) + rho(x2, x3) @ rho(x1, x4) + rho(x3, x1) @ rho(x2, x4)
        col.compare("expansion", t, r123_4.to_rows(), rhs.to_rows())
    return col.report()


def check_lemma21(A: ThreeLieAlgebra, rho: PairAction, *, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """The two identities every module satisfies, on every basis 4-tuple.

    skew_sum:  rho([x,y,z],u) - rho([x,y,u],z) + rho([x,z,u],y) - rho([y,z,u],x) = 0
    anticommutator_sum:  rho(x,u)rho(y,z) + rho(y,z)rho(x,u) + rho(x,y)rho(z,u)
        + rho(z,u)rho(x,y) - rho(x,z)rho(y,u) - rho(y,u)rho(x,z) = 0
    """
    _check_dims(A, rho)
    col = Collector("lemma21", witness_cap)
    zero = rho._zero.to_rows()
    n = A.dim
    for t in product(range(n), repeat=4):
        x, y, z, u = t
        lhs = (
            _rho_bracket_first(A, rho, x, y, z, u)
            - _rho_bracket_first(A, rho, x, y, u, z)
            + _rho_bracket_first(A, rho, x, z, u, y)
            - _rho_bracket_first(A, rho, y, z, u, x)
        )
        col.compare("skew_sum", t, lhs.to_rows(), zero)
        acs = (
            anticommutator(rho(x, u), rho(y, z))
            + anticommutator(rho(x, y), rho(z, u))
            - anticommutator(rho(x, z), rho(y, u))
        )
        col.compare("anticommutator_sum", t, acs.to_rows(), zero)
    return col.report()


def anticommutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b + b @ a
