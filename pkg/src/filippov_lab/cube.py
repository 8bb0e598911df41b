"""The exterior direct sum ``A^3`` of a 3-Lie algebra.

On triples ``(x, y, z)`` the bracket is

    [(x1,y1,z1), (x2,y2,z2), (x3,y3,z3)]
        = ([x1,y2,y3] + [x2,y3,y1] + [x3,y1,y2], [y1,y2,y3], [z1,z2,z3]).

The carrier basis is the X-block, then the Y-block, then the Z-block, each a
copy of A's basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .errors import DimensionError, PreconditionError
from .exactlin import Matrix, Subspace, Vector, nullspace, unit_vector, vec_add
from .extension import ExtensionSpec, assemble, inclusion, projection
from .report import DEFAULT_WITNESS_CAP, CheckReport, Collector
from .trilie import ThreeLieAlgebra, check_fundamental_identity, is_abelian_ideal, is_derivation, is_homomorphism, is_ideal, is_subalgebra


@dataclass(frozen=True)
class CubeAlgebra:
    base: ThreeLieAlgebra
    carrier: ThreeLieAlgebra

    @property
    def n(self) -> int:
        return self.base.dim

    def block(self, *names: str) -> Subspace:
        """Span of the named blocks, e.g. ``block("x", "y")``."""
        n = self.n
        offsets = {"x": 0, "y": n, "z": 2 * n}
        vecs = [unit_vector(3 * n, offsets[b] + i) for b in names for i in range(n)]
        return Subspace(3 * n, vecs)

    def embed(self, x: Sequence, y: Sequence, z: Sequence) -> Vector:
        return tuple(x) + tuple(y) + tuple(z)


def cube_bracket(A: ThreeLieAlgebra, u: Sequence, v: Sequence, w: Sequence) -> Vector:
    """Evaluate the exterior direct sum bracket on three 3n-vectors."""
    n = A.dim
    if not (len(u) == len(v) == len(w) == 3 * n):
        raise DimensionError(f"cube arguments must have length {3 * n}")
    x1, y1, z1 = u[:n], u[n : 2 * n], u[2 * n :]
    x2, y2, z2 = v[:n], v[n : 2 * n], v[2 * n :]
    x3, y3, z3 = w[:n], w[n : 2 * n], w[2 * n :]
    first = vec_add(vec_add(A.bracket(x1, y2, y3), A.bracket(x2, y3, y1)), A.bracket(x3, y1, y2))
    return first + A.bracket(y1, y2, y3) + A.bracket(z1, z2, z3)


@lru_cache(maxsize=32)
def _cube_cached(A: ThreeLieAlgebra) -> CubeAlgebra:
    n = A.dim
    N = 3 * n
    brackets = {}
    for i, j, k in combinations(range(N), 3):
        v = cube_bracket(A, unit_vector(N, i), unit_vector(N, j), unit_vector(N, k))
        if any(v):
            brackets[(i, j, k)] = v
    labels = [f"{b}:{lbl}" for b in "xyz" for lbl in A.basis]
    return CubeAlgebra(A, ThreeLieAlgebra(N, brackets, labels))


def cube(A: ThreeLieAlgebra, *, check: bool = True) -> CubeAlgebra:
    """Build ``A^3``.  Rejects A when it fails the fundamental identity."""
    if check and not check_fundamental_identity(A, witness_cap=1).passed:
        raise PreconditionError("cube needs a 3-Lie algebra; the input fails the fundamental identity")
    return _cube_cached(A)


def check_theorem42(C: CubeAlgebra) -> CheckReport:
    """The five block claims: the Z-block is an abelian ideal, and the Y, X,
    X+Y and Y+Z blocks are subalgebras.

    The notes also record, for every single block, whether it is an ideal and
    whether it is an abelian ideal, since those facts are not symmetric across
    the three blocks.
    """
    A = C.carrier
    col = Collector("theorem42", 5)
    claims = [
        ("z_block_abelian_ideal", (2,), lambda S: is_abelian_ideal(A, S), ("z",)),
        ("y_block_subalgebra", (1,), lambda S: is_subalgebra(A, S), ("y",)),
        ("x_block_subalgebra", (0,), lambda S: is_subalgebra(A, S), ("x",)),
        ("xy_block_subalgebra", (0, 1), lambda S: is_subalgebra(A, S), ("x", "y")),
        ("yz_block_subalgebra", (1, 2), lambda S: is_subalgebra(A, S), ("y", "z")),
    ]
    for name, idx, test, blocks in claims:
        ok = test(C.block(*blocks))
        col.compare(name, idx, ok, True)
    for b in "xyz":
        S = C.block(b)
        col.notes.append(f"{b}_block: ideal={is_ideal(A, S)}, abelian_ideal={is_abelian_ideal(A, S)}")
    return col.report()


def f_delta(A: ThreeLieAlgebra, d: Matrix) -> Matrix:
    """``x -> (d x, x, x)`` as a ``3n x n`` matrix."""
    n = A.dim
    if d.shape != (n, n):
        raise DimensionError(f"expected an {n}x{n} map, got {d.rows}x{d.cols}")
    eye = Matrix.identity(n)
    return Matrix.block([[d], [eye], [eye]]) if n else Matrix.zeros(0, 0)


def check_lemma41(A: ThreeLieAlgebra, d: Matrix) -> tuple[bool, bool]:
    """``(d is a derivation of A, f_delta(A, d) is a homomorphism A -> A^3)``."""
    is_der = is_derivation(A, d, witness_cap=1).passed
    is_hom = is_homomorphism(f_delta(A, d), A, cube(A).carrier, witness_cap=1).passed
    return is_der, is_hom


def triple_map(f: Matrix) -> Matrix:
    """``f x f x f`` acting blockwise."""
    z = Matrix.zeros(f.rows, f.cols)
    return Matrix.block([[f, z, z], [z, f, z], [z, z, f]])


def check_cube_sequence(spec: ExtensionSpec, *, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Exactness of ``0 -> H^3 -> A^3 -> M^3 -> 0`` under ``i x i x i`` and ``p x p x p``."""
    A = assemble(spec)
    if not check_fundamental_identity(A, witness_cap=1).passed:
        raise PreconditionError("the cube sequence needs an extension that satisfies the fundamental identity")
    CH, CA, CM = cube(spec.H), cube(A), cube(spec.M)
    i3 = triple_map(inclusion(spec))
    p3 = triple_map(projection(spec))
    parts = [
        is_homomorphism(i3, CH.carrier, CA.carrier, witness_cap=witness_cap),
        is_homomorphism(p3, CA.carrier, CM.carrier, witness_cap=witness_cap),
    ]
    N = CA.carrier.dim
    col = Collector("cube_exactness", witness_cap)
    image = Subspace(N, (i3.column(a) for a in range(i3.cols)))
    kernel = nullspace(p3) if p3.rows else Subspace.whole(N)
    col.compare("image_equals_kernel", (), image.basis, kernel.basis)
    col.compare("i_injective", (), image.dim, i3.cols)
    col.compare("p_surjective", (), Subspace(p3.rows, (p3.column(c) for c in range(N))).dim, p3.rows)
    parts.append(col.report())
    return CheckReport.combine("cube_sequence", parts, witness_cap)
