"""Builders for concrete 3-Lie algebras.

These give a corpus of algebras known to satisfy the fundamental identity:
the abelian algebras, the simple 4-dimensional algebra, algebras induced from
a Lie algebra by a linear functional vanishing on ``[L, L]``, ``gl(m)`` with
the trace-form bracket, and the two-dimensional extension of a metric Lie
algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .errors import DimensionError, InputError, PreconditionError
from .exactlin import ZERO, Matrix, Vector, rank, vector, zero_vector
from .trilie import ThreeLieAlgebra


def _perm_sign(p: Sequence[int]) -> int:
    sign = 1
    p = list(p)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


class LieAlgebra:
    """Lie algebra over Q from structure constants on pairs ``i < j``.

    The Jacobi identity is verified at construction.
    """

    def __init__(self, dim: int, brackets: Mapping[tuple[int, int], Sequence] | None = None, basis=None):
        self.dim = dim
        self.basis = tuple(basis) if basis is not None else tuple(f"x{i + 1}" for i in range(dim))
        self._sc: dict[tuple[int, int], Vector] = {}
        for (i, j), v in (brackets or {}).items():
            if not (0 <= i < j < dim):
                raise InputError(f"Lie bracket pair {(i, j)} is not strictly increasing in range(0, {dim})")
            v = vector(v)
            if len(v) != dim:
                raise DimensionError(f"Lie bracket value for {(i, j)} has length {len(v)}")
            if any(v):
                self._sc[(i, j)] = v
        for i, j, k in combinations(range(dim), 3):
            total = zero_vector(dim)
            for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                total = tuple(t + s for t, s in zip(total, self.bracket_vec(self.bb(a, b), _unit(dim, c))))
            if any(total):
                raise PreconditionError(f"Jacobi identity fails on basis triple {(i, j, k)}")

    @property
    def sc2(self) -> dict[tuple[int, int], Vector]:
        return dict(sorted(self._sc.items()))

    def bb(self, i: int, j: int) -> Vector:
        if i == j:
            return zero_vector(self.dim)
        if i < j:
            return self._sc.get((i, j), zero_vector(self.dim))
        return tuple(-x for x in self._sc.get((j, i), zero_vector(self.dim)))

    def bracket_vec(self, u: Sequence, v: Sequence) -> Vector:
        out = [ZERO] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b or i == j:
                    continue
                for k, c in enumerate(self.bb(i, j)):
                    if c:
                        out[k] += a * b * c
        return tuple(out)


def _unit(n: int, i: int) -> Vector:
    return tuple(Fraction(1) if k == i else ZERO for k in range(n))


@dataclass(frozen=True)
class MetricForm:
    """Nondegenerate symmetric bilinear form, given by its Gram matrix."""

    gram: Matrix

    def __post_init__(self):
        g = self.gram
        if g.rows != g.cols:
            raise DimensionError("Gram matrix must be square")
        if g != g.transpose():
            raise PreconditionError("Gram matrix is not symmetric")
        if rank(g) != g.rows:
            raise PreconditionError("bilinear form is degenerate")

    @property
    def dim(self) -> int:
        return self.gram.rows

    def __call__(self, u: Sequence, v: Sequence) -> Fraction:
        return sum((a * b for a, b in zip(u, self.gram.apply(vector(v)))), ZERO)


def is_invariant(L: LieAlgebra, B: MetricForm) -> bool:
    """``B([x, y], z) = -B(y, [x, z])`` on all basis triples."""
    n = L.dim
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if B(L.bb(x, y), _unit(n, z)) != -B(_unit(n, y), L.bb(x, z)):
                    return False
    return True


# concrete algebras ------------------------------------------------------------

def abelian(n: int) -> ThreeLieAlgebra:
    if n < 0:
        raise InputError("dimension must be non-negative")
    return ThreeLieAlgebra(n)


def simple4() -> ThreeLieAlgebra:
    """``[e_i, e_j, e_k] = sum_l eps_{ijkl} e_l`` with ``eps_1234 = +1``."""
    brackets = {}
    for t in combinations(range(4), 3):
        (l,) = set(range(4)) - set(t)
        v = [ZERO] * 4
        v[l] = Fraction(_perm_sign(t + (l,)))
        brackets[t] = v
    return ThreeLieAlgebra(4, brackets)


def from_lie_functional(L: LieAlgebra, f: Sequence) -> ThreeLieAlgebra:
    """``[x,y,z]_f = f(x)[y,z] + f(y)[z,x] + f(z)[x,y]``.

    Requires ``f`` to vanish on ``[L, L]``; the first offending basis pair is
    reported otherwise.
    """
    f = vector(f)
    n = L.dim
    if len(f) != n:
        raise DimensionError(f"functional of length {len(f)} on a Lie algebra of dimension {n}")

    def fv(v):
        return sum((a * b for a, b in zip(f, v)), ZERO)

    for i, j in combinations(range(n), 2):
        if fv(L.bb(i, j)):
            raise PreconditionError(f"functional does not vanish on [x{i + 1}, x{j + 1}] (pair {(i, j)})")
    brackets = {}
    for i, j, k in combinations(range(n), 3):
        v = [ZERO] * n
        for c, pair in ((f[i], L.bb(j, k)), (f[j], L.bb(k, i)), (f[k], L.bb(i, j))):
            if c:
                for l, x in enumerate(pair):
                    v[l] += c * x
        brackets[(i, j, k)] = v
    return ThreeLieAlgebra(n, brackets, L.basis)


def gl_lie(m: int) -> LieAlgebra:
    """``gl(m)`` on the elementary matrices ``E_ab``, row-major order."""
    n = m * m
    brackets = {}
    for p, q in combinations(range(n), 2):
        a, b = divmod(p, m)
        c, d = divmod(q, m)
        v = [ZERO] * n
        if b == c:
            v[a * m + d] += 1
        if d == a:
            v[c * m + b] -= 1
        brackets[(p, q)] = v
    labels = [f"E{a + 1}{b + 1}" for a in range(m) for b in range(m)]
    return LieAlgebra(n, brackets, labels)


def trace_functional(m: int) -> Vector:
    return tuple(Fraction(1) if a == b else ZERO for a in range(m) for b in range(m))


def gl_trace_form(m: int) -> ThreeLieAlgebra:
    """``[A, B, C] = tr(A)[B, C] + tr(B)[C, A] + tr(C)[A, B]`` on ``gl(m)``."""
    if m < 1:
        raise InputError("matrix size must be at least 1")
    n = m * m
    brackets = {}
    for p, q, r in combinations(range(n), 3):
        v = [ZERO] * n
        for s, (x, y) in ((p, (q, r)), (q, (r, p)), (r, (p, q))):
            a, b = divmod(s, m)
            if a != b:
                continue
            c, d = divmod(x, m)
            e, f = divmod(y, m)
            if d == e:
                v[c * m + f] += 1
            if f == c:
                v[e * m + d] -= 1
        brackets[(p, q, r)] = v
    labels = [f"E{a + 1}{b + 1}" for a in range(m) for b in range(m)]
    return ThreeLieAlgebra(n, brackets, labels)


def so3() -> LieAlgebra:
    """``[x1, x2] = x3`` and cyclic."""
    return LieAlgebra(3, {(0, 1): (0, 0, 1), (1, 2): (1, 0, 0), (0, 2): (0, -1, 0)})


def heisenberg_lie() -> LieAlgebra:
    """``[x1, x2] = x3``."""
    return LieAlgebra(3, {(0, 1): (0, 0, 1)})


def metric_lie_extension(L: LieAlgebra, B: MetricForm) -> ThreeLieAlgebra:
    """Two-dimensional extension of a metric Lie algebra.

    Basis ``x_1..x_m, x^0, x^-1`` with ``[x^0, x_i, x_j] = [x_i, x_j]``,
    ``[x_i, x_j, x_k] = B([x_i, x_j], x_k) x^-1`` and every bracket involving
    ``x^-1`` equal to zero.
    """
    m = L.dim
    if B.dim != m:
        raise DimensionError(f"form of dimension {B.dim} on a Lie algebra of dimension {m}")
    if not is_invariant(L, B):
        raise PreconditionError("bilinear form is not invariant")
    n = m + 2
    x0, xm1 = m, m + 1
    brackets = {}
    for i, j in combinations(range(m), 2):
        brackets[(i, j, x0)] = tuple(L.bb(i, j)) + (ZERO, ZERO)
    for i, j, k in combinations(range(m), 3):
        v = [ZERO] * n
        v[xm1] = B(L.bb(i, j), _unit(m, k))
        brackets[(i, j, k)] = v
    return ThreeLieAlgebra(n, brackets, L.basis + ("x^0", "x^-1"))


def solvable_lie_r2_plus_line() -> LieAlgebra:
    """``[x1, x2] = x2`` with ``x3`` central."""
    return LieAlgebra(3, {(0, 1): (0, 1, 0)})


def corpus() -> dict[str, ThreeLieAlgebra]:
    """Named fixtures used throughout the test-suite and demos."""
    eye3 = MetricForm(Matrix.identity(3))
    return {
        "abelian0": abelian(0),
        "abelian1": abelian(1),
        "abelian2": abelian(2),
        "abelian3": abelian(3),
        "abelian4": abelian(4),
        "simple4": simple4(),
        "gl1": gl_trace_form(1),
        "gl2": gl_trace_form(2),
        "gl3": gl_trace_form(3),
        "metric_so3": metric_lie_extension(so3(), eye3),
        "functional_heisenberg": from_lie_functional(heisenberg_lie(), (1, 0, 0)),
        "functional_r2": from_lie_functional(solvable_lie_r2_plus_line(), (1, 0, 1)),
        "functional_gl2": from_lie_functional(gl_lie(2), trace_functional(2)),
    }
