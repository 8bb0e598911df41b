"""A first look at the four-dimensional simple 3-Lie algebra.

Run with ``python3 demos/01_simple4_tour.py``.
"""

# %% Build the algebra and evaluate a bracket
from itertools import combinations

from filippov_lab import check_fundamental_identity, derivation_algebra, simple4
from filippov_lab.exactlin import Matrix, rank, unit_vector
from filippov_lab.trilie import ThreeLieAlgebra, ad, bracket, center

def show(x):
    """Rationals as plain text, e.g. ``(0, 1/2, -1)``."""
    if isinstance(x, (tuple, list)):
        return "(" + ", ".join(show(v) for v in x) + ")"
    return str(x)


A = simple4()
e = [unit_vector(4, i) for i in range(4)]
print("[e1, e2, e3] =", show(bracket(A, e[0], e[1], e[2])))
print("[e2, e1, e3] =", show(bracket(A, e[1], e[0], e[2])))

# %% The fundamental identity, checked on every canonical tuple
report = check_fundamental_identity(A)
print(f"fundamental identity: passed={report.passed} over {report.checked} tuples")

# Replacing one structure constant breaks it, and the report says where.
sc = dict(A.sc)
sc[(0, 1, 2)] = (1, 0, 0, 0)
broken = check_fundamental_identity(ThreeLieAlgebra(4, sc), witness_cap=3)
print(f"corrupted copy: passed={broken.passed}, {broken.violations} violations; first witnesses:")
for w in broken.witnesses:
    print("   ", w.indices, "lhs", show(w.lhs), "rhs", show(w.rhs))

# %% Derivations
ders = derivation_algebra(A)
inner = [ad(A, i, j) for i, j in combinations(range(4), 2)]
print("dim Der(A) =", len(ders))
print("rank of the six inner derivations =", rank(Matrix([d.flatten() for d in inner])))
print("ad(e1, e2) =", show(ad(A, 0, 1).to_rows()))

# %% The center is trivial
print("dim Z(A) =", center(A).dim)
