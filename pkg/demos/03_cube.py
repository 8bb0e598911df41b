"""The exterior direct sum A^3 and its blocks.

A^3 carries three copies of A: the X-, Y- and Z-blocks.  The bracket mixes
X with Y in the first slot, so the blocks behave differently.
"""

# %%
from filippov_lab import check_fundamental_identity, check_theorem42, cube, simple4
from filippov_lab.cube import check_lemma41
from filippov_lab.exactlin import Matrix
from filippov_lab.trilie import ad, is_abelian_ideal, is_ideal, is_subalgebra

C = cube(simple4())
S = C.carrier
r = check_fundamental_identity(S)
print(f"cube(simple4): dim {S.dim}, fundamental identity {r.passed} over {r.checked} tuples")

# %% Which block is the abelian ideal?
for b in "xyz":
    B = C.block(b)
    print(f"{b}-block: subalgebra={is_subalgebra(S, B)} ideal={is_ideal(S, B)} abelian ideal={is_abelian_ideal(S, B)}")

# The Z-block is a copy of A, so it is abelian only when A is.  The abelian
# ideal is the X-block; the block report shows the Z-block claim failing.
report = check_theorem42(C)
print("block claims:", report.checked - report.violations, "of", report.checked, "hold")
for note in report.notes:
    print("   ", note)

# %% Derivations become homomorphisms into the cube
A = simple4()
for label, d in (("zero", Matrix.zeros(4, 4)), ("ad(e1,e2)", ad(A, 0, 1)), ("identity", Matrix.identity(4))):
    print(f"{label:10s} (is derivation, f_delta is homomorphism) =", check_lemma41(A, d))
