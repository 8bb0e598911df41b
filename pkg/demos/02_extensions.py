"""Gluing two 3-Lie algebras together.

An extension is described by three maps: mu (M^3 -> H), rho (pairs of M
acting on H) and beta (an M-vector and an H-vector acting on H).  The ledger of
conditions decides whether the assembled bracket on M + H satisfies the
fundamental identity; here we compare it with the direct check.
"""

# %% A Heisenberg-like central extension
import random

from filippov_lab import ExtensionSpec, MixedAction, TriMapToH, abelian, assemble, check_fundamental_identity
from filippov_lab import check_module_criterion, check_theorem31, check_theorem34
from filippov_lab.random_specs import small_spec, spec_corpus
from filippov_lab.repmod import PairAction

heis = ExtensionSpec(abelian(3), abelian(1), TriMapToH(3, 1, {(0, 1, 2): [1]}), PairAction(3, 1), MixedAction(3, 1))
ledger = check_theorem31(heis)
print("ledger passes:", ledger.passed)
print("assembled algebra passes:", check_fundamental_identity(assemble(heis)).passed)
print("module criterion (is_module, beta_mu_zero):", check_module_criterion(heis))

# %% A spec that fails, and which conditions catch it
bad = spec_corpus()["scalar_rho"]
print("scalar rho: failed conditions", check_theorem31(bad).failed())

# %% Ledger against direct check on random small specs
rng = random.Random(7)
agree = sum(
    check_theorem31(s, witness_cap=1).passed == check_fundamental_identity(assemble(s), witness_cap=1).passed
    for s in (small_spec(rng) for _ in range(100))
)
print(f"ledger agrees with the direct check in {agree}/100 random specs")

# %% Sufficient, not necessary
# With beta = 0 over a module, "mu central, rho commuting with Der(H), eq14"
# guarantees a 3-Lie algebra.  The converse fails: a nilpotent rho on an
# abelian plane gives a perfectly good extension that does not commute with
# Der(H) = gl(2).
nil = spec_corpus()["nilpotent_rho"]
print("nilpotent rho assembles to 3-Lie:", check_fundamental_identity(assemble(nil)).passed)
r = check_theorem34(nil)
print("three conditions hold:", r.passed, "| failing identity:", {w.identity for w in r.witnesses})
