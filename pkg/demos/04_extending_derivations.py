"""When does a pair of derivations lift to the extension?

Given a derivation sigma of M and tau of H, we look for delta on M + H with
delta = [[sigma, 0], [gamma, tau]] a derivation.  The unknown block gamma
solves a linear system over Q.
"""

# %%
from filippov_lab import DerivationPair, build_delta, search_delta, solve_extendability, solve_lemma43, verify_diagram
from filippov_lab.exactlin import Matrix
from filippov_lab.random_specs import spec_corpus

def show(x):
    """Rationals as plain text, e.g. ``(0, 1/2, -1)``."""
    if isinstance(x, (tuple, list)):
        return "(" + ", ".join(show(v) for v in x) + ")"
    return str(x)


spec = spec_corpus()["heisenberg"]  # [x1, x2, x3] = h
sigma = Matrix([[1, 0, 0], [0, 0, 0], [0, 0, 0]])
tau = Matrix.identity(1)

# %% A balanced pair lifts
pair = DerivationPair(sigma, tau)
sol = solve_extendability(spec, pair)
print("solvable:", sol.solvable, "| gamma:", show(sol.particular.to_rows()), "| free parameters:", sol.homogeneous.dim)
delta = build_delta(pair, sol.particular)
print("delta passes the diagram checks:", verify_diagram(spec, pair, delta).passed)

# %% An unbalanced one does not
# tau scales h but sigma leaves [x1, x2, x3] alone, so no gamma can help.
pair = DerivationPair(Matrix.zeros(3, 3), tau)
print("solvable:", solve_extendability(spec, pair).solvable)
print("brute force over gamma entries in {-1, 0, 1} finds:", search_delta(spec, pair))
print("homomorphism-form system agrees:", solve_lemma43(spec, pair) is None)
