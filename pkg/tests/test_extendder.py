from math import comb

import pytest

from filippov_lab.constructions import abelian, simple4
from filippov_lab.errors import DimensionError, PreconditionError
from filippov_lab.exactlin import Matrix
from filippov_lab.extendder import (
    DerivationPair,
    TripleGamma,
    build_delta,
    build_extendability_system,
    center_extension,
    check_induced_homomorphism,
    check_tau_rho_compatibility,
    corpus_pairs,
    delta_from_g,
    lemma43_residual,
    search_delta,
    solve_corollary41,
    solve_extendability,
    solve_lemma43,
    verify_diagram,
)
from filippov_lab.extension import ExtensionSpec, MixedAction, TriMapToH, assemble
from filippov_lab.random_specs import spec_corpus
from filippov_lab.repmod import PairAction
from filippov_lab.trilie import ad, check_fundamental_identity, is_derivation

SPECS = spec_corpus()
VALID = sorted(n for n, s in SPECS.items() if check_fundamental_identity(assemble(s)).passed)
SMALL = [n for n in VALID if SPECS[n].m <= 2 and SPECS[n].h <= 2]


def zeros(r, c):
    return Matrix.zeros(r, c)


# system assembly ---------------------------------------------------------------------

def test_zero_spec_on_abelian_m_is_free():
    s = ExtensionSpec.zero(abelian(3), abelian(2))
    L, b = build_extendability_system(s, DerivationPair.zero(s))
    assert L.is_zero() and not any(b)
    sol = solve_extendability(s, DerivationPair.zero(s))
    assert sol.solvable and sol.homogeneous.dim == 3 * 2


def test_row_counts():
    s = SPECS["heisenberg"]
    L, _ = build_extendability_system(s, DerivationPair.zero(s))
    m, h = s.m, s.h
    assert L.rows == comb(m, 3) * h + comb(m, 2) * h * h + m * h * h * h
    b = SPECS["beta_only"]
    L, _ = build_extendability_system(b, DerivationPair.zero(b))
    assert L.shape == (1 * 4 + 2 * 8, 4)


def test_invalid_pair_rejected():
    s = SPECS["direct_sum"]
    with pytest.raises(PreconditionError):
        solve_extendability(s, DerivationPair(Matrix.identity(4), zeros(2, 2)))
    with pytest.raises(DimensionError):
        solve_extendability(s, DerivationPair(zeros(3, 3), zeros(2, 2)))


def test_invalid_extension_rejected():
    s = SPECS["scalar_rho"]
    with pytest.raises(PreconditionError):
        solve_extendability(s, DerivationPair.zero(s))


# solving ----------------------------------------------------------------------------

def test_direct_sum_zero_pair_gives_zero_gamma():
    s = SPECS["direct_sum"]
    sol = solve_extendability(s, DerivationPair.zero(s))
    assert sol.solvable and sol.particular.is_zero()


def test_direct_sum_inner_derivation_pair():
    s = SPECS["direct_sum"]
    pair = DerivationPair(ad(simple4(), 0, 1), Matrix([[1, 2], [0, -1]]))
    sol = solve_extendability(s, pair)
    assert sol.solvable
    assert verify_diagram(s, pair, build_delta(pair, sol.particular)).passed


def test_heisenberg_zero_pair_family():
    s = SPECS["heisenberg"]
    sol = solve_extendability(s, DerivationPair.zero(s))
    assert sol.solvable and sol.particular.is_zero()
    # M is abelian and H is central, so every gamma works
    assert sol.homogeneous.dim == 3
    g = sol.member([1, -2, 5])
    pair = DerivationPair.zero(s)
    assert verify_diagram(s, pair, build_delta(pair, g)).passed


def test_heisenberg_scaling_tau_is_obstructed():
    s = SPECS["heisenberg"]
    pair = DerivationPair(zeros(3, 3), Matrix.identity(1))
    assert not solve_extendability(s, pair).solvable
    assert search_delta(s, pair, pool=(-2, -1, 0, 1, 2)) is None
    assert solve_lemma43(s, pair) is None


def test_heisenberg_balanced_pair_is_extendable():
    s = SPECS["heisenberg"]
    pair = DerivationPair(Matrix([[1, 0, 0], [0, 0, 0], [0, 0, 0]]), Matrix.identity(1))
    sol = solve_extendability(s, pair)
    assert sol.solvable
    assert verify_diagram(s, pair, build_delta(pair, sol.particular)).passed


def test_rho_rule_inconsistency():
    s = SPECS["nilpotent_rho"]
    pair = DerivationPair(zeros(2, 2), Matrix([[1, 0], [0, 0]]))
    assert not solve_extendability(s, pair).solvable
    assert search_delta(s, pair) is None


def test_member_requires_solvable():
    s = SPECS["heisenberg"]
    sol = solve_extendability(s, DerivationPair(zeros(3, 3), Matrix.identity(1)))
    with pytest.raises(PreconditionError):
        sol.member([])


# delta -------------------------------------------------------------------------------

def test_build_delta_shapes():
    pair = DerivationPair(Matrix([[1, 0], [0, 2]]), Matrix([[3]]))
    assert build_delta(DerivationPair(zeros(2, 2), zeros(1, 1)), zeros(1, 2)).is_zero()
    assert build_delta(pair, zeros(1, 2)) == Matrix([[1, 0, 0], [0, 2, 0], [0, 0, 3]])
    assert build_delta(pair, Matrix([[4, 5]])) == Matrix([[1, 0, 0], [0, 2, 0], [4, 5, 3]])
    with pytest.raises(DimensionError):
        build_delta(pair, zeros(2, 1))


def test_verify_diagram_rejects_upper_block():
    s = SPECS["direct_sum"]
    pair = DerivationPair.zero(s)
    bad = Matrix([[1 if (r, c) == (0, 4) else 0 for c in range(6)] for r in range(6)])
    r = verify_diagram(s, pair, bad)
    assert not r.passed
    assert any(w.identity == "projection_square" for w in r.witnesses)


def test_zero_pair_zero_delta():
    s = SPECS["heisenberg"]
    assert verify_diagram(s, DerivationPair.zero(s), zeros(4, 4)).passed


@pytest.mark.parametrize("name", VALID)
def test_round_trip_on_corpus(name):
    s = SPECS[name]
    A = assemble(s)
    for pair in corpus_pairs(s):
        sol = solve_extendability(s, pair)
        if sol.solvable:
            delta = build_delta(pair, sol.particular)
            assert verify_diagram(s, pair, delta).passed
            assert is_derivation(A, delta).passed


@pytest.mark.parametrize("name", SMALL)
def test_reverse_oracle_agrees(name):
    s = SPECS[name]
    for pair in corpus_pairs(s):
        found = search_delta(s, pair)
        if not solve_extendability(s, pair).solvable:
            assert found is None
        elif found is not None:
            assert verify_diagram(s, pair, found).passed


# beta = 0 ----------------------------------------------------------------------------

def test_corollary_trivial_case():
    s = ExtensionSpec.zero(abelian(3), abelian(2))
    pair = DerivationPair(Matrix([[1, 0, 0], [0, 0, 1], [0, 0, 0]]), Matrix([[0, 1], [0, 0]]))
    assert check_tau_rho_compatibility(s, pair).passed
    sol = solve_corollary41(s, pair)
    assert sol.solvable and sol.particular.is_zero()


def test_corollary_couples_tau_and_mu():
    s = SPECS["heisenberg"]
    pair = DerivationPair(Matrix([[1, 0, 0], [0, 0, 0], [0, 0, 0]]), Matrix.identity(1))
    c = solve_corollary41(s, pair)
    assert c.solvable == solve_extendability(s, pair).solvable is True
    bad = DerivationPair(zeros(3, 3), Matrix.identity(1))
    assert not solve_corollary41(s, bad).solvable


def test_corollary_compatibility_failure():
    s = SPECS["nilpotent_rho"]
    pair = DerivationPair(zeros(2, 2), Matrix([[1, 0], [0, 0]]))
    assert not check_tau_rho_compatibility(s, pair).passed
    assert not solve_corollary41(s, pair).solvable


def test_corollary_requires_beta_zero():
    s = SPECS["beta_only"]
    with pytest.raises(PreconditionError):
        solve_corollary41(s, DerivationPair.zero(s))


@pytest.mark.parametrize("name", [n for n in VALID if SPECS[n].beta.is_zero()])
def test_corollary_agrees_with_general_solver(name):
    s = SPECS[name]
    for pair in corpus_pairs(s):
        assert solve_corollary41(s, pair).solvable == solve_extendability(s, pair).solvable


# homomorphism form -------------------------------------------------------------------

def test_lemma43_direct_sum_zero_pair():
    s = SPECS["direct_sum"]
    pair = DerivationPair.zero(s)
    t = solve_lemma43(s, pair)
    assert t is not None
    assert check_induced_homomorphism(s, pair, t).passed


@pytest.mark.parametrize("name", VALID)
def test_lemma43_agrees_and_round_trips(name):
    s = SPECS[name]
    for pair in corpus_pairs(s):
        sol = solve_extendability(s, pair)
        t = solve_lemma43(s, pair)
        assert (t is not None) == sol.solvable
        if sol.solvable:
            lifted = TripleGamma(sol.particular, zeros(s.h, s.m), zeros(s.h, s.m))
            assert not any(lemma43_residual(s, pair, lifted))
            n = s.m + s.h
            assert delta_from_g(s, pair, lifted, zeros(n, n)) == build_delta(pair, sol.particular)
            delta = delta_from_g(s, pair, t, center_extension(s, t.gamma2))
            assert verify_diagram(s, pair, delta).passed


def test_beta_forces_zero_tail():
    s = SPECS["beta_only"]
    pair = DerivationPair.zero(s)
    t = solve_lemma43(s, pair)
    assert t is not None and t.gamma2.is_zero() and t.gamma3.is_zero()


def test_delta_from_g_zero_everything():
    s = SPECS["heisenberg"]
    pair = DerivationPair.zero(s)
    t = TripleGamma(zeros(1, 3), zeros(1, 3), zeros(1, 3))
    d = delta_from_g(s, pair, t, zeros(4, 4))
    assert d.is_zero() and verify_diagram(s, pair, d).passed


def test_center_extension_rejects_non_central():
    s = ExtensionSpec.zero(abelian(1), simple4())
    with pytest.raises(PreconditionError):
        center_extension(s, Matrix([[1], [0], [0], [0]]))


def test_delta_from_g_rejects_non_solution():
    s = SPECS["heisenberg"]
    pair = DerivationPair(zeros(3, 3), Matrix.identity(1))
    t = TripleGamma(zeros(1, 3), zeros(1, 3), zeros(1, 3))
    with pytest.raises(PreconditionError):
        delta_from_g(s, pair, t, zeros(4, 4))


def test_mu_rule_on_nonabelian_h():
    H = simple4()
    s = ExtensionSpec(abelian(3), H, TriMapToH(3, 4), PairAction(3, 4), MixedAction(3, 4))
    tau = ad(H, 0, 1)
    pair = DerivationPair(zeros(3, 3), tau)
    sol = solve_extendability(s, pair)
    assert sol.solvable
    assert verify_diagram(s, pair, build_delta(pair, sol.particular)).passed
