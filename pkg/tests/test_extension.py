import random

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from filippov_lab.constructions import abelian, simple4
from filippov_lab.errors import DimensionError, PreconditionError
from filippov_lab.exactlin import Matrix, unit_vector
from filippov_lab.extension import (
    CONDITIONS,
    ExtensionSpec,
    MixedAction,
    TriMapToH,
    assemble,
    check_condition_eq6,
    check_condition_eq9,
    check_exact_sequence,
    check_lemma_implications,
    check_module_criterion,
    check_theorem31,
    check_theorem34,
    decompose,
    h_block,
)
from filippov_lab.random_specs import random_lie_spec, random_small_spec, small_spec, spec_corpus
from filippov_lab.repmod import PairAction, check_representation
from filippov_lab.trilie import bracket, check_fundamental_identity, direct_sum, inner_derivation, is_ideal

CORPUS = spec_corpus()
VALID = sorted(name for name, s in CORPUS.items() if check_fundamental_identity(assemble(s)).passed)


def heisenberg_like():
    return ExtensionSpec(abelian(3), abelian(1), TriMapToH(3, 1, {(0, 1, 2): [1]}), PairAction(3, 1), MixedAction(3, 1))


def is_lie(spec):
    return check_fundamental_identity(assemble(spec), witness_cap=1).passed


# construction ------------------------------------------------------------------

def test_dimension_mismatch_is_rejected():
    with pytest.raises(DimensionError):
        ExtensionSpec(abelian(2), abelian(1), TriMapToH(3, 1), PairAction(2, 1), MixedAction(2, 1))


def test_rho_must_be_derivation_of_h():
    with pytest.raises(PreconditionError):
        ExtensionSpec(abelian(2), simple4(), TriMapToH(2, 4), PairAction(2, 4, {(0, 1): Matrix.identity(4)}), MixedAction(2, 4))


def test_beta_must_be_skew():
    beta = MixedAction(1, 2, {(0, 0): Matrix([[1, 0], [0, 0]])})
    with pytest.raises(PreconditionError):
        ExtensionSpec(abelian(1), abelian(2), TriMapToH(1, 2), PairAction(1, 2), beta)


# assembly -------------------------------------------------------------------------

def test_zero_spec_is_block_direct_sum():
    s = ExtensionSpec.zero(simple4(), abelian(2))
    assert assemble(s) == direct_sum(simple4(), abelian(2))
    assert is_lie(s)
    assert assemble(s).basis[:2] == ("M.e1", "M.e2")


def test_heisenberg_like_assembles_to_3lie():
    s = heisenberg_like()
    A = assemble(s)
    assert bracket(A, unit_vector(4, 0), unit_vector(4, 1), unit_vector(4, 2)) == unit_vector(4, 3)
    assert is_lie(s)


def test_simple4_over_line_passes():
    assert is_lie(ExtensionSpec.zero(simple4(), abelian(1)))


@given(st.integers(0, 2**32))
def test_decompose_inverts_assemble(seed):
    s = random_lie_spec(random.Random(seed))
    back = decompose(assemble(s), s.h)
    assert assemble(back) == assemble(s)
    assert back.mu.table == s.mu.table and back.rho.table == s.rho.table


def test_decompose_rejects_non_ideal():
    with pytest.raises(PreconditionError):
        decompose(simple4(), 1)


# conditions -----------------------------------------------------------------------

@pytest.mark.parametrize("name", sorted(CONDITIONS))
def test_zero_spec_passes_each_condition(name):
    assert CONDITIONS[name](ExtensionSpec.zero(simple4(), abelian(2))).passed


def test_heisenberg_like_passes_ledger():
    ledger = check_theorem31(heisenberg_like())
    assert ledger.passed and ledger.failed() == []


def test_eq6_failure_with_inner_derivations():
    H = simple4()
    rho = PairAction(
        3,
        4,
        {
            (0, 1): inner_derivation(H, unit_vector(4, 0), unit_vector(4, 1)),
            (1, 2): inner_derivation(H, unit_vector(4, 0), unit_vector(4, 2)),
        },
    )
    s = ExtensionSpec(abelian(3), H, TriMapToH(3, 4), rho, MixedAction(3, 4))
    r = check_condition_eq6(s)
    assert not r.passed and r.witnesses
    assert not check_theorem31(s).passed and not is_lie(s)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_ledger_matches_direct_check_on_corpus(name):
    s = CORPUS[name]
    assert check_theorem31(s).passed == is_lie(s)


@given(st.integers(0, 2**32))
def test_ledger_matches_direct_check_small(seed):
    s = small_spec(random.Random(seed))
    assert check_theorem31(s, witness_cap=1).passed == is_lie(s)


@given(st.integers(0, 2**32))
def test_ledger_matches_direct_check_mixed(seed):
    s = random_small_spec(random.Random(seed))
    assert check_theorem31(s, witness_cap=1).passed == is_lie(s)


# consequences ------------------------------------------------------------------------

def test_lemma_implications_on_zero_spec():
    assert check_lemma_implications(ExtensionSpec.zero(abelian(2), abelian(2))).passed


@given(st.integers(0, 2**32))
def test_lemma_implications_hold_for_valid_specs(seed):
    s = random_small_spec(random.Random(seed))
    assume(check_theorem31(s, witness_cap=1).passed)
    assert check_lemma_implications(s).passed


def test_beta_only_spec_satisfies_eq9():
    s = CORPUS["beta_only"]
    assert not s.beta.is_zero()
    assert check_theorem31(s).eq8.passed
    assert check_condition_eq9(s).passed


def test_module_criterion_mu_zero():
    s = CORPUS["nilpotent_rho"]
    assert check_module_criterion(s) == (True, True)


def test_module_criterion_heisenberg_like():
    assert check_module_criterion(heisenberg_like()) == (True, True)


def test_module_criterion_needs_valid_extension():
    with pytest.raises(PreconditionError):
        check_module_criterion(CORPUS["scalar_rho"])


@pytest.mark.parametrize("name", VALID)
def test_module_criterion_booleans_agree(name):
    is_module, beta_mu_zero = check_module_criterion(CORPUS[name])
    assert is_module == beta_mu_zero


@given(st.integers(0, 2**32))
def test_module_criterion_random(seed):
    s = random_small_spec(random.Random(seed))
    assume(is_lie(s))
    is_module, beta_mu_zero = check_module_criterion(s)
    assert is_module == beta_mu_zero


def test_theorem34_zero_spec():
    assert check_theorem34(ExtensionSpec.zero(abelian(3), abelian(2))).passed


def test_theorem34_central_mu_on_abelian_h():
    s = heisenberg_like()
    assert check_theorem34(s).passed and is_lie(s)


def test_theorem34_mu_outside_center():
    s = ExtensionSpec(abelian(3), simple4(), TriMapToH(3, 4, {(0, 1, 2): [1, 0, 0, 0]}), PairAction(3, 4), MixedAction(3, 4))
    r = check_theorem34(s)
    assert not r.passed
    assert any(w.identity == "mu_in_center" for w in r.witnesses)
    assert not is_lie(s)


def test_theorem34_rejects_beta():
    with pytest.raises(PreconditionError):
        check_theorem34(CORPUS["beta_only"])


def test_theorem34_only_if_counterexample():
    """A nilpotent rho gives a 3-Lie extension although it does not commute
    with every derivation of H, so the three conditions are sufficient but
    not necessary."""
    s = CORPUS["nilpotent_rho"]
    assert is_lie(s)
    r = check_theorem34(s)
    assert not r.passed
    assert {w.identity for w in r.witnesses} == {"rho_commutes_with_der"}


@given(st.integers(0, 2**32))
def test_theorem34_sufficient(seed):
    rng = random.Random(seed)
    s = small_spec(rng)
    s = s.replace(beta=MixedAction(s.m, s.h))
    assume(check_representation(s.M, s.rho, witness_cap=1).passed)
    if check_theorem34(s, witness_cap=1).passed:
        assert is_lie(s)


# exact sequence ----------------------------------------------------------------------

@pytest.mark.parametrize("name", VALID)
def test_exact_sequence_on_valid_corpus(name):
    assert check_exact_sequence(CORPUS[name]).passed


def test_exact_sequence_heisenberg_like():
    s = heisenberg_like()
    assert check_exact_sequence(s).passed
    assert is_ideal(assemble(s), h_block(s))


def test_corpus_has_expected_verdicts():
    assert "nilpotent_rho" in VALID and "mu_on_simple" in VALID
    assert "scalar_rho" not in VALID
