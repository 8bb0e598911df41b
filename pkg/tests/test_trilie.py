import random
from fractions import Fraction
from itertools import combinations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from filippov_lab.constructions import abelian, corpus, simple4
from filippov_lab.errors import DimensionError, InputError
from filippov_lab.exactlin import Matrix, Subspace, inverse, rank, unit_vector, vec_add, vec_sub
from filippov_lab.trilie import (
    ThreeLieAlgebra,
    ad,
    bracket,
    center,
    change_basis,
    check_fundamental_identity,
    derivation_algebra,
    direct_sum,
    in_span,
    inner_derivation,
    is_abelian_ideal,
    is_derivation,
    is_homomorphism,
    is_ideal,
    is_subalgebra,
)

E = lambda n, i: unit_vector(n, i)  # noqa: E731


def brute_fi_holds(A):
    """Fundamental identity over every ordered 5-tuple of basis vectors."""
    n = A.dim
    for u, v, x, y, z in product(range(n), repeat=5):
        eu, ev, ex, ey, ez = (E(n, k) for k in (u, v, x, y, z))
        lhs = bracket(A, eu, ev, bracket(A, ex, ey, ez))
        rhs = vec_add(
            vec_add(bracket(A, bracket(A, eu, ev, ex), ey, ez), bracket(A, ex, bracket(A, eu, ev, ey), ez)),
            bracket(A, ex, ey, bracket(A, eu, ev, ez)),
        )
        if lhs != rhs:
            return False
    return True


def random_algebra(rng, n, density=0.4):
    br = {}
    for t in combinations(range(n), 3):
        if rng.random() < density:
            br[t] = [rng.choice((-1, 0, 0, 1)) for _ in range(n)]
    return ThreeLieAlgebra(n, br)


def corrupted_simple4():
    A = simple4()
    sc = dict(A.sc)
    sc[(0, 1, 2)] = (1, 0, 0, 0)
    return ThreeLieAlgebra(4, sc)


# brackets -------------------------------------------------------------------

def test_simple4_bracket_e1_e2_e3_is_e4():
    A = simple4()
    assert bracket(A, E(4, 0), E(4, 1), E(4, 2)) == E(4, 3)


def test_repeated_argument_gives_zero():
    A = simple4()
    u = (1, 2, -1, 3)
    assert not any(bracket(A, u, u, (0, 1, 1, 0)))


@given(st.integers(0, 2**32))
def test_transposition_changes_sign(seed):
    rng = random.Random(seed)
    A = random_algebra(rng, 4, 0.7)
    u, v, w = ([rng.randint(-2, 2) for _ in range(4)] for _ in range(3))
    assert bracket(A, v, u, w) == tuple(-c for c in bracket(A, u, v, w))
    assert bracket(A, u, w, v) == tuple(-c for c in bracket(A, u, v, w))


def test_constructor_rejects_bad_triples():
    with pytest.raises(InputError):
        ThreeLieAlgebra(3, {(1, 0, 2): (0, 0, 1)})
    with pytest.raises(DimensionError):
        ThreeLieAlgebra(3, {(0, 1, 2): (0, 1)})


# fundamental identity --------------------------------------------------------

def test_abelian4_passes():
    assert check_fundamental_identity(abelian(4)).passed


def test_simple4_passes_on_24_tuples():
    r = check_fundamental_identity(simple4())
    assert r.passed and r.checked == 24 and r.violations == 0


def test_corrupted_simple4_fails_with_witness():
    r = check_fundamental_identity(corrupted_simple4())
    assert not r.passed
    assert r.witnesses
    w = r.witnesses[0]
    assert w.lhs != w.rhs
    assert r.witnesses == tuple(sorted(r.witnesses, key=lambda w: (w.identity, w.indices)))


def test_witness_cap_limits_witnesses_not_count():
    full = check_fundamental_identity(corrupted_simple4(), witness_cap=100)
    capped = check_fundamental_identity(corrupted_simple4(), witness_cap=1)
    assert capped.violations == full.violations
    assert capped.witnesses == full.witnesses[:1]


@given(st.integers(0, 2**32), st.integers(3, 4))
def test_sweep_agrees_with_brute_force(seed, n):
    A = random_algebra(random.Random(seed), n)
    assert check_fundamental_identity(A).passed == brute_fi_holds(A)


@pytest.mark.parametrize("name", sorted(corpus()))
def test_corpus_algebras_are_3lie(name):
    assert check_fundamental_identity(corpus()[name]).passed


def test_parallel_sweep_matches_serial():
    A = corrupted_simple4()
    assert check_fundamental_identity(A, jobs=1) == check_fundamental_identity(A, jobs=3)


@given(st.integers(0, 2**32))
def test_basis_change_preserves_verdict(seed):
    rng = random.Random(seed)
    A = random_algebra(rng, 4, 0.5) if rng.random() < 0.5 else simple4()
    while True:
        P = Matrix([[rng.randint(-1, 1) for _ in range(4)] for _ in range(4)])
        if rank(P) == 4:
            break
    B = change_basis(A, P)
    assert check_fundamental_identity(B).passed == check_fundamental_identity(A).passed
    # P is an isomorphism B -> A
    assert is_homomorphism(P, B, A).passed


# derivations -----------------------------------------------------------------

def test_zero_map_is_derivation():
    assert is_derivation(simple4(), Matrix.zeros(4, 4)).passed


def test_identity_is_not_derivation_of_simple4():
    assert not is_derivation(simple4(), Matrix.identity(4)).passed


def test_inner_derivation_is_derivation():
    A = simple4()
    assert is_derivation(A, inner_derivation(A, E(4, 0), E(4, 1))).passed


def test_ad_e1_e2_on_simple4():
    d = ad(simple4(), 0, 1)
    assert d.apply(E(4, 2)) == E(4, 3)
    assert d.apply(E(4, 3)) == tuple(-c for c in E(4, 2))
    assert not any(d.apply(E(4, 0))) and not any(d.apply(E(4, 1)))


def test_ad_of_repeated_vector_is_zero():
    u = (1, -1, 2, 0)
    assert inner_derivation(simple4(), u, u).is_zero()


def test_ad_on_abelian_is_zero():
    assert inner_derivation(abelian(3), E(3, 0), E(3, 1)).is_zero()


def test_derivation_algebra_dimensions():
    assert len(derivation_algebra(abelian(2))) == 4
    assert len(derivation_algebra(abelian(1))) == 1
    ders = derivation_algebra(simple4())
    assert len(ders) == 6
    inner = [ad(simple4(), i, j) for i, j in combinations(range(4), 2)]
    assert rank(Matrix([d.flatten() for d in inner])) == 6
    assert all(in_span(ders, d) for d in inner)


@pytest.mark.parametrize("name", ["simple4", "gl2", "metric_so3", "functional_r2"])
def test_derivation_basis_members_are_derivations(name):
    A = corpus()[name]
    for d in derivation_algebra(A):
        assert is_derivation(A, d).passed


# center and substructures ----------------------------------------------------

def test_center_examples():
    assert center(abelian(3)).dim == 3
    assert center(simple4()).dim == 0
    assert center(direct_sum(simple4(), abelian(1))).dim == 1


def test_subspace_predicates():
    A = simple4()
    whole, zero = Subspace.whole(4), Subspace.zero(4)
    assert is_subalgebra(A, whole) and is_ideal(A, whole)
    assert is_abelian_ideal(A, zero)
    assert not is_ideal(A, Subspace(4, [E(4, 3)]))


def test_homomorphism_examples():
    A = simple4()
    assert is_homomorphism(Matrix.identity(4), A, A).passed
    assert is_homomorphism(Matrix.zeros(4, 4), A, abelian(4)).passed
    f = Matrix([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 2, 0], [0, 0, 0, 1]])
    r = is_homomorphism(f, A, A)
    assert not r.passed and r.witnesses


def test_change_basis_roundtrip():
    A = simple4()
    P = Matrix([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1], [0, 0, 0, 1]])
    assert change_basis(change_basis(A, P), inverse(P)) == A


def test_fundamental_identity_on_vectors_matches_definition():
    A = simple4()
    u, v = (1, 0, 2, 0), (0, 1, 0, -1)
    x, y, z = (1, 1, 0, 0), (0, 0, 1, 1), (1, 0, 0, Fraction(1, 2))
    lhs = bracket(A, u, v, bracket(A, x, y, z))
    rhs = vec_add(
        vec_add(bracket(A, bracket(A, u, v, x), y, z), bracket(A, x, bracket(A, u, v, y), z)),
        bracket(A, x, y, bracket(A, u, v, z)),
    )
    assert not any(vec_sub(lhs, rhs))
