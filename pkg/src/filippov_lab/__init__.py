"""Exact computations with 3-Lie (Filippov) algebras over the rationals.

The modules build on each other in this order:

* :mod:`.exactlin`  rational matrices, row reduction, subspaces, solving
* :mod:`.trilie`  3-Lie algebras, the fundamental identity, derivations, ideals
* :mod:`.constructions`  concrete algebras used as fixtures
* :mod:`.repmod`  representations
* :mod:`.extension`  (mu, rho, beta)-extensions and their conditions
* :mod:`.cube`  the exterior direct sum ``A^3``
* :mod:`.extendder`  extending derivation pairs to an extension
* :mod:`.io`, :mod:`.cli`  file formats and the command-line tool
"""

from .constructions import (
    LieAlgebra,
    MetricForm,
    abelian,
    corpus,
    from_lie_functional,
    gl_lie,
    gl_trace_form,
    heisenberg_lie,
    metric_lie_extension,
    simple4,
    so3,
)
from .cube import CubeAlgebra, check_cube_sequence, check_lemma41, check_theorem42, cube, f_delta
from .errors import DimensionError, InputError, PreconditionError
from .exactlin import Matrix, Subspace, nullspace, rank, rref, solve_affine
from .extendder import (
    DerivationPair,
    GammaSolution,
    TripleGamma,
    build_delta,
    build_extendability_system,
    center_extension,
    delta_from_g,
    search_delta,
    solve_corollary41,
    solve_extendability,
    solve_lemma43,
    verify_diagram,
)
from .extension import (
    ConditionLedger,
    ExtensionSpec,
    MixedAction,
    TriMapToH,
    assemble,
    check_exact_sequence,
    check_lemma_implications,
    check_module_criterion,
    check_theorem31,
    check_theorem34,
    decompose,
)
from .report import CheckReport, Witness
from .repmod import PairAction, adjoint_action, check_lemma21, check_representation
from .trilie import (
    LinearMap,
    ThreeLieAlgebra,
    bracket,
    center,
    check_fundamental_identity,
    derivation_algebra,
    inner_derivation,
    is_abelian_ideal,
    is_derivation,
    is_homomorphism,
    is_ideal,
    is_subalgebra,
)

__version__ = "0.1.0"

__all__ = [
    "CheckReport",
    "ConditionLedger",
    "CubeAlgebra",
    "DerivationPair",
    "DimensionError",
    "ExtensionSpec",
    "GammaSolution",
    "InputError",
    "LieAlgebra",
    "LinearMap",
    "Matrix",
    "MetricForm",
    "MixedAction",
    "PairAction",
    "PreconditionError",
    "Subspace",
    "ThreeLieAlgebra",
    "TriMapToH",
    "TripleGamma",
    "Witness",
    "abelian",
    "adjoint_action",
    "assemble",
    "bracket",
    "build_delta",
    "build_extendability_system",
    "center",
    "center_extension",
    "check_cube_sequence",
    "check_exact_sequence",
    "check_fundamental_identity",
    "check_lemma21",
    "check_lemma41",
    "check_lemma_implications",
    "check_module_criterion",
    "check_representation",
    "check_theorem31",
    "check_theorem34",
    "check_theorem42",
    "corpus",
    "cube",
    "decompose",
    "delta_from_g",
    "derivation_algebra",
    "f_delta",
    "from_lie_functional",
    "gl_lie",
    "gl_trace_form",
    "heisenberg_lie",
    "inner_derivation",
    "is_abelian_ideal",
    "is_derivation",
    "is_homomorphism",
    "is_ideal",
    "is_subalgebra",
    "metric_lie_extension",
    "nullspace",
    "rank",
    "rref",
    "search_delta",
    "simple4",
    "so3",
    "solve_affine",
    "solve_corollary41",
    "solve_extendability",
    "solve_lemma43",
    "verify_diagram",
]
