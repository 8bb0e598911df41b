import json
from fractions import Fraction
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from filippov_lab import io
from filippov_lab.constructions import corpus, simple4
from filippov_lab.errors import DimensionError, InputError
from filippov_lab.exactlin import Matrix
from filippov_lab.extendder import DerivationPair
from filippov_lab.extension import assemble
from filippov_lab.random_specs import random_small_spec, spec_corpus
from filippov_lab.trilie import check_fundamental_identity


@pytest.mark.parametrize("name", sorted(corpus()))
def test_algebra_roundtrip(name):
    A = corpus()[name]
    doc = json.loads(io.dumps(io.algebra_to_dict(A)))
    B = io.algebra_from_dict(doc)
    assert B == A and B.basis == A.basis


@pytest.mark.parametrize("name", sorted(spec_corpus()))
def test_spec_roundtrip(name):
    s = spec_corpus()[name]
    back = io.spec_from_dict(json.loads(io.dumps(io.spec_to_dict(s))))
    assert assemble(back) == assemble(s)


@given(st.integers(0, 2**32))
def test_random_spec_roundtrip(seed):
    s = random_small_spec(random.Random(seed))
    back = io.spec_from_dict(io.spec_to_dict(s))
    assert assemble(back) == assemble(s)


def test_spec_with_algebra_paths(tmp_path):
    (tmp_path / "m.json").write_text(io.dumps(io.algebra_to_dict(simple4())))
    (tmp_path / "h.json").write_text(io.dumps({"dim": 1}))
    (tmp_path / "s.json").write_text(json.dumps({"M": "m.json", "H": "h.json"}))
    s = io.load_spec(tmp_path / "s.json")
    assert s.m == 4 and s.h == 1
    assert check_fundamental_identity(assemble(s)).passed


def test_pair_roundtrip():
    pair = DerivationPair(Matrix([["1/2", 0], [0, -3]]), Matrix([[7]]))
    back = io.pair_from_dict(io.pair_to_dict(pair), 2, 1)
    assert back == pair


def test_rationals_as_strings_and_ints():
    A = io.algebra_from_dict({"dim": 3, "brackets": [{"args": [0, 1, 2], "value": [{"basis": 2, "coeff": "-3/6"}]}]})
    assert A.sc[(0, 1, 2)][2] == Fraction(-1, 2)


def test_dumps_is_stable():
    doc = io.algebra_to_dict(simple4())
    assert io.dumps(doc) == io.dumps(json.loads(io.dumps(doc)))
    assert io.dumps(doc).endswith("}\n")


@pytest.mark.parametrize(
    "doc, fragment",
    [
        ([], "expected an object"),
        ({"basis": []}, "missing field 'dim'"),
        ({"dim": "4"}, "expected an integer"),
        ({"dim": 3, "basis": ["a"]}, "expected 3 strings"),
        ({"dim": 3, "brackets": [{"args": [0, 2, 1], "value": []}]}, "strictly increasing"),
        ({"dim": 3, "brackets": [{"args": [0, 1, 5], "value": []}]}, "out of range"),
        ({"dim": 3, "brackets": [{"args": [0, 1, 2], "value": [{"basis": 0, "coeff": "x"}]}]}, "not a rational"),
        (
            {"dim": 3, "brackets": [{"args": [0, 1, 2], "value": []}, {"args": [0, 1, 2], "value": []}]},
            "duplicate triple",
        ),
        ({"dim": 3, "brackets": [{"args": [0, 1, 2], "value": [{"basis": 3, "coeff": "1"}]}]}, "brackets[0].value[0].basis"),
    ],
)
def test_malformed_algebras_name_the_field(doc, fragment):
    with pytest.raises(InputError) as exc:
        io.algebra_from_dict(doc)
    assert fragment in str(exc.value)


def test_json_syntax_error_reports_position():
    with pytest.raises(InputError) as exc:
        io.parse_json('{"dim": 4,\n "basis": [}', "f.json")
    assert "f.json: line 2" in str(exc.value)


def test_missing_file(tmp_path):
    with pytest.raises(InputError):
        io.read_json(tmp_path / "absent.json")


def test_matrix_shape_errors():
    with pytest.raises(InputError):
        io.parse_matrix([[1, 2], [3]], None, None, "m")
    with pytest.raises(InputError):
        io.parse_matrix([[1, 2]], 2, 2, "m")
    with pytest.raises(InputError):
        io.pair_from_dict({"sigma": [[0]], "tau": [[0]]}, 2, 1)


def test_spec_dimension_mismatch():
    doc = io.spec_to_dict(spec_corpus()["heisenberg"])
    doc["mu"] = {"triples": [{"args": [0, 1, 2], "value": [{"basis": 1, "coeff": "1"}]}]}
    with pytest.raises(InputError):
        io.spec_from_dict(doc)


def test_spec_precondition_is_input_error():
    doc = io.spec_to_dict(spec_corpus()["beta_only"])
    doc["beta"]["entries"][0]["matrix"] = [["1", "0"], ["0", "0"]]
    with pytest.raises(InputError) as exc:
        io.spec_from_dict(doc)
    assert "spec" in str(exc.value)


def test_dimension_error_is_input_error():
    assert issubclass(DimensionError, InputError)


def test_report_to_dict_fields():
    r = check_fundamental_identity(simple4())
    d = io.report_to_dict(r)
    assert d == {"name": "fundamental_identity", "passed": True, "checked": 24, "violations": 0, "witnesses": [], "notes": []}
