import pytest

from ordsym.catalog import builtin_example, builtin_names
from ordsym.fields import Field
from ordsym.graded import validate_filtration
from ordsym.io import dump_description, load_description


def test_upper_triangular_3_shape():
    A, F = builtin_example("upper-triangular", 3)
    assert A.dim == 6
    assert F.dims() == [3, 5, 6]
    assert A.is_unital


def test_strictly_upper_triangular_3_shape():
    A, F = builtin_example("strictly-upper-triangular", 3)
    assert A.dim == 3
    assert F.dims() == [0, 2, 3]
    assert not A.is_unital


def test_truncated_polynomial_shape():
    A, F = builtin_example("truncated-polynomial", 4)
    assert A.dim == 4
    assert F.dims() == [1, 2, 3, 4]
    # commutativity
    for i in range(A.dim):
        for j in range(A.dim):
            a, b = A.basis_element(i), A.basis_element(j)
            assert a * b == b * a


def test_exterior_algebra_shape():
    A, F = builtin_example("exterior-algebra", 2)
    assert A.dim == 4
    assert F.dims() == [1, 3, 4]
    names = A.names
    e1 = A.basis_element(names.index("e1"))
    e2 = A.basis_element(names.index("e2"))
    e12 = A.basis_element(names.index("e12"))
    assert e1 * e2 == e12
    assert e2 * e1 == -e12
    assert (e1 * e1).is_zero()


def test_all_builtins_validate():
    for name in builtin_names():
        param = 3 if "triangular" in name else 2
        A, F = builtin_example(name, param)
        assert A.validate().ok
        assert validate_filtration(A, F.stages).ok


def test_builtins_over_prime_field():
    f = Field("GF", 5)
    for name in builtin_names():
        param = 3 if "triangular" in name else 2
        A, F = builtin_example(name, param, f)
        assert A.field == f
        assert A.validate().ok


def test_unknown_builtin_rejected():
    with pytest.raises(ValueError, match="unknown builtin"):
        builtin_example("heisenberg", 3)


def test_out_of_range_parameter_rejected():
    with pytest.raises(ValueError):
        builtin_example("strictly-upper-triangular", 1)
    with pytest.raises(ValueError):
        builtin_example("truncated-polynomial", 0)


def test_description_roundtrip_exact():
    for name in builtin_names():
        param = 3 if "triangular" in name else 2
        A, F = builtin_example(name, param)
        doc = dump_description(A, F)
        B, G = load_description(doc)
        assert B.dim == A.dim
        assert B.names == A.names
        assert B.mul == A.mul
        assert B.unit == A.unit
        assert tuple(G.stages) == tuple(F.stages)


def test_roundtrip_survives_json_text():
    import json

    A, F = builtin_example("upper-triangular", 3)
    text = json.dumps(dump_description(A, F))
    B, G = load_description(json.loads(text))
    assert B.mul == A.mul and tuple(G.stages) == tuple(F.stages)


def test_field_override_reduces_constants():
    A, _ = builtin_example("upper-triangular", 3)
    doc = dump_description(A)
    f = Field("GF", 5)
    B, _ = load_description(doc, field_override=f)
    assert B.field == f
    assert B.validate().ok
