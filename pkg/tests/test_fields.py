from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ordsym.fields import (
    QQ,
    Field,
    distinct_scalars,
    field_make,
    scalar_from_json,
    scalar_to_json,
)


def test_field_make_rationals():
    assert field_make({"kind": "Q"}) == QQ
    assert field_make("Q") == QQ


def test_field_make_prime_field():
    f = field_make({"kind": "GF", "p": 7})
    assert f.kind == "GF" and f.p == 7
    assert field_make("GF:7") == f


def test_field_make_rejects_composite_with_factor():
    with pytest.raises(ValueError, match=r"6 = 2\*3"):
        field_make({"kind": "GF", "p": 6})
    with pytest.raises(ValueError, match=r"not prime"):
        Field("GF", 91)  # 7 * 13


def test_field_make_accepts_large_prime():
    f = Field("GF", (1 << 61) - 1)
    assert f.p == (1 << 61) - 1


def test_rational_add():
    assert QQ.scalar(Fraction(1, 2)) + QQ.scalar(Fraction(1, 3)) == QQ.scalar(Fraction(5, 6))


def test_gf7_mul():
    f = Field("GF", 7)
    assert f.scalar(3) * f.scalar(5) == f.scalar(1)


def test_inv_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        QQ.zero().inv()
    with pytest.raises(ZeroDivisionError):
        Field("GF", 5).zero().inv()


def test_field_mismatch_raises():
    with pytest.raises(ValueError, match="mismatch"):
        QQ.one() + Field("GF", 5).one()


def test_distinct_scalars_rationals():
    assert distinct_scalars(QQ, 5) == [QQ.scalar(i) for i in range(5)]


def test_distinct_scalars_all_of_gf7():
    f = Field("GF", 7)
    got = distinct_scalars(f, 7)
    assert len(set(got)) == 7


def test_distinct_scalars_overflow():
    with pytest.raises(ValueError, match="only 3 elements"):
        distinct_scalars(Field("GF", 3), 4)


def test_distinct_scalars_reproducible():
    f = Field("GF", 11)
    assert distinct_scalars(f, 6) == distinct_scalars(f, 6)


def test_canonical_form_idempotence():
    a = QQ.scalar(Fraction(2, 4))
    b = QQ.scalar(Fraction(1, 2))
    assert a == b and hash(a) == hash(b)
    f = Field("GF", 5)
    assert f.scalar(7) == f.scalar(2) == f.scalar(-3)


rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=100)


@given(rationals, rationals, rationals)
def test_rational_field_axioms(x, y, z):
    a, b, c = (QQ.scalar(v) for v in (x, y, z))
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * a.inv() == QQ.one()


@given(st.sampled_from([2, 5, 7, 31]), st.data())
def test_prime_field_axioms(p, data):
    f = Field("GF", p)
    pick = st.integers(min_value=0, max_value=p - 1)
    a, b, c = (f.scalar(data.draw(pick)) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * a.inv() == f.one()


@given(rationals)
def test_rational_serialization_roundtrip(x):
    s = QQ.scalar(x)
    assert scalar_from_json(QQ, scalar_to_json(s)) == s


@given(st.integers(min_value=-50, max_value=50))
def test_gf_serialization_roundtrip(n):
    f = Field("GF", 13)
    s = f.scalar(n)
    assert scalar_from_json(f, scalar_to_json(s)) == s


def test_serialization_formats():
    assert scalar_to_json(QQ.scalar(Fraction(5, 6))) == "5/6"
    assert scalar_to_json(QQ.scalar(3)) == "3"
    assert scalar_to_json(Field("GF", 7).scalar(4)) == 4
    assert scalar_from_json(QQ, "-2/3") == QQ.scalar(Fraction(-2, 3))
    assert scalar_from_json(QQ, 7) == QQ.scalar(7)


def test_pow_and_div():
    assert QQ.scalar(Fraction(2, 3)) ** 3 == QQ.scalar(Fraction(8, 27))
    f = Field("GF", 7)
    assert f.scalar(3) ** -1 == f.scalar(5)
    assert f.scalar(6) / f.scalar(2) == f.scalar(3)
