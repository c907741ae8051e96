from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hopfq.linear import (DimensionError, LinComb, Tensor, apply_bilinear, apply_linear,
                          apply_split, contract, rational, rational_str)

DIM = 5
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=7)
vectors = st.dictionaries(st.integers(0, DIM - 1), coeffs, max_size=DIM).map(
    lambda d: LinComb(d, DIM))


def test_rational_parses_strings_and_rejects_floats():
    assert rational("3/6") == Fraction(1, 2)
    assert rational(" -2 ") == Fraction(-2)
    assert rational(True) == 1
    with pytest.raises(TypeError):
        rational(0.5)


def test_rational_str_round_trip():
    for q in (Fraction(0), Fraction(-7, 3), Fraction(5)):
        assert rational(rational_str(q)) == q
    assert rational_str(Fraction(4)) == "4/1"


def test_zero_terms_are_dropped():
    v = LinComb({0: 0, 1: "2/4"}, 3)
    assert v.terms == {1: Fraction(1, 2)}
    assert not LinComb({}, 3)


def test_out_of_range_index():
    with pytest.raises(DimensionError):
        LinComb({3: 1}, 3)
    with pytest.raises(DimensionError):
        Tensor((2, 2), {(0, 2): 1})


@given(vectors, vectors, vectors)
def test_vector_space_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a - a == LinComb({}, DIM)
    assert a.scale(2) == a + a
    assert hash(a + b) == hash(b + a)


def _table(seed):
    # a fixed sparse bilinear map on DIM dims
    return Tensor((DIM, DIM, DIM), {(i, j, (i * seed + j) % DIM): Fraction(i + 1, j + 1)
                                    for i in range(DIM) for j in range(DIM) if (i + j) % 3})


@given(vectors, vectors, vectors, coeffs)
def test_bilinearity(a, b, c, k):
    t = _table(3)
    assert apply_bilinear(t, a + b, c) == apply_bilinear(t, a, c) + apply_bilinear(t, b, c)
    assert apply_bilinear(t, a, b.scale(k)) == apply_bilinear(t, a, b).scale(k)


@given(vectors, vectors)
def test_linear_map_additive(a, b):
    t = Tensor((DIM, DIM), {(i, (2 * i) % DIM): i - 2 for i in range(DIM)})
    assert apply_linear(t, a + b) == apply_linear(t, a) + apply_linear(t, b)


def test_apply_split_on_basis():
    t = Tensor((2, 2, 2), {(0, 0, 1): 1, (0, 1, 0): "1/2", (1, 1, 1): 3})
    assert apply_split(t, LinComb({0: 2}, 2)) == {(0, 1): 2, (1, 0): 1}


def test_contract_is_composition():
    # a: 2 -> 3, b: 3 -> 2; contract a's output with b's input
    a = Tensor((2, 3), {(0, 1): 2, (1, 2): 1, (1, 0): -1})
    b = Tensor((3, 2), {(1, 0): 5, (2, 1): 1, (0, 0): 4})
    ab = contract(a, 1, b, 0)
    for i in range(2):
        v = LinComb.basis(i, 2)
        assert apply_linear(ab, v) == apply_linear(b, apply_linear(a, v))


def test_tensor_helpers():
    t = Tensor((2, 2, 2), {(0, 1, 1): 1, (1, 0, 1): 1})
    assert t.is_monomial(2) and t.is_integral()
    assert t.permute((2, 0, 1)).entries == {(1, 0, 1): 1, (1, 1, 0): 1}
    assert not Tensor((2, 2), {(0, 0): "1/2", (0, 1): 1}).is_monomial(1)
