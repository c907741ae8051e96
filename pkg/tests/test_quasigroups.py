import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hopfq.octonions import det, octonion_quasigroup
from hopfq.quasigroups import (Magma, MagmaError, associator_defect, cancellation_witness,
                               is_associative, is_ip_quasigroup, is_moufang)

from conftest import SMALL_GROUPS, small_group


@st.composite
def magmas(draw, max_order=5):
    n = draw(st.integers(1, max_order))
    t = np.zeros((n, n), dtype=np.int64)
    t[0] = np.arange(n)
    t[:, 0] = np.arange(n)
    for i, j in itertools.product(range(1, n), repeat=2):
        t[i, j] = draw(st.integers(0, n - 1))
    return Magma(t, identity=0)


def naive_ip(q):
    n, m = q.order, q.mul
    return all(any(all(m(x, m(s, t)) == t and m(m(t, s), x) == t for t in range(n))
                   for x in range(n)) for s in range(n))


def naive_moufang_witness(q):
    m = q.mul
    for s, t, r in itertools.product(range(q.order), repeat=3):
        if m(s, m(t, m(s, r))) != m(m(m(s, t), s), r):
            return (s, t, r)
    return None


@given(magmas())
def test_ip_matches_brute_force(q):
    ok, info = is_ip_quasigroup(q)
    assert ok == naive_ip(q)
    if ok:
        assert all(q.mul(info[s], s) == 0 for s in range(q.order))


@given(magmas())
def test_moufang_matches_brute_force(q):
    ok, w = is_moufang(q)
    assert w == naive_moufang_witness(q)
    assert ok == (w is None)


@given(magmas(4))
def test_associator_defect_matches_brute_force(q):
    m = q.mul
    expected = [(s, t, r) for s, t, r in itertools.product(range(q.order), repeat=3)
                if m(m(s, t), r) != m(s, m(t, r))]
    assert associator_defect(q) == expected
    assert is_associative(q) == (not expected)


@pytest.mark.parametrize("i", range(len(SMALL_GROUPS)))
def test_groups_are_moufang_ip(i):
    g = small_group(i)
    q = Magma(g.table, g.identity)
    assert is_ip_quasigroup(q)[0]
    assert is_moufang(q) == (True, None)
    assert is_associative(q)


def test_octonion_loop():
    q = octonion_quasigroup()
    ok, inv = is_ip_quasigroup(q)
    assert ok
    # (+-e_a)^-1 is -+e_a for a != 0
    assert inv[:8] == [0] + [8 + a for a in range(1, 8)]
    assert is_moufang(q) == (True, None)
    assert associator_defect(q) == [(s, t, r) for s, t, r in itertools.product(range(16), repeat=3)
                                    if det(s & 7, t & 7, r & 7)]
    assert cancellation_witness(q) is None


def test_non_moufang_loop_detected():
    loop = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    q = Magma(loop)
    ok, w = is_moufang(q)
    assert not ok and w == naive_moufang_witness(q)
    assert is_ip_quasigroup(q)[0] is False


def test_identity_required():
    with pytest.raises(MagmaError):
        Magma([[1, 0], [0, 0]])
    with pytest.raises(MagmaError):
        Magma([[0, 1], [1, 1]], identity=1)


def test_cancellation_witness():
    assert cancellation_witness(Magma([[0, 1], [1, 1]])) == ("left", 1)
