import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hopfq.groups import (ActionNotAutomorphism, InvalidTransversal, NoIdentity, NotASubgroup,
                          NotAssociative, NotLatinSquare, Subgroup, Transversal,
                          canonical_transversal, clifford_group_3, cyclic, direct_power_z2,
                          direct_product, group_from_table, is_isomorphism, left_cosets,
                          semidirect_product, symmetric_group, trivial_group)
from hopfq.octonions import clifford_action, x_group

from conftest import SMALL_GROUPS, coset_data, small_group


def test_s3_table_frozen():
    s3 = symmetric_group(3)
    assert s3.names == ["012", "021", "102", "120", "201", "210"]
    assert s3.rows == [[0, 1, 2, 3, 4, 5], [1, 0, 4, 5, 2, 3], [2, 3, 0, 1, 5, 4],
                       [3, 2, 5, 4, 0, 1], [4, 5, 1, 0, 3, 2], [5, 4, 3, 2, 1, 0]]
    assert not s3.is_abelian()


def test_validation_errors():
    with pytest.raises(NoIdentity):
        group_from_table([[1, 1], [1, 1]])
    with pytest.raises(NotLatinSquare):
        group_from_table([[0, 1, 2], [1, 1, 0], [2, 0, 1]])
    # a Latin square loop of order 5 with identity 0 that is not associative
    loop = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(NotAssociative):
        group_from_table(loop)


def test_clifford_group():
    c = clifford_group_3()
    assert c.order == 16
    e1, e2, e3 = 4, 2, 1
    minus_one = 8
    for a in (e1, e2, e3):
        assert c.mul(a, a) == minus_one
    for a, b in itertools.permutations((e1, e2, e3), 2):
        assert c.mul(a, b) == c.mul(minus_one, c.mul(b, a))
    assert c.label(7) == "+e1e2e3"
    # e1e2e3 commutes with each e_i, so the center has order 4
    assert c.center() == [0, 7, 8, 15]
    derived = c.generated([c.commutator(a, b) for a in range(16) for b in range(16)])
    assert sorted(derived) == [0, minus_one]


def test_x_group_order_and_semidirect_relation():
    x = x_group()
    assert x.order == 128
    # c g^v = g^v (c <| g^v)
    for v, c in itertools.product(range(8), range(16)):
        assert x.mul(c, 16 * v) == x.mul(16 * v, clifford_action(v, c))


def test_semidirect_rejects_non_automorphism():
    with pytest.raises(ActionNotAutomorphism):
        semidirect_product(cyclic(2), cyclic(3), lambda v, c: (c + v) % 3)


def test_subgroup_errors():
    s3 = symmetric_group(3)
    with pytest.raises(NotASubgroup):
        Subgroup(s3, [0, 1, 2])
    with pytest.raises(NotASubgroup):
        Subgroup(s3, [1])


def test_transversal_errors():
    s3 = symmetric_group(3)
    g = Subgroup(s3, [0, 2])
    with pytest.raises(InvalidTransversal):
        Transversal(g, [1, 0, 4])
    with pytest.raises(InvalidTransversal):
        Transversal(g, [0, 1, 3])
    with pytest.raises(InvalidTransversal):
        Transversal(g, [0, 1])


def test_s3_cosets_frozen():
    s3 = symmetric_group(3)
    g = Subgroup(s3, [0, 2])
    assert left_cosets(s3, g) == [[0, 2], [1, 3], [4, 5]]
    assert canonical_transversal(s3, g).reps == [0, 1, 4]


@given(st.sampled_from(range(len(SMALL_GROUPS))), st.data())
def test_group_invariants(i, data):
    x = small_group(i)
    a, b, c = (data.draw(st.integers(0, x.order - 1)) for _ in range(3))
    assert x.mul(x.mul(a, b), c) == x.mul(a, x.mul(b, c))
    assert x.mul(a, x.inv(a)) == x.identity == x.mul(x.inv(a), a)
    assert x.mul(x.identity, a) == a


@given(coset_data())
def test_cosets_partition_and_factor(data):
    x, g, m = data
    cosets = left_cosets(x, g)
    assert sorted(itertools.chain(*cosets)) == list(range(x.order))
    assert all(len(c) == len(g) for c in cosets)
    for e in range(x.order):
        u, s = m.factor[e]
        assert x.mul(g.members[u], m.reps[s]) == e


def test_isomorphism_checks():
    a = direct_product(cyclic(2), cyclic(2))
    b = direct_power_z2(2)
    assert is_isomorphism([0, 1, 2, 3], a, b) == (True, None)
    ok, w = is_isomorphism([0, 2, 1, 3], cyclic(4), cyclic(4))
    assert not ok and w[0] == "not homomorphic"


def test_small_builtins():
    assert trivial_group().order == 1
    assert cyclic(5).rows[2][4] == 1
    assert direct_power_z2(3).table[5, 3] == 6
    assert np.array_equal(direct_power_z2(1).table, [[0, 1], [1, 0]])
