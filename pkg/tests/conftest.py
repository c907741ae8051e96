import itertools

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from hopfq import bicrossproduct as bc
from hopfq import octonions as oc
from hopfq.groups import (Subgroup, Transversal, clifford_group_3, cyclic, direct_power_z2,
                          direct_product, left_cosets, symmetric_group)
from hopfq.matched_pair import extract

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# S3 with the order-2 subgroup {012, 102}; cosets [0,2], [1,3], [4,5].
S3_TRANSVERSALS = {
    "canonical": [0, 1, 4],
    "right-inverses-not-ip": [0, 1, 5],
    "z3": [0, 3, 4],
    "no-right-inverses": [0, 3, 5],
}


def s3_pair(reps):
    x = symmetric_group(3)
    g = Subgroup.generated(x, [x.index("102")])
    return extract(x, g, Transversal(g, reps))


@pytest.fixture(scope="session")
def octo():
    return oc.build_octonion_example()


@pytest.fixture(scope="session")
def octo_sc(octo):
    return bc.build(octo.mp)


@pytest.fixture(scope="session")
def octo_cocycle(octo, octo_sc):
    return bc.build_cocycle(octo.mp, octo_sc)


@pytest.fixture(params=sorted(S3_TRANSVERSALS))
def s3(request):
    return request.param, s3_pair(S3_TRANSVERSALS[request.param])


SMALL_GROUPS = [
    lambda: symmetric_group(3),
    lambda: cyclic(4),
    lambda: cyclic(6),
    lambda: direct_power_z2(2),
    lambda: direct_power_z2(3),
    lambda: direct_product(cyclic(2), symmetric_group(3)),
    lambda: clifford_group_3(),
]
_GROUP_CACHE = {}


def small_group(i):
    if i not in _GROUP_CACHE:
        _GROUP_CACHE[i] = SMALL_GROUPS[i]()
    return _GROUP_CACHE[i]


@st.composite
def coset_data(draw, groups=range(len(SMALL_GROUPS))):
    """A random (X, G, M) from small groups: G generated by random elements and
    one random representative per coset (identity for the identity coset)."""
    x = small_group(draw(st.sampled_from(list(groups))))
    gens = draw(st.lists(st.integers(0, x.order - 1), max_size=2))
    g = Subgroup.generated(x, gens)
    reps = [x.identity]
    for coset in left_cosets(x, g):
        if x.identity not in coset:
            reps.append(draw(st.sampled_from(coset)))
    return x, g, Transversal(g, reps)


@st.composite
def matched_pairs(draw, groups=range(len(SMALL_GROUPS))):
    x, g, m = draw(coset_data(groups))
    return extract(x, g, m)


def all_triples(n):
    return itertools.product(range(n), repeat=3)


# one line per acceptance criterion, echoed in the terminal summary
CRITERIA: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in sorted(CRITERIA, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
