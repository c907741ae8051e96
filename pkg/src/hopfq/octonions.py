"""The octonion quasigroup G_O inside X = Z2^3 ⋉ Cl3.

Vectors in Z2^3 are ints 0..7 in binary order 000, 001, ..., 111 (the first
coordinate is the high bit). G_O element ``±e_a`` has index ``a + 8 * sign``
with sign bit 1 for ``-``. Elements of X are pairs ``(u, c)`` (u in Z2^3,
c in Cl3) flattened as ``16 * u + c``.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

import numpy as np

from . import bicrossproduct as bc
from .groups import (FiniteGroup, Subgroup, Transversal, clifford_group_3, direct_power_z2,
                     semidirect_product)
from .matched_pair import (MatchedPair, check_right_inverses, extract, reconstruct_group,
                           verify_identities, verify_inverse_action, verify_inverse_conjugation,
                           verify_inverse_relations, verify_ip, verify_left_inverse,
                           verify_right_inverse_compatibility)
from .quasigroups import Magma, associator_defect, is_ip_quasigroup, is_moufang
from .report import VerificationReport

# Octonion signs in binary basis order; row a, column b.
F = np.array([
    [1, 1, 1, 1, 1, 1, 1, 1],
    [1, -1, 1, -1, 1, -1, 1, -1],
    [1, -1, -1, 1, 1, -1, -1, 1],
    [1, 1, -1, -1, -1, -1, 1, 1],
    [1, -1, -1, 1, -1, 1, 1, -1],
    [1, 1, 1, 1, -1, -1, -1, -1],
    [1, -1, 1, -1, -1, 1, -1, 1],
    [1, 1, -1, -1, 1, 1, -1, -1],
], dtype=np.int64)
F.setflags(write=False)

# Representative in X of +e_a as (Z2^3 part, Cl3 index).
_REPS = {
    0b000: (0b000, 0),
    0b001: (0b000, 0b001),
    0b010: (0b000, 0b010),
    0b011: (0b100, 8 + 0b011),
    0b100: (0b000, 0b100),
    0b101: (0b010, 8 + 0b101),
    0b110: (0b001, 8 + 0b110),
    0b111: (0b111, 0b111),
}


class OctonionMismatch(AssertionError):
    pass


def bits(a: int) -> tuple[int, int, int]:
    return (a >> 2) & 1, (a >> 1) & 1, a & 1


def from_bits(x: int, y: int, z: int) -> int:
    return ((x & 1) << 2) | ((y & 1) << 1) | (z & 1)


def dot(a: int, b: int) -> int:
    return bin(a & b).count("1") & 1


def cross(a: int, b: int) -> int:
    a1, a2, a3 = bits(a)
    b1, b2, b3 = bits(b)
    return from_bits(a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1)


def det(a: int, b: int, c: int) -> int:
    """Determinant over Z2 of the matrix with rows a, b, c."""
    rows = [bits(a), bits(b), bits(c)]
    total = 0
    for p in itertools.permutations(range(3)):
        term = rows[0][p[0]] * rows[1][p[1]] * rows[2][p[2]]
        total += term
    return total & 1


def sign_table() -> np.ndarray:
    return F


def associator_sign(a: int, b: int, c: int) -> int:
    """-1 exactly when a, b, c are linearly independent over Z2."""
    return -1 if det(a, b, c) else 1


def label(i: int) -> str:
    return ("-" if i >> 3 else "+") + "e" + format(i & 7, "03b")


def element(vec: int, sign: int = 1) -> int:
    return vec + (8 if sign < 0 else 0)


def octonion_quasigroup() -> Magma:
    """(±e_a)(±e_b) = (signs) F(a,b) e_{a+b} on 16 elements."""
    t = np.empty((16, 16), dtype=np.int64)
    for i, j in itertools.product(range(16), repeat=2):
        a, b = i & 7, j & 7
        neg = (i >> 3) ^ (j >> 3) ^ (F[a, b] < 0)
        t[i, j] = (a ^ b) + 8 * neg
    return Magma(t, identity=0, names=[label(i) for i in range(16)], name="G_O")


def clifford_action(v: int, c: int) -> int:
    """``c <| g^v``: e_i <| g_j = -e_i when i = j, so e^a <| g^v = (-1)^{a.v} e^a."""
    return c ^ (8 * dot(c & 7, v))


def x_group() -> FiniteGroup:
    return semidirect_product(direct_power_z2(3), clifford_group_3(), clifford_action)


@dataclass
class OctonionExample:
    X: FiniteGroup
    G: Subgroup
    M: Transversal
    mp: MatchedPair


def transversal_reps() -> list[int]:
    """X indices of the 16 representatives, ordered by G_O index."""
    out = []
    for i in range(16):
        u, c = _REPS[i & 7]
        out.append(16 * u + (c ^ (8 * (i >> 3))))
    return out


def build_octonion_example(check: bool = True) -> OctonionExample:
    """Construct X, G = Z2^3, M = G_O and extract the coset data.

    With ``check`` the extracted tables are compared with their closed forms
    and :class:`OctonionMismatch` names the first differing cell.
    """
    X = x_group()
    G = Subgroup(X, [16 * u for u in range(8)])
    M = Transversal(G, transversal_reps())
    mp = extract(X, G, M)
    mp.m_names = [label(i) for i in range(16)]
    if check:
        _check_closed_forms(mp)
    return OctonionExample(X, G, M, mp)


def _check_closed_forms(mp: MatchedPair) -> None:
    q = octonion_quasigroup()
    for s, u in itertools.product(range(16), range(8)):
        if mp.lact[s][u] != u:
            raise OctonionMismatch(f"|> not trivial at ({label(s)}, g{u:03b})")
        expect = s ^ (8 * dot(s & 7, u))
        if mp.ract[s][u] != expect:
            raise OctonionMismatch(f"<| at ({label(s)}, g{u:03b})")
    for s, t in itertools.product(range(16), repeat=2):
        if mp.tau[s][t] != cross(s & 7, t & 7):
            raise OctonionMismatch(f"tau at ({label(s)}, {label(t)})")
        if mp.dot[s][t] != q.mul(s, t):
            raise OctonionMismatch(f"product at ({label(s)}, {label(t)})")


def f_signs_from_cosets(mp: MatchedPair) -> np.ndarray:
    """The sign table read back from the coset product of +e_a and +e_b."""
    out = np.empty((8, 8), dtype=np.int64)
    for a, b in itertools.product(range(8), repeat=2):
        r = mp.dot[a][b]
        if r & 7 != a ^ b:
            raise OctonionMismatch(f"coset product of e{a:03b}, e{b:03b} has wrong vector")
        out[a, b] = -1 if r >> 3 else 1
    return out


def verify_octonion_example(include_moufang: bool = True) -> tuple[VerificationReport, dict]:
    """Run the full pipeline on the octonion example.

    Returns the aggregated report and a dict of per-stage timings in seconds.
    """
    timings: dict[str, float] = {}
    rep = VerificationReport("octonion bicrossproduct kG_O ▷◀ k(Z2^3)")

    def stage(name):
        timings[name] = time.perf_counter()

    def done(name):
        timings[name] = time.perf_counter() - timings[name]

    stage("extract")
    ex = build_octonion_example(check=False)
    mp = ex.mp
    try:
        _check_closed_forms(mp)
        rep.add("closed forms of |>, <|, tau and product", True, checked=16 * 8 + 256)
    except OctonionMismatch as exc:
        rep.add("closed forms of |>, <|, tau and product", False, note=str(exc))
    rep.add("|X| = 128", ex.X.order == 128)
    rep.add("sign table recovered from cosets", bool(np.array_equal(f_signs_from_cosets(mp), F)),
            checked=64)
    done("extract")

    stage("matched pair")
    rep.extend(verify_identities(mp), "identities: ")
    rep.extend(verify_left_inverse(mp), "left inverse: ")
    rep.extend(verify_inverse_relations(mp), "inverse relations: ")
    rep.extend(verify_inverse_action(mp), "inverse action: ")
    rep.extend(verify_inverse_conjugation(mp), "inverse conjugation: ")
    rep.extend(verify_right_inverse_compatibility(mp), "right inverses: ")
    crit = check_right_inverses(mp)
    rep.add("right inverse criteria agree and hold", crit.holds)
    rep.extend(verify_ip(mp), "IP: ")
    ok, _ = is_ip_quasigroup(mp.magma())
    rep.add("coset product is an IP quasigroup (table oracle)", ok)
    rep.extend(reconstruct_group(mp).report, "reconstruction: ")
    done("matched pair")

    stage("tau conditions")
    rep.extend(bc.check_hopf_condition(mp), "tau condition: ")
    rep.extend(bc.check_orbit_conditions(mp), "orbit conditions: ")
    rep.extend(bc.check_trivial_quasi_action(mp), "trivial |>: ")
    done("tau conditions")

    stage("hopf quasigroup")
    sc = bc.build(mp)
    rep.add("dim = 128", sc.dim == 128)
    rep.extend(bc.verify_hopf_quasigroup(sc), "Hopf quasigroup: ")
    rep.extend(bc.verify_antimultiplicativity(sc), "antipode: ")
    rep.extend(bc.verify_involutive_antipode(sc), "antipode: ")
    done("hopf quasigroup")

    stage("cocycle")
    cocycle = bc.build_cocycle(mp, sc)
    rep.extend(bc.verify_coquasi(sc, cocycle), "coquasi: ")
    done("cocycle")

    stage("dual")
    dual = bc.dualize(sc)
    rep.add("dualize twice is the identity", bc.dualize(dual) == sc)
    rep.extend(bc.verify_hopf_coquasigroup(dual), "dual Hopf coquasigroup: ")
    done("dual")

    q = octonion_quasigroup()
    ip, _ = is_ip_quasigroup(q)
    mou, w = is_moufang(q)
    rep.add("G_O is an IP quasigroup", ip)
    rep.add("G_O is Moufang", mou, w)
    defect = associator_defect(q)
    expected = [(s, t, r) for s, t, r in itertools.product(range(16), repeat=3)
                if det(s & 7, t & 7, r & 7)]
    rep.add("associator defect = linearly independent triples", defect == expected,
            checked=16 ** 3)
    if include_moufang:
        stage("moufang")
        rep.extend(bc.verify_moufang(sc), "bicrossproduct ")
        done("moufang")
    return rep, timings
