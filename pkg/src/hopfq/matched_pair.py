"""Coset data of a group X, subgroup G and transversal M.

Unique factorisation ``x = u s`` (u in G, s in M) turns the products
``s t`` and ``s u`` in X into four tables::

    s t = tau(s, t) (s . t)          s u = (s |> u) (s <| u)

``dot`` is the induced product on M, ``tau`` the G-valued cocycle, ``lact``
the quasi-action ``|>`` of M on G and ``ract`` the right action ``<|`` of G
on M. M indices are positions in the transversal (0 is the identity); G
indices are positions in the subgroup's member list.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .groups import (FiniteGroup, GroupError, NotAssociative, Subgroup, Transversal,
                     is_isomorphism, trivial_group)
from .quasigroups import Magma
from .report import VerificationReport


class RightInverseMissing(ValueError):
    pass


class ReconstructionFailed(ValueError):
    def __init__(self, msg: str, witness: tuple | None = None):
        super().__init__(msg if witness is None else f"{msg}: {witness}")
        self.witness = witness


class MatchedPair:
    """Tables ``(dot, tau, lact, ract)`` plus left/right inverses on M.

    ``group``, ``subgroup`` and ``transversal`` are None for data given
    abstractly (see :meth:`from_tables`).
    """

    def __init__(self, G: FiniteGroup, dot, tau, lact, ract, *, left_inv=None,
                 group: FiniteGroup | None = None, subgroup: Subgroup | None = None,
                 transversal: Transversal | None = None, m_names: Sequence[str] | None = None):
        m = len(dot)
        self.G = G
        self.m = m
        self.g = G.order
        self.dot = [list(map(int, r)) for r in dot]
        self.tau = [list(map(int, r)) for r in tau]
        self.lact = [list(map(int, r)) for r in lact]
        self.ract = [list(map(int, r)) for r in ract]
        for name, tab, cols, rng in (("dot", self.dot, m, m), ("tau", self.tau, m, self.g),
                                     ("lact", self.lact, self.g, self.g),
                                     ("ract", self.ract, self.g, m)):
            if len(tab) != m or any(len(r) != cols for r in tab):
                raise ValueError(f"{name} table has the wrong shape")
            if any(not (0 <= x < rng) for r in tab for x in r):
                raise ValueError(f"{name} table entry out of range")
        self.e = 0
        self.group = group
        self.subgroup = subgroup
        self.transversal = transversal
        self.m_names = list(m_names) if m_names is not None else None
        if left_inv is None:
            left_inv = [_first(self.dot, s, col=True) for s in range(m)]
            if any(x is None for x in left_inv):
                raise ValueError("some element of M has no left inverse")
        self.left_inv = [int(x) for x in left_inv]
        right = [_first(self.dot, s, col=False) for s in range(m)]
        self.right_inv = None if any(x is None for x in right) else right

    @classmethod
    def from_tables(cls, G: FiniteGroup, dot, tau, lact, ract, m_names=None) -> "MatchedPair":
        return cls(G, dot, tau, lact, ract, m_names=m_names)

    @classmethod
    def from_magma(cls, q: Magma) -> "MatchedPair":
        """Data with trivial G: tau, |> and <| all trivial, dot = q.

        Only magmas whose identity is index 0 are accepted, matching the
        convention that M's identity comes first.
        """
        if q.identity != 0:
            raise ValueError("magma identity must be index 0")
        n = q.order
        return cls(trivial_group(), q.table.tolist(), [[0] * n for _ in range(n)],
                   [[0] for _ in range(n)], [[s] for s in range(n)], m_names=q.names)

    def magma(self) -> Magma:
        return Magma(self.dot, identity=self.e, names=self.m_names)

    def m_label(self, s: int) -> str:
        return self.m_names[s] if self.m_names else f"m{s}"

    def g_label(self, u: int) -> str:
        return self.G.label(u) if self.G.names else f"g{u}"

    def tau_inv(self, s: int, t: int) -> int:
        return self.G.inv(self.tau[s][t])

    def chi(self, s: int) -> int:
        """The G-part of ``s^-1 = chi(s) s^-L``, equal to ``tau^-1(s^-L, s)``."""
        return self.G.inv(self.tau[self.left_inv[s]][s])

    def __repr__(self) -> str:
        return f"MatchedPair(|M|={self.m}, |G|={self.g})"


def _first(dot, s: int, col: bool) -> int | None:
    """First x with ``x . s = e`` (col) or ``s . x = e`` (row)."""
    for x in range(len(dot)):
        if (dot[x][s] if col else dot[s][x]) == 0:
            return x
    return None


def extract(x: FiniteGroup, g: Subgroup, m: Transversal) -> MatchedPair:
    """Factor products of X through ``x = u s`` to obtain the coset tables."""
    if m.subgroup is not g:
        m = Transversal(g, m.reps)
    f = m.factor
    reps, mem = m.reps, g.members
    dot, tau, lact, ract = [], [], [], []
    for s in reps:
        row_t, row_d, row_l, row_r = [], [], [], []
        for t in reps:
            u, r = f[x.mul(s, t)]
            row_t.append(u)
            row_d.append(r)
        for u in mem:
            v, r = f[x.mul(s, u)]
            row_l.append(v)
            row_r.append(r)
        dot.append(row_d)
        tau.append(row_t)
        lact.append(row_l)
        ract.append(row_r)
    left_inv = [f[x.inv(s)][1] for s in reps]
    names = [x.label(s) for s in reps] if x.names else None
    return MatchedPair(g.group, dot, tau, lact, ract, left_inv=left_inv, group=x, subgroup=g,
                       transversal=m, m_names=names)


def verify_factorization(mp: MatchedPair) -> VerificationReport:
    """Reassemble ``tau(s,t)(s.t)`` and ``(s|>u)(s<|u)`` in X and compare."""
    rep = VerificationReport("factorization")
    x, mem, reps = mp.group, mp.subgroup.members, mp.transversal.reps
    rep.sweep("st = tau(s,t)(s.t)", kinds="mm", cases=(
        ((s, t), x.mul(reps[s], reps[t]) == x.mul(mem[mp.tau[s][t]], reps[mp.dot[s][t]]))
        for s, t in itertools.product(range(mp.m), repeat=2)))
    rep.sweep("su = (s|>u)(s<|u)", kinds="mg", cases=(
        ((s, u), x.mul(reps[s], mem[u]) == x.mul(mem[mp.lact[s][u]], reps[mp.ract[s][u]]))
        for s, u in itertools.product(range(mp.m), range(mp.g))))
    rep.sweep("s^-1 = chi(s) s^-L", kinds="m", cases=(
        ((s,), x.inv(reps[s]) == x.mul(mem[mp.chi(s)], reps[mp.left_inv[s]]))
        for s in range(mp.m)))
    return rep


def verify_identities(mp: MatchedPair, strict: bool = False) -> VerificationReport:
    """Exhaustive sweep of the seven identities satisfied by any coset data."""
    G, dot, tau, la, ra = mp.G, mp.dot, mp.tau, mp.lact, mp.ract
    gm = G.mul
    M, U = range(mp.m), range(mp.g)
    e, eg = mp.e, G.identity
    rep = VerificationReport("matched pair identities")
    rep.sweep("cocycle", kinds="mmm", cases=(
        ((s, t, r), gm(tau[s][t], tau[dot[s][t]][r])
         == gm(la[s][tau[t][r]], tau[ra[s][tau[t][r]]][dot[t][r]]))
        for s, t, r in itertools.product(M, M, M)))
    rep.sweep("right action", kinds="mgg", cases=(
        ((s, u, v), ra[s][gm(u, v)] == ra[ra[s][u]][v])
        for s, u, v in itertools.product(M, U, U)))
    rep.sweep("action on product", kinds="mmg", cases=(
        ((s, t, u), ra[dot[s][t]][u] == dot[ra[s][la[t][u]]][ra[t][u]])
        for s, t, u in itertools.product(M, M, U)))
    rep.sweep("quasi-associativity", kinds="mmm", cases=(
        ((s, t, r), dot[dot[s][t]][r] == dot[ra[s][tau[t][r]]][dot[t][r]])
        for s, t, r in itertools.product(M, M, M)))
    rep.sweep("cocycle covariance", kinds="mmg", cases=(
        ((s, t, u), gm(tau[s][t], la[dot[s][t]][u])
         == gm(la[s][la[t][u]], tau[ra[s][la[t][u]]][ra[t][u]]))
        for s, t, u in itertools.product(M, M, U)))
    rep.sweep("quasi-action", kinds="mgg", cases=(
        ((s, u, v), la[s][gm(u, v)] == gm(la[s][u], la[ra[s][u]][v]))
        for s, u, v in itertools.product(M, U, U)))
    rep.sweep("unit laws", kinds="m", cases=(
        ((s,), la[s][eg] == eg and ra[s][eg] == s and tau[s][e] == eg and tau[e][s] == eg
         and dot[s][e] == s and dot[e][s] == s)
        for s in M))
    if strict:
        rep.assert_ok()
    return rep


def left_inverse(mp: MatchedPair, s: int) -> int:
    return mp.left_inv[s]


def division(mp: MatchedPair, t: int, s: int) -> int:
    """``t / s = (t <| tau^-1(s^-L, s)) . s^-L``."""
    sl = mp.left_inv[s]
    return mp.dot[mp.ract[t][mp.chi(s)]][sl]


def verify_left_inverse(mp: MatchedPair) -> VerificationReport:
    """Left-inverse relations and the division map."""
    G, dot, ra, la, tau = mp.G, mp.dot, mp.ract, mp.lact, mp.tau
    M = range(mp.m)
    L = mp.left_inv
    rep = VerificationReport("left inverse")
    rep.sweep("s^-L . s = e", kinds="m", cases=(((s,), dot[L[s]][s] == mp.e) for s in M))
    rep.sweep("(s <| chi(s)) . s^-L = e", kinds="m", cases=(((s,), dot[ra[s][mp.chi(s)]][L[s]] == mp.e) for s in M))
    rep.sweep("s |> chi(s) = tau^-1(s <| chi(s), s^-L)", kinds="m", cases=(
        ((s,), la[s][mp.chi(s)] == G.inv(tau[ra[s][mp.chi(s)]][L[s]])) for s in M))
    rep.sweep("(s^-L)^-L = s <| chi(s)", kinds="m", cases=(((s,), L[L[s]] == ra[s][mp.chi(s)]) for s in M))
    rep.sweep("(t/s).s = t", kinds="mm", cases=(
        ((t, s), dot[division(mp, t, s)][s] == t) for t, s in itertools.product(M, M)))
    rep.sweep("(t.s)/s = t", kinds="mm", cases=(
        ((t, s), division(mp, dot[t][s], s) == t) for t, s in itertools.product(M, M)))
    rep.sweep("right cancellation", kinds="m", cases=(
        ((s,), len({dot[t][s] for t in M}) == mp.m) for s in M))
    return rep


@dataclass
class RightInverseCriteria:
    bijective_quasi_action: bool
    right_inverses: bool
    x_equals_mg: bool

    @property
    def agree(self) -> bool:
        return self.bijective_quasi_action == self.right_inverses == self.x_equals_mg

    @property
    def holds(self) -> bool:
        return self.agree and self.right_inverses


def check_right_inverses(mp: MatchedPair) -> RightInverseCriteria:
    """Evaluate the three equivalent conditions for right inverses in M.

    ``x_equals_mg`` is computed in X when available, otherwise through the
    pair coordinates ``s u = (s|>u, s<|u)``.
    """
    bij = all(len(set(row)) == mp.g for row in mp.lact)
    right = mp.right_inv is not None
    if mp.group is not None:
        x, mem, reps = mp.group, mp.subgroup.members, mp.transversal.reps
        covered = {x.mul(s, u) for s in reps for u in mem}
        mg = len(covered) == x.order
    else:
        mg = len({(mp.lact[s][u], mp.ract[s][u]) for s in range(mp.m) for u in range(mp.g)}) \
            == mp.m * mp.g
    return RightInverseCriteria(bij, right, mg)


def verify_ip(mp: MatchedPair) -> VerificationReport:
    """Criterion for (M, .) to be an IP quasigroup, in terms of ``<|`` and tau."""
    ra, tau, L = mp.ract, mp.tau, mp.left_inv
    M = range(mp.m)
    rep = VerificationReport("inverse property")
    rep.sweep("t = t <| tau(s^-L, s)", kinds="mm", cases=(
        ((s, t), t == ra[t][tau[L[s]][s]]) for s, t in itertools.product(M, M)))
    rep.sweep("s^-L = s^-L <| tau(s, t)", kinds="mm", cases=(
        ((s, t), L[s] == ra[L[s]][tau[s][t]]) for s, t in itertools.product(M, M)))
    if rep.ok:
        R = mp.right_inv
        rep.sweep("s^-L = s^-R", kinds="m", cases=(((s,), R is not None and R[s] == L[s]) for s in M))
        rep.sweep("(s^-L)^-L = s", kinds="m", cases=(((s,), L[L[s]] == s) for s in M))
    return rep


def is_ip(mp: MatchedPair) -> bool:
    return verify_ip(mp).ok


def verify_inverse_conjugation(mp: MatchedPair) -> VerificationReport:
    """For each (s, u) the two sides of the equivalence

        (s<|u)^-L |> (s|>u)^-1 = u^-1   iff   u^-1 tau(s^-L,s) u = tau(s^-L <| (s|>u), s<|u)

    must agree. ``both hold`` is informational.
    """
    G, la, ra, tau, L = mp.G, mp.lact, mp.ract, mp.tau, mp.left_inv
    gi, gm = G.inv, G.mul
    agree, both = [], []
    for s, u in itertools.product(range(mp.m), range(mp.g)):
        lhs = la[L[ra[s][u]]][gi(la[s][u])] == gi(u)
        rhs = gm(gm(gi(u), tau[L[s]][s]), u) == tau[ra[L[s]][la[s][u]]][ra[s][u]]
        agree.append(((s, u), lhs == rhs))
        both.append(((s, u), lhs and rhs))
    rep = VerificationReport("inverse conjugation equivalence")
    rep.sweep("equivalence", agree, kinds="mg")
    rep.sweep("both sides hold", both, informational=True, kinds="mg")
    return rep


def verify_inverse_action(mp: MatchedPair) -> VerificationReport:
    """``(s<|u)^-L <| (s|>u)^-1 = s^-L`` for all (s, u)."""
    la, ra, L, gi = mp.lact, mp.ract, mp.left_inv, mp.G.inv
    rep = VerificationReport("inverse action")
    rep.sweep("(s<|u)^-L <| (s|>u)^-1 = s^-L", kinds="mg", cases=(
        ((s, u), ra[L[ra[s][u]]][gi(la[s][u])] == L[s])
        for s, u in itertools.product(range(mp.m), range(mp.g))))
    return rep


def verify_inverse_relations(mp: MatchedPair) -> VerificationReport:
    """``(t|>v)^-1 = (t<|v)|>v^-1`` and ``(t<|v)^-L = t^-L <| (t|>v)``."""
    la, ra, L, gi = mp.lact, mp.ract, mp.left_inv, mp.G.inv
    pairs = list(itertools.product(range(mp.m), range(mp.g)))
    rep = VerificationReport("inverse relations")
    rep.sweep("(t|>v)^-1 = (t<|v)|>v^-1", kinds="mg", cases=(
        ((t, v), gi(la[t][v]) == la[ra[t][v]][gi(v)]) for t, v in pairs))
    rep.sweep("(t<|v)^-L = t^-L <| (t|>v)", kinds="mg", cases=(
        ((t, v), L[ra[t][v]] == ra[L[t]][la[t][v]]) for t, v in pairs))
    return rep


def verify_right_inverse_compatibility(mp: MatchedPair) -> VerificationReport:
    R = mp.right_inv
    if R is None:
        raise RightInverseMissing("M has elements without right inverse")
    la, ra, tau, L = mp.lact, mp.ract, mp.tau, mp.left_inv
    rep = VerificationReport("right inverse compatibility")
    rep.sweep("s^-L |> tau(s, s^-R) = tau(s^-L, s)", kinds="m", cases=(
        ((s,), la[L[s]][tau[s][R[s]]] == tau[L[s]][s]) for s in range(mp.m)))
    rep.sweep("s^-L <| tau(s, s^-R) = s^-R", kinds="m", cases=(
        ((s,), ra[L[s]][tau[s][R[s]]] == R[s]) for s in range(mp.m)))
    return rep


@dataclass
class Reconstruction:
    """The group on pairs ``(u, s)``, index ``u * |M| + s``."""
    group: FiniteGroup
    to_x: list[int] | None
    report: VerificationReport


def reconstruct_group(mp: MatchedPair) -> Reconstruction:
    """Rebuild ``G x M`` with ``(u,s)(v,t) = (u (s|>v) tau(s<|v, t), (s<|v) . t)``.

    Checks associativity, identity, the explicit inverse formula and, when X
    is known, that ``(u, s) -> u s`` is an isomorphism onto X.
    """
    G, la, ra, tau, dot, L = mp.G, mp.lact, mp.ract, mp.tau, mp.dot, mp.left_inv
    gm, gi = G.mul, G.inv
    m = mp.m
    n = mp.g * m
    table = [[0] * n for _ in range(n)]
    for u, s, v, t in itertools.product(range(mp.g), range(m), range(mp.g), range(m)):
        sv = ra[s][v]
        w = gm(gm(u, la[s][v]), tau[sv][t])
        table[u * m + s][v * m + t] = w * m + dot[sv][t]
    names = None
    if G.names and mp.m_names:
        names = [f"({G.label(u)},{mp.m_label(s)})" for u in range(mp.g) for s in range(m)]
    try:
        prod = FiniteGroup(table, names, check=True, name="G x M")
    except NotAssociative as exc:
        raise ReconstructionFailed("pair product is not associative", exc.witness) from exc
    except GroupError as exc:
        raise ReconstructionFailed(str(exc), exc.witness) from exc
    ident = G.identity * m + mp.e
    rep = VerificationReport("group reconstruction")
    rep.add("identity is (e,e)", prod.identity == ident)

    def inverse(u, s):
        sl = L[s]
        ui = gi(u)
        return gm(mp.chi(s), la[sl][ui]) * m + ra[sl][ui]

    rep.sweep("inverse formula", kinds="gm", cases=(
        ((u, s), prod.mul(u * m + s, inverse(u, s)) == ident
         and prod.mul(inverse(u, s), u * m + s) == ident)
        for u, s in itertools.product(range(mp.g), range(m))))
    to_x = None
    if mp.group is not None:
        x, mem, reps = mp.group, mp.subgroup.members, mp.transversal.reps
        to_x = [x.mul(mem[u], reps[s]) for u in range(mp.g) for s in range(m)]
        ok, witness = is_isomorphism(to_x, prod, x)
        rep.add("(u,s) -> us is an isomorphism", ok, witness, n * n)
    return Reconstruction(prod, to_x, rep)


def pair_subgroup_and_transversal(mp: MatchedPair, rec: Reconstruction) -> tuple[Subgroup, Transversal]:
    """``(G, e)`` and ``(e, M)`` inside the reconstructed group."""
    m = mp.m
    sub = Subgroup(rec.group, [u * m + mp.e for u in range(mp.g)])
    trans = Transversal(sub, [mp.G.identity * m + s for s in range(m)])
    return sub, trans


def same_tables(a: MatchedPair, b: MatchedPair) -> bool:
    return (a.dot, a.tau, a.lact, a.ract, a.left_inv) == (b.dot, b.tau, b.lact, b.ract, b.left_inv)
