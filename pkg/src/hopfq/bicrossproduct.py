"""The bicrossproduct ``kM ▷◀ k(G)`` as exact structure constants.

Basis ``s ⊗ δ_u`` is indexed ``s * |G| + u``. The structure maps are::

    (s⊗δ_u)(t⊗δ_v) = δ_{u, t|>v} (s.t ⊗ δ_v)       1 = Σ_u e⊗δ_u
    Δ(s⊗δ_u) = Σ_{ab=u} (s⊗δ_a) ⊗ (s<|a ⊗ δ_b)      ε(s⊗δ_u) = δ_{u,e}
    S(s⊗δ_u) = (s<|u)^-L ⊗ δ_{(s|>u)^-1}

Verifiers evaluate every axiom on all basis tuples with exact arithmetic. The
cubic sweeps (Moufang, coquasi-Hopf cocycle, associativity) run on numpy
arrays when the product sends basis pairs to at most one basis element;
otherwise, and for cross-checking, a plain-Python evaluation is used.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable

import numpy as np

from .linear import LinComb, Tensor
from .matched_pair import MatchedPair, check_right_inverses, is_ip, verify_identities, verify_ip
from .report import VerificationReport


class BuildError(ValueError):
    pass


class AntipodePreconditionFailed(ValueError):
    pass


class TriangleRightNotTrivial(ValueError):
    """The quasi-action ``|>`` is not trivial."""


@dataclass(eq=False)
class StructureConstants:
    dim: int
    basis_labels: list
    product: Tensor
    unit: LinComb
    coproduct: Tensor
    counit: LinComb
    antipode: Tensor | None = None
    is_dual: bool = False
    name: str = ""

    def __eq__(self, other) -> bool:
        if not isinstance(other, StructureConstants):
            return NotImplemented
        return (self.dim == other.dim and list(map(tuple, self.basis_labels))
                == list(map(tuple, other.basis_labels)) and self.product == other.product
                and self.unit == other.unit and self.coproduct == other.coproduct
                and self.counit == other.counit and self.antipode == other.antipode
                and self.is_dual == other.is_dual)

    def __repr__(self) -> str:
        kind = "dual " if self.is_dual else ""
        return f"StructureConstants({kind}dim={self.dim}{', ' + self.name if self.name else ''})"

    def with_antipode(self, antipode: Tensor | None) -> "StructureConstants":
        return replace(self, antipode=antipode)


def basis_index(mp: MatchedPair, s: int, u: int) -> int:
    return s * mp.g + u


def derive_antipode(mp: MatchedPair) -> Tensor:
    """``S(s⊗δ_u) = (s<|u)^-L ⊗ δ_{(s|>u)^-1}`` as a basis permutation."""
    crit = check_right_inverses(mp)
    if not crit.right_inverses:
        raise AntipodePreconditionFailed("M lacks right inverses")
    if not crit.bijective_quasi_action:
        raise AntipodePreconditionFailed("s |> ( ) is not bijective on G for some s")
    g, L, la, ra, gi = mp.g, mp.left_inv, mp.lact, mp.ract, mp.G.inv
    n = mp.m * g
    entries = {}
    for s, u in itertools.product(range(mp.m), range(g)):
        entries[(s * g + u, L[ra[s][u]] * g + gi(la[s][u]))] = 1
    return Tensor((n, n), entries)


def build(mp: MatchedPair, antipode: bool = True, check: bool = True) -> StructureConstants:
    """Structure constants of ``kM ▷◀ k(G)``.

    With ``antipode=True`` the antipode is attached when its preconditions
    hold (otherwise left as None). ``check`` asserts coassociativity and
    multiplicativity of Δ and ε.
    """
    m, g = mp.m, mp.g
    n = m * g
    G, dot, la, ra = mp.G, mp.dot, mp.lact, mp.ract
    prod, cop = {}, {}
    for s, u, t, v in itertools.product(range(m), range(g), range(m), range(g)):
        if u == la[t][v]:
            prod[(s * g + u, t * g + v, dot[s][t] * g + v)] = 1
    for s, u, a in itertools.product(range(m), range(g), range(g)):
        b = G.mul(G.inv(a), u)
        cop[(s * g + u, s * g + a, ra[s][a] * g + b)] = 1
    unit = LinComb({mp.e * g + u: 1 for u in range(g)}, n)
    counit = LinComb({s * g + G.identity: 1 for s in range(m)}, n)
    labels = [(s, u) for s in range(m) for u in range(g)]
    S = None
    if antipode:
        try:
            S = derive_antipode(mp)
        except AntipodePreconditionFailed:
            S = None
    sc = StructureConstants(n, labels, Tensor((n, n, n), prod), unit, Tensor((n, n, n), cop),
                            counit, S, name="bicrossproduct")
    if check:
        rep = verify_bialgebra(sc, coassociative=True)
        if not rep.ok:
            bad = rep.first_failure()
            raise BuildError(f"{bad.name} fails at {bad.witness}")
    return sc


def group_algebra(q_table, identity: int = 0) -> StructureConstants:
    """kM for a finite magma with grouplike coproduct and ``S(s) = s^-1``.

    The antipode uses the first two-sided inverse found (None if some element
    has none).
    """
    t = np.asarray(q_table)
    n = t.shape[0]
    prod = {(i, j, int(t[i, j])): 1 for i in range(n) for j in range(n)}
    cop = {(i, i, i): 1 for i in range(n)}
    inv = {}
    for s in range(n):
        for x in range(n):
            if t[x, s] == identity and t[s, x] == identity:
                inv[s] = x
                break
    S = Tensor((n, n), {(s, x): 1 for s, x in inv.items()}) if len(inv) == n else None
    return StructureConstants(n, [(i,) for i in range(n)], Tensor((n, n, n), prod),
                              LinComb({identity: 1}, n), Tensor((n, n, n), cop),
                              LinComb({i: 1 for i in range(n)}, n), S, name="magma algebra")


def dualize(sc: StructureConstants) -> StructureConstants:
    """Transpose every structure map: the dual (co)algebra in the dual basis."""
    n = sc.dim
    product = Tensor((n, n, n), {(j, k, i): c for (i, j, k), c in sc.coproduct.entries.items()})
    coproduct = Tensor((n, n, n), {(k, i, j): c for (i, j, k), c in sc.product.entries.items()})
    S = None
    if sc.antipode is not None:
        S = Tensor((n, n), {(j, i): c for (i, j), c in sc.antipode.entries.items()})
    return StructureConstants(n, list(sc.basis_labels), product, LinComb(sc.counit.terms, n),
                              coproduct, LinComb(sc.unit.terms, n), S, not sc.is_dual, sc.name)


# ---------------------------------------------------------------------------
# plain-Python evaluation on sparse dicts

def _add(out: dict, k, c) -> None:
    v = out.get(k, 0) + c
    if v:
        out[k] = v
    else:
        out.pop(k, None)


class _Ops:
    def __init__(self, sc: StructureConstants):
        self.n = sc.dim
        self.mt = sc.product.row(2)
        self.cop = sc.coproduct.row(1)
        self.S = sc.antipode.row(1) if sc.antipode is not None else None
        self.eps = sc.counit.terms
        self.one = sc.unit.terms

    def mul(self, a: dict, b: dict) -> dict:
        out: dict = {}
        mt = self.mt
        for i, ai in a.items():
            for j, bj in b.items():
                for k, c in mt.get((i, j), ()):
                    _add(out, k, ai * bj * c)
        return out

    def anti(self, a: dict) -> dict:
        out: dict = {}
        for i, ai in a.items():
            for j, c in self.S.get(i, ()):
                _add(out, j, ai * c)
        return out

    def delta(self, a: dict) -> dict:
        out: dict = {}
        for i, ai in a.items():
            for jk, c in self.cop.get(i, ()):
                _add(out, jk, ai * c)
        return out

    def counit(self, a: dict) -> Fraction:
        return sum((ai * self.eps.get(i, 0) for i, ai in a.items()), Fraction(0))

    def mul2(self, a: dict, b: dict) -> dict:
        """Product in H ⊗ H."""
        out: dict = {}
        mt = self.mt
        for (i1, i2), ac in a.items():
            for (j1, j2), bc in b.items():
                l1 = mt.get((i1, j1))
                if not l1:
                    continue
                l2 = mt.get((i2, j2))
                if not l2:
                    continue
                for k1, c1 in l1:
                    for k2, c2 in l2:
                        _add(out, (k1, k2), ac * bc * c1 * c2)
        return out

    def basis(self, i: int) -> dict:
        return {i: Fraction(1)}

    def scaled(self, a: dict, c) -> dict:
        return {k: v * c for k, v in a.items() if v * c}


def _scaled_basis(i: int, c) -> dict:
    return {i: Fraction(c)} if c else {}


def verify_bialgebra(sc: StructureConstants, coassociative: bool = True,
                     associative: bool = False) -> VerificationReport:
    """Unit/counit laws, multiplicativity of Δ and ε, and (co)associativity."""
    ops = _Ops(sc)
    n = sc.dim
    N = range(n)
    one = ops.one
    rep = VerificationReport("bialgebra")
    rep.sweep("unit laws", kinds="b", cases=(((i,), ops.mul(one, ops.basis(i)) == ops.basis(i)
                             == ops.mul(ops.basis(i), one)) for i in N))

    def counit_ok(i):
        d = ops.delta(ops.basis(i))
        left: dict = {}
        right: dict = {}
        for (j, k), c in d.items():
            _add(left, k, c * ops.eps.get(j, 0))
            _add(right, j, c * ops.eps.get(k, 0))
        return left == ops.basis(i) == right

    rep.sweep("counit laws", kinds="b", cases=(((i,), counit_ok(i)) for i in N))
    if coassociative:
        rep.sweep("coassociativity", kinds="b", cases=(((i,), _coassoc_ok(ops, i)) for i in N))
    rep.add("unit grouplike", ops.delta(one) == {(a, b): x * y for a, x in one.items()
                                                 for b, y in one.items()} and ops.counit(one) == 1)
    eps = ops.eps
    rep.sweep("counit multiplicative", kinds="bb", cases=(
        ((i, j), ops.counit(ops.mul(ops.basis(i), ops.basis(j))) == eps.get(i, 0) * eps.get(j, 0))
        for i, j in itertools.product(N, N)))
    deltas = [ops.delta(ops.basis(i)) for i in N]
    rep.sweep("coproduct multiplicative", kinds="bb", cases=(
        ((i, j), ops.delta(ops.mul(ops.basis(i), ops.basis(j))) == ops.mul2(deltas[i], deltas[j]))
        for i, j in itertools.product(N, N)))
    if associative:
        w = associativity_witness(sc)
        rep.add("associativity", w is None, w, n ** 3, kinds="bbb")
    return rep


def _coassoc_ok(ops: _Ops, i: int) -> bool:
    left: dict = {}
    right: dict = {}
    for (j, k), c in ops.delta(ops.basis(i)).items():
        for (a, b), d in ops.delta(ops.basis(j)).items():
            _add(left, (a, b, k), c * d)
        for (a, b), d in ops.delta(ops.basis(k)).items():
            _add(right, (j, a, b), c * d)
    return left == right


def _antipode_identities(ops: _Ops, i: int, j: int) -> tuple[bool, bool, bool, bool]:
    """The four antipode identities at basis ``h = e_i``, ``g = e_j``."""
    target = _scaled_basis(j, ops.eps.get(i, 0))
    g = ops.basis(j)
    r1: dict = {}
    r2: dict = {}
    r3: dict = {}
    r4: dict = {}
    for (h1, h2), c in ops.cop.get(i, ()):
        b1, b2 = ops.basis(h1), ops.basis(h2)
        s1, s2 = ops.anti(b1), ops.anti(b2)
        for k, v in ops.mul(s1, ops.mul(b2, g)).items():
            _add(r1, k, c * v)
        for k, v in ops.mul(b1, ops.mul(s2, g)).items():
            _add(r2, k, c * v)
        for k, v in ops.mul(ops.mul(g, s1), b2).items():
            _add(r3, k, c * v)
        for k, v in ops.mul(ops.mul(g, b1), s2).items():
            _add(r4, k, c * v)
    return r1 == target, r2 == target, r3 == target, r4 == target


ANTIPODE_IDENTITIES = (
    "S(h1)(h2 g) = eps(h) g",
    "h1(S(h2) g) = eps(h) g",
    "(g S(h1)) h2 = eps(h) g",
    "(g h1) S(h2) = eps(h) g",
)


def verify_hopf_quasigroup(sc: StructureConstants, strict: bool = False) -> VerificationReport:
    """All Hopf quasigroup axioms on every basis pair."""
    rep = VerificationReport("Hopf quasigroup")
    rep.extend(verify_bialgebra(sc, coassociative=True))
    if sc.antipode is None:
        for name in ANTIPODE_IDENTITIES:
            rep.add(name, False, note="no antipode")
    else:
        ops = _Ops(sc)
        results = [[] for _ in ANTIPODE_IDENTITIES]
        for i, j in itertools.product(range(sc.dim), repeat=2):
            for slot, ok in zip(results, _antipode_identities(ops, i, j)):
                slot.append(((i, j), ok))
        for name, cases in zip(ANTIPODE_IDENTITIES, results):
            rep.sweep(name, cases, kinds="bb")
    if strict:
        rep.assert_ok()
    return rep


def verify_antimultiplicativity(sc: StructureConstants) -> VerificationReport:
    """``S(hg) = S(g)S(h)`` on basis pairs and ``Δ(Sh) = S(h2) ⊗ S(h1)``."""
    rep = VerificationReport("antipode anti-(co)multiplicativity")
    if sc.antipode is None:
        rep.add("S(hg) = S(g)S(h)", False, note="no antipode")
        rep.add("Delta(S h) = S(h2) (x) S(h1)", False, note="no antipode")
        return rep
    ops = _Ops(sc)
    N = range(sc.dim)
    S = [ops.anti(ops.basis(i)) for i in N]
    rep.sweep("S(hg) = S(g)S(h)", kinds="bb", cases=(
        ((i, j), ops.anti(ops.mul(ops.basis(i), ops.basis(j))) == ops.mul(S[j], S[i]))
        for i, j in itertools.product(N, N)))

    def anticomult(i):
        rhs: dict = {}
        for (a, b), c in ops.delta(ops.basis(i)).items():
            for x, cx in S[b].items():
                for y, cy in S[a].items():
                    _add(rhs, (x, y), c * cx * cy)
        return ops.delta(S[i]) == rhs

    rep.sweep("Delta(S h) = S(h2) (x) S(h1)", kinds="b", cases=(((i,), anticomult(i)) for i in N))
    return rep


def verify_involutive_antipode(sc: StructureConstants) -> VerificationReport:
    rep = VerificationReport("antipode involution")
    if sc.antipode is None:
        return rep.add("S^2 = id", False, note="no antipode")
    ops = _Ops(sc)
    return rep.sweep("S^2 = id", kinds="b", cases=(((i,), ops.anti(ops.anti(ops.basis(i))) == ops.basis(i))
                                  for i in range(sc.dim)))


def verify_hopf_coquasigroup(sc: StructureConstants, strict: bool = False) -> VerificationReport:
    """Arrow-reversed axioms: associative unital product, Δ and ε algebra maps,
    and for every basis element ξ::

        Σ S(ξ1) ξ2_1 ⊗ ξ2_2 = 1 ⊗ ξ = Σ ξ1 S(ξ2_1) ⊗ ξ2_2
        Σ ξ1_1 ⊗ S(ξ1_2) ξ2 = ξ ⊗ 1 = Σ ξ1_1 ⊗ ξ1_2 S(ξ2)

    These are the transposes of the four Hopf quasigroup antipode identities.
    """
    rep = VerificationReport("Hopf coquasigroup")
    rep.extend(verify_bialgebra(sc, coassociative=False, associative=True))
    names = ("S(x1) x2_1 (x) x2_2 = 1 (x) x", "x1 S(x2_1) (x) x2_2 = 1 (x) x",
             "x1_1 (x) S(x1_2) x2 = x (x) 1", "x1_1 (x) x1_2 S(x2) = x (x) 1")
    if sc.antipode is None:
        for name in names:
            rep.add(name, False, note="no antipode")
    else:
        ops = _Ops(sc)
        one = ops.one
        results = [[] for _ in names]
        for i in range(sc.dim):
            left_t = {(a, i): c for a, c in one.items()}
            right_t = {(i, a): c for a, c in one.items()}
            r = [{}, {}, {}, {}]
            d = ops.delta(ops.basis(i))
            for (x1, x2), c in d.items():
                b1, b2 = ops.basis(x1), ops.basis(x2)
                for (y1, y2), cy in ops.delta(b2).items():
                    for k, v in ops.mul(ops.anti(b1), ops.basis(y1)).items():
                        _add(r[0], (k, y2), c * cy * v)
                    for k, v in ops.mul(b1, ops.anti(ops.basis(y1))).items():
                        _add(r[1], (k, y2), c * cy * v)
                for (y1, y2), cy in ops.delta(b1).items():
                    for k, v in ops.mul(ops.anti(ops.basis(y2)), b2).items():
                        _add(r[2], (y1, k), c * cy * v)
                    for k, v in ops.mul(ops.basis(y2), ops.anti(b2)).items():
                        _add(r[3], (y1, k), c * cy * v)
            for slot, res, tgt in zip(results, r, (left_t, left_t, right_t, right_t)):
                slot.append(((i,), res == tgt))
        for name, cases in zip(names, results):
            rep.sweep(name, cases, kinds="b")
    if strict:
        rep.assert_ok()
    return rep


# ---------------------------------------------------------------------------
# array evaluation for cubic sweeps

_INT_BOUND = 1 << 6


class _Dense:
    """Array form of structure constants with a monomial product.

    Index ``n`` is a sentinel meaning "zero"; its coefficients are 0 so any
    chain of products through it vanishes.
    """

    def __init__(self, sc: StructureConstants, extra: Iterable[Tensor] = ()):
        if not sc.product.is_monomial(2):
            raise ValueError("product is not monomial")
        n = sc.dim
        self.n = n
        tensors = [sc.product, sc.coproduct, *extra]
        coeffs = [c for t in tensors for c in t.entries.values()]
        small = all(c.denominator == 1 and abs(c.numerator) <= _INT_BOUND for c in coeffs)
        self.dtype = np.int64 if small else object
        self.P = np.full((n + 1, n + 1), n, dtype=np.int64)
        self.Pc = self._zeros((n + 1, n + 1))
        for (i, j), [(k, c)] in sc.product.row(2).items():
            self.P[i, j] = k
            self.Pc[i, j] = self._coef(c)
        self.cop = sc.coproduct.row(1)

    def _zeros(self, shape):
        if self.dtype is object:
            z = np.empty(shape, dtype=object)
            z.fill(Fraction(0))
            return z
        return np.zeros(shape, dtype=np.int64)

    def _coef(self, c: Fraction):
        return int(c) if self.dtype is not object else c

    def padded(self, keep=lambda a, b: True):
        """Coproduct terms as arrays ``(first, second, coeff)`` of shape (n+1, K)."""
        n = self.n
        rows = [[(a, b, c) for (a, b), c in self.cop.get(i, ()) if keep(a, b)] for i in range(n)]
        K = max([len(r) for r in rows] + [1])
        D1 = np.full((n + 1, K), n, dtype=np.int64)
        D2 = np.full((n + 1, K), n, dtype=np.int64)
        Dc = self._zeros((n + 1, K))
        for i, r in enumerate(rows):
            for k, (a, b, c) in enumerate(r):
                D1[i, k], D2[i, k], Dc[i, k] = a, b, self._coef(c)
        return D1, D2, Dc

    def dense3(self, t: Tensor):
        n = self.n
        out = self._zeros((n + 1, n + 1, n + 1))
        for (i, j, k), c in t.entries.items():
            out[i, j, k] = self._coef(c)
        return out

    def scatter(self, acc, idx, coef):
        """Accumulate ``coef`` at ``(grid position, idx)`` into ``acc[(rows), n+1]``."""
        width = self.n + 1
        flat = np.arange(idx.size).reshape(idx.shape) * width + idx
        np.add.at(acc.reshape(-1), flat.reshape(-1), coef.reshape(-1))


def _first_bad(mask: np.ndarray) -> tuple | None:
    bad = np.argwhere(mask)
    return tuple(int(x) for x in bad[0]) if len(bad) else None


def associativity_witness(sc: StructureConstants) -> tuple | None:
    """First basis triple with ``(ab)c != a(bc)``, or None."""
    n = sc.dim
    if sc.product.is_monomial(2):
        d = _Dense(sc)
        P, Pc = d.P, d.Pc
        ar = np.arange(n)
        for a in range(n):
            ab, cab = P[a, :n], Pc[a, :n]  # over b
            lhs = P[ab[:, None], ar[None, :]]
            clhs = cab[:, None] * Pc[ab[:, None], ar[None, :]]
            bc, cbc = P[:n, :n], Pc[:n, :n]  # over (b, c)
            rhs = P[a, bc]
            crhs = cbc * Pc[a, bc]
            bad = ((lhs != rhs) & ((clhs != 0) | (crhs != 0))) | (clhs != crhs)
            w = _first_bad(bad)
            if w is not None:
                return (a,) + w
        return None
    ops = _Ops(sc)
    for a, b, c in itertools.product(range(n), repeat=3):
        A, B, C = ops.basis(a), ops.basis(b), ops.basis(c)
        if ops.mul(ops.mul(A, B), C) != ops.mul(A, ops.mul(B, C)):
            return (a, b, c)
    return None


def _moufang_dense(sc: StructureConstants) -> tuple[tuple | None, int]:
    d = _Dense(sc)
    n, P, Pc = d.n, d.P, d.Pc
    D1, D2, Dc = d.padded()
    ar = np.arange(n)
    for h in range(n):
        accL = d._zeros((n, n, n + 1))
        accR = d._zeros((n, n, n + 1))
        for a in range(D1.shape[1]):
            h1, h2, c = D1[h, a], D2[h, a], Dc[h, a]
            if h1 == n:
                continue
            # h1 (g (h2 f)) over (g, f)
            x, cx = P[h2, :n], Pc[h2, :n]
            y = P[ar[:, None], x[None, :]]
            cy = Pc[ar[:, None], x[None, :]] * cx[None, :]
            z, cz = P[h1, y], Pc[h1, y] * cy * c
            d.scatter(accL, z, cz)
            # ((h1 g) h2) f
            p, cp = P[h1, :n], Pc[h1, :n]
            q, cq = P[p, h2], Pc[p, h2] * cp
            r = P[q[:, None], ar[None, :]]
            cr = Pc[q[:, None], ar[None, :]] * cq[:, None] * c
            d.scatter(accR, r, cr)
        w = _first_bad((accL[:, :, :n] != accR[:, :, :n]).any(axis=2))
        if w is not None:
            return (h,) + w, n ** 3
    return None, n ** 3


def _moufang_python(sc: StructureConstants, triples=None) -> tuple[tuple | None, int]:
    ops = _Ops(sc)
    n = sc.dim
    if triples is None:
        triples = itertools.product(range(n), repeat=3)
    count = 0
    for h, g, f in triples:
        count += 1
        G, F = ops.basis(g), ops.basis(f)
        lhs: dict = {}
        rhs: dict = {}
        for (h1, h2), c in ops.delta(ops.basis(h)).items():
            H1, H2 = ops.basis(h1), ops.basis(h2)
            for k, v in ops.mul(H1, ops.mul(G, ops.mul(H2, F))).items():
                _add(lhs, k, c * v)
            for k, v in ops.mul(ops.mul(ops.mul(H1, G), H2), F).items():
                _add(rhs, k, c * v)
        if lhs != rhs:
            return (h, g, f), count
    return None, count


def verify_moufang(sc: StructureConstants, method: str = "auto", triples=None) -> VerificationReport:
    """``Σ h1(g(h2 f)) = Σ ((h1 g)h2)f`` on basis triples; reported, never asserted."""
    if method == "auto":
        method = "dense" if sc.product.is_monomial(2) and triples is None else "python"
    if method == "dense":
        w, count = _moufang_dense(sc)
    else:
        w, count = _moufang_python(sc, triples)
    rep = VerificationReport("Moufang")
    return rep.add("h1(g(h2 f)) = ((h1 g)h2)f", w is None, w, count, informational=True,
                   kinds="bbb")


# ---------------------------------------------------------------------------
# matched-pair conditions for the Hopf quasigroup property

def check_hopf_condition(mp: MatchedPair) -> VerificationReport:
    """The tau condition together with its two equivalent forms.

    For all (s, t, u), with ``B = s|>(t|>u)`` and ``A = (s.t)|>u``::

        tau(s<|(t|>u), t<|u) = B^-1 tau(s,t) B
        A = B
        tau(s<|(t|>u), t<|u) = A^-1 tau(s,t) A

    The three must hold or fail together on every tuple.
    """
    G, la, ra, tau, dot = mp.G, mp.lact, mp.ract, mp.tau, mp.dot
    gm, gi = G.mul, G.inv
    main, alt1, alt2, agree = [], [], [], []
    for s, t, u in itertools.product(range(mp.m), range(mp.m), range(mp.g)):
        tu = la[t][u]
        B = la[s][tu]
        A = la[dot[s][t]][u]
        lhs = tau[ra[s][tu]][ra[t][u]]
        c1 = lhs == gm(gm(gi(B), tau[s][t]), B)
        c2 = A == B
        c3 = lhs == gm(gm(gi(A), tau[s][t]), A)
        key = (s, t, u)
        main.append((key, c1))
        alt1.append((key, c2))
        alt2.append((key, c3))
        agree.append((key, c1 == c2 == c3))
    rep = VerificationReport("Hopf quasigroup tau condition")
    rep.sweep("tau(s<|(t|>u), t<|u) = B^-1 tau(s,t) B", main, kinds="mmg")
    rep.sweep("(s.t)|>u = s|>(t|>u)", alt1, kinds="mmg")
    rep.sweep("tau(s<|(t|>u), t<|u) = A^-1 tau(s,t) A", alt2, kinds="mmg")
    rep.sweep("forms agree", agree, kinds="mmg")
    return rep


def hopf_criterion(mp: MatchedPair) -> bool:
    """Right inverses, IP quasigroup and the tau condition."""
    return (check_right_inverses(mp).holds and is_ip(mp)
            and check_hopf_condition(mp).ok)


def check_orbit_conditions(mp: MatchedPair) -> VerificationReport:
    """Sufficient conditions on tau: ``tau(s, t<|u) = tau(s,t)`` and
    ``tau(s <| (s^-L |> u), t) = u^-1 tau(s,t) u``."""
    G, la, ra, tau, L = mp.G, mp.lact, mp.ract, mp.tau, mp.left_inv
    gm, gi = G.mul, G.inv
    triples = list(itertools.product(range(mp.m), range(mp.m), range(mp.g)))
    rep = VerificationReport("orbit conditions")
    rep.sweep("tau(s, t<|u) = tau(s,t)", kinds="mmg", cases=(
        ((s, t, u), tau[s][ra[t][u]] == tau[s][t]) for s, t, u in triples))
    rep.sweep("tau(s<|(s^-L|>u), t) = u^-1 tau(s,t) u", kinds="mmg", cases=(
        ((s, t, u), tau[ra[s][la[L[s]][u]]][t] == gm(gm(gi(u), tau[s][t]), u))
        for s, t, u in triples))
    return rep


def check_trivial_quasi_action(mp: MatchedPair) -> VerificationReport:
    """Conditions for the case ``s|>u = u``: orbit constancy, covariance,
    2-cocycle, plus the action and quasi-associativity requirements."""
    if any(mp.lact[s][u] != u for s in range(mp.m) for u in range(mp.g)):
        raise TriangleRightNotTrivial("s |> u differs from u for some (s, u)")
    G, ra, tau, dot = mp.G, mp.ract, mp.tau, mp.dot
    gm, gi = G.mul, G.inv
    M, U = range(mp.m), range(mp.g)
    rep = VerificationReport("trivial quasi-action conditions")
    rep.sweep("orbit constancy tau(s,t) = tau(s,t<|u)", kinds="mmg", cases=(
        ((s, t, u), tau[s][t] == tau[s][ra[t][u]]) for s, t, u in itertools.product(M, M, U)))
    rep.sweep("covariance u^-1 tau(s,t) u = tau(s<|u, t<|u)", kinds="mmg", cases=(
        ((s, t, u), gm(gm(gi(u), tau[s][t]), u) == tau[ra[s][u]][ra[t][u]])
        for s, t, u in itertools.product(M, M, U)))
    rep.sweep("2-cocycle tau(s,t)tau(s.t,r) = tau(s,t.r)tau(t,r)", kinds="mmm", cases=(
        ((s, t, r), gm(tau[s][t], tau[dot[s][t]][r]) == gm(tau[s][dot[t][r]], tau[t][r]))
        for s, t, r in itertools.product(M, M, M)))
    ident = verify_identities(mp)
    for name in ("right action", "action on product", "unit laws", "quasi-associativity"):
        e = ident[name]
        rep.add(name, e.passed, e.witness, e.checked, kinds=e.kinds)
    ip = verify_ip(mp)
    rep.add("IP quasigroup", ip.ok, None if ip.ok else ip.first_failure().witness,
            kinds="" if ip.ok else ip.first_failure().kinds)
    return rep


# ---------------------------------------------------------------------------
# coquasi-Hopf 3-cocycle

@dataclass
class Cocycle3:
    """Functionals on H⊗H⊗H stored as arity-3 tensors of values."""
    phi: Tensor
    phi_inv: Tensor


def build_cocycle(mp: MatchedPair, sc: StructureConstants | None = None) -> Cocycle3:
    """``phi(s⊗δ_u, t⊗δ_v, r⊗δ_w) = δ_{u, tau^-1(t,r)} δ_{v,e} δ_{w,e}``,
    and ``phi^-1`` with ``tau(t,r)`` in place of its inverse."""
    g, e = mp.g, mp.G.identity
    n = mp.m * g
    phi, inv = {}, {}
    for s, t, r in itertools.product(range(mp.m), repeat=3):
        tr = mp.tau[t][r]
        phi[(s * g + mp.G.inv(tr), t * g + e, r * g + e)] = 1
        inv[(s * g + tr, t * g + e, r * g + e)] = 1
    return Cocycle3(Tensor((n, n, n), phi), Tensor((n, n, n), inv))


def _support_slots(t: Tensor) -> tuple[set, set, set]:
    return ({i for i, _, _ in t.entries}, {j for _, j, _ in t.entries},
            {k for _, _, k in t.entries})


def _convolution_dense(sc, c: Cocycle3, first: Tensor, second: Tensor):
    """First ``(h,g,f)`` where ``Σ first(h1,g1,f1) second(h2,g2,f2) != ε(h)ε(g)ε(f)``."""
    d = _Dense(sc, [first, second])
    n = d.n
    A, B = d.dense3(first), d.dense3(second)
    a0, a1, a2 = _support_slots(first)
    b0, b1, b2 = _support_slots(second)
    H1, H2, Hc = d.padded(lambda x, y: x in a0 and y in b0)
    G1, G2, Gc = d.padded(lambda x, y: x in a1 and y in b1)
    F1, F2, Fc = d.padded(lambda x, y: x in a2 and y in b2)
    eps = d._zeros(n + 1)
    for i, v in sc.counit.terms.items():
        eps[i] = d._coef(v)
    target_gf = eps[:n, None] * eps[None, :n]
    for h in range(n):
        acc = d._zeros((n, n))
        for a in range(H1.shape[1]):
            if H1[h, a] == n:
                continue
            for b in range(G1.shape[1]):
                for cc in range(F1.shape[1]):
                    g1, g2 = G1[:n, b][:, None], G2[:n, b][:, None]
                    f1, f2 = F1[:n, cc][None, :], F2[:n, cc][None, :]
                    acc = acc + (Hc[h, a] * Gc[:n, b][:, None] * Fc[:n, cc][None, :]
                                 * A[H1[h, a], g1, f1] * B[H2[h, a], g2, f2])
        w = _first_bad(acc != eps[h] * target_gf)
        if w is not None:
            return (h,) + w
    return None


def _coquasi_dense(sc, c: Cocycle3):
    """First triple breaking ``Σ phi(h1,g1,f1)(h2 g2)f2 = Σ h1(g1 f1) phi(h2,g2,f2)``."""
    d = _Dense(sc, [c.phi])
    n, P, Pc = d.n, d.P, d.Pc
    Phi = d.dense3(c.phi)
    p0, p1, p2 = _support_slots(c.phi)
    # left side: phi on the first tensor factors
    LH = d.padded(lambda x, y: x in p0)
    LG = d.padded(lambda x, y: x in p1)
    LF = d.padded(lambda x, y: x in p2)
    # right side: phi on the second tensor factors
    RH = d.padded(lambda x, y: y in p0)
    RG = d.padded(lambda x, y: y in p1)
    RF = d.padded(lambda x, y: y in p2)
    for h in range(n):
        accL = d._zeros((n, n, n + 1))
        accR = d._zeros((n, n, n + 1))
        for (H1, H2, Hc), (G1, G2, Gc), (F1, F2, Fc), acc, left in (
                (LH, LG, LF, accL, True), (RH, RG, RF, accR, False)):
            for a in range(H1.shape[1]):
                h1, h2, ch = H1[h, a], H2[h, a], Hc[h, a]
                if h1 == n:
                    continue
                for b in range(G1.shape[1]):
                    g1, g2, cg = G1[:n, b][:, None], G2[:n, b][:, None], Gc[:n, b][:, None]
                    for k in range(F1.shape[1]):
                        f1, f2, cf = F1[:n, k][None, :], F2[:n, k][None, :], Fc[:n, k][None, :]
                        if left:
                            w = Phi[h1, g1, f1]
                            x, cx = P[h2, g2], Pc[h2, g2]
                            y, cy = P[x, f2], Pc[x, f2]
                        else:
                            w = Phi[h2, g2, f2]
                            x, cx = P[g1, f1], Pc[g1, f1]
                            y, cy = P[h1, x], Pc[h1, x]
                        coef = ch * cg * cf * w * cx * cy
                        y = np.where(coef != 0, y, n)
                        d.scatter(acc, np.broadcast_to(y, (n, n)).copy(),
                                  np.broadcast_to(coef, (n, n)).copy())
        wit = _first_bad((accL[:, :, :n] != accR[:, :, :n]).any(axis=2))
        if wit is not None:
            return (h,) + wit
    return None


def _functional(t: Tensor):
    vals = t.entries
    return lambda i, j, k: vals.get((i, j, k), 0)


def _coquasi_python(sc, c: Cocycle3, triples) -> tuple[tuple | None, tuple | None, int]:
    ops = _Ops(sc)
    phi, inv = _functional(c.phi), _functional(c.phi_inv)
    deltas = {}

    def dl(i):
        if i not in deltas:
            deltas[i] = list(ops.delta(ops.basis(i)).items())
        return deltas[i]

    assoc_w = conv_w = None
    count = 0
    for h, g, f in triples:
        count += 1
        lhs: dict = {}
        rhs: dict = {}
        conv = Fraction(0)
        conv2 = Fraction(0)
        for ((h1, h2), ch), ((g1, g2), cg), ((f1, f2), cf) in itertools.product(dl(h), dl(g), dl(f)):
            c0 = ch * cg * cf
            w = phi(h1, g1, f1)
            if w:
                for k, v in ops.mul(ops.mul(ops.basis(h2), ops.basis(g2)), ops.basis(f2)).items():
                    _add(lhs, k, c0 * w * v)
                conv += c0 * w * inv(h2, g2, f2)
            w = phi(h2, g2, f2)
            if w:
                for k, v in ops.mul(ops.basis(h1), ops.mul(ops.basis(g1), ops.basis(f1))).items():
                    _add(rhs, k, c0 * w * v)
            conv2 += c0 * inv(h1, g1, f1) * phi(h2, g2, f2)
        if assoc_w is None and lhs != rhs:
            assoc_w = (h, g, f)
        target = ops.eps.get(h, 0) * ops.eps.get(g, 0) * ops.eps.get(f, 0)
        if conv_w is None and not (conv == target == conv2):
            conv_w = (h, g, f)
    return assoc_w, conv_w, count


def verify_coquasi(sc: StructureConstants, c: Cocycle3, method: str = "auto",
                   triples=None) -> VerificationReport:
    """Convolution invertibility of phi and quasi-associativity up to phi."""
    if method == "auto":
        method = "dense" if sc.product.is_monomial(2) and triples is None else "python"
    n = sc.dim
    rep = VerificationReport("coquasi-Hopf cocycle")
    if method == "dense":
        w1 = _convolution_dense(sc, c, c.phi, c.phi_inv)
        w2 = _convolution_dense(sc, c, c.phi_inv, c.phi)
        rep.add("phi * phi^-1 = eps(x)eps(x)eps", w1 is None, w1, n ** 3, kinds="bbb")
        rep.add("phi^-1 * phi = eps(x)eps(x)eps", w2 is None, w2, n ** 3, kinds="bbb")
        w = _coquasi_dense(sc, c)
        rep.add("phi(h1,g1,f1)(h2 g2)f2 = h1(g1 f1)phi(h2,g2,f2)", w is None, w, n ** 3, kinds="bbb")
        return rep
    if triples is None:
        triples = itertools.product(range(n), repeat=3)
    assoc_w, conv_w, count = _coquasi_python(sc, c, triples)
    rep.add("phi * phi^-1 = eps(x)eps(x)eps (both orders)", conv_w is None, conv_w, count, kinds="bbb")
    rep.add("phi(h1,g1,f1)(h2 g2)f2 = h1(g1 f1)phi(h2,g2,f2)", assoc_w is None, assoc_w, count, kinds="bbb")
    return rep
