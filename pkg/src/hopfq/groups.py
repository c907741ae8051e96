"""Finite groups as Cayley tables on element indices ``0..n-1``.

Elements are opaque integers; ``names`` are for display only. Builders cover
every group the octonion construction needs: elementary abelian 2-groups, the
order-16 Clifford group and semidirect products by a right action.
"""

from __future__ import annotations

import itertools
from typing import Callable, Sequence

import numpy as np

ASSOCIATIVITY_BOUND = 512


class GroupError(ValueError):
    def __init__(self, msg: str, witness: tuple | None = None):
        super().__init__(msg if witness is None else f"{msg}: {witness}")
        self.witness = witness


class NotLatinSquare(GroupError):
    pass


class NoIdentity(GroupError):
    pass


class NotAssociative(GroupError):
    pass


class NotASubgroup(GroupError):
    pass


class InvalidTransversal(GroupError):
    pass


class ActionNotAutomorphism(GroupError):
    pass


def _as_table(table) -> np.ndarray:
    t = np.asarray(table, dtype=np.int64)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise NotLatinSquare("table must be a non-empty square matrix")
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n:
        raise NotLatinSquare("table entries out of range")
    return t


def find_identity(t: np.ndarray) -> int | None:
    n = t.shape[0]
    ar = np.arange(n)
    for e in range(n):
        if np.array_equal(t[e], ar) and np.array_equal(t[:, e], ar):
            return e
    return None


def latin_witness(t: np.ndarray) -> tuple | None:
    """First ``("row"|"col", index)`` that is not a permutation, else None."""
    n = t.shape[0]
    for i in range(n):
        if len(np.unique(t[i])) != n:
            return ("row", i)
    for j in range(n):
        if len(np.unique(t[:, j])) != n:
            return ("col", j)
    return None


def associativity_witness(t: np.ndarray) -> tuple | None:
    """Lexicographically first ``(i, j, k)`` with ``(ij)k != i(jk)``."""
    jk = t  # jk[j, k]
    for i in range(t.shape[0]):
        lhs = t[t[i]]  # lhs[j, k] = (i j) k
        rhs = t[i][jk]  # rhs[j, k] = i (j k)
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            j, k = bad[0]
            return (i, int(j), int(k))
    return None


class FiniteGroup:
    def __init__(self, table, names: Sequence[str] | None = None, *, check: bool | None = None,
                 name: str = ""):
        t = _as_table(table)
        n = t.shape[0]
        e = find_identity(t)
        if e is None:
            raise NoIdentity("no two-sided identity in table")
        w = latin_witness(t)
        if w is not None:
            raise NotLatinSquare("table is not a Latin square", w)
        if check is None:
            check = n <= ASSOCIATIVITY_BOUND
        if check:
            w = associativity_witness(t)
            if w is not None:
                raise NotAssociative("table is not associative", w)
        inv = np.argmax(t == e, axis=1)
        self.table = t
        self.table.setflags(write=False)
        self.order = n
        self.identity = int(e)
        self.inverses = [int(i) for i in inv]
        self.names = list(names) if names is not None else None
        if self.names is not None and len(self.names) != n:
            raise ValueError("names must have one entry per element")
        self.name = name
        self.rows = t.tolist()

    def mul(self, a: int, b: int) -> int:
        return self.rows[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def product(self, *xs: int) -> int:
        out = self.identity
        for x in xs:
            out = self.rows[out][x]
        return out

    def label(self, i: int) -> str:
        return self.names[i] if self.names else str(i)

    def index(self, name: str) -> int:
        if not self.names:
            raise KeyError(name)
        return self.names.index(name)

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteGroup) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order}{', ' + self.name if self.name else ''})"

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def center(self) -> list[int]:
        return [i for i in range(self.order) if np.array_equal(self.table[i], self.table[:, i])]

    def commutator(self, a: int, b: int) -> int:
        return self.product(self.inv(a), self.inv(b), a, b)

    def generated(self, gens: Sequence[int]) -> list[int]:
        """Sorted closure of ``gens`` under the product."""
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.rows[x][g]
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return sorted(seen)


def group_from_table(table, names: Sequence[str] | None = None, check: bool | None = None) -> FiniteGroup:
    return FiniteGroup(table, names, check=check)


class Subgroup:
    """A subgroup of ``parent`` given by an ordered list of parent indices.

    The position of an element in ``members`` is its subgroup index; ``group``
    is the induced group on those indices.
    """

    def __init__(self, parent: FiniteGroup, members: Sequence[int]):
        members = [int(m) for m in members]
        if len(set(members)) != len(members):
            raise NotASubgroup("repeated members")
        if parent.identity not in members:
            raise NotASubgroup("subgroup must contain the identity")
        pos = {m: i for i, m in enumerate(members)}
        table = []
        for a in members:
            row = []
            for b in members:
                ab = parent.mul(a, b)
                if ab not in pos:
                    raise NotASubgroup("not closed under the product", (a, b))
                row.append(pos[ab])
            table.append(row)
        if parent.order % len(members):
            raise NotASubgroup("order does not divide the parent order")
        names = [parent.label(m) for m in members] if parent.names else None
        self.parent = parent
        self.members = members
        self.position = pos
        self.group = FiniteGroup(table, names, check=False)

    @classmethod
    def generated(cls, parent: FiniteGroup, gens: Sequence[int]) -> "Subgroup":
        return cls(parent, parent.generated(gens))

    @classmethod
    def trivial(cls, parent: FiniteGroup) -> "Subgroup":
        return cls(parent, [parent.identity])

    @classmethod
    def whole(cls, parent: FiniteGroup) -> "Subgroup":
        return cls(parent, range(parent.order))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.position


class Transversal:
    """Left coset representatives ``reps`` of ``subgroup``, ``reps[0]`` the identity.

    ``factor[x] = (u, s)`` gives the unique subgroup index ``u`` and
    representative index ``s`` with ``x = members[u] * reps[s]``.
    """

    def __init__(self, subgroup: Subgroup, reps: Sequence[int]):
        x = subgroup.parent
        reps = [int(r) for r in reps]
        if not reps or reps[0] != x.identity:
            raise InvalidTransversal("the identity must be the first representative")
        if len(reps) * len(subgroup) != x.order:
            raise InvalidTransversal(
                f"{len(reps)} representatives for {x.order // len(subgroup)} cosets")
        factor: list[tuple[int, int] | None] = [None] * x.order
        for si, s in enumerate(reps):
            for ui, u in enumerate(subgroup.members):
                g = x.mul(u, s)
                if factor[g] is not None:
                    raise InvalidTransversal("two representatives share a coset", (reps[factor[g][1]], s))
                factor[g] = (ui, si)
        self.subgroup = subgroup
        self.reps = reps
        self.factor: list[tuple[int, int]] = factor  # type: ignore[assignment]

    def __len__(self) -> int:
        return len(self.reps)


def left_cosets(x: FiniteGroup, g: Subgroup) -> list[list[int]]:
    """Partition of X into cosets ``Gs``, each sorted, ordered by minimal element."""
    seen = [False] * x.order
    out = []
    for s in range(x.order):
        if seen[s]:
            continue
        coset = sorted(x.mul(u, s) for u in g.members)
        for c in coset:
            seen[c] = True
        out.append(coset)
    return out


def canonical_transversal(x: FiniteGroup, g: Subgroup) -> Transversal:
    reps = [c[0] for c in left_cosets(x, g)]
    for i, c in enumerate(left_cosets(x, g)):
        if x.identity in c:
            reps[i] = x.identity
            reps.insert(0, reps.pop(i))
            break
    return Transversal(g, reps)


def is_isomorphism(f: Sequence[int], a: FiniteGroup, b: FiniteGroup) -> tuple[bool, tuple | None]:
    """Check that ``i -> f[i]`` is a bijective homomorphism ``a -> b``.

    On failure the witness is ``("size",)``, ``("not injective", i, j)`` or
    ``("not homomorphic", i, j)``.
    """
    f = np.asarray(f, dtype=np.int64)
    if len(f) != a.order or a.order != b.order:
        return False, ("size",)
    first: dict[int, int] = {}
    for i, fi in enumerate(f.tolist()):
        if fi in first:
            return False, ("not injective", first[fi], i)
        first[fi] = i
    lhs = f[a.table]
    rhs = b.table[f][:, f]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        return False, ("not homomorphic", int(bad[0][0]), int(bad[0][1]))
    return True, None


def cyclic(n: int) -> FiniteGroup:
    t = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    return FiniteGroup(t, [f"r{i}" for i in range(n)], name=f"C{n}")


def direct_power_z2(n: int) -> FiniteGroup:
    """Elementary abelian group of order 2**n: element i is a bit vector, product is XOR."""
    if not 1 <= n <= 16:
        raise ValueError("1 <= n <= 16")
    ar = np.arange(2 ** n)
    names = [format(i, f"0{n}b") for i in ar]
    return FiniteGroup(ar[:, None] ^ ar[None, :], names, name=f"Z2^{n}")


def trivial_group() -> FiniteGroup:
    return FiniteGroup([[0]], ["e"], name="trivial")


def symmetric_group(k: int) -> FiniteGroup:
    """S_k on permutations in lexicographic order; ``(p q)(i) = p(q(i))``."""
    perms = list(itertools.permutations(range(k)))
    pos = {p: i for i, p in enumerate(perms)}
    table = [[pos[tuple(p[q[i]] for i in range(k))] for q in perms] for p in perms]
    names = ["".join(str(i) for i in p) for p in perms]
    return FiniteGroup(table, names, name=f"S{k}")


def _clifford_sign(a: int, b: int) -> int:
    """Sign bit of ``e^a e^b`` for monomials over e1, e2, e3 (e1 is the high bit)."""
    bits_a = [(a >> 2) & 1, (a >> 1) & 1, a & 1]
    bits_b = [(b >> 2) & 1, (b >> 1) & 1, b & 1]
    swaps = sum(bits_a[i] * bits_b[j] for i in range(3) for j in range(i))
    squares = sum(bits_a[i] * bits_b[i] for i in range(3))
    return (swaps + squares) & 1


def clifford_name(c: int) -> str:
    sign, v = c >> 3, c & 7
    mono = "".join(f"e{i + 1}" for i in range(3) if (v >> (2 - i)) & 1) or "1"
    return ("-" if sign else "+") + mono


def clifford_group_3() -> FiniteGroup:
    """Signed monomials in e1, e2, e3 with e_i^2 = -1 and e_i e_j = -e_j e_i.

    Index ``8 * sign + v`` where ``v`` has e1 as bit 4, e2 as bit 2, e3 as bit 1.
    """
    table = [[0] * 16 for _ in range(16)]
    for c, d in itertools.product(range(16), repeat=2):
        sign = (c >> 3) ^ (d >> 3) ^ _clifford_sign(c & 7, d & 7)
        table[c][d] = 8 * sign + ((c ^ d) & 7)
    return FiniteGroup(table, [clifford_name(c) for c in range(16)], name="Cl3")


def _action_lookup(action) -> Callable[[int, int], int]:
    if callable(action):
        return action
    arr = np.asarray(action, dtype=np.int64)
    return lambda v, c: int(arr[v, c])


def semidirect_product(g: FiniteGroup, h: FiniteGroup, action) -> FiniteGroup:
    """G ⋉ H on pairs ``(u, c)`` indexed ``u * |H| + c``.

    ``action(v, c)`` is the right action ``c ◁ v``; the product is
    ``(u, c)(v, d) = (uv, (c ◁ v) d)``, i.e. ``c v = v (c ◁ v)``.
    """
    act = _action_lookup(action)
    nh = h.order
    lut = [[act(v, c) for c in range(nh)] for v in range(g.order)]
    for v in range(g.order):
        if sorted(lut[v]) != list(range(nh)):
            raise ActionNotAutomorphism("action of a group element is not bijective", (v,))
        for c, d in itertools.product(range(nh), repeat=2):
            if lut[v][h.mul(c, d)] != h.mul(lut[v][c], lut[v][d]):
                raise ActionNotAutomorphism("action does not respect the product", (v, c, d))
    for c in range(nh):
        if lut[g.identity][c] != c:
            raise ActionNotAutomorphism("identity does not act trivially", (g.identity, c))
        for u, v in itertools.product(range(g.order), repeat=2):
            if lut[g.mul(u, v)][c] != lut[v][lut[u][c]]:
                raise ActionNotAutomorphism("not a right action", (u, v, c))
    n = g.order * nh
    table = np.empty((n, n), dtype=np.int64)
    for u, c, v, d in itertools.product(range(g.order), range(nh), range(g.order), range(nh)):
        table[u * nh + c, v * nh + d] = g.mul(u, v) * nh + h.mul(lut[v][c], d)
    names = None
    if g.names and h.names:
        names = [f"{g.label(u)}|{h.label(c)}" for u in range(g.order) for c in range(nh)]
    return FiniteGroup(table, names, name=f"{g.name or 'G'}x|{h.name or 'H'}")


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    return semidirect_product(g, h, lambda v, c: c)
