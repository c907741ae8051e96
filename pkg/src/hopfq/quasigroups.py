"""Finite magmas with identity: inverse-property and Moufang tests.

Nothing here assumes associativity or any embedding into a group, so these
checks serve as an independent oracle for coset products.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .groups import find_identity


class MagmaError(ValueError):
    pass


class Magma:
    def __init__(self, table, identity: int | None = None, names: Sequence[str] | None = None,
                 name: str = ""):
        t = np.asarray(table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
            raise MagmaError("table must be a non-empty square matrix")
        n = t.shape[0]
        if t.min() < 0 or t.max() >= n:
            raise MagmaError("table entries out of range")
        if identity is None:
            identity = find_identity(t)
            if identity is None:
                raise MagmaError("no two-sided identity")
        ar = np.arange(n)
        if not (np.array_equal(t[identity], ar) and np.array_equal(t[:, identity], ar)):
            raise MagmaError(f"{identity} is not a two-sided identity")
        t.setflags(write=False)
        self.table = t
        self.order = n
        self.identity = int(identity)
        self.names = list(names) if names is not None else None
        self.name = name

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def label(self, i: int) -> str:
        return self.names[i] if self.names else str(i)

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other) -> bool:
        return isinstance(other, Magma) and np.array_equal(self.table, other.table)

    def __repr__(self) -> str:
        return f"Magma(order={self.order}{', ' + self.name if self.name else ''})"


def _ip_failure(t: np.ndarray, s: int, x: int) -> int | None:
    """First t with x(st) != t or (ts)x != t, else None."""
    ar = np.arange(t.shape[0])
    bad = (t[x][t[s]] != ar) | (t[t[:, s], x] != ar)
    idx = np.flatnonzero(bad)
    return int(idx[0]) if len(idx) else None


def is_ip_quasigroup(q: Magma) -> tuple[bool, list[int] | tuple[int, int]]:
    """Test the two-sided inverse property.

    Returns ``(True, inverses)`` or ``(False, (s, t))`` where ``(s, t)`` is the
    first pair breaking ``s^-1 (s t) = t`` or ``(t s) s^-1 = t`` for the first
    candidate inverse of ``s`` (``t`` is the identity if ``s`` has no left
    inverse at all).
    """
    t = q.table
    inverses = []
    for s in range(q.order):
        candidates = np.flatnonzero(t[:, s] == q.identity)
        if len(candidates) == 0:
            return False, (s, q.identity)
        found = None
        for x in candidates:
            if _ip_failure(t, s, int(x)) is None:
                found = int(x)
                break
        if found is None:
            return False, (s, _ip_failure(t, s, int(candidates[0])))
        inverses.append(found)
    return True, inverses


def is_moufang(q: Magma) -> tuple[bool, tuple[int, int, int] | None]:
    """Exhaustive check of ``s(t(sr)) = ((st)s)r``; witness is lexicographically first."""
    t = q.table
    for s in range(q.order):
        lhs = t[s][t[:, t[s]]]  # [t, r] -> s(t(sr))
        rhs = t[t[t[s], s]]  # [t, r] -> ((st)s)r
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            return False, (s, int(bad[0][0]), int(bad[0][1]))
    return True, None


def associator_defect(q: Magma) -> list[tuple[int, int, int]]:
    """All triples with ``(st)r != s(tr)``, in lexicographic order."""
    t = q.table
    out = []
    for s in range(q.order):
        bad = np.argwhere(t[t[s]] != t[s][t])
        out.extend((s, int(a), int(b)) for a, b in bad)
    return out


def is_associative(q: Magma) -> bool:
    return not associator_defect(q)


def cancellation_witness(q: Magma) -> tuple | None:
    """First ``("left"|"right", i)`` where a row/column repeats, else None."""
    n = q.order
    for i in range(n):
        if len(np.unique(q.table[i])) != n:
            return ("left", i)
    for i in range(n):
        if len(np.unique(q.table[:, i])) != n:
            return ("right", i)
    return None
