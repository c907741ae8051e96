"""Exact sparse linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`. A :class:`LinComb` is a sparse vector
on a basis ``0..dim-1`` and a :class:`Tensor` is a sparse multi-index array;
structure constants of (co)algebras are stored as tensors.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

Rational = Fraction


class DimensionError(ValueError):
    pass


def rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected so that no rounded value ever enters a computation.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def rational_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _clean(terms: Mapping) -> dict:
    out = {}
    for k, v in terms.items():
        v = rational(v)
        if v:
            out[k] = v
    return out


class LinComb:
    """Sparse linear combination ``sum_i c_i e_i`` with exact coefficients."""

    __slots__ = ("dim", "terms", "_hash")

    def __init__(self, terms: Mapping[int, object] | None = None, dim: int | None = None):
        terms = _clean(terms or {})
        for k in terms:
            if not isinstance(k, int) or k < 0 or (dim is not None and k >= dim):
                raise DimensionError(f"basis index {k!r} outside 0..{dim}")
        self.dim = dim
        self.terms = terms
        self._hash = None

    @classmethod
    def basis(cls, i: int, dim: int | None = None) -> "LinComb":
        return cls({i: 1}, dim)

    def _check(self, other: "LinComb") -> int | None:
        if self.dim is not None and other.dim is not None and self.dim != other.dim:
            raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return self.dim if self.dim is not None else other.dim

    def __add__(self, other: "LinComb") -> "LinComb":
        dim = self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return LinComb(out, dim)

    def __neg__(self) -> "LinComb":
        return LinComb({k: -v for k, v in self.terms.items()}, self.dim)

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-other)

    def scale(self, c) -> "LinComb":
        c = rational(c)
        return LinComb({k: c * v for k, v in self.terms.items()}, self.dim)

    __rmul__ = scale

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __getitem__(self, i: int) -> Fraction:
        return self.terms.get(i, Fraction(0))

    def __iter__(self) -> Iterator[tuple[int, Fraction]]:
        return iter(sorted(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {v}" for k, v in self)
        return f"LinComb({{{body}}})"


def lincomb_add(a: LinComb, b: LinComb) -> LinComb:
    return a + b


class Tensor:
    """Sparse tensor with exact entries.

    ``entries`` maps index tuples of length ``arity`` to nonzero Fractions.
    ``dims`` gives the range of each slot. The leading-slot grouping used by
    :meth:`row` is built lazily and cached, since tensors are never mutated.
    """

    __slots__ = ("arity", "dims", "entries", "_rows", "_hash")

    def __init__(self, dims: Iterable[int], entries: Mapping[tuple, object] | None = None):
        self.dims = tuple(int(d) for d in dims)
        self.arity = len(self.dims)
        clean = _clean(entries or {})
        for idx in clean:
            if len(idx) != self.arity or any(
                not (0 <= i < d) for i, d in zip(idx, self.dims)
            ):
                raise DimensionError(f"index {idx} outside dims {self.dims}")
        self.entries = clean
        self._rows: dict[int, dict] = {}
        self._hash = None

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.dims == other.dims and self.entries == other.entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.dims, frozenset(self.entries.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Tensor(dims={self.dims}, nnz={len(self.entries)})"

    def __len__(self) -> int:
        return len(self.entries)

    def row(self, lead: int = 1) -> dict:
        """Group entries by their first ``lead`` indices.

        Returns ``{prefix: [(rest, coeff), ...]}`` with prefixes collapsed to a
        plain int when ``lead == 1`` and rests collapsed likewise when one
        index remains.
        """
        if lead not in self._rows:
            grouped: dict = {}
            for idx, c in sorted(self.entries.items()):
                head = idx[0] if lead == 1 else idx[:lead]
                rest = idx[lead:]
                if len(rest) == 1:
                    rest = rest[0]
                grouped.setdefault(head, []).append((rest, c))
            self._rows[lead] = grouped
        return self._rows[lead]

    def permute(self, order: tuple[int, ...]) -> "Tensor":
        """Reorder slots: new index ``j`` takes old slot ``order[j]``."""
        dims = tuple(self.dims[o] for o in order)
        return Tensor(dims, {tuple(idx[o] for o in order): c for idx, c in self.entries.items()})

    def is_monomial(self, lead: int) -> bool:
        """True when every leading prefix has at most one nonzero entry."""
        return all(len(v) <= 1 for v in self.row(lead).values())

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.entries.values())


def apply_linear(t: Tensor, a: LinComb) -> LinComb:
    """Apply an arity-2 tensor as the map ``e_i -> sum_j t[i,j] e_j``."""
    if t.arity != 2:
        raise DimensionError("apply_linear needs an arity-2 tensor")
    if a.dim is not None and a.dim != t.dims[0]:
        raise DimensionError(f"vector dim {a.dim} vs tensor {t.dims}")
    rows = t.row(1)
    out: dict[int, Fraction] = {}
    for i, ai in a.terms.items():
        for j, c in rows.get(i, ()):
            out[j] = out.get(j, 0) + ai * c
    return LinComb(out, t.dims[1])


def apply_bilinear(t: Tensor, a: LinComb, b: LinComb) -> LinComb:
    """``result_k = sum_{i,j} a_i b_j t[i,j,k]``."""
    if t.arity != 3:
        raise DimensionError("apply_bilinear needs an arity-3 tensor")
    for v, d in ((a, t.dims[0]), (b, t.dims[1])):
        if v.dim is not None and v.dim != d:
            raise DimensionError(f"vector dim {v.dim} vs tensor {t.dims}")
    rows = t.row(2)
    out: dict[int, Fraction] = {}
    for i, ai in a.terms.items():
        for j, bj in b.terms.items():
            for k, c in rows.get((i, j), ()):
                out[k] = out.get(k, 0) + ai * bj * c
    return LinComb(out, t.dims[2])


def apply_split(t: Tensor, a: LinComb) -> dict[tuple[int, int], Fraction]:
    """Apply an arity-3 tensor as ``e_i -> sum t[i,j,k] e_j (x) e_k``."""
    rows = t.row(1)
    out: dict[tuple[int, int], Fraction] = {}
    for i, ai in a.terms.items():
        for jk, c in rows.get(i, ()):
            out[jk] = out.get(jk, 0) + ai * c
    return {k: v for k, v in out.items() if v}


def contract(a: Tensor, a_slot: int, b: Tensor, b_slot: int) -> Tensor:
    """Contract slot ``a_slot`` of ``a`` against slot ``b_slot`` of ``b``.

    Remaining slots are ordered as a's (minus the contracted one) followed by
    b's.
    """
    if a.dims[a_slot] != b.dims[b_slot]:
        raise DimensionError("contracted slots have different ranges")
    by_index: dict[int, list] = {}
    for idx, c in b.entries.items():
        by_index.setdefault(idx[b_slot], []).append((idx[:b_slot] + idx[b_slot + 1:], c))
    out: dict[tuple, Fraction] = {}
    for idx, c in a.entries.items():
        head = idx[:a_slot] + idx[a_slot + 1:]
        for rest, d in by_index.get(idx[a_slot], ()):
            key = head + rest
            out[key] = out.get(key, 0) + c * d
    dims = a.dims[:a_slot] + a.dims[a_slot + 1:] + b.dims[:b_slot] + b.dims[b_slot + 1:]
    return Tensor(dims, out)
