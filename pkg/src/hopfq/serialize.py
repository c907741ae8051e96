"""JSON files for groups, magmas, coset data, structure constants and reports.

Every file carries ``"hopfq-schema": 1`` and a ``"kind"`` tag. Rationals are
written as ``"p/q"`` strings and sparse tensors as lists ``[i, j, ..., "p/q"]``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .bicrossproduct import StructureConstants
from .groups import FiniteGroup, Subgroup, Transversal
from .linear import LinComb, Tensor, rational, rational_str
from .matched_pair import MatchedPair
from .quasigroups import Magma
from .report import VerificationReport

SCHEMA = 1


class SchemaError(ValueError):
    """A JSON payload does not match the expected layout."""


def _header(kind: str) -> dict:
    return {"hopfq-schema": SCHEMA, "kind": kind}


def _expect(d, kind: str) -> dict:
    if not isinstance(d, dict):
        raise SchemaError(f"expected a JSON object for {kind}")
    if d.get("hopfq-schema") != SCHEMA:
        raise SchemaError(f"unsupported schema version {d.get('hopfq-schema')!r}")
    if d.get("kind", kind) != kind:
        raise SchemaError(f"expected kind {kind!r}, found {d.get('kind')!r}")
    return d


def _field(d: dict, key: str):
    try:
        return d[key]
    except KeyError:
        raise SchemaError(f"missing field {key!r}") from None


# groups and magmas

def group_to_dict(g: FiniteGroup | Magma) -> dict:
    d = _header("group")
    d.update(name=g.name, order=g.order, identity=g.identity, table=g.table.tolist(),
             names=g.names, associative=isinstance(g, FiniteGroup))
    return d


def group_from_dict(d: dict) -> FiniteGroup | Magma:
    d = _expect(d, "group")
    table = _field(d, "table")
    if len(table) != _field(d, "order"):
        raise SchemaError("order does not match the table")
    if d.get("associative", True):
        g = FiniteGroup(table, d.get("names"), name=d.get("name", ""))
    else:
        g = Magma(table, d.get("identity"), d.get("names"), d.get("name", ""))
    if g.identity != _field(d, "identity"):
        raise SchemaError(f"declared identity {d['identity']} but table has {g.identity}")
    return g


# matched pairs

def matched_pair_to_dict(mp: MatchedPair) -> dict:
    d = _header("matched-pair")
    d["G"] = group_to_dict(mp.G)
    d.update(dot=mp.dot, tau=mp.tau, lact=mp.lact, ract=mp.ract, left_inv=mp.left_inv,
             right_inv=mp.right_inv, m_names=mp.m_names)
    if mp.group is not None:
        d["provenance"] = {
            "group": group_to_dict(mp.group),
            "subgroup": list(mp.subgroup.members),
            "transversal": list(mp.transversal.reps),
        }
    else:
        d["provenance"] = None
    return d


def matched_pair_from_dict(d: dict) -> MatchedPair:
    d = _expect(d, "matched-pair")
    G = group_from_dict(_field(d, "G"))
    x = sub = trans = None
    prov = d.get("provenance")
    if prov:
        x = group_from_dict(prov["group"])
        sub = Subgroup(x, prov["subgroup"])
        trans = Transversal(sub, prov["transversal"])
    mp = MatchedPair(G, _field(d, "dot"), _field(d, "tau"), _field(d, "lact"), _field(d, "ract"),
                     left_inv=d.get("left_inv"), group=x, subgroup=sub, transversal=trans,
                     m_names=d.get("m_names"))
    if d.get("right_inv") is not None and d["right_inv"] != mp.right_inv:
        raise SchemaError("right_inv does not match the dot table")
    return mp


# structure constants

def _tensor_out(t: Tensor | None):
    if t is None:
        return None
    return [[*idx, rational_str(c)] for idx, c in sorted(t.entries.items())]


def _tensor_in(rows, dims) -> Tensor:
    entries = {}
    for row in rows:
        *idx, c = row
        entries[tuple(int(i) for i in idx)] = rational(c)
    return Tensor(dims, entries)


def _vector_out(v: LinComb):
    return [[i, rational_str(c)] for i, c in v]


def _vector_in(rows, dim) -> LinComb:
    return LinComb({int(i): rational(c) for i, c in rows}, dim)


def structure_to_dict(sc: StructureConstants) -> dict:
    d = _header("structure")
    d.update(name=sc.name, dim=sc.dim, basis_labels=[list(b) for b in sc.basis_labels],
             is_dual=sc.is_dual, product=_tensor_out(sc.product), unit=_vector_out(sc.unit),
             coproduct=_tensor_out(sc.coproduct), counit=_vector_out(sc.counit),
             antipode=_tensor_out(sc.antipode))
    return d


def structure_from_dict(d: dict) -> StructureConstants:
    d = _expect(d, "structure")
    n = int(_field(d, "dim"))
    anti = d.get("antipode")
    return StructureConstants(
        n, [tuple(b) for b in _field(d, "basis_labels")],
        _tensor_in(_field(d, "product"), (n, n, n)), _vector_in(_field(d, "unit"), n),
        _tensor_in(_field(d, "coproduct"), (n, n, n)), _vector_in(_field(d, "counit"), n),
        None if anti is None else _tensor_in(anti, (n, n)), bool(d.get("is_dual", False)),
        d.get("name", ""))


# reports

def report_to_dict(rep: VerificationReport) -> dict:
    d = _header("report")
    d.update(rep.to_dict())
    return d


def report_from_dict(d: dict) -> VerificationReport:
    return VerificationReport.from_dict(_expect(d, "report"))


_WRITERS = {
    FiniteGroup: group_to_dict, Magma: group_to_dict, MatchedPair: matched_pair_to_dict,
    StructureConstants: structure_to_dict, VerificationReport: report_to_dict,
}
_READERS = {
    "group": group_from_dict, "matched-pair": matched_pair_from_dict,
    "structure": structure_from_dict, "report": report_from_dict,
}


def to_dict(obj) -> dict:
    for cls, fn in _WRITERS.items():
        if isinstance(obj, cls):
            return fn(obj)
    raise TypeError(f"no JSON layout for {type(obj).__name__}")


def from_dict(d: dict):
    kind = d.get("kind") if isinstance(d, dict) else None
    if kind not in _READERS:
        raise SchemaError(f"unknown kind {kind!r}")
    return _READERS[kind](d)


def dump(obj, path) -> None:
    Path(path).write_text(json.dumps(to_dict(obj)) + "\n", encoding="utf-8")


def load(path, kind: str | None = None):
    """Read any hopfq JSON file; ``kind`` restricts the accepted layout."""
    d = json.loads(Path(path).read_text(encoding="utf-8"))
    if kind is not None:
        _expect(d, kind)
    return from_dict(d)
