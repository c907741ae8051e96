"""``hopfq`` command line: decompose, verify, build, octonions, search.

Exit codes are 0 when every must-pass check holds, 1 when a check fails (the
first witness is printed) and 2 for usage, parse or I/O errors.
"""

from __future__ import annotations

import argparse
import itertools
import json
import re
import sys
from pathlib import Path

from . import bicrossproduct as bc
from . import octonions, serialize
from .groups import (FiniteGroup, GroupError, Subgroup, Transversal, canonical_transversal,
                     clifford_group_3, cyclic, direct_power_z2, left_cosets, symmetric_group,
                     trivial_group)
from .matched_pair import (MatchedPair, RightInverseMissing, check_right_inverses, extract,
                           reconstruct_group, verify_factorization, verify_identities,
                           verify_inverse_action, verify_inverse_conjugation,
                           verify_inverse_relations, verify_ip, verify_left_inverse,
                           verify_right_inverse_compatibility)
from .report import Entry, VerificationReport

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SUITES = ("prop31", "ip", "thm42", "cor44", "cor45", "lemmas", "all")


class UsageError(Exception):
    """Bad arguments or unreadable input; maps to exit code 2."""


class SearchSpaceTooLarge(UsageError):
    pass


# ---------------------------------------------------------------------------
# groups, subgroups and transversals from the command line

def builtin_group(name: str) -> FiniteGroup:
    key = name.strip().lower()
    if key == "trivial":
        return trivial_group()
    if key == "z2":
        return direct_power_z2(1)
    if key == "s3":
        return symmetric_group(3)
    if key == "cl3":
        return clifford_group_3()
    if key == "z2^3xcl3":
        return octonions.x_group()
    m = re.fullmatch(r"z2\^(\d+)", key)
    if m:
        return direct_power_z2(int(m.group(1)))
    m = re.fullmatch(r"cyclic:(\d+)", key)
    if m and int(m.group(1)) > 0:
        return cyclic(int(m.group(1)))
    raise UsageError(f"unknown builtin group {name!r}")


def load_group(spec: str) -> FiniteGroup:
    """A builtin name or a path to a group JSON file."""
    path = Path(spec)
    if path.suffix == ".json" or path.exists():
        try:
            g = serialize.load(path, "group")
        except (OSError, json.JSONDecodeError, serialize.SchemaError, GroupError) as exc:
            raise UsageError(f"cannot read group file {spec}: {exc}") from exc
        if not isinstance(g, FiniteGroup):
            raise UsageError(f"{spec} holds a magma, not a group")
        return g
    return builtin_group(spec)


def _element(x: FiniteGroup, token: str) -> int:
    """An element name, or failing that an index."""
    token = token.strip()
    if x.names and token in x.names:
        return x.index(token)
    if re.fullmatch(r"\d+", token):
        i = int(token)
        if i >= x.order:
            raise UsageError(f"element index {i} out of range for order {x.order}")
        return i
    try:
        return x.index(token)
    except (KeyError, ValueError):
        raise UsageError(f"no element named {token!r}") from None


def _elements(x: FiniteGroup, text: str) -> list[int]:
    return [_element(x, t) for t in text.split(",") if t.strip()]


def parse_subgroup(x: FiniteGroup, spec: str) -> Subgroup:
    """``trivial``, ``whole``, ``g-generators``, ``gen:a,b,...`` or an index list."""
    try:
        if spec == "trivial":
            return Subgroup.trivial(x)
        if spec == "whole":
            return Subgroup.whole(x)
        if spec == "g-generators":
            if x.order != 128:
                raise UsageError("g-generators names the Z2^3 factor of z2^3xcl3")
            return Subgroup(x, [16 * u for u in range(8)])
        if spec.startswith("gen:"):
            return Subgroup.generated(x, _elements(x, spec[4:]))
        return Subgroup(x, _elements(x, spec))
    except GroupError as exc:
        raise UsageError(f"bad subgroup {spec!r}: {exc}") from exc


def parse_transversal(x: FiniteGroup, g: Subgroup, spec: str | None) -> Transversal:
    try:
        if spec in (None, "canonical"):
            return canonical_transversal(x, g)
        if spec == "octonion":
            if x.order != 128 or g.members != [16 * u for u in range(8)]:
                raise UsageError("the octonion transversal needs z2^3xcl3 with g-generators")
            return Transversal(g, octonions.transversal_reps())
        return Transversal(g, _elements(x, spec))
    except GroupError as exc:
        raise UsageError(f"bad transversal {spec!r}: {exc}") from exc


def load_matched_pair(path: str) -> MatchedPair:
    try:
        return serialize.load(path, "matched-pair")
    except (OSError, json.JSONDecodeError, serialize.SchemaError, GroupError, ValueError) as exc:
        raise UsageError(f"cannot read matched-pair file {path}: {exc}") from exc


# ---------------------------------------------------------------------------
# printing

def witness_namer(mp: MatchedPair | None, sc: bc.StructureConstants | None = None):
    """Render a witness with element names, falling back to raw indices."""

    def basis(i):
        if sc is None or mp is None:
            return str(i)
        s, u = sc.basis_labels[i]
        return f"{mp.m_label(s)}.d[{mp.g_label(u)}]"

    def name(e: Entry):
        w = e.witness
        if mp is None or not e.kinds or len(e.kinds) != len(w):
            return w
        out = []
        for k, v in zip(e.kinds, w):
            if k == "m":
                out.append(mp.m_label(v))
            elif k == "g":
                out.append(mp.g_label(v))
            elif k == "b":
                out.append(basis(v))
            else:
                out.append(str(v))
        return "(" + ", ".join(out) + ")"

    return name


def emit(rep: VerificationReport, namer=None) -> int:
    print(rep.format(namer))
    print("OK" if rep.ok else f"FAILED: {len(rep.failures())} check(s)")
    return EXIT_OK if rep.ok else EXIT_FAIL


def write_json(obj, path: str | None) -> None:
    if path is None:
        return
    try:
        if isinstance(obj, dict):
            Path(path).write_text(json.dumps(obj, indent=1) + "\n", encoding="utf-8")
        else:
            serialize.dump(obj, path)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from exc


# ---------------------------------------------------------------------------
# verification suites

def suite_report(mp: MatchedPair, suite: str) -> VerificationReport:
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    rep = VerificationReport(f"suite {suite}")
    todo = SUITES[:-1] if suite == "all" else (suite,)
    for name in todo:
        if name == "prop31":
            if mp.group is not None:
                rep.extend(verify_factorization(mp), "factorization: ")
            rep.extend(verify_identities(mp), "identities: ")
        elif name == "ip":
            rep.extend(verify_ip(mp), "IP: ")
        elif name == "thm42":
            crit = check_right_inverses(mp)
            rep.add("right inverses exist", crit.right_inverses)
            ip = verify_ip(mp)
            rep.extend(ip, "IP: ")
            cond = bc.check_hopf_condition(mp)
            rep.extend(cond, "tau condition: ")
            predicted = crit.holds and ip.ok and cond.ok
            sc = bc.build(mp, check=False)
            actual = bc.verify_hopf_quasigroup(sc).ok
            rep.add("Hopf quasigroup axioms on kM>|<k(G)", actual)
            rep.add("criterion predicts the axioms", predicted == actual)
        elif name == "cor44":
            rep.extend(bc.check_orbit_conditions(mp), "orbit conditions: ")
        elif name == "cor45":
            try:
                rep.extend(bc.check_trivial_quasi_action(mp), "trivial |>: ")
            except bc.TriangleRightNotTrivial as exc:
                rep.add("s |> u = u", False, note=str(exc))
        elif name == "lemmas":
            rep.extend(verify_left_inverse(mp), "left inverse: ")
            rep.extend(verify_inverse_relations(mp), "inverse relations: ")
            rep.extend(verify_inverse_action(mp), "inverse action: ")
            rep.extend(verify_inverse_conjugation(mp), "inverse conjugation: ")
            crit = check_right_inverses(mp)
            rep.add("right inverse criteria agree", crit.agree,
                    note=f"bijective |>={crit.bijective_quasi_action}, "
                         f"right inverses={crit.right_inverses}, X=MG={crit.x_equals_mg}")
            try:
                rep.extend(verify_right_inverse_compatibility(mp), "right inverses: ")
            except RightInverseMissing as exc:
                rep.add("right inverse compatibility", True, informational=True,
                        note=f"skipped: {exc}")
            rec = reconstruct_group(mp)
            rep.extend(rec.report, "reconstruction: ")
    return rep


# ---------------------------------------------------------------------------
# commands

def cmd_decompose(args) -> int:
    x = load_group(args.group)
    g = parse_subgroup(x, args.subgroup)
    m = parse_transversal(x, g, args.transversal)
    mp = extract(x, g, m)
    if x.order == 128 and args.transversal == "octonion":
        mp.m_names = [octonions.label(i) for i in range(mp.m)]
    print(f"X order {x.order}, G order {g.group.order}, {mp.m} cosets")
    write_json(mp, args.out)
    rep = VerificationReport("decomposition")
    rep.extend(verify_factorization(mp), "factorization: ")
    rep.extend(verify_identities(mp), "identities: ")
    return emit(rep, witness_namer(mp))


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    mp = load_matched_pair(args.file)
    rep = suite_report(mp, args.suite)
    write_json(rep, args.json)
    return emit(rep, witness_namer(mp))


def cmd_build(args) -> int:
    try:
        d = json.loads(Path(args.file).read_text(encoding="utf-8"))
        obj = serialize.from_dict(d)
    except (OSError, json.JSONDecodeError, serialize.SchemaError, GroupError, ValueError) as exc:
        raise UsageError(f"cannot read {args.file}: {exc}") from exc
    if isinstance(obj, MatchedPair):
        if not args.no_antipode:
            try:
                bc.derive_antipode(obj)
            except bc.AntipodePreconditionFailed as exc:
                print(f"antipode unavailable: {exc}. The antipode needs right inverses in M,"
                      " equivalently s |> ( ) bijective on G; rerun with --no-antipode.",
                      file=sys.stderr)
                return EXIT_FAIL
        try:
            sc = bc.build(obj, antipode=not args.no_antipode)
        except bc.BuildError as exc:
            print(f"build failed: {exc}", file=sys.stderr)
            return EXIT_FAIL
    elif isinstance(obj, bc.StructureConstants):
        sc = obj if not args.no_antipode else obj.with_antipode(None)
    else:
        raise UsageError(f"{args.file} is neither a matched-pair nor a structure file")
    if args.dual:
        sc = bc.dualize(sc)
    write_json(sc, args.out)
    kind = "dual " if sc.is_dual else ""
    print(f"{kind}structure constants: dim {sc.dim}, product nnz {len(sc.product)}, "
          f"coproduct nnz {len(sc.coproduct)}, antipode {'yes' if sc.antipode else 'no'}")
    if args.out:
        print(f"wrote {args.out}")
    return EXIT_OK


def cmd_octonions(args) -> int:
    rep, timings = octonions.verify_octonion_example(include_moufang=not args.no_moufang)
    ex = octonions.build_octonion_example(check=False)
    sc = bc.build(ex.mp, check=False)
    code = emit(rep, witness_namer(ex.mp, sc))
    print("timings: " + ", ".join(f"{k} {v:.2f}s" for k, v in timings.items()))
    if args.json:
        d = serialize.report_to_dict(rep)
        d["timings"] = timings
        write_json(d, args.json)
    if args.structure:
        write_json(sc, args.structure)
    return code


def transversal_count(x: FiniteGroup, g: Subgroup) -> int:
    return len(g.members) ** (x.order // len(g.members) - 1)


def enumerate_transversals(x: FiniteGroup, g: Subgroup):
    """All transversals with the identity for the identity coset.

    Cosets are ordered by smallest element; each later coset runs through its
    members in increasing order, the last coset varying fastest.
    """
    cosets = left_cosets(x, g)
    first = next(i for i, c in enumerate(cosets) if x.identity in c)
    rest = [sorted(c) for i, c in enumerate(cosets) if i != first]
    for choice in itertools.product(*rest):
        yield Transversal(g, [x.identity, *choice])


def classify(mp: MatchedPair) -> dict:
    crit = check_right_inverses(mp)
    ip = verify_ip(mp).ok
    thm = bc.check_hopf_condition(mp).ok
    sc = bc.build(mp, check=False)
    hopf = bc.verify_hopf_quasigroup(sc).ok
    return {"right_inverses": crit.right_inverses, "ip": ip, "thm42": thm, "hopf": hopf,
            "criterion_agrees": (crit.holds and ip and thm) == hopf}


def cmd_search(args) -> int:
    x = load_group(args.group)
    g = parse_subgroup(x, args.subgroup)
    total = transversal_count(x, g)
    if total > args.max_transversals and not args.force:
        raise SearchSpaceTooLarge(
            f"{total} transversals exceed --max-transversals {args.max_transversals}; "
            "pass --force to enumerate anyway")
    rows = []
    for m in enumerate_transversals(x, g):
        row = {"transversal": m.reps, "names": [x.label(r) for r in m.reps]}
        row.update(classify(extract(x, g, m)))
        rows.append(row)
        flags = " ".join(f"{k}={'yes' if row[k] else 'no'}"
                         for k in ("right_inverses", "ip", "thm42", "hopf"))
        print(f"{','.join(row['names'])}: {flags}")
    census: dict[str, int] = {}
    for r in rows:
        key = f"ip={r['ip']} thm42={r['thm42']} hopf={r['hopf']}"
        census[key] = census.get(key, 0) + 1
    for k, v in sorted(census.items()):
        print(f"{v:6d}  {k}")
    write_json({"hopfq-schema": serialize.SCHEMA, "kind": "search", "group": x.name,
                "subgroup": g.members, "transversals": rows, "census": census}, args.json)
    return EXIT_OK if all(r["criterion_agrees"] for r in rows) else EXIT_FAIL


# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hopfq", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    d = sub.add_parser("decompose", help="extract coset data from X, G and M")
    d.add_argument("group", help="builtin name or group JSON file")
    d.add_argument("--subgroup", required=True,
                   help="index list, gen:a,b, g-generators, trivial or whole")
    d.add_argument("--transversal", help="index list, canonical (default) or octonion")
    d.add_argument("--out", help="matched-pair JSON to write")
    d.set_defaults(func=cmd_decompose)

    v = sub.add_parser("verify", help="run a verification suite on a matched-pair file")
    v.add_argument("file")
    v.add_argument("--suite", default="all", help=", ".join(SUITES))
    v.add_argument("--json", help="write the report as JSON")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("build", help="write bicrossproduct structure constants")
    b.add_argument("file", help="matched-pair or structure JSON")
    b.add_argument("--out", help="structure JSON to write")
    b.add_argument("--dual", action="store_true", help="transpose to the dual")
    b.add_argument("--no-antipode", action="store_true")
    b.set_defaults(func=cmd_build)

    o = sub.add_parser("octonions", help="the octonion example end to end")
    o.add_argument("demo", nargs="?", choices=["demo"], help=argparse.SUPPRESS)
    o.add_argument("--json", help="write the report as JSON")
    o.add_argument("--structure", help="write the 128-dim structure constants")
    o.add_argument("--no-moufang", action="store_true", help="skip the Moufang sweep")
    o.set_defaults(func=cmd_octonions)

    s = sub.add_parser("search", help="classify all transversals of a subgroup")
    s.add_argument("group")
    s.add_argument("--subgroup", required=True)
    s.add_argument("--max-transversals", type=int, default=4096)
    s.add_argument("--force", action="store_true")
    s.add_argument("--json", help="write the census as JSON")
    s.set_defaults(func=cmd_search)
    return p


def main(argv=None) -> int:
    try:
        args = make_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"hopfq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
