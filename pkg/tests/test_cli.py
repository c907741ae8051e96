import json

import pytest
from hypothesis import given, settings

from hopfq import bicrossproduct as bc
from hopfq import cli, serialize
from hopfq.groups import symmetric_group
from hopfq.matched_pair import same_tables
from hopfq.octonions import octonion_quasigroup
from hopfq.report import VerificationReport

from conftest import matched_pairs


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@settings(max_examples=25)
@given(matched_pairs())
def test_matched_pair_round_trip(mp):
    again = serialize.from_dict(json.loads(json.dumps(serialize.to_dict(mp))))
    assert same_tables(again, mp)
    assert again.right_inv == mp.right_inv and again.m_names == mp.m_names
    assert again.G == mp.G and again.group == mp.group
    assert again.transversal.reps == mp.transversal.reps


@settings(max_examples=25)
@given(matched_pairs())
def test_structure_and_report_round_trip(mp):
    sc = bc.build(mp)
    for obj in (sc, bc.dualize(sc)):
        assert serialize.from_dict(json.loads(json.dumps(serialize.to_dict(obj)))) == obj
    rep = bc.verify_hopf_quasigroup(sc)
    again = serialize.from_dict(json.loads(json.dumps(serialize.to_dict(rep))))
    assert again == rep


def test_group_and_magma_round_trip():
    for g in (symmetric_group(3), octonion_quasigroup()):
        d = serialize.to_dict(g)
        assert d["hopfq-schema"] == 1
        assert d["associative"] == (g.name != "G_O")
        again = serialize.from_dict(json.loads(json.dumps(d)))
        assert again == g and type(again) is type(g) and again.names == g.names


def test_rationals_as_strings():
    d = serialize.to_dict(bc.group_algebra([[0, 1], [1, 0]]))
    assert d["product"][0] == [0, 0, 0, "1/1"]
    assert d["unit"] == [[0, "1/1"]]


def test_schema_errors():
    with pytest.raises(serialize.SchemaError):
        serialize.from_dict({"hopfq-schema": 2, "kind": "group"})
    with pytest.raises(serialize.SchemaError):
        serialize.from_dict({"kind": "nonsense"})


def test_decompose_octonions(tmp_path, capsys):
    out = tmp_path / "oct.json"
    code, text, _ = run(capsys, "decompose", "z2^3xcl3", "--subgroup", "g-generators",
                        "--transversal", "octonion", "--out", out)
    assert code == 0 and "16 cosets" in text
    for suite in ("prop31", "thm42", "cor45", "ip", "cor44", "lemmas"):
        code, text, _ = run(capsys, "verify", out, "--suite", suite)
        assert code == 0, text


def test_decompose_trivial_subgroup(tmp_path, capsys):
    out = tmp_path / "s3.json"
    assert run(capsys, "decompose", "s3", "--subgroup", "trivial", "--out", out)[0] == 0
    mp = serialize.load(out)
    assert mp.m == 6 and all(v == 0 for row in mp.tau for v in row)


def test_verify_ip_fails_on_s3(tmp_path, capsys):
    out = tmp_path / "s3.json"
    run(capsys, "decompose", "s3", "--subgroup", "gen:102", "--out", out)
    code, text, _ = run(capsys, "verify", out, "--suite", "ip")
    assert code == 1
    assert "[FAIL] IP: t = t <| tau(s^-L, s) (9 checked) witness=(201, 021)" in text


def test_usage_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    assert run(capsys, "verify", bad)[0] == 2
    good = tmp_path / "s3.json"
    run(capsys, "decompose", "s3", "--subgroup", "gen:102", "--out", good)
    assert run(capsys, "verify", good, "--suite", "nope")[0] == 2
    assert run(capsys, "decompose", "nosuchgroup", "--subgroup", "trivial")[0] == 2
    assert run(capsys, "decompose", "s3", "--subgroup", "0,3")[0] == 2
    assert run(capsys, "decompose", "s3", "--subgroup", "gen:102", "--transversal", "0,2,4")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "verify", tmp_path / "missing.json")[0] == 2


def test_group_file_input(tmp_path, capsys):
    path = tmp_path / "g.json"
    serialize.dump(symmetric_group(3), path)
    assert run(capsys, "decompose", path, "--subgroup", "0,2")[0] == 0


def test_build_and_dual_round_trip(tmp_path, capsys):
    mpf, s, d, dd = (tmp_path / n for n in ("mp.json", "s.json", "d.json", "dd.json"))
    run(capsys, "decompose", "s3", "--subgroup", "gen:102", "--transversal", "0,3,4", "--out", mpf)
    assert run(capsys, "build", mpf, "--out", s)[0] == 0
    assert run(capsys, "build", s, "--dual", "--out", d)[0] == 0
    assert run(capsys, "build", d, "--dual", "--out", dd)[0] == 0
    assert serialize.load(dd) == serialize.load(s)
    assert serialize.load(d).is_dual


def test_build_trivial_m_is_function_algebra(tmp_path, capsys):
    mpf, s = tmp_path / "mp.json", tmp_path / "s.json"
    run(capsys, "decompose", "s3", "--subgroup", "whole", "--out", mpf)
    assert run(capsys, "build", mpf, "--out", s)[0] == 0
    sc = serialize.load(s)
    assert sorted(sc.product.entries) == [(u, u, u) for u in range(6)]


def test_build_without_antipode(tmp_path, capsys):
    mpf, s = tmp_path / "mp.json", tmp_path / "s.json"
    run(capsys, "decompose", "s3", "--subgroup", "gen:102", "--out", mpf)
    code, _, err = run(capsys, "build", mpf, "--out", s)
    assert code == 1 and "right inverses" in err
    assert run(capsys, "build", mpf, "--out", s, "--no-antipode")[0] == 0
    assert serialize.load(s).antipode is None


def test_search(capsys, tmp_path):
    out = tmp_path / "census.json"
    code, text, _ = run(capsys, "search", "s3", "--subgroup", "gen:102", "--json", out)
    assert code == 0
    rows = json.loads(out.read_text())["transversals"]
    assert [r["transversal"] for r in rows] == [[0, 1, 4], [0, 1, 5], [0, 3, 4], [0, 3, 5]]
    assert [(r["ip"], r["thm42"], r["hopf"]) for r in rows] == [
        (False, False, False), (False, True, False), (True, True, True), (False, False, False)]
    code, text, _ = run(capsys, "search", "z2^2", "--subgroup", "whole")
    assert code == 0 and text.count("right_inverses=") == 1
    code, _, err = run(capsys, "search", "z2^3xcl3", "--subgroup", "g-generators")
    assert code == 2 and "--force" in err
    assert run(capsys, "search", "s3", "--subgroup", "gen:102", "--max-transversals", "3")[0] == 2


def test_builtin_registry():
    assert cli.builtin_group("z2").order == 2
    assert cli.builtin_group("z2^4").order == 16
    assert cli.builtin_group("cyclic:5").order == 5
    assert cli.builtin_group("cl3").order == 16
    assert cli.builtin_group("trivial").order == 1
    with pytest.raises(cli.UsageError):
        cli.builtin_group("cyclic:0")


def test_octonions_json(tmp_path, capsys):
    rep_path, sc_path = tmp_path / "rep.json", tmp_path / "sc.json"
    code, text, _ = run(capsys, "octonions", "--json", rep_path, "--structure", sc_path)
    assert code == 0
    d = json.loads(rep_path.read_text())
    rep = VerificationReport.from_dict(d)
    assert rep.ok and "timings" in d
    moufang = rep["bicrossproduct h1(g(h2 f)) = ((h1 g)h2)f"]
    assert moufang.informational
    assert serialize.load(sc_path).dim == 128
