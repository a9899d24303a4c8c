import json
import pathlib

import jsonschema
import pytest

import idemlab

ROOT = pathlib.Path(__file__).resolve().parents[2]
CORPUS = ROOT / "data" / "corpus"
SCHEMA = json.loads((ROOT / "data" / "report.schema.json").read_text())


def test_builtin_groups():
    a5 = idemlab.named_group("A5")
    assert a5.order == 60
    assert not a5.is_abelian
    assert idemlab.named_group("Z12").is_abelian


def test_parse_and_file():
    g = idemlab.parse_group("group G\ndegree 5\ngen (0 1 2 3 4), (0 1 2)\n")
    assert g.order == 60
    assert idemlab.are_isomorphic(g, idemlab.named_group("A5"))
    assert idemlab.group(str(CORPUS / "PSL2_7.grp")).order == 168


def test_parse_error():
    with pytest.raises(idemlab.ParseError):
        idemlab.parse_group("group G\ndegree 3\ngen (0 1\n")


def test_unknown_group():
    with pytest.raises(idemlab.InvalidInput):
        idemlab.named_group("nonsense")


@pytest.mark.parametrize("name,h2", [("Z7", []), ("A5", [2]), ("PSL2_7", [2]), ("S4", [2])])
def test_schur_multiplier(name, h2):
    assert idemlab.schur_multiplier(idemlab.named_group(name)) == h2


def test_hom_counts():
    sl = idemlab.named_group("SL2_5")
    a5 = idemlab.named_group("A5")
    assert idemlab.count_homs(sl, sl) == 121
    assert idemlab.count_homs(sl, a5) == 121
    assert idemlab.count_homs(idemlab.named_group("S4"), idemlab.named_group("S3")) == 10


def test_reports():
    info = idemlab.info("A5")
    assert info["order"] == 60 and info["h2"] == [2] and info["simple"]
    cov = idemlab.covers("Z12")
    assert cov["sur_cov_count"] == 1
    idem = idemlab.idem("A5", inf=True)
    assert idem["idem_size"] == 3
    assert idem["idem_inf_size"] == 4
    assert idem["stabilized_at"] == 2
    assert idemlab.idem("Z12")["idem_size"] == 6


def test_cap():
    with pytest.raises(idemlab.CapExceeded):
        idemlab.parse_group("group G\ndegree 7\ngen (0 1 2 3 4 5 6)\ngen (0 1)\n", cap_order=100)


def test_oracle():
    assert "charcCmono" in idemlab.oracle_suites()
    rep = idemlab.oracle("abelianmodule")
    assert rep["passed"] and rep["checks"] > 0
    with pytest.raises(idemlab.InvalidInput):
        idemlab.oracle("nosuch")


def test_verify_table_matches_schema(tmp_path):
    report = idemlab.verify_table(CORPUS, cache_dir=tmp_path)
    jsonschema.validate(report, SCHEMA)
    assert report["summary"] == {"pass": 6, "fail": 0, "skip": 0}
    warm = idemlab.verify_table(CORPUS, cache_dir=tmp_path)
    assert json.dumps(warm) == json.dumps(report)
