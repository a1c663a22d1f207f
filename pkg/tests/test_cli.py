"""CLI: strict parsing, exit-code contract, deterministic reports."""

import json

import pytest

from liecx import cli


SU3_T = {"algebra": {"kind": "su", "n": 3},
         "subalgebra": {"name": "maximal_torus"}}

SWAP_J = [["0", "0", "0", "-1", "0", "0"],
          ["0", "0", "0", "0", "-1", "0"],
          ["0", "0", "0", "0", "0", "-1"],
          ["1", "0", "0", "0", "0", "0"],
          ["0", "1", "0", "0", "0", "0"],
          ["0", "0", "1", "0", "0", "0"]]

SU2SU2 = {"kind": "sum", "parts": [{"kind": "su", "n": 2},
                                   {"kind": "su", "n": 2}]}

S2 = {"algebra": {"kind": "su", "n": 2},
      "subalgebra": {"name": "span", "vectors": [["0", "0", "1"]]},
      "j": [["0", "-1"], ["1", "0"]]}


def write_spec(tmp_path, obj, name="spec.json"):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def run(tmp_path, spec, command, *extra):
    path = write_spec(tmp_path, spec)
    out = tmp_path / "report.json"
    code = cli.main(["--spec", path, "--command", command,
                     "--out", str(out), *extra])
    return code, json.loads(out.read_text())


# ---------------------------------------------------------------------------
# parsing

def test_parse_valid_spec():
    ps = cli.parse_obj(SU3_T)
    assert ps.algebra_mode == "spec"
    assert ps.algebra_payload.label() == "su(3)"


def test_parse_rejects_unknown_field():
    with pytest.raises(cli.ParseError):
        cli.parse_obj(dict(SU3_T, bogus=1))


def test_parse_rejects_bad_rational():
    with pytest.raises(cli.ParseError):
        cli.parse_obj(dict(SU3_T, j=[["1/0"]]))


def test_wrong_j_dimension_is_input_error(tmp_path):
    code, rep = run(tmp_path, dict(SU3_T, j=[["0", "-1"], ["1", "0"]]),
                    "check")
    assert code == 2
    assert "6x6" in rep["message"]


# ---------------------------------------------------------------------------
# commands and exit codes

def test_classify_su3_t(tmp_path):
    code, rep = run(tmp_path, SU3_T, "classify")
    assert code == 0
    assert rep["exists"] is True
    assert len(rep["parabolics"]) == 6
    assert rep["fiber_dim"] == 0


def test_classify_su2_0_is_clean_no(tmp_path):
    spec = {"algebra": {"kind": "su", "n": 2}, "subalgebra": {"name": "zero"}}
    code, rep = run(tmp_path, spec, "classify")
    assert code == 1
    assert rep["exists"] is False and rep["reason"] == "odd_dimension"


def test_check_swap_structure_witness(tmp_path):
    spec = {"algebra": SU2SU2, "subalgebra": {"name": "zero"}, "j": SWAP_J}
    code, rep = run(tmp_path, spec, "check")
    assert code == 1
    assert rep["invariant"] is True and rep["integrable"] is False
    w = rep["nijenhuis_witness"]
    assert w["basis_pair"] == [0, 1]
    assert w["value"] == ["0", "0", "1", "0", "0", "-1"]


def test_check_s2(tmp_path):
    code, rep = run(tmp_path, S2, "check")
    assert code == 0 and rep["integrable"] is True


def test_m_command(tmp_path):
    code, rep = run(tmp_path, S2, "m")
    assert code == 0
    assert rep["dim_m"] == 1 and rep["fiber_dim"] == 0
    assert rep["m_basis"] == [["0", "0", "1"]]


def test_construct_decompose_roundtrip(tmp_path):
    code, rep = run(tmp_path, SU3_T, "construct", "--parabolic-index", "2")
    assert code == 0
    spec = dict(SU3_T, j=rep["j"])
    code2, rep2 = run(tmp_path, spec, "decompose")
    assert code2 == 0
    assert rep2["parabolic_index"] == 2
    assert rep2["parabolic"]["positive_set"] == rep["parabolic"]["positive_set"]
    assert rep2["j1"] == rep["j1"]


def test_construct_index_out_of_range(tmp_path):
    code, rep = run(tmp_path, SU3_T, "construct", "--parabolic-index", "9")
    assert code == 2


def test_verify_command(tmp_path):
    code, rep = run(tmp_path, S2, "verify", "--seed", "5")
    assert code == 0
    assert rep["all_ok"] is True
    assert rep["seed"] == 5
    names = {e["name"] for e in rep["ledger"]}
    assert {"gc_equals_g_plus_l", "hc_equals_l_cap_tau_l", "dim_l",
            "nijenhuis_well_defined"} <= names


def test_symmetric_command(tmp_path):
    code, rep = run(tmp_path, S2, "symmetric")
    assert code == 0 and rep["status"] == "symmetric"
    code2, rep2 = run(tmp_path, dict(SU3_T, parabolic_index=0), "symmetric")
    assert code2 == 1 and rep2["status"] == "not_applicable"


def test_catalog_and_validate(tmp_path):
    code, rep = run(tmp_path, SU3_T, "catalog")
    assert code == 0
    assert rep["dim_g"] == 8 and rep["dim_h"] == 2 and rep["dim_quotient"] == 6
    code2, rep2 = run(tmp_path, SU3_T, "validate")
    assert code2 == 0 and rep2["ok"] is True


def test_validate_explicit_table_clean_no(tmp_path):
    # torus(1) with a 1x1 table is valid; a broken su(2)-like table is not
    good = {"algebra": {"table": [[["0"]]]}}
    code, rep = run(tmp_path, good, "validate")
    assert code == 0
    bad = {"algebra": {"table": [
        [["0", "0"], ["1", "0"]],
        [["1", "0"], ["0", "0"]]]}}  # not antisymmetric
    code2, rep2 = run(tmp_path, bad, "validate")
    assert code2 == 1 and rep2["ok"] is False and rep2["failures"]
    # other commands reject the invalid table as an input error
    code3, rep3 = run(tmp_path, dict(bad, subalgebra={"name": "zero"}),
                      "classify")
    assert code3 == 2


def test_reports_are_deterministic(tmp_path):
    path = write_spec(tmp_path, SU3_T)
    o1, o2 = tmp_path / "a.json", tmp_path / "b.json"
    assert cli.main(["--spec", path, "--command", "classify",
                     "--out", str(o1)]) == 0
    assert cli.main(["--spec", path, "--command", "classify",
                     "--out", str(o2)]) == 0
    assert o1.read_text() == o2.read_text()


def test_missing_spec_file(tmp_path):
    out = tmp_path / "r.json"
    code = cli.main(["--spec", str(tmp_path / "nope.json"),
                     "--command", "classify", "--out", str(out)])
    assert code == 2
