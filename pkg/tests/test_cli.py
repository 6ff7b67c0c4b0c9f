"""
命令行测试：输出格式、确定性与退出码
"""

import json
import os

import pytest

from cli import InstanceDescriptor, run
from config.settings import settings

K6_SET = "(1);(5);(2);(4);(3)"


def _run(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_json(capsys):
    code, out, _ = _run(capsys, ["classify", "--group", "Z6", "--set", K6_SET, "--json"])
    assert code == 0
    data = json.loads(out)
    assert list(data) == ["admits", "case", "m", "l", "h", "a_set", "orientation", "codes_containing_identity"]
    assert data["admits"] is True
    assert data["case"] == "II"
    assert (data["m"], data["l"], data["h"]) == (6, 1, 4)
    assert data["a_set"] == [1]
    assert data["orientation"] == "as-given"
    assert data["codes_containing_identity"] == [["(0)"]]


def test_classify_all_codes(capsys):
    code, out, _ = _run(capsys, ["classify", "--group", "Z6xZ2",
                                 "--set", "(1,0);(5,0);(2,0);(4,0);(0,1)", "--json", "--all-codes"])
    assert code == 0
    data = json.loads(out)
    assert data["case"] == "I"
    assert data["codes_containing_identity"] == [["(0,0)", "(3,1)"]]
    assert len(data["all_codes"]) == 6


def test_classify_text(capsys):
    code, out, _ = _run(capsys, ["classify", "--group", "Z12", "--set", "(1);(11);(2);(10);(6)"])
    assert code == 0
    assert "admits: no" in out


def test_classify_is_deterministic(capsys):
    argv = ["classify", "--group", "Z6xZ2", "--set", "(1,0);(5,0);(4,1);(2,1);(3,1)", "--json"]
    _, first, _ = _run(capsys, argv)
    _, second, _ = _run(capsys, argv)
    assert first == second
    assert json.loads(first)["a_set"] == [-1]


def test_input_errors(capsys):
    code, out, err = _run(capsys, ["classify", "--group", "Z6yZ2", "--set", K6_SET])
    assert code == 1
    assert out == ""
    assert "error:" in err

    code, _, _ = _run(capsys, ["classify", "--group", "Z6", "--set", "(1);(5);(2);(3)"])
    assert code == 1
    code, _, _ = _run(capsys, ["classify", "--group", "Z6"])
    assert code == 1
    code, _, _ = _run(capsys, ["bogus"])
    assert code == 1


def test_construct_edgelist(capsys):
    code, out, _ = _run(capsys, ["construct", "--family", "gamma", "--m", "6", "--l", "3", "--h", "0"])
    assert code == 0
    assert len(out.splitlines()) == 36


def test_construct_dot(capsys):
    code, out, _ = _run(capsys, ["construct", "--family", "gamma-dprime", "--m", "6", "--l", "2",
                                 "--h", "4", "--format", "dot"])
    assert code == 0
    assert out.startswith("graph G {")
    assert out.count(" -- ") == 30


def test_construct_degenerate(capsys):
    code, _, err = _run(capsys, ["construct", "--family", "gamma", "--m", "6", "--l", "2", "--h", "0"])
    assert code == 1
    assert "error:" in err


def test_codes(capsys):
    code, out, _ = _run(capsys, ["codes", "--prop", "2.10", "--m", "6", "--l", "2", "--h", "4",
                                 "--a", "-1", "--t", "00"])
    assert code == 0
    data = json.loads(out)
    assert data["family"] == "gamma-dprime"
    assert data["perfect"] is True
    assert data["code"] == ["(0,0)", "(3,0)"]
    assert data["size"] == data["expected_size"] == 2


def test_codes_parametric(capsys):
    code, out, _ = _run(capsys, ["codes", "--prop", "2.3", "--m", "6", "--l", "1", "--h", "4",
                                 "--a", "1", "--t", "0", "--parametric"])
    assert code == 0
    data = json.loads(out)
    assert data["code"] == ["(0,0,0)", "(3,0,1)"]
    assert data["parametric_agreement"] is False
    assert data["parametric_size"] == 6


def test_codes_hypothesis_violation(capsys):
    code, _, _ = _run(capsys, ["codes", "--prop", "2.7", "--m", "12", "--l", "1", "--h", "10",
                               "--a", "1", "--t", "0"])
    assert code == 1
    code, _, _ = _run(capsys, ["codes", "--prop", "2.7", "--m", "6", "--l", "1", "--h", "4",
                               "--a", "1", "--t", "2"])
    assert code == 1


def test_oracle_group(capsys):
    code, out, _ = _run(capsys, ["oracle", "--group", "Z6", "--set", K6_SET, "--enumerate"])
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 6
    assert data["degree"] == 5


def test_oracle_family_containing(capsys):
    code, out, _ = _run(capsys, ["oracle", "--family", "gamma-dprime", "--m", "6", "--l", "2", "--h", "4",
                                 "--enumerate", "--containing", "(0,0)"])
    assert code == 0
    data = json.loads(out)
    assert ["(0,0)", "(3,0)"] in data["codes"]
    assert ["(0,0)", "(2,1)"] in data["codes"]


def test_oracle_not_found(capsys):
    code, out, _ = _run(capsys, ["oracle", "--group", "Z12", "--set", "(1);(11);(2);(10);(6)"])
    assert code == 0
    data = json.loads(out)
    assert data["found"] is False
    assert data["code"] is None


def test_oracle_descriptor_conflict(capsys):
    code, _, _ = _run(capsys, ["oracle", "--group", "Z6", "--set", K6_SET, "--family", "gamma",
                               "--m", "6", "--l", "1", "--h", "4"])
    assert code == 1


def test_instance_descriptor():
    descriptor = InstanceDescriptor(construction="gamma-prime", m=6, l=1, h=4)
    assert descriptor.build_graph().edge_count == 15
    with pytest.raises(ValueError):
        InstanceDescriptor(group="Z6")


def test_sweep_command(capsys, monkeypatch, tmp_path):
    monkeypatch.setattr(settings, "PROP_SWEEP_M_VALUES", [6])
    monkeypatch.setattr(settings, "PROP_SWEEP_MAX_L", 2)
    report = tmp_path / "sweep.json"
    code, out, _ = _run(capsys, ["sweep", "--max-order", "8", "--workers", "1", "--report", str(report)])
    assert code == 0
    assert out.splitlines()[0] == "PASS"
    assert report.exists()
    assert os.path.exists(str(report)[:-len(".json")] + ".csv")


def test_sweep_rejects_bad_workers(capsys):
    code, _, _ = _run(capsys, ["sweep", "--max-order", "8", "--workers", "0"])
    assert code == 1


def test_classify_text_isomorphic(capsys):
    code, out, _ = _run(capsys, ["classify", "--group", "Z12xZ2", "--set", "(1,0);(11,0);(1,1);(11,1);(0,1)"])
    assert code == 0
    assert "admits: yes" in out
    assert "orientation: isomorphic" in out
    assert "isomorphic to: " in out
    assert "codes containing identity: 8" in out


def test_classify_json_isomorphic(capsys):
    code, out, _ = _run(capsys, ["classify", "--group", "Z6xZ4", "--set", "(1,1);(5,3);(2,1);(4,3);(3,0)", "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["admits"] is True
    assert data["orientation"] == "isomorphic"
    assert len(data["codes_containing_identity"]) == 2


def test_classify_text_necessary_conditions(capsys):
    _, out, _ = _run(capsys, ["classify", "--group", "Z12", "--set", "(1);(11);(2);(10);(6)"])
    assert "necessary conditions: satisfied" in out

    code, out, _ = _run(capsys, ["classify", "--group", "Z8", "--set", "(1);(7);(3);(5);(4)"])
    assert code == 0
    assert "admits: no" in out
    assert "necessary conditions: |G| = 8" in out


def test_sweep_report_bare_name_goes_to_report_dir(capsys, monkeypatch, tmp_path):
    monkeypatch.setattr(settings, "PROP_SWEEP_M_VALUES", [6])
    monkeypatch.setattr(settings, "PROP_SWEEP_MAX_L", 1)
    monkeypatch.setattr(settings, "REPORT_DIR", str(tmp_path / "reports"))
    code, _, _ = _run(capsys, ["sweep", "--max-order", "6", "--workers", "1", "--report", "sweep.json"])
    assert code == 0
    assert (tmp_path / "reports" / "sweep.json").exists()
    assert (tmp_path / "reports" / "sweep.csv").exists()
