"""
End-to-end tests of the gptkit command line through main().
"""

import json
from fractions import Fraction

import pytest

from main import EXIT_OK, EXIT_PARSE, EXIT_VALIDATION, main
from models import gbit
from serialization import joint_to_schema, sha256_file, system_to_schema, write_json
from theory import build_system

H = Fraction(1, 2)

FIDUCIALS = {
    "left": [[["1/2", "1/2", "1/2"], ["-1/2", "-1/2", "1/2"]],
             [["-1/2", "1/2", "1/2"], ["1/2", "-1/2", "1/2"]]],
    "right": [[["1/2", "1/2", "1/2"], ["-1/2", "-1/2", "1/2"]],
              [["-1/2", "1/2", "1/2"], ["1/2", "-1/2", "1/2"]]],
}


def read(path):
    return json.loads(path.read_text(encoding="utf-8"))


@pytest.fixture
def gbit_file(tmp_path):
    path = tmp_path / "gbit.json"
    assert main(["export", "gbit", "-o", str(path)]) == EXIT_OK
    return path


@pytest.fixture
def measurements_file(tmp_path):
    path = tmp_path / "measurements.json"
    path.write_text(json.dumps(FIDUCIALS), encoding="utf-8")
    return path


def test_export_writes_manifest(gbit_file):
    manifest = read(gbit_file.with_name("gbit.json.manifest.json"))
    assert manifest["command"] == "export"
    assert manifest["outputs"] == {str(gbit_file): sha256_file(gbit_file)}
    assert manifest["options"]["model"] == "gbit"


def test_export_is_deterministic(tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["export", "polygon", "--k", "5", "-o", str(first)]) == EXIT_OK
    assert main(["export", "polygon", "--k", "5", "-o", str(second)]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()


def test_export_to_stdout(capsys):
    assert main(["export", "classical", "--k", "3"]) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["dim"] == 3
    assert document["unit"] == ["1", "1", "1"]


def test_reduce_four_state_table(tmp_path, data_dir):
    out, report_path = tmp_path / "coordrep.json", tmp_path / "report.json"
    code = main(["reduce", str(data_dir / "four_states.csv"), "-o", str(out), "--report", str(report_path)])
    assert code == EXIT_OK

    rep = read(out)
    assert rep["dim"] == 3
    assert rep["conjugate_basis"][0] == ["2", "-2", "0", "0"]

    report = read(report_path)
    assert [r["label"] for r in report["redundant"]] == ["e5"]
    assert report["redundant"][0]["coefficients"] == {"e1": "1/2", "e3": "1/2"}
    assert report["effect_relations"] == {"e4": {"e1": "2/3", "e2": "-2/3", "e3": "1/3"}}
    assert report["state_relations"] == {"w4": {"w1": "-1", "w2": "1", "w3": "1"}}
    assert out.with_name("coordrep.json.manifest.json").exists()


def test_reduce_bad_csv_is_a_parse_error(tmp_path):
    table = tmp_path / "bad.csv"
    table.write_text("state,e1\nw1,abc\n", encoding="utf-8")
    assert main(["reduce", str(table), "-o", str(tmp_path / "out.json")]) == EXIT_PARSE


def test_missing_input_is_a_parse_error(tmp_path):
    assert main(["analyze", str(tmp_path / "absent.json"), "-o", str(tmp_path / "out.json")]) == EXIT_PARSE


def test_analyze_gbit(tmp_path, gbit_file):
    out = tmp_path / "analysis.json"
    assert main(["analyze", str(gbit_file), "-o", str(out)]) == EXIT_OK
    report = read(out)
    assert report["valid"] is True
    assert report["unrestricted"] is True
    assert report["restriction_witness"] is None
    assert len(report["emax_vertices"]) == 6
    matrix = report["joint_measurability"]
    assert matrix[0][1] is True
    assert matrix[0][2] is False
    assert all(matrix[i][i] for i in range(len(matrix)))
    assert report["state_norms"] == ["1"] * 4


def test_analyze_invalid_system(tmp_path):
    system = tmp_path / "bad.json"
    system.write_text(json.dumps({
        "name": "bad", "dim": 2, "states": [["2", "0"]],
        "effects": [["1", "0"], ["0", "1"]], "unit": ["1", "1"],
    }), encoding="utf-8")
    out = tmp_path / "analysis.json"
    assert main(["analyze", str(system), "-o", str(out)]) == EXIT_VALIDATION
    report = read(out)
    assert report["valid"] is False
    assert report["violations"]


def test_analyze_generator_only_gbit(tmp_path):
    system = tmp_path / "gbit.json"
    system.write_text(json.dumps({
        "name": "gbit", "dim": 3,
        "states": [["1", "0", "1"], ["0", "1", "1"], ["-1", "0", "1"], ["0", "-1", "1"]],
        "effects": [["1/2", "1/2", "1/2"], ["-1/2", "-1/2", "1/2"], ["-1/2", "1/2", "1/2"], ["1/2", "-1/2", "1/2"]],
        "unit": ["0", "0", "1"],
    }), encoding="utf-8")
    out = tmp_path / "analysis.json"
    assert main(["analyze", str(system), "-o", str(out)]) == EXIT_OK
    report = read(out)
    assert report["valid"] is True
    assert report["unrestricted"] is True
    assert report["restriction_witness"] is None


def test_analyze_rejects_malformed_json(tmp_path):
    system = tmp_path / "bad.json"
    system.write_text('{"name": "bad", "dim": 2, "states": [["1"]], "unit": ["1", "1"]}', encoding="utf-8")
    assert main(["analyze", str(system), "-o", str(tmp_path / "out.json")]) == EXIT_PARSE


def test_compose_max_is_nested(tmp_path, gbit_file):
    out = tmp_path / "joint.json"
    assert main(["compose", str(gbit_file), str(gbit_file), "--rule", "max", "-o", str(out)]) == EXIT_OK
    joint = read(out)
    assert joint["rule"] == "max"
    assert joint["nesting_verified"] is True
    assert joint["cone"]["halfspaces"]


def test_compose_restricted_with_max_fails(tmp_path, gbit_file):
    restricted = tmp_path / "restricted.json"
    system = build_system("restricted_gbit", gbit().states, [(H, H, H)], (0, 0, 1), reduce_states=False)
    write_json(system_to_schema(system), restricted)
    code = main(["compose", str(restricted), str(gbit_file), "--rule", "max", "-o", str(tmp_path / "joint.json")])
    assert code == EXIT_VALIDATION


def test_chsh_maximize_boxworld(tmp_path, gbit_file, measurements_file):
    joint = tmp_path / "joint.json"
    assert main(["compose", str(gbit_file), str(gbit_file), "--rule", "max", "-o", str(joint)]) == EXIT_OK
    out = tmp_path / "chsh.json"
    assert main(["chsh", str(joint), str(measurements_file), "--maximize", "-o", str(out)]) == EXIT_OK
    report = read(out)
    assert report["S"] == "4"
    assert report["no_signaling"] is True


def test_chsh_on_supplied_state(tmp_path, boxworld, pr_state, measurements_file):
    joint = tmp_path / "pr.json"
    write_json(joint_to_schema(boxworld, pr_state), joint)
    out = tmp_path / "chsh.json"
    assert main(["chsh", str(joint), str(measurements_file), "-o", str(out)]) == EXIT_OK
    report = read(out)
    assert report["S"] == "4"
    assert report["correlators"] == [["1", "1"], ["1", "-1"]]
    assert report["behavior"][0] == "1/2"


def test_chsh_without_state_fails(tmp_path, gbit_file, measurements_file):
    joint = tmp_path / "joint.json"
    assert main(["compose", str(gbit_file), str(gbit_file), "--rule", "min", "-o", str(joint)]) == EXIT_OK
    code = main(["chsh", str(joint), str(measurements_file), "-o", str(tmp_path / "chsh.json")])
    assert code == EXIT_VALIDATION
