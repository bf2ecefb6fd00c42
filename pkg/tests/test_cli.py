import io
import json
import subprocess
import sys

import pytest

from twistloop.cli import canonical_json, main


def _run(argv, tmp_path, stdin=None, monkeypatch=None):
    out = tmp_path / "out.json"
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv + ["--output", str(out)])
    return code, (json.loads(out.read_text()) if out.exists() else None)


def test_evalmod_classify_round_trip(tmp_path):
    moments = tmp_path / "m.json"
    assert main(["evalmod", "--case", "AI1", "--nu1", "1/3", "--nu-1", "2", "--alphas", "3", "--amax", "12", "--output", str(moments)]) == 0
    data = json.loads(moments.read_text())
    assert data["sequences"]["w"][0] == "10/3"
    code, result = _run(["classify", "--input", str(moments)], tmp_path)
    assert code == 0
    assert result["verdict"] == "finite_dimensional"
    assert result["params"]["nu"] == {"1": "1/3", "-1": "2/1"}
    assert [r["beta"] for r in result["params"]["roots"]] == ["10/3"]
    assert "recurrence" in result["certificate"] and "char_poly" in result["certificate"]


def test_evalmod_examples(tmp_path):
    code, data = _run(["evalmod", "--case", "A1", "--alphas", "2,3", "--amax", "8"], tmp_path)
    assert code == 0 and data["sequences"]["w"][1] == "35/6"
    code, data = _run(["evalmod", "--case", "DeltaA1", "--amax", "4"], tmp_path)
    assert code == 0 and all(x == "0/1" for seq in data["sequences"].values() for x in seq)


def test_evalmod_bad_params(tmp_path):
    assert main(["evalmod", "--case", "A1", "--alphas", "0", "--amax", "4"]) == 3
    assert main(["evalmod", "--case", "AI2", "--nu1", "1/3", "--amax", "4"]) == 3


def test_perturbed_sequence_rejected(tmp_path, monkeypatch):
    moments = tmp_path / "m.json"
    main(["evalmod", "--case", "A1", "--alphas", "2,3", "--amax", "8", "--output", str(moments)])
    data = json.loads(moments.read_text())
    numerator, denominator = data["sequences"]["w"][0].split("/")
    data["sequences"]["w"][0] = f"{int(numerator) + int(denominator)}/{denominator}"
    code, result = _run(["classify"], tmp_path, stdin=json.dumps(data), monkeypatch=monkeypatch)
    assert code == 1
    assert any(not c["pass"] for c in result["certificate"]["checks"])


def test_truncated_sequence_insufficient(tmp_path, monkeypatch):
    data = {"case": "A1", "a_max": 2, "sequences": {"w": ["3", "1", "4"]}}
    code, result = _run(["classify"], tmp_path, stdin=json.dumps(data), monkeypatch=monkeypatch)
    assert code == 5 and result["verdict"] == "insufficient_data"


def test_schema_error(tmp_path, monkeypatch):
    code, _ = _run(["classify"], tmp_path, stdin=json.dumps({"case": "A1", "sequences": {"w": [1.5]}}), monkeypatch=monkeypatch)
    assert code == 2


def test_verify_dispatch(tmp_path):
    assert main(["verify", "--suite", "nosuch"]) == 2
    code, report = _run(["verify", "--suite", "invring", "--n", "2"], tmp_path)
    assert code == 0 and report["pass"]
    code, report = _run(["verify", "--suite", "dynkin"], tmp_path)
    assert code == 0 and report["records"]


def test_invring_command(tmp_path):
    code, data = _run(["invring", "--n", "2", "--monoid", "N", "--product", "2", "1"], tmp_path)
    assert code == 0
    assert {(tuple(t["word"]), t["coefficient"]) for t in data["terms"]} == {((2, 1), "1/1"), ((3,), "1/1")}
    values = tmp_path / "values.json"
    values.write_text(json.dumps({"values": [[[1], "5"], [[2], "13"], [[1, 1], "12"]]}))
    code, data = _run(["invring", "--n", "2", "--monoid", "N", "--input", str(values)], tmp_path)
    assert code == 0 and sorted(data["points"]) == ["2/1", "3/1"]
    values.write_text(json.dumps({"values": [[[1], "5"], [[2], "13"], [[1, 1], "11"]]}))
    code, data = _run(["invring", "--n", "2", "--monoid", "N", "--input", str(values)], tmp_path)
    assert code == 1 and data["status"] == "relation_violated"


def test_dynkin_command(tmp_path):
    out = tmp_path / "rows.txt"
    assert main(["dynkin", "--rank-bound", "3", "--output", str(out)]) == 0
    assert "A_1^(1), {0,1}, -, C" in out.read_text().splitlines()
    code, data = _run(["dynkin", "--diagram", "A_5^(2)"], tmp_path)
    assert code == 0 and data["h0"] == [-1, -2, -2, -2, -1] and data["w0_relation"]


def test_json_files_round_trip_byte_identically(tmp_path):
    moments = tmp_path / "m.json"
    main(["evalmod", "--case", "AI2", "--nu1", "1/2", "--alphas", "3,1/7", "--amax", "10", "--output", str(moments)])
    text = moments.read_text()
    assert canonical_json(json.loads(text)) == text
    result = tmp_path / "r.json"
    main(["classify", "--input", str(moments), "--output", str(result)])
    text = result.read_text()
    assert canonical_json(json.loads(text)) == text


def test_unknown_flag_exits_two():
    with pytest.raises(SystemExit) as exc:
        main(["classify", "--bogus"])
    assert exc.value.code == 2


def test_console_entry_point_runs():
    proc = subprocess.run([sys.executable, "-m", "twistloop", "evalmod", "--case", "A1", "--alphas", "2", "--amax", "2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["sequences"]["w"] == ["1/1", "5/2", "25/4"]
