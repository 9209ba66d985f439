import json
import subprocess
import sys

import pytest

from gtsq.cli import main
from gtsq.gts import HasseDiagram, build_hasse


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_trees(capsys):
    code, out, _ = run(["trees", "--n", "6"], capsys)
    assert code == 0 and len(out.splitlines()) == 6
    code, out, _ = run(["trees", "--n", "1"], capsys)
    assert out == "0\n"
    code, out, _ = run(["trees", "--n", "7", "--oracle", "--format", "json"], capsys)
    assert code == 0 and len(json.loads(out)) == 11


def test_oracle_bound_is_a_usage_error(capsys):
    code, _, err = run(["trees", "--n", "13", "--oracle"], capsys)
    assert code == 2 and "oracle" in err


def test_poset_dot_and_json(capsys, tmp_path):
    code, out, _ = run(["poset", "--n", "4"], capsys)
    assert code == 0 and out.count("->") == 1 and out.count("label=") == 2
    path = tmp_path / "p6.json"
    assert main(["poset", "--n", "6", "--format", "json", "--out", str(path)]) == 0
    h = HasseDiagram.from_json(json.loads(path.read_text()))
    assert h == build_hasse(6)
    assert str(h.nodes[h.sources()[0]]) == "0,1,2,3,1,2"
    assert str(h.nodes[h.sinks()[0]]) == "0,1,1,1,1,1"


def _values(csv_text):
    rows = csv_text.strip().splitlines()
    assert rows[0] == "index,value,cluster"
    return [float(r.split(",")[1]) for r in rows[1:]]


def test_spectrum(capsys):
    _, out, _ = run(["spectrum", "0,1,1,1,1,1", "--q", "1"], capsys)
    assert [round(v, 9) for v in _values(out)] == [6, 1, 1, 1, 1, 0]
    _, out, _ = run(["spectrum", "0,1", "--matrix", "ed", "--q", "0.5"], capsys)
    assert [round(v, 12) for v in _values(out)] == [1.5, 0.5]
    _, out, _ = run(["spectrum", "0,1,2,2,1,2", "--q", "0.5"], capsys)
    assert abs(_values(out)[0] - 2.2566) < 5e-5
    code, out, _ = run(["spectrum", "0,1,2,2,1,2", "--matrix", "qtlap", "--qt", "0,1", "--format", "json"], capsys)
    assert code == 0 and min(json.loads(out)["values"]) >= -1e-9


@pytest.mark.parametrize(
    "args",
    [
        ["spectrum", "0,1", "--matrix", "qtlap", "--q", "0.5"],
        ["spectrum", "0,1", "--q", "0.5", "--qt", "1,0"],
        ["spectrum", "0,2"],
        ["spectrum", "x"],
        ["verify", "nope"],
        ["verify", "monotonicity", "--q", "0"],
        ["verify", "qt", "--qt", "0,0"],
        ["verify", "monotonicity", "--jobs", "0"],
        ["poset", "--n", "4", "--format", "csv"],
        [],
    ],
)
def test_usage_errors(args, capsys):
    code, _, _ = run(args, capsys)
    assert code == 2


def test_charpoly(capsys):
    assert run(["charpoly", "0,1"], capsys)[1] == "x^2 - 2*x - q^2 + 1\n"
    assert run(["charpoly", "0"], capsys)[1] == "x + q^2 - 1\n"
    assert run(["charpoly", "0,1,1", "--delete", "0"], capsys)[1] == "x^2 - 2*x + 1\n"


def test_verify_table1(capsys):
    code, out, _ = run(["verify", "table1"], capsys)
    assert code == 0
    assert "# T1=0,1,2,2,1,2 T2=0,1,2,2,1,1" in out and "[PASS]" in out


def test_verify_json_is_deterministic_apart_from_timing(capsys):
    def once():
        _, out, _ = run(["verify", "monotonicity", "--n", "5", "--format", "json", "--jobs", "1"], capsys)
        data = json.loads(out)
        for r in data["reports"]:
            r.pop("elapsed_ms")
        return data

    assert once() == once()


def test_injected_cover_fails_with_json_dump(capsys):
    code, _, err = run(["verify", "monotonicity", "--n", "6", "--inject-cover", "--jobs", "1"], capsys)
    assert code == 1
    dump = json.loads(err)
    assert dump["passed"] is False and dump["failed"][0]["failures"]


def test_grid_flags_and_tolerance_override(capsys):
    code, out, _ = run(["verify", "monotonicity", "--n", "5", "--q", "0.5", "--q", "2", "--jobs", "1"], capsys)
    assert code == 0
    code, _, _ = run(["verify", "monotonicity", "--n", "5", "--tol-override", "-1", "--jobs", "1"], capsys)
    assert code == 1


def test_console_entry_point_exit_codes():
    ok = subprocess.run([sys.executable, "-m", "gtsq.cli", "verify", "star", "--n", "5"], capture_output=True)
    assert ok.returncode == 0
    bad = subprocess.run([sys.executable, "-m", "gtsq.cli", "verify", "bogus"], capture_output=True)
    assert bad.returncode == 2
