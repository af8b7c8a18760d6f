import io
import json
import subprocess
import sys

import pytest

from hopi.cli import parse_set, run, UsageError
from hopi.lattice import parse_edgelist


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), stdout=buf)
    return code, buf.getvalue()


def test_build_edgelist():
    code, out = call("build", "--m", "2", "--n", "3", "--format", "edgelist")
    assert code == 0
    g = parse_edgelist(out)
    assert len(g) == 17 and (g.m, g.n) == (2, 3)


def test_build_json():
    code, out = call("build", "--m", "1", "--n", "1", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["order"] == 4 and sorted(d["degrees"]) == [2, 2, 2, 2]
    assert len(d["edges"]) == 4


def test_verify_fast():
    code, out = call("verify", "--max-m", "2", "--max-n", "2", "--level", "fast")
    d = json.loads(out)
    assert code == 0 and d["schema"] == 1 and d["checks"]
    assert all(c["agree"] for c in d["checks"])
    assert all(c["elapsed_ms"] is None for c in d["checks"])


def test_minrank():
    code, out = call("minrank", "--m", "1", "--n", "1", "--seed", "7")
    d = json.loads(out)
    assert code == 0 and d["rank"] == 2 and d["pattern_matches"]
    code, out = call("minrank", "--m", "1", "--n", "1", "--format", "triplet")
    assert out.startswith("# N=4\n")


def test_forcing_commands():
    code, out = call("zf", "--m", "2", "--n", "3", "--set", "canonical")
    d = json.loads(out)
    assert code == 0 and d["complete"] and d["zero_forcing"]
    assert d["log"][0]["round"] == 1
    code, out = call("leaky", "--m", "1", "--n", "2", "--set", "canonical", "--ell", "2")
    d = json.loads(out)
    assert not d["leaky_forcing"] and not d["meets_every_fort"]
    code, out = call("zf", "--m", "1", "--n", "1")
    d = json.loads(out)
    assert code == 0 and d["checks"][0]["oracle"] == 2
    code, out = call("zf", "--m", "1", "--n", "1", "--set", "0,0;0,1", "--leaks", "0,0;0,1")
    d = json.loads(out)
    assert d["zero_forcing"] and not d["complete"]


def test_forts_command():
    code, out = call("forts", "--m", "1", "--n", "1", "--ell", "0", "--minimal")
    d = json.loads(out)
    assert code == 0 and d["count"] == len(d["forts"]) > 0
    assert call("forts", "--m", "2", "--n", "5")[0] == 2


@pytest.mark.parametrize("argv", [
    ["build", "--m", "0", "--n", "2"],
    ["build", "--m", "x", "--n", "2"],
    ["frobnicate"],
    [],
    ["zf", "--m", "1", "--n", "1", "--set", "9,9"],
    ["zf", "--m", "1", "--n", "1", "--set", "bogus"],
    ["leaky", "--m", "1", "--n", "1", "--ell", "-1"],
    ["zf", "--m", "1", "--n", "1", "--leaks", "0,0"],
    ["verify", "--max-m", "0"],
    ["render", "--m", "1", "--n", "1", "--format", "png"],
])
def test_usage_errors(argv, capsys):
    assert run(argv, stdout=io.StringIO()) == 2
    assert "usage error" in capsys.readouterr().err


def test_parse_set():
    assert parse_set(None, 1, 1) == []
    assert parse_set("0,1; 0,0;0,0", 1, 1) == [(0, 0), (0, 1)]
    assert len(parse_set("degree2", 2, 3)) == 10
    with pytest.raises(UsageError):
        parse_set("3,3", 1, 1)


def test_deterministic_output():
    for argv in (["verify", "--max-m", "2", "--max-n", "1"],
                 ["minrank", "--m", "2", "--n", "2", "--seed", "3"],
                 ["render", "--m", "2", "--n", "3", "--set", "canonical", "--format", "svg"]):
        assert call(*argv) == call(*argv)


def test_render():
    code, out = call("render", "--m", "1", "--n", "1", "--set", "canonical")
    assert code == 0 and out.count("B") == 2
    code, out = call("render", "--m", "2", "--n", "3", "--set", "degree2", "--format", "svg")
    assert out.count("<circle") == 17 and out.count('class="vertex blue"') == 10
    code, out = call("render", "--m", "2", "--n", "3", "--set", "canonical", "--format", "dot")
    assert out.count("style=filled") == 5


def test_report_shape_empty():
    from hopi.verify import report
    from hopi.cli import dumps
    assert dumps(report([])) == '{"schema":1,"checks":[]}'


def test_out_file(tmp_path):
    target = tmp_path / "g.txt"
    code, out = call("build", "--m", "1", "--n", "1", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith("# HD(1,1)")


def test_entry_point_exit_code():
    proc = subprocess.run([sys.executable, "-m", "hopi.cli", "build", "--m", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
