import json
import math
import subprocess
import sys

import pytest

from ecpbounds.catalog import bowtie_chord, bowtie_chord_ecp, bowtie_two_chords, bowtie_two_chords_ecp
from ecpbounds.cli import main, parse_range
from ecpbounds.errors import ParseError
from ecpbounds.graph import complete_graph


@pytest.fixture
def files(tmp_path):
    def write(name, obj):
        p = tmp_path / name
        p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
        return str(p)

    return write


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, argv):
    code, out = run(capsys, ["--json", *argv])
    return code, json.loads(out)


def test_parse_range():
    assert parse_range("4..6") == [4, 5, 6]
    assert parse_range("4,7") == [4, 7]
    with pytest.raises(ParseError):
        parse_range("a..b")


def test_bound_example(capsys, files):
    g = files("g.json", bowtie_chord().to_json())
    p = files("p.json", bowtie_chord_ecp().to_json())
    code, env = run_json(capsys, ["bound", "--graph", g, "--ecp", p])
    assert code == 0 and env["passed"]
    r = env["results"]
    assert r["lower_bound"] == -2 and r["certificate"]["attained"] is False


def test_bound_attained(capsys, files):
    g = files("g.json", bowtie_two_chords().to_json())
    p = files("p.json", bowtie_two_chords_ecp().to_json())
    code, env = run_json(capsys, ["bound", "--graph", g, "--ecp", p])
    assert code == 0
    assert env["results"]["lower_bound"] == -2 and env["results"]["certificate"]["attained"]
    assert env["results"]["jacobi_least_eigenvalue"] == pytest.approx(-2, abs=1e-10)


def test_bound_dot_input(capsys, files):
    g = files("g.dot", bowtie_two_chords().to_dot())
    p = files("p.json", bowtie_two_chords_ecp().to_json())
    assert run(capsys, ["bound", "--graph", g, "--ecp", p])[0] == 0


def test_malformed_json_exit_2(capsys, files):
    g = files("g.json", "{not json")
    p = files("p.json", {"parts": []})
    assert run(capsys, ["bound", "--graph", g, "--ecp", p])[0] == 2
    assert run(capsys, ["spectrum", "--graph", "/no/such/file.json"])[0] == 2


def test_domain_error_exit_3(capsys, files):
    g = files("g.json", bowtie_chord().to_json())
    p = files("p.json", {"parts": [[1, 2, 3], [3, 4, 5]]})
    code, env = run_json(capsys, ["bound", "--graph", g, "--ecp", p])
    assert code == 3 and env["error"]["code"] == "uncovered_edge"


def test_ecp_validate_codes(capsys, files):
    g = files("g.json", bowtie_chord().to_json())
    cases = {
        "not_a_clique": [[1, 2, 4], [3, 4, 5], [1, 3], [2, 3]],
        "overlap_edge": [[1, 2, 3], [3, 4, 5], [2, 4], [1, 2]],
        "uncovered_edge": [[1, 2, 3], [3, 4, 5]],
        "invalid_vertex": [[1, 2, 9]],
    }
    for want, parts in cases.items():
        p = files("p.json", {"parts": parts})
        code, env = run_json(capsys, ["ecp-validate", "--graph", g, "--ecp", p])
        assert code == 3, want
        assert env["results"]["error"]["code"] == want
    p = files("p.json", bowtie_chord_ecp().to_json())
    code, env = run_json(capsys, ["ecp-validate", "--graph", g, "--ecp", p])
    assert code == 0 and env["results"] == {"valid": True, "parts": 3, "clique_degrees": [1, 2, 2, 2, 1], "m": 2}


def test_queens_table(capsys):
    code, env = run_json(capsys, ["queens", "certify", "--n", "4..6"])
    assert code == 0
    assert [c["multiplicity"] for c in env["results"]["certificates"]] == [1, 4, 9]
    assert [c["constraint_rank"] for c in env["results"]["certificates"]] == [15, 21, 27]


def test_queens_show_vector(capsys):
    code, out = run(capsys, ["queens", "--n", "4", "--show-vector", "1,1"])
    assert code == 0
    assert "|  0 |  1 | -1 |  0 |" in out and "| -1 |  0 |  0 |  1 |" in out
    code, env = run_json(capsys, ["queens", "--n", "4", "--show-vector", "1,1"])
    assert env["results"]["vector"]["board"][2] == [1, 0, 0, -1]


@pytest.mark.parametrize("n", ["3", "13", "3..5"])
def test_queens_out_of_range_exit_4(capsys, n):
    assert run(capsys, ["queens", "--n", n])[0] == 4


def test_queens_bad_window_exit_4(capsys):
    assert run(capsys, ["queens", "--n", "5", "--show-vector", "3,1"])[0] == 4


def test_spectrum(capsys, files):
    g = files("g.json", bowtie_two_chords().to_json())
    code, env = run_json(capsys, ["spectrum", "--graph", g])
    r5 = math.sqrt(5)
    assert code == 0
    assert env["results"]["values"] == pytest.approx([-2, 1 - r5, 0, 0, 1 + r5], abs=1e-9)


def test_content_cmd(capsys, files):
    g = files("g.json", bowtie_chord().to_json())
    code, env = run_json(capsys, ["content", "--graph", g])
    assert code == 0
    assert env["results"]["value"] == 3 and len(env["results"]["witness"]) == 3
    assert set(env["results"]) >= {"value", "witness", "nodes_explored"}
    g = files("k7.json", complete_graph(7).to_json())
    assert run(capsys, ["content", "--graph", g])[0] == 4
    assert run(capsys, ["content", "--graph", g, "--limit-edges", "21"])[0] == 0


def test_family_k1(capsys, files):
    g = files("g.json", complete_graph(1).to_json())
    code, env = run_json(capsys, ["family", "double", "--graph", g])
    assert code == 0
    assert env["results"]["spectrum"]["values"] == pytest.approx([-1, 1])
    assert env["results"]["shift_equal"] is True


def test_family_apex_lift(capsys, files):
    from ecpbounds.catalog import bowtie_two_chords_apex, bowtie_two_chords_apex_ecp

    g = files("g.json", bowtie_two_chords_apex().to_json())
    p = files("p.json", bowtie_two_chords_apex_ecp().to_json())
    argv = ["family", "double", "--graph", g, "--perm", "1,5,6,4,2,3", "--ecp", p, "--vector", "1,-1,0,1,-1,0"]
    code, env = run_json(capsys, argv)
    r = env["results"]
    assert code == 0 and r["m"] == 3 and r["lift_certified"] and r["attained"]
    assert r["shift_equal"] is False and len(r["ecp"]["parts"]) == 14
    bad = argv[:-1] + ["1,1,0,1,-1,0"]
    assert run(capsys, bad)[0] == 3
    assert run(capsys, ["family", "double", "--graph", g, "--perm", "1,1,2,3,4,5"])[0] == 3


def test_json_flag_positions_and_determinism(capsys, files):
    g = files("g.json", bowtie_two_chords().to_json())
    a = run(capsys, ["--json", "content", "--graph", g])[1]
    b = run(capsys, ["content", "--graph", g, "--json"])[1]
    assert a == b
    env = json.loads(run(capsys, ["--json", "--timing", "content", "--graph", g])[1])
    assert "wall_time_s" in env and "wall_time_s" not in json.loads(a)


def test_module_entry_point(files):
    g = files("g.json", bowtie_chord().to_json())
    cmd = [sys.executable, "-m", "ecpbounds", "--json", "content", "--graph", g]
    outs = [subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(2)]
    assert outs[0] == outs[1]
    assert json.loads(outs[0])["results"]["value"] == 3
