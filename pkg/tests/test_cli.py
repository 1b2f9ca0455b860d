import json
import subprocess
import sys

import pytest

from crystal_atoms import cli, golden
from crystal_atoms.crystal import character, generate


def run(capsys, *argv):
    code = cli.run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    return json.loads(out)


def test_crystal_json(capsys):
    data = run_json(capsys, "crystal", "--shape", "1,0", "--rank", "2", "--json")
    assert len(data["vertices"]) == 2 and len(data["edges"]) == 1


def test_crystal_summary_and_dot(capsys):
    code, out, _ = run(capsys, "crystal", "--shape", "3,2,0")
    assert code == 0 and "15 vertices" in out
    code, out, _ = run(capsys, "crystal", "--shape", "2,1,0", "--dot")
    assert code == 0 and out.startswith("digraph")


def test_demazure(capsys):
    data = run_json(capsys, "demazure", "--shape", "3,2,0", "--word", "2,1")
    assert data["size"] == 9
    code, _, err = run(capsys, "demazure", "--shape", "3,2,0", "--word", "1,1")
    assert code == 2 and "not reduced" in err


def test_atom(capsys):
    data = run_json(capsys, "atom", "--shape", "3,2,0", "--word", "2,1")
    assert data["size"] == 5 and data["composition"] == [0, 3, 2]
    data = run_json(capsys, "atom", "--composition", "0,3,2")
    assert data["size"] == 5
    assert data["character"]["terms"] == data["atom_polynomial"]["terms"]
    assert run(capsys, "atom", "--shape", "3,2,0")[0] == 2


def test_keypoly(capsys):
    data = run_json(capsys, "keypoly", "--composition", "0,3,2")
    assert len(data["key_polynomial"]["terms"]) == 9
    assert run(capsys, "keypoly", "--composition", "1,-1")[0] == 2


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj), encoding="utf-8")
    return str(path)


def test_expand_figure2_character(capsys, tmp_path):
    G = generate(golden.FIGURE2_SHAPE)
    X = G.subset_of(golden.FIGURE2_X)
    path = write(tmp_path, "fig2.json", character(X).to_json())
    code, out, _ = run(capsys, "expand", "--poly", path)
    data = json.loads(out)
    assert code == 0
    assert data["verdict"] == "not weakly atom-positive"
    assert {"composition": [1, 3, 0, 1], "coeff": -1} in data["expansion"]


def test_expand_positive_and_malformed(capsys, tmp_path):
    G = generate((3, 2, 0))
    X = G.subset_of(golden.WEAK_ATOM_X)
    path = write(tmp_path, "weak.json", {"terms": character(X).to_json()})
    data = run_json(capsys, "expand", "--poly", path)
    assert data["verdict"] == "weakly atom-positive"
    bad = write(tmp_path, "bad.json", [{"nope": 1}])
    assert run(capsys, "expand", "--poly", bad)[0] == 2
    assert run(capsys, "expand", "--poly", str(tmp_path / "missing.json"))[0] == 2


def test_extremal_check(capsys, tmp_path):
    G = generate(golden.FIGURE2_SHAPE)
    path = write(tmp_path, "x.json", [t.to_json(4) for t in golden.FIGURE2_X])
    data = run_json(capsys, "extremal-check", "--crystal", "3,2,0,0", "--subset", path)
    assert data["extremal"] and data["size"] == 17
    assert data["weakly_atom_positive"] is False and data["strongly_atom_positive"] is None
    assert G.size == 60

    bad = [generate((3, 2, 0)).tableau(0).to_json(3), {"shape": [3, 2, 0], "rows": [[1, 1, 2], [2, 3]]}]
    path = write(tmp_path, "y.json", bad)
    data = run_json(capsys, "extremal-check", "--crystal", "3,2,0", "--subset", path)
    assert not data["extremal"] and data["witness"]["index"] in (1, 2)

    unknown = write(tmp_path, "z.json", [{"shape": [3, 2, 0], "rows": [[1, 1, 4], [2, 2]]}])
    assert run(capsys, "extremal-check", "--crystal", "3,2,0", "--subset", unknown)[0] == 2


def test_schubert(capsys):
    data = run_json(capsys, "schubert", "--shape", "3,2,0", "--words", "2,1", "1,2")
    # everything but the atom of w0, which has 3 elements
    assert data["size"] == 15 - 3
    assert run(capsys, "schubert", "--shape", "2,2,0", "--words", "1")[0] == 2


def test_tensor(capsys):
    data = run_json(capsys, "tensor", "--left", "1,0", "--right", "1,0")
    assert data["decomposition"] == [
        {"highest_weight": [2, 0], "multiplicity": 1},
        {"highest_weight": [1, 1], "multiplicity": 1},
    ]
    data = run_json(capsys, "tensor", "--left", "1,0", "--right", "1,0", "--demazure", "1", "")
    assert data["extremal"] and data["direct_sum_of_demazure"]
    data = run_json(capsys, "tensor", "--left", "2,1,0", "--right", "1,0,0", "--adg")
    assert data["extremal"] and len(data["components"]) == 3
    assert run(capsys, "tensor", "--left", "1,0", "--right", "1,0,0")[0] == 2


@pytest.mark.parametrize("target", ["figure1", "figure2", "ex-weak-atom", "ex-4.5", "ex-4.8", "ex-4.9"])
def test_reproduce_targets_pass(capsys, target):
    code, out, _ = run(capsys, "reproduce", target)
    assert code == 0 and out.strip().endswith(f"{target}: PASS")
    data = run_json(capsys, "reproduce", target, "--json")
    assert data["status"] == "PASS" and all(c["pass"] for c in data["checks"])


def test_reproduce_figure1_artifacts(capsys):
    data = run_json(capsys, "reproduce", "figure1", "--json")
    art = data["artifacts"]
    assert len(art["demazure"]) == 9
    assert {k: len(v) for k, v in art["atoms"].items()} == {"id": 1, "2": 2, "1": 1, "2,1": 5}


def test_reproduce_failure_exit_code(capsys, monkeypatch):
    from crystal_atoms import reproduce

    def broken():
        r = reproduce.Report("figure1")
        r.check("forced mismatch", False, "expected 9, got 8")
        return r

    monkeypatch.setitem(reproduce.TARGETS, "figure1", broken)
    code, out, _ = run(capsys, "reproduce", "figure1")
    assert code == 1 and "FAIL forced mismatch" in out


@pytest.mark.parametrize(
    "argv",
    [[], ["bogus"], ["crystal"], ["crystal", "--shape", "x,y"], ["reproduce", "figure9"], ["keypoly"]],
)
def test_bad_arguments_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_output_is_deterministic(capsys):
    outs = set()
    for _ in range(2):
        code, out, _ = run(capsys, "crystal", "--shape", "2,1,0", "--json")
        outs.add(out)
    assert len(outs) == 1
    fresh = subprocess.run(
        [sys.executable, "-m", "crystal_atoms", "crystal", "--shape", "2,1,0", "--json"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert fresh.stdout in outs
