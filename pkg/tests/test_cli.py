import json
import xml.etree.ElementTree as ET

import pytest

from wmge.cli import EXIT_GUARD, EXIT_INPUT, EXIT_INVALID, EXIT_OK, main

TRI = '{"n": 3, "px": [0, 1, 2], "py": [0, 2, 1]}'


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_triangle(capsys, files):
    code, out, _ = run(capsys, "solve", "-i", files("tri.json", TRI))
    doc = json.loads(out)
    assert code == EXIT_OK
    assert doc["metrics"]["perimeter"] == 4
    assert len(doc["points"]) == 3
    assert doc["cover_size"] == 2


def test_solve_single_vertex(capsys, files):
    code, out, _ = run(capsys, "solve", "-i", files("one.json", '{"n": 1, "px": [0], "py": [0]}'))
    doc = json.loads(out)
    assert code == EXIT_OK and doc["points"] == [[0, 0]] and doc["metrics"]["perimeter"] == 0


def test_solve_malformed(capsys, files):
    code, _, err = run(capsys, "solve", "-i", files("bad.json", '{"n": 3, "px": [0, 1'))
    assert code == EXIT_INPUT and "error" in err
    code, _, _ = run(capsys, "solve", "-i", files("dup.json", '{"n": 2, "px": [0, 0], "py": [0, 1]}'))
    assert code == EXIT_INPUT
    code, _, _ = run(capsys, "solve", "-i", "/nonexistent/file.json")
    assert code == EXIT_INPUT


def test_solve_check_round_trip(capsys, files, tmp_path):
    inst = files("i.json", '{"px": [3, 0, 4, 1, 2], "py": [2, 4, 0, 3, 1]}')
    out_path = str(tmp_path / "emb.json")
    assert main(["solve", "-i", inst, "-o", out_path]) == EXIT_OK
    code, out, _ = run(capsys, "check", "-i", inst, "-e", out_path)
    assert code == EXIT_OK and json.loads(out)["valid"] is True


def test_check_exit_codes(capsys, files):
    inst = files("tri.json", TRI)
    good = files("good.json", '{"points": [[0, 0], [0, 1], [1, 0]]}')
    dup = files("dup.json", '{"points": [[0, 0], [0, 0], [1, 0]]}')
    short = files("short.json", '{"points": [[0, 0], [0, 1]]}')
    assert run(capsys, "check", "-i", inst, "-e", good)[0] == EXIT_OK
    code, out, _ = run(capsys, "check", "-i", inst, "-e", dup)
    assert code == EXIT_INVALID
    assert json.loads(out)["violations"][0]["kind"] == "DUPLICATE_POINT"
    assert run(capsys, "check", "-i", inst, "-e", short)[0] == EXIT_INPUT
    assert run(capsys, "check", "-i", inst)[0] == EXIT_INPUT


def test_check_strict_flags(capsys, files):
    inst = files("sq.json", '{"px": [0, 1, 2, 3], "py": [1, 0, 3, 2]}')
    emb = files("e.json", '{"points": [[0, 1], [1, 0], [2, 2], [3, 1]]}')
    assert run(capsys, "check", "-i", inst, "-e", emb, "--strict-planarity")[0] == EXIT_OK
    code = run(capsys, "check", "-i", inst, "-e", emb, "--strict-planarity",
               "--forbid-cross-path-crossings")[0]
    assert code == EXIT_INVALID


def test_byte_identical_reruns(capsys, files):
    inst = files("i.json", '{"px": [5, 2, 0, 4, 1, 3], "py": [1, 3, 5, 0, 2, 4]}')
    outputs = [run(capsys, cmd, "-i", inst)[1] for cmd in ("solve", "solve", "graph", "graph")]
    assert outputs[0] == outputs[1] and outputs[2] == outputs[3]


def test_oracle_triangle(capsys, files):
    inst = files("tri.json", TRI)
    code, out, _ = run(capsys, "oracle", "-i", inst, "--objective", "perimeter")
    assert code == EXIT_OK and json.loads(out)["optimum"] == 4
    code, out, _ = run(capsys, "oracle", "-i", inst, "--objective", "max-edge", "--max-side", "2")
    assert json.loads(out)["optimum"] == 2
    code, out, _ = run(capsys, "oracle", "-i", inst, "--objective", "unit", "--max-side", "2")
    assert code == EXIT_INVALID and json.loads(out)["optimum"] is False


def test_oracle_guard(capsys, files):
    inst = files("i.json", '{"px": [0, 1, 2, 3, 4], "py": [4, 2, 0, 3, 1]}')
    code, _, err = run(capsys, "oracle", "-i", inst, "--ceiling", "5")
    assert code == EXIT_GUARD and "exceeded" in err
    assert run(capsys, "oracle", "-i", inst, "--ceiling", "0")[0] == EXIT_INPUT


def test_oracle_agrees_with_solve(capsys, files):
    for py in ([0, 1, 2, 3], [3, 1, 0, 2], [2, 0, 3, 1], [1, 3, 0, 2, 4]):
        n = len(py)
        inst = files("i.json", json.dumps({"px": list(range(n)), "py": py}))
        solved = json.loads(run(capsys, "solve", "-i", inst)[1])["metrics"]["perimeter"]
        oracle = json.loads(run(capsys, "oracle", "-i", inst)[1])["optimum"]
        assert solved == oracle


def test_baseline_n5(capsys, files):
    inst = files("i.json", '{"px": [0, 1, 2, 3, 4], "py": [3, 1, 4, 0, 2]}')
    code, out, _ = run(capsys, "baseline", "-i", inst)
    doc = json.loads(out)
    assert code == EXIT_OK
    assert doc["metrics"] == {"perimeter": 16, "width": 4, "height": 4}
    assert doc["provenance"] == "rank-baseline"


def test_graph_dot(capsys, files):
    code, out, _ = run(capsys, "graph", "-i", files("tri.json", TRI))
    assert code == EXIT_OK and out.startswith("graph ") and out.count("--") == 3


def test_render_single_vertex(capsys, files):
    code, out, _ = run(capsys, "render", "-i", files("one.json", '{"n": 1, "px": [0], "py": [0]}'))
    assert code == EXIT_OK
    root = ET.fromstring(out)
    ns = "{http://www.w3.org/2000/svg}"
    assert root.tag == ns + "svg" and root.get("version") == "1.1"
    assert len(root.findall(f".//{ns}circle")) == 1
    assert [t.text for t in root.findall(f".//{ns}text")] == ["0"]


def test_render_colors_and_flip(capsys, files):
    code, out, _ = run(capsys, "render", "-i", files("tri.json", TRI), "--cell", "20")
    assert code == EXIT_OK
    assert "matrix(1 0 0 -1" in out
    assert 'stroke="purple"' in out and 'stroke="blue"' in out and 'stroke="lightcoral"' in out


def test_render_labels_from_instance(capsys, files):
    inst = files("lab.json", '{"px": ["a", "b"], "py": ["b", "a"]}')
    out = run(capsys, "render", "-i", inst, "--baseline")[1]
    texts = [t.text for t in ET.fromstring(out).iter("{http://www.w3.org/2000/svg}text")]
    assert sorted(texts) == ["a", "b"]
