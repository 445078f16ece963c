"""Command line interface: payload on stdout, diagnostics on stderr."""

import json
import subprocess
import sys

import pytest

from prismatic import to_json
from prismatic.cli import run
from prismatic.shapes import LTROMINO, ziggurat

from goldens import CENSUS13_ROWSPANS, COCK3_GRID, COCK3_R0, shape_from_rows, two_coloring
from goldens import SQUARE5_SHAPE, SQUARE5_TWOS

PARAMS3 = json.dumps(
    {"n": 3, "r0": list(COCK3_R0), "start": 0, "sigma": list(range(1, 10))}
)


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_seq_text(capsys):
    code, out, err = invoke(capsys, "seq", "-n", "2", "-k", "2")
    assert code == 0
    assert out == "(1,1,2,2)\n"


def test_seq_json(capsys):
    code, out, _ = invoke(capsys, "seq", "-n", "2", "-k", "3", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["n"] == 2 and doc["k"] == 3 and doc["form"] == "cyclic"
    assert len(doc["symbols"]) == 8


def test_seq_acyclic(capsys):
    code, out, _ = invoke(capsys, "seq", "-n", "2", "-k", "2", "--acyclic", "--start", "1")
    assert code == 0
    word = out.strip()
    assert word.count(",") == 4  # five symbols


def test_seq_all(capsys):
    code, out, _ = invoke(capsys, "seq", "-n", "2", "-k", "4", "--all")
    assert code == 0
    assert len(out.splitlines()) == 16


def test_seq_eulerian(capsys):
    code, out, _ = invoke(capsys, "seq", "-n", "3", "-k", "2", "--method", "eulerian", "--seed", "5")
    assert code == 0
    again, out2, _ = invoke(capsys, "seq", "-n", "3", "-k", "2", "--method", "eulerian", "--seed", "5")
    assert out == out2


def test_cock_ascii_golden(capsys):
    code, out, _ = invoke(capsys, "cock", "--params", PARAMS3, "--ascii")
    assert code == 0
    assert out == COCK3_GRID + "\n"


def test_cock_json_verifies(capsys):
    code, out, _ = invoke(capsys, "cock", "--params", PARAMS3)
    assert code == 0
    doc = json.loads(out)
    code, out, _ = invoke(capsys, "verify", "--input", json.dumps(doc), "--pattern", "square")
    assert code == 0
    assert out == "de Bruijn: true\n"


def test_cock_locate(capsys):
    code, out, _ = invoke(capsys, "cock", "--params", PARAMS3, "--locate", "1", "2", "2", "1")
    assert code == 0
    assert out == "6 8\n"


def test_cock_bad_params_exit_2(capsys):
    bad = json.dumps({"n": 2, "r0": [1, 2, 1, 2], "start": 0, "sigma": [1, 2, 3, 4]})
    code, out, err = invoke(capsys, "cock", "--params", bad)
    assert code == 2
    assert not out
    assert err


def test_shapes_ziggurat_ascii(capsys):
    code, out, _ = invoke(capsys, "shapes", "ziggurat", "3", "--ascii")
    assert code == 0
    assert out == "..#..\n.###.\n#####\n"


def test_shapes_rect_json(capsys):
    code, out, _ = invoke(capsys, "shapes", "rect", "2x3")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["cells"]) == 6


def test_shapes_pyramid_trim(capsys):
    code, out, _ = invoke(capsys, "shapes", "pyramid", "8", "--trim", "bottom-right:1")
    assert code == 0
    assert len(json.loads(out)["cells"]) == 35


def test_shapes_bad_trim_exit_2(capsys):
    code, _, err = invoke(capsys, "shapes", "pyramid", "4", "--trim", "bottom-left:3")
    assert code == 2
    assert err


def test_verify_false_exit_1(capsys):
    colored = {"n": 2, "cells": [
        {"x": x, "y": y, "color": 1} for x in range(5) for y in range(5)
    ]}
    code, out, err = invoke(capsys, "verify", "--input", json.dumps(colored), "--pattern", "square")
    assert code == 1
    assert out == "de Bruijn: false\n"
    assert "missing" in err


def test_verify_disconnected_exit_1(capsys):
    colored = {"n": 2, "cells": [
        {"x": 0, "y": 0, "color": 1},
        {"x": 2, "y": 0, "color": 2},
    ]}
    code, out, err = invoke(capsys, "verify", "--input", json.dumps(colored), "--pattern", "square")
    assert code == 1
    assert out == "de Bruijn: false\n"
    assert "disconnected" in err


def test_verify_malformed_json_exit_2(capsys):
    code, _, err = invoke(capsys, "verify", "--input", "{not json", "--pattern", "square")
    assert code == 2
    assert err


def test_verify_known_good_from_file(tmp_path, capsys):
    doc = to_json(two_coloring(SQUARE5_SHAPE, SQUARE5_TWOS))
    path = tmp_path / "coloring.json"
    path.write_text(json.dumps(doc))
    code, out, _ = invoke(capsys, "verify", "--input", str(path), "--pattern", "square")
    assert code == 0
    assert out == "de Bruijn: true\n"


def test_enumerate_jsonl(capsys):
    shape = json.dumps(to_json(shape_from_rows(CENSUS13_ROWSPANS["A"])))
    code, out, _ = invoke(
        capsys, "enumerate", "--shape", shape, "--pattern", "ltromino", "--colors", "2"
    )
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 8
    for line in lines:
        doc = json.loads(line)
        assert doc["n"] == 2 and len(doc["cells"]) == 13


def test_enumerate_emit_prints_count(tmp_path, capsys):
    shape = json.dumps(to_json(shape_from_rows(CENSUS13_ROWSPANS["A"])))
    outfile = tmp_path / "solutions.jsonl"
    code, out, _ = invoke(
        capsys,
        "enumerate",
        "--shape", shape,
        "--pattern", "ltromino",
        "--colors", "2",
        "--emit", str(outfile),
    )
    assert code == 0
    assert out == "8\n"
    assert len(outfile.read_text().splitlines()) == 8


def test_enumerate_threads_identical(capsys):
    args = ("enumerate", "--shape", "ziggurat:3", "--pattern", "tee", "--colors", "1")
    code1, out1, _ = invoke(capsys, *args, "--threads", "1")
    code8, out8, _ = invoke(capsys, *args, "--threads", "8")
    assert code1 == code8 == 0
    assert out1 == out8


def test_enumerate_budget_exit_3(capsys, monkeypatch):
    monkeypatch.setenv("PRISMATIC_NODE_LIMIT", "40")
    code, out, err = invoke(
        capsys, "enumerate", "--shape", "rect:5x5", "--pattern", "square", "--colors", "2"
    )
    assert code == 3
    assert "budget" in err


def test_min_size_json(capsys):
    code, out, _ = invoke(
        capsys, "min-size", "--pattern", "square", "--instances", "1", "--cap", "6"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["size"] == 4
    assert len(doc["witnesses"]) == 1


def test_min_size_straight_pattern(capsys):
    code, out, _ = invoke(
        capsys, "min-size", "--pattern", "straight:3", "--instances", "4", "--cap", "8"
    )
    assert code == 0
    assert json.loads(out)["size"] == 6


def test_shape_census_small(capsys):
    code, out, _ = invoke(
        capsys,
        "shape-census",
        "--pattern", "straight:2",
        "--colors", "2",
        "--size", "5",
        "--bbox", "5x1",
    )
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 1
    assert rows[0]["colorings"] == 4


def test_transform_row_shift(capsys):
    doc = json.dumps(to_json(LTROMINO))
    code, out, _ = invoke(capsys, "transform", "--input", doc, "--map", "row-shift", "--normalize")
    assert code == 0
    cells = {(c["x"], c["y"]) for c in json.loads(out)["cells"]}
    assert cells == {(1, 0), (2, 0), (0, 1)}


def test_transform_unknown_map_exit_2(capsys):
    doc = json.dumps(to_json(LTROMINO))
    with pytest.raises(SystemExit):
        run(["transform", "--input", doc, "--map", "spin"])
    capsys.readouterr()


def test_count_commands(capsys):
    code, out, _ = invoke(capsys, "count", "cyclic", "-n", "2", "-k", "4")
    assert (code, out) == (0, "16\n")
    code, out, _ = invoke(capsys, "count", "acyclic", "-n", "2", "-k", "3")
    assert (code, out) == (0, "16\n")
    code, out, _ = invoke(capsys, "count", "cock", "-n", "3")
    assert (code, out) == (0, "78382080\n")


def test_count_needs_order(capsys):
    code, _, err = invoke(capsys, "count", "cyclic", "-n", "2")
    assert code == 2
    assert "order" in err


def test_render_round_trip(capsys):
    doc = json.dumps(to_json(ziggurat(2)))
    code, out, _ = invoke(capsys, "render", "--input", doc)
    assert code == 0
    assert out == ".#.\n###\n"
    code, out, _ = invoke(capsys, "render", "--input", doc, "--json")
    assert code == 0
    assert json.loads(out) == to_json(ziggurat(2))


def test_console_script_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "prismatic.cli", "count", "cock", "-n", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "96\n"
