import subprocess
import sys
import xml.etree.ElementTree as ET

import pydot
import pytest

from metallic.cli import run
from metallic.numeration import seq_M


def call(capsys, *argv):
    status = run(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def test_encode_decode(capsys):
    assert call(capsys, "encode", "--p", "5", "7")[:2] == (0, "21\n")
    assert call(capsys, "decode", "--p", "5", "0")[:2] == (0, "0\n")
    # p=16: m_1 = 14, dotted digits above 9
    assert call(capsys, "decode", "--p", "16", "1.0")[1] == "14\n"
    assert call(capsys, "encode", "--p", "16", "13")[1] == "13\n"
    assert call(capsys, "encode", "--p", "16", "27")[1] == "1.13\n"


def test_seq(capsys):
    status, out, _ = call(capsys, "seq", "--p", "5", "--kind", "M", "--upto", "3")
    assert status == 0 and out.split() == ["1", "4", "12", "33"]


def test_arithmetic_commands(capsys):
    assert call(capsys, "add", "--p", "5", "21", "1")[1] == "100\n"
    assert call(capsys, "sub", "--p", "5", "1000", "11")[1] == "201\n"
    assert call(capsys, "cmp", "--p", "5", "12", "20")[1] == "less\n"
    assert call(capsys, "inc", "--p", "5", "11")[1] == "12\n"
    assert call(capsys, "dec", "--p", "5", "100")[1] == "21\n"


def test_usage_errors(capsys):
    assert call(capsys, "encode", "--p", "4", "3")[0] == 2
    assert call(capsys, "decode", "--p", "5", "212")[0] == 2
    assert call(capsys, "sub", "--p", "5", "1", "10")[0] == 2
    assert call(capsys, "dec", "--p", "5", "0")[0] == 2
    assert call(capsys, "node", "--p", "5", "0")[0] == 2
    assert call(capsys, "bogus")[0] == 2
    assert call(capsys, "encode", "7")[0] == 2


def test_node(capsys):
    status, out, _ = call(capsys, "node", "--p", "5", "10")
    assert status == 0
    assert "number: 3" in out and "class: w0" in out
    assert "preferred son: 100 (8), son 2 of 3" in out
    status, out, _ = call(capsys, "node", "--p", "5", "--tree", "black", "2")
    assert "successor: 20 (6), son 1 of 10 (3)" in out


def test_neighbors(capsys):
    status, out, _ = call(capsys, "neighbors", "--p", "5", "10")
    assert out.splitlines() == ["1: 1", "2: 21", "3: 100", "4: 101", "5: 102"]
    status, out, _ = call(capsys, "neighbors", "--p", "5", "--tiling", "p23", "--tree", "black", "1")
    assert status == 0 and len(out.splitlines()) == 7


def test_path(capsys):
    status, out, _ = call(capsys, "path", "--p", "5", "--algo", "bottomup", "102")
    lines = out.splitlines()
    assert [line.split()[1] for line in lines[:-1]] == ["1", "4", "10"]
    assert lines[-1].startswith("visits: ")
    for algo in ("topdown", "black", "strips"):
        assert call(capsys, "path", "--p", "7", "--algo", algo, "1032")[0] == 0


def test_bench_is_deterministic(capsys):
    first = call(capsys, "bench", "--p", "5", "--len", "50", "--samples", "3")[1]
    second = call(capsys, "bench", "--p", "5", "--len", "50", "--samples", "3", "--seed", "0")[1]
    assert first == second and "topdown" in first


def test_verify_exit_codes(capsys, monkeypatch):
    status, out, _ = call(capsys, "verify", "--p", "5", "--levels", "3")
    assert status == 0 and all(line.endswith("PASS") for line in out.splitlines())
    import metallic.oracle as oracle

    monkeypatch.setattr(oracle, "father", lambda c: c)
    status, out, _ = call(capsys, "verify", "--p", "5", "--levels", "3")
    assert status == 1 and "CHECK father p=5 levels=3 FAIL" in out


def test_render_dot(capsys):
    status, out, _ = call(capsys, "render", "--p", "9", "--levels", "3", "--format", "dot")
    (graph,) = pydot.graph_from_dot_data(out)
    nodes = [n for n in graph.get_nodes() if n.get_name() not in ("node", "edge", "graph")]
    assert len(nodes) == seq_M(9, 3) == 385
    assert len(graph.get_edges()) == 384
    fills = {n.get_name(): n.get("fillcolor").strip('"') for n in nodes}
    assert fills["n2"] == "#d62728"  # black son of the root
    assert fills["n3"] == "#1f77b4"  # a wa node
    preferred = [n for n in nodes if n.get("penwidth")]
    assert preferred and all(n.get("fillcolor").strip('"') == "#2ca02c" for n in preferred)


def test_render_svg(capsys):
    status, out, _ = call(capsys, "render", "--p", "5", "--tree", "black", "--levels", "3", "--format", "svg")
    root = ET.fromstring(out)
    circles = root.findall(".//{http://www.w3.org/2000/svg}circle")
    assert status == 0 and len(circles) == 21


def test_console_script():
    done = subprocess.run([sys.executable, "-m", "metallic.cli", "encode", "--p", "5", "7"],
                          capture_output=True, text=True)
    assert done.returncode == 0 and done.stdout == "21\n"
