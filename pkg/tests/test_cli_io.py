import json
import subprocess
import sys

import numpy as np
import pytest

from scalefree_clustering.builder import havel_hakimi
from scalefree_clustering.cli import main
from scalefree_clustering.degree_model import DegreeDistribution, make_rng, sample_sequence
from scalefree_clustering.graph import SimpleGraph
from scalefree_clustering.io import (
    FormatError,
    format_edge_list,
    parse_degrees,
    parse_edge_list,
    read_degrees,
    read_edge_list,
    write_degrees,
    write_edge_list,
)

K4_TEXT = "# n=4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"


def test_degree_round_trip(tmp_path):
    seq = sample_sequence(DegreeDistribution(1.5), 1000, make_rng(7))
    path = tmp_path / "deg.txt"
    write_degrees(seq, str(path))
    text = path.read_text()
    assert text.endswith("\n") and len(text.splitlines()) == 1000
    assert read_degrees(str(path)) == seq


def test_edge_list_round_trip(tmp_path):
    g = havel_hakimi(sample_sequence(DegreeDistribution(1.5), 500, make_rng(0)))
    path = tmp_path / "g.edges"
    write_edge_list(g, str(path))
    lines = path.read_text().splitlines()
    assert lines[0] == "# n=500"
    pairs = [tuple(map(int, l.split())) for l in lines[1:]]
    assert pairs == sorted(pairs) and all(u < v for u, v in pairs)
    assert read_edge_list(str(path)) == g


def test_edge_list_format():
    assert format_edge_list(SimpleGraph.complete(4)) == K4_TEXT


@pytest.mark.parametrize("text", ["3\n-1\n", "3\nx\n", "1.5\n"])
def test_bad_degrees(text):
    with pytest.raises(FormatError):
        parse_degrees(text)


@pytest.mark.parametrize("text", [
    "0 1\n",
    "# n=3\n0 1\n0 1\n",
    "# n=3\n0 1\n1 0\n",
    "# n=3\n1 1\n",
    "# n=3\n0 5\n",
    "# n=3\n0 1 2\n",
    "# n=3\n-1 2\n",
    "",
])
def test_bad_edge_lists(text):
    with pytest.raises(FormatError):
        parse_edge_list(text)


def test_cli_metrics_k4(tmp_path, capsys):
    p = tmp_path / "k4.edges"
    p.write_text(K4_TEXT)
    assert main(["metrics", str(p)]) == 0
    out = capsys.readouterr().out.strip()
    assert out == '{"edges":6,"wedges":12,"triangles":4,"c1":1.0,"c2":1.0,"max_degree":3}'


def test_cli_pipeline(tmp_path, capsys):
    deg, edges = tmp_path / "deg.txt", tmp_path / "g.edges"
    assert main(["sample", "--gamma", "1.5", "--dmin", "1", "--n", "1000", "--seed", "7", "-o", str(deg)]) == 0
    rc = main(["check", str(deg)])
    verdict = json.loads(capsys.readouterr().out)
    assert rc == (0 if verdict["graphic"] else 1)
    assert verdict["graphic"]
    assert main(["build", str(deg), "-o", str(edges)]) == 0
    assert main(["metrics", str(edges)]) == 0
    m = json.loads(capsys.readouterr().out)
    total = sum(int(x) for x in deg.read_text().split())
    assert m["edges"] == total // 2
    assert list(m) == ["edges", "wedges", "triangles", "c1", "c2", "max_degree"]


def test_cli_check_not_graphic(tmp_path, capsys):
    p = tmp_path / "d.txt"
    p.write_text("3\n3\n3\n1\n")
    assert main(["check", str(p)]) == 1
    assert json.loads(capsys.readouterr().out) == {"graphic": False, "failing_k": 2, "odd_sum": False}


def test_cli_build_non_graphic(tmp_path, capsys):
    p = tmp_path / "d.txt"
    p.write_text("3\n3\n3\n1\n")
    assert main(["build", str(p), "-o", str(tmp_path / "g")]) == 1
    err = capsys.readouterr().err
    assert err.startswith("error:") and err.count("\n") == 1


@pytest.mark.parametrize("cmd, text", [
    ("check", "2\n-1\n"),
    ("metrics", "# n=3\n0 1\n0 1\n"),
    ("metrics", "# n=3\n2 2\n"),
])
def test_cli_malformed_inputs(tmp_path, capsys, cmd, text):
    p = tmp_path / "in.txt"
    p.write_text(text)
    assert main([cmd, str(p)]) == 1
    assert capsys.readouterr().err.startswith("error:")


@pytest.mark.parametrize("argv", [
    ["sample", "--gamma", "1.0", "--n", "10"],
    ["sample", "--gamma", "1.5"],
    ["sample", "--gamma", "1.5", "--n", "10", "--seed", "-3"],
    ["scaling", "--gamma", "1.5", "--ngrid", "10,x"],
    ["frobnicate"],
])
def test_cli_usage_errors(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_cli_scaling_outputs_byte_identical(tmp_path):
    outs = []
    for i, workers in enumerate(("1", "1", "2")):
        csv_path = tmp_path / f"s{i}.csv"
        args = ["scaling", "--gamma", "1.5", "--ngrid", "100,300,1000", "--replicas", "3",
                "--seed", "5", "--workers", workers, "-o", str(csv_path)]
        assert main(args) == 0
        outs.append((csv_path.read_bytes(), csv_path.with_suffix(".json").read_bytes()))
    assert outs[0] == outs[1] == outs[2]
    header = outs[0][0].decode().splitlines()[0]
    assert header == ("n,replicas_used,mean_edges,sd_edges,mean_wedges,sd_wedges,mean_triangles,"
                      "sd_triangles,mean_c1,sd_c1,mean_max_degree,mean_h_index,graphic_fraction")
    footer = json.loads(outs[0][1])
    assert "fitted" in footer and "theory" in footer


def test_cli_rate_commands(tmp_path):
    for cmd in ("graphic-rate", "simplicity"):
        p = tmp_path / f"{cmd}.csv"
        assert main([cmd, "--gamma", "1.5", "--ngrid", "10,100", "--replicas", "5", "-o", str(p)]) == 0
        lines = p.read_text().splitlines()
        assert lines[0] == "n,fraction" and [l.split(",")[0] for l in lines[1:]] == ["10", "100"]


def test_cli_stdin_stdout():
    proc = subprocess.run(
        [sys.executable, "-m", "scalefree_clustering", "build", "-", "-o", "-"],
        input="2\n2\n2\n", capture_output=True, text=True, check=True,
    )
    assert proc.stdout == "# n=3\n0 1\n0 2\n1 2\n"


def test_cli_same_argv_same_bytes(tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    for p in (a, b):
        main(["sample", "--gamma", "2.5", "--dmin", "2", "--n", "5000", "--seed", "123", "-o", str(p)])
    assert a.read_bytes() == b.read_bytes()
