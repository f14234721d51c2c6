"""Smoke tests for the python module and the CLI."""

import os
import subprocess
import tempfile

import pytest

import distinguo as dg


def test_generate_and_inspect():
    g = dg.generate_family("star", [5])
    assert g.n == 6
    assert g.m == 5
    assert g.degree(0) == 5
    assert g.max_degree() == 5
    assert g.is_connected()


def test_parse_round_trip():
    g = dg.generate_family("complete_bipartite", [3, 4])
    assert dg.parse_graph(dg.emit_edge_list(g)) == g
    assert dg.parse_graph(dg.emit_graph6(g), format="graph6") == g


def test_graph6_k4():
    g = dg.parse_graph("C~", format="graph6")
    assert g.n == 4 and g.m == 6


def test_bounds():
    assert dg.central_binomial(5) == 10
    assert dg.min_k_threshold(11) == 6
    assert dg.colour_budget(13)["k"] == 8
    assert dg.list_inequality_holds(8)
    assert not dg.list_inequality_holds(7)


def test_family_colouring_verifies():
    c = dg.colour_family_distinguishing("star", 9)
    assert c.k == 6
    assert c.used_colours() == 6
    assert dg.monochromatic_two_cycles(c) == []
    assert dg.monochromatic_two_paths(c) == []
    assert dg.is_distinguishing(c)["distinguishing"]


def test_main_construction():
    g = dg.generate_family("complete_bipartite", [4, 4])
    c = dg.colour_distinguishing_type1(g)
    assert c.used_colours() <= 4
    assert dg.monochromatic_two_paths(c) == []
    assert dg.is_distinguishing(c)["distinguishing"]


def test_minimum_colouring():
    c = dg.colour_type1_minimum(dg.generate_family("cycle", [4]))
    assert c.k == 2


def test_type2_pairs():
    c = dg.colour_distinguishing_type2_complete(11)
    assert c.k == 5
    assert dg.monochromatic_two_paths(c) == []
    assert dg.is_distinguishing(c)["distinguishing"]


def test_oracle():
    assert dg.chromatic_number(dg.generate_family("complete", [4])) == 4
    res = dg.exact_index(dg.generate_family("cycle", [5]), distinguishing=False)
    assert res["k"] == 3 and res["proven_optimal"]
    found = dg.search_colouring(dg.generate_family("cycle", [4]), 2)
    assert found["status"] == "found"


def test_automorphisms():
    g = dg.generate_family("complete", [3])
    c = dg.ArcColouring(g, 1)
    for u, v in g.edges():
        c.set_colour(u, v, 1)
        c.set_colour(v, u, 1)
    report = dg.colour_automorphisms(c)
    assert report["group_order"] == 6
    assert report["fixed"] == []


def test_colouring_file_round_trip():
    c = dg.colour_family_distinguishing("cycle", 6)
    text = dg.emit_colouring(c)
    back = dg.parse_colouring(text)
    assert dg.emit_colouring(back) == text


def test_dot_output():
    g = dg.generate_family("path", [3])
    text = dg.dot_emit(g)
    assert text.count("->") == 4


def test_errors_are_python_exceptions():
    with pytest.raises(ValueError):
        dg.parse_graph("p 3 1\n1 5")
    with pytest.raises(ValueError):
        dg.generate_family("path", [1])


CLI = os.environ.get("DISTINGUO_CLI")


@pytest.mark.skipif(CLI is None, reason="DISTINGUO_CLI not set")
def test_cli_round_trip():
    with tempfile.TemporaryDirectory() as tmp:
        graph_file = os.path.join(tmp, "g.txt")
        col_file = os.path.join(tmp, "g.col")
        run = subprocess.run([CLI, "gen", "--family", "star:9", "--out", graph_file])
        assert run.returncode == 0
        run = subprocess.run(
            [CLI, "colour", "--in", graph_file, "--algo", "thm4", "--out", col_file]
        )
        assert run.returncode == 0
        run = subprocess.run([CLI, "verify", col_file, "--type1", "--distinguishing"])
        assert run.returncode == 0


@pytest.mark.skipif(CLI is None, reason="DISTINGUO_CLI not set")
def test_cli_index_and_exit_codes():
    out = subprocess.run(
        [CLI, "index", "--family", "cycle:5", "--type1"], capture_output=True, text=True
    )
    assert out.returncode == 0
    assert out.stdout.strip() == "3"

    # a violating colouring file: both arcs of one edge share a colour
    with tempfile.TemporaryDirectory() as tmp:
        bad = os.path.join(tmp, "bad.col")
        with open(bad, "w") as f:
            f.write("c 2 1\na 1 2 1\na 2 1 1\n")
        run = subprocess.run([CLI, "verify", bad, "--type1"], capture_output=True)
        assert run.returncode == 1

    run = subprocess.run([CLI, "index", "--family", "nosuch:3", "--type1"],
                         capture_output=True)
    assert run.returncode == 2


@pytest.mark.skipif(CLI is None, reason="DISTINGUO_CLI not set")
def test_cli_outputs_are_reproducible():
    a = subprocess.run(
        [CLI, "colour", "--family", "complete:6", "--algo", "minimum"],
        capture_output=True, text=True,
    )
    b = subprocess.run(
        [CLI, "colour", "--family", "complete:6", "--algo", "minimum"],
        capture_output=True, text=True,
    )
    assert a.returncode == 0 and a.stdout == b.stdout


@pytest.mark.skipif(CLI is None, reason="DISTINGUO_CLI not set")
def test_cli_dot_highlight():
    with tempfile.TemporaryDirectory() as tmp:
        col_file = os.path.join(tmp, "c.col")
        subprocess.run(
            [CLI, "colour", "--family", "cycle:6", "--algo", "family", "--out", col_file],
            check=True,
        )
        out = subprocess.run(
            [CLI, "dot", "--colouring", col_file, "--highlight", "3"],
            capture_output=True, text=True,
        )
        assert out.returncode == 0
        assert out.stdout.count("->") == 1  # one recoloured arc on an even cycle
