import json
import os
import subprocess
from pathlib import Path

import pytest

import brauer

CORPUS = Path(os.environ.get("BRAUER_CORPUS_DIR", Path(__file__).resolve().parents[2] / "corpus"))
CLI = os.environ.get("BRAUER_CLI")


def load(name):
    return brauer.Graph.load(str(CORPUS / f"{name}.bg"))


def test_one_edge_tree():
    g = load("g1")
    walks, stabilized = brauer.admissible_walks(g)
    assert walks == ["e+", "e-"]
    assert stabilized
    assert brauer.two_term_tilting(g) == [["e+"], ["e-"]]
    assert g.algebra_dim() == 2


def test_parse_errors_are_typed():
    with pytest.raises(brauer.ValidationError):
        brauer.Graph.parse("vertex u: e\nedge E: e e\n")
    with pytest.raises(brauer.BrauerError):
        brauer.Graph.parse("nonsense")


def test_refuses_infinite_enumeration():
    g = load("two_loop")
    assert not g.is_tilting_discrete()
    with pytest.raises(brauer.NotEnumerable):
        brauer.two_term_tilting(g)
    walks, stabilized = brauer.admissible_walks(g, 2)
    assert walks and not stabilized


def test_line_and_oracle():
    g = load("line2")
    assert len(brauer.two_term_tilting(g)) == 6
    report = brauer.crosscheck(g, 2)
    assert report["disagreements"] == []
    assert brauer.compatible(g, "a+", "a+ b-") == brauer.pretilting(g, "a+", "a+ b-")
    assert brauer.canonical_walk(g, "bbar+ abar-") == "a- b+"


def test_crossing_walk():
    g = load("walk_example")
    crossing = "1+ 2- 3+ 6bar- 5bar+ 4bar- 3bar+ 2bar- 1bar+ 4-"
    assert not brauer.is_admissible(g, crossing)
    assert brauer.hom_m_to_n(g, crossing, crossing) == 3


def test_flip_round_trip():
    g = load("line2")
    f = g.flip("E1", "left")
    assert brauer.Graph.parse(f.serialize()) == f
    assert f.flip("E1", "right") == g


def test_hasse_json():
    data = json.loads(brauer.hasse_json(load("loop_pendant")))
    assert data["type"] == "HasseQuiver"
    assert len(data["nodes"]) == 8


@pytest.mark.skipif(CLI is None, reason="CLI path not provided")
def test_cli_outputs_reparse():
    out = subprocess.run([CLI, "flip", str(CORPUS / "triangle.bg"), "--edge", "A", "--direction", "right"],
                         capture_output=True, text=True, check=False)
    assert out.returncode == 0
    assert brauer.Graph.parse(out.stdout).num_edges == 3

    g = load("line3")
    walks = subprocess.run([CLI, "walks", str(CORPUS / "line3.bg")], capture_output=True, text=True, check=True)
    listed = walks.stdout.splitlines()
    assert listed == brauer.admissible_walks(g)[0]
    assert all(brauer.canonical_walk(g, w) == w for w in listed)
