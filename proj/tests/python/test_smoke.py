import os
from fractions import Fraction
from pathlib import Path

import pytest

import omlab

FIXTURES = Path(os.environ.get("OMLAB_FIXTURES", Path(__file__).resolve().parent.parent / "fixtures"))


def read(name):
    return (FIXTURES / name).read_text()


def test_w1_points_give_the_expected_om():
    config = omlab.parse_points(read("w1.points"))
    om = omlab.om_from_points(config)
    assert om.rank == 1
    assert om.emit() == read("w1.om")
    assert om.positive_circuits() == [["a", "b"], ["a", "d"], ["b", "c"], ["c", "d"]]


def test_solve_colorful():
    result = omlab.solve_colorful(omlab.parse_points(read("w1.points")))
    assert result["witness"] == ["a", "d"]
    assert result["transversal"] == ["a", "d"]
    assert result["certificate"] == {"a": Fraction(1, 2), "d": Fraction(1, 2)}


def test_hull_membership_returns_fractions():
    config = omlab.parse_points(read("w1.points"))
    assert omlab.hull_membership(config, ["a", "d"]) == {"a": Fraction(1, 2), "d": Fraction(1, 2)}
    assert omlab.hull_membership(config, ["a", "c"]) is None


def test_witness_and_dual_witness():
    om = omlab.parse_oriented_matroid(read("w1.om"))
    m = omlab.parse_matroid(read("w1_partition.matroid"))
    report = omlab.find_witness(om, m)
    assert report["hypothesis_holds"]
    assert report["witness"] == ["a", "d"]
    assert omlab.find_dual_witness(m, om.dual())["witness"] == ["a", "d"]


def test_matroid_duality():
    u24 = omlab.uniform_matroid(["a", "b", "c", "d"], 2)
    assert u24.dual() == u24
    assert u24.rank(["a", "b", "c"]) == 2
    p = omlab.partition_matroid(["a", "b", "c", "d"], [["a", "b"], ["c", "d"]])
    assert p.double_circuits() == [["a", "b", "c", "d"]]


def test_errors_map_to_exceptions():
    with pytest.raises(omlab.AxiomViolation):
        omlab.parse_oriented_matroid(read("bad_o2.om"))
    with pytest.raises(omlab.ParseError):
        omlab.parse_matroid("circuit: a b\n")
    one_side = omlab.om_from_points(omlab.parse_points(read("one_side.points")))
    m = omlab.parse_matroid(read("w1_partition.matroid"))
    with pytest.raises(omlab.HypothesisUnmet):
        omlab.find_witness(one_side, m)
    assert issubclass(omlab.RankMismatch, omlab.Error)


def test_gen_random_is_deterministic():
    assert omlab.gen_random(1, 1) == read("seed1_d1.points")
    assert omlab.gen_random(9, 2) == omlab.gen_random(9, 2)
