"""Matroids, oriented matroids and Holmsen-type witness search."""

from fractions import Fraction

from . import _omlab
from ._omlab import (
    AxiomViolation,
    Error,
    GroundMismatch,
    HypothesisUnmet,
    Matroid,
    OrientedMatroid,
    ParseError,
    PointConfig,
    RankMismatch,
    check_hypothesis,
    find_dual_witness,
    find_witness,
    gen_random,
    om_from_points,
    parse_matroid,
    parse_oriented_matroid,
    parse_points,
    partition_matroid,
    uniform_matroid,
)


def hull_membership(config, labels):
    """Convex coefficients as Fractions, or None when x is not in the hull."""
    cert = _omlab.hull_membership(config, list(labels))
    if cert is None:
        return None
    return {k: Fraction(v) for k, v in cert.items()}


def solve_colorful(config):
    """Witness, colorful transversal and its hull certificate (as Fractions)."""
    result = _omlab.solve_colorful(config)
    if result.get("certificate") is not None:
        result["certificate"] = {k: Fraction(v) for k, v in result["certificate"].items()}
    return result


__all__ = [
    "AxiomViolation",
    "Error",
    "GroundMismatch",
    "HypothesisUnmet",
    "Matroid",
    "OrientedMatroid",
    "ParseError",
    "PointConfig",
    "RankMismatch",
    "check_hypothesis",
    "find_dual_witness",
    "find_witness",
    "gen_random",
    "hull_membership",
    "om_from_points",
    "parse_matroid",
    "parse_oriented_matroid",
    "parse_points",
    "partition_matroid",
    "solve_colorful",
    "uniform_matroid",
]
