from fractions import Fraction

import pytest

from quadmap.enumeration import (
    catalan,
    enumerate_family,
    labeled_trees,
    law_tables,
    orbit_decomposition,
    plane_trees,
    rooted_quads,
    tv_distance,
    unrooted_plane_tree_count,
    walkup_count,
    well_labeled_trees,
)
from quadmap.planar_map import pointed_code
from quadmap.schaeffer import point


def test_basic_counts():
    assert len(plane_trees(2)) == 2
    assert len(labeled_trees(2)) == 18
    assert len(well_labeled_trees(2)) == 9
    assert len(rooted_quads(2)) == 9
    assert len(rooted_quads(1)) == 2


@pytest.mark.parametrize("n", range(1, 6))
def test_catalan_counts(n):
    assert len(plane_trees(n)) == catalan(n)
    assert len(labeled_trees(n)) == catalan(n) * 3**n


@pytest.mark.parametrize("n", range(1, 6))
def test_bijection_count_identity(n):
    assert len(well_labeled_trees(n)) == len(rooted_quads(n))


def test_enumerate_family_dispatch():
    assert len(enumerate_family(2, "plane_trees")) == 2
    with pytest.raises(ValueError):
        enumerate_family(2, "nonsense")
    with pytest.raises(ValueError):
        enumerate_family(7, "plane_trees")  # beyond the exhaustive bound


def test_walkup_values():
    assert [walkup_count(n) for n in range(2, 7)] == [1, 2, 3, 6, 14]


@pytest.mark.parametrize("n", range(2, 7))
def test_walkup_matches_orbit_oracle(n):
    assert walkup_count(n) == unrooted_plane_tree_count(n)


def test_walkup_n1_routed_to_oracle():
    # the closed form gives 2 at n = 1; the true count is 1
    assert walkup_count(1) == 1
    assert unrooted_plane_tree_count(1) == 1


def test_orbit_decomposition_n1():
    dec = orbit_decomposition(1)
    assert dec.n_orbits == 2
    assert sorted((o.size, o.stabilizer) for o in dec.orbits) == [(1, 2), (2, 1)]
    assert dec.total == 3


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_orbit_decomposition_identities(n):
    dec = orbit_decomposition(n)
    assert dec.total == catalan(n) * 3**n
    for orbit in dec.orbits:
        assert orbit.size * orbit.stabilizer == 2 * n
    pointed = {
        pointed_code(point(q).map, point(q).origin) for q in rooted_quads(n)
    }
    assert dec.n_orbits == len(pointed)


def test_law_tables_n1():
    tables = law_tables(1)
    by_radius = {row.radius: row for row in tables.pointed}
    assert by_radius[1].p_s == Fraction(1, 3)  # center-pointed path
    assert by_radius[2].p_s == Fraction(2, 3)  # endpoint-pointed path
    assert all(row.p_u == Fraction(1, 2) for row in tables.pointed)
    by_degree = {row.root_degree: row for row in tables.rooted}
    assert by_degree[1].p_d == Fraction(2, 3)
    assert by_degree[2].p_d == Fraction(1, 3)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_laws_sum_to_one(n):
    tables = law_tables(n)
    assert sum(r.p_u for r in tables.pointed) == 1
    assert sum(r.p_s for r in tables.pointed) == 1
    assert sum(r.p_d for r in tables.rooted) == 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_degree_weighted_law_formula(n):
    # P_D(q) = 2n / (C_n 3^n deg(q)) summing to 1 forces the degree identity
    tables = law_tables(n)
    total = catalan(n) * 3**n
    assert sum(Fraction(1, r.root_degree) for r in tables.rooted) == Fraction(
        total, 2 * n
    )


def test_tv_distance_values():
    assert tv_distance(1) == Fraction(1, 6)
    # sizes 1 and 2 tie exactly; the drop only happens at size 3
    assert tv_distance(2) == Fraction(1, 6)
    assert tv_distance(3) == Fraction(14, 117)
    assert tv_distance(3) < tv_distance(1)
    assert tv_distance(1) > 0  # equal laws would need all fibers equal
