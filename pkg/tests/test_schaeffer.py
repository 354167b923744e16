import numpy as np
import pytest

from quadmap.enumeration import well_labeled_trees
from quadmap.harness import sample_rooted_pd
from quadmap.labeled import LabeledTree, decode, encode, minima_set, reroot, stabilizer_size
from quadmap.planar_map import bfs_distances, pointed_code, radius, rooted_code
from quadmap.schaeffer import (
    GluingAssignment,
    assemble,
    canonical_gluing,
    doddering,
    fiber,
    gluer,
    point,
    predecessor_table,
    quad_of_tree,
    tree_of_quad,
)
from quadmap.trees import Walk, height_process, visit_order, walk_to_tree


EDGE = walk_to_tree(Walk((0, 1, 0)))


def test_predecessor_hand_cases():
    assert predecessor_table((1,)).values == (-1,)
    assert predecessor_table((1, 2, 1)).values == (-1, 0, -1)
    assert predecessor_table((1, 1, 2)).values == (-1, -1, 1)


def test_predecessor_rejects_bad_processes():
    for bad in [(2, 1), (1, 0, 1), (1, 3)]:
        with pytest.raises(ValueError):
            predecessor_table(bad)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_predecessor_nesting(n):
    # P(i) < j < i forces P(i) <= P(j) < j
    for t in well_labeled_trees(n):
        p = predecessor_table(encode(t).labels[:-1]).values
        for i, pi in enumerate(p):
            for j in range(pi + 1, i):
                assert pi <= p[j] < j


def test_doddering_hand_case():
    d = doddering((1, 2, 1))
    # reverse-order check: root children are tags 2 then 0 clockwise,
    # node 0 carries node 1
    assert d.tags == (-1, 2, 0, 1)
    assert d.tree.children == ((1, 2), (), (3,), ())
    assert height_process(d.tree, "reverse") == (0, 1, 2, 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_doddering_reverse_height_identity(n):
    for t in well_labeled_trees(n):
        body = encode(t).labels[:-1]
        d = doddering(body)
        assert d.tree.n_nodes == len(body) + 1
        assert d.tree.n == len(body)
        assert height_process(d.tree, "reverse") == (0,) + tuple(body)
        order = visit_order(d.tree, "reverse")
        assert tuple(d.tags[u] for u in order) == tuple(range(-1, len(body)))


def test_quad_of_tree_hand_cases():
    q_center = quad_of_tree(LabeledTree(EDGE, (1, 1)))
    q_end = quad_of_tree(LabeledTree(EDGE, (1, 2)))
    # both are the one-face path; they differ by where the origin sits
    for q in (q_center, q_end):
        assert (q.map.n_vertices, q.map.n_edges, q.map.n_faces) == (3, 2, 1)
        assert q.map.tail[q.root] == 0
    assert q_center.map.degree(0) == 2
    assert q_end.map.degree(0) == 1


def test_quad_of_tree_rejects_non_well_labeled():
    with pytest.raises(ValueError):
        quad_of_tree(LabeledTree(EDGE, (1, 0)))


@pytest.mark.parametrize("n", range(1, 6))
def test_bijection_injective_and_counts(n):
    trees = well_labeled_trees(n)
    quads = [quad_of_tree(t) for t in trees]
    codes = {rooted_code(q.map, q.root) for q in quads}
    assert len(codes) == len(trees)
    for q in quads:
        assert q.map.n_edges == 2 * n
        assert q.map.n_vertices == n + 2
        assert all(len(f) == 4 for f in q.map.faces)


@pytest.mark.parametrize("n", range(1, 6))
def test_inverse_round_trip_exhaustive(n):
    for t in well_labeled_trees(n):
        assert tree_of_quad(quad_of_tree(t)) == t


def test_inverse_round_trip_large_random():
    rng = np.random.default_rng(123)
    for n in (10**3, 10**4, 10**5):
        for _ in range(3):
            tree, quad = sample_rooted_pd(n, rng)
            assert tree_of_quad(quad) == tree


def test_inverse_n1_endpoint():
    q = quad_of_tree(LabeledTree(EDGE, (1, 2)))
    assert tree_of_quad(q).labels == (1, 2)


@pytest.mark.parametrize("n", range(1, 6))
def test_labels_are_bfs_distances(n):
    for t in well_labeled_trees(n):
        q = quad_of_tree(t)
        dist = bfs_distances(q.map, 0)
        assert dist[0] == 0
        assert all(dist[u + 1] == t.labels[u] for u in range(t.tree.n_nodes))
        assert radius(q) == max(t.labels)
        assert q.map.degree(0) == len(minima_set(encode(t).labels))


@pytest.mark.parametrize("n", range(1, 5))
def test_assemble_matches_direct_construction(n):
    for t in well_labeled_trees(n):
        body = encode(t).labels[:-1]
        d = doddering(body)
        g = gluer(t)
        built = assemble(d, g, canonical_gluing(d, g))
        q = quad_of_tree(t)
        assert rooted_code(built.map, built.root) == rooted_code(q.map, q.root)
        assert built.map.n_vertices == n + 2


def test_assemble_n1_no_gluing():
    # walk (0,1,0): its two corners sit on distinct nodes, nothing merges
    t = LabeledTree(EDGE, (1, 1))
    d = doddering(encode(t).labels[:-1])
    g = gluer(t)
    built = assemble(d, g, canonical_gluing(d, g))
    assert built.map.n_vertices == 3  # a path, no identification


def test_assemble_rejects_bad_assignments():
    t = LabeledTree(EDGE, (1, 1))
    d = doddering(encode(t).labels[:-1])
    g = gluer(t)
    with pytest.raises(ValueError):
        GluingAssignment((1, 0))  # not increasing
    with pytest.raises(ValueError):
        assemble(d, g, GluingAssignment((0,)))  # wrong size
    with pytest.raises(ValueError):
        assemble(d, g, GluingAssignment((0, 5)))  # target out of range
    # corners 0 and 2 of a cherry share its root node, but the doddering
    # nodes sent there have depths 1 and 2
    d2 = doddering((1, 2, 2, 1))
    g2 = gluer(walk_to_tree(Walk((0, 1, 0, 1, 0))))
    with pytest.raises(ValueError):
        assemble(d2, g2, canonical_gluing(d2, g2))


def test_point_hand_cases():
    quads = [quad_of_tree(LabeledTree(EDGE, labels)) for labels in ((1, 1), (1, 2))]
    codes = {pointed_code(point(q).map, point(q).origin) for q in quads}
    assert len(codes) == 2


def test_fiber_n1():
    for labels in ((1, 1), (1, 2)):
        pq = point(quad_of_tree(LabeledTree(EDGE, labels)))
        assert len(fiber(pq)) == 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_fiber_structure(n):
    total = 0
    pointed = {}
    for t in well_labeled_trees(n):
        q = quad_of_tree(t)
        pq = point(q)
        code = pointed_code(pq.map, pq.origin)
        e = encode(t)
        minima = minima_set(e.labels)
        fib = fiber(pq)
        # representative count balances minima against symmetries
        assert len(fib) == len(minima) // stabilizer_size(t)
        # rerooting at each minimum reaches exactly the fiber
        tree_route = {
            rooted_code(quad_of_tree(decode(reroot(e, th))).map, 1) for th in minima
        }
        assert tree_route == {rooted_code(f.map, f.root) for f in fib}
        # pointing is invariant along the fiber
        for th in minima:
            q2 = quad_of_tree(decode(reroot(e, th)))
            assert pointed_code(q2.map, q2.map.tail[q2.root]) == code
        if code not in pointed:
            pointed[code] = len(fib)
            total += len(fib)
    assert total == len(well_labeled_trees(n))
