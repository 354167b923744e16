"""Shared oracles for the test suite.

The rerooting oracle rebuilds the rerooted tree structurally (embedding,
corner, re-read) without touching the sequence formulas, and the map
enumerator lists rooted maps straight from rotation systems; both exist to
check the library against independent constructions.
"""
from itertools import permutations

import pytest

from quadmap.labeled import LabeledTree
from quadmap.planar_map import HalfEdgeMap, RootedMap, rooted_code
from quadmap.trees import PlaneTree, contour_nodes, dfw


def structural_reroot(labeled: LabeledTree, theta: int) -> LabeledTree:
    """Reroot by re-reading the embedded tree from the corner theta."""
    tree = labeled.tree
    nodes = contour_nodes(dfw(tree))
    incident = []
    for u in range(tree.n_nodes):
        lst = ([tree.parent[u]] if u else []) + list(tree.children[u])
        incident.append(lst)
    new_root, first = nodes[theta], nodes[theta + 1]

    out_children: dict[int, list[int]] = {}

    def descend(u: int, arrive: int) -> None:
        lst = incident[u]
        i = lst.index(arrive)
        kids = lst[i + 1 :] + lst[:i]
        out_children[u] = kids
        for k in kids:
            descend(k, u)

    lst = incident[new_root]
    i = lst.index(first)
    root_kids = lst[i:] + lst[:i]
    out_children[new_root] = root_kids
    for k in root_kids:
        descend(k, new_root)

    new_id: dict[int, int] = {}

    def assign(u: int) -> None:
        new_id[u] = len(new_id)
        for k in out_children[u]:
            assign(k)

    assign(new_root)
    children = [[] for _ in range(tree.n_nodes)]
    labels = [0] * tree.n_nodes
    for u, kids in out_children.items():
        children[new_id[u]] = [new_id[k] for k in kids]
    base = labeled.labels[new_root]
    for u in range(tree.n_nodes):
        labels[new_id[u]] = labeled.labels[u] - base + 1
    return LabeledTree(
        PlaneTree(tuple(tuple(c) for c in children)), tuple(labels)
    )


def _tails_from(nxt):
    m = len(nxt)
    tail = [0] * m
    visited = [False] * m
    k = 0
    for d in range(m):
        if visited[d]:
            continue
        e = d
        while not visited[e]:
            visited[e] = True
            tail[e] = k
            e = nxt[e]
        k += 1
    return tuple(tail)


def enumerate_rooted_maps(n: int) -> dict[bytes, RootedMap]:
    """All rooted maps with n edges, by brute force over rotation systems."""
    seen: dict[bytes, RootedMap] = {}
    darts = list(range(2 * n))
    twin = tuple(d ^ 1 for d in darts)
    for perm in permutations(darts):
        try:
            m = HalfEdgeMap(twin, perm, _tails_from(perm))
        except ValueError:
            continue
        for r in darts:
            code = rooted_code(m, r)
            if code not in seen:
                seen[code] = RootedMap(m, r)
    return seen


@pytest.fixture(scope="session")
def rooted_maps_by_size():
    return {n: enumerate_rooted_maps(n) for n in (1, 2, 3)}
