import itertools
import random

import networkx as nx
import pytest

from k4t.canonical import canonical_form, centroids, is_isomorphic
from k4t.complex import build_complex
from k4t.reconstruct import reconstruct
from k4t.tree import parse_tree

from conftest import ROOT_DEG4

PATH3 = {0: [1], 1: [0, 2], 2: [1]}


def brute_isomorphic(a, b):
    """Try every degree-preserving bijection."""
    if len(a) != len(b):
        return False
    da = {v: len(nb) for v, nb in a.items()}
    db = {v: len(nb) for v, nb in b.items()}
    if sorted(da.values()) != sorted(db.values()):
        return False
    ea = {frozenset((u, v)) for u in a for v in a[u]}
    eb = {frozenset((u, v)) for u in b for v in b[u]}
    groups = sorted(set(da.values()))
    dom = [[v for v in a if da[v] == g] for g in groups]
    cod = [[v for v in b if db[v] == g] for g in groups]
    for choice in itertools.product(*(itertools.permutations(c) for c in cod)):
        f = {}
        for src, dst in zip(dom, choice):
            f.update(zip(src, dst))
        if all(frozenset((f[u], f[v])) in eb for u, v in (tuple(e) for e in ea)):
            return True
    return False


def small_trees():
    out = []
    for n in range(1, 9):
        for g in nx.nonisomorphic_trees(n) if n > 1 else [nx.empty_graph(1)]:
            out.append({v: list(g.neighbors(v)) for v in g})
    return out


def relabel(adj, rng):
    nodes = list(adj)
    perm = nodes[:]
    rng.shuffle(perm)
    f = dict(zip(nodes, perm))
    return {f[v]: [f[w] for w in nb] for v, nb in adj.items()}


def test_path3_rooted_vs_unrooted():
    assert is_isomorphic(PATH3, PATH3, "unrooted")
    assert not is_isomorphic(PATH3, PATH3, "rooted", root_a=0, root_b=1)
    assert is_isomorphic(PATH3, PATH3, "rooted", root_a=0, root_b=2)


def test_star_vs_path4():
    star = [(0, 1), (0, 2), (0, 3)]
    path = [(0, 1), (1, 2), (2, 3)]
    assert not is_isomorphic(star, path)


def test_centroids():
    assert centroids(PATH3) == [1]
    assert sorted(centroids({0: [1], 1: [0, 2], 2: [1, 3], 3: [2]})) == [1, 2]


def test_planted_tree_rooted_mode_uses_star():
    t = parse_tree("(((()())()))")
    # "(" sorts before ")", so the bigger subtree comes first
    assert canonical_form(t, "rooted") == "(((()())()))"


def test_labels_matter():
    assert canonical_form(PATH3, labels={0: 3, 1: 4, 2: 3}) != canonical_form(PATH3, labels={0: 4, 1: 3, 2: 3})


def test_bad_mode():
    with pytest.raises(ValueError):
        canonical_form(PATH3, "sideways")


def test_agrees_with_brute_force():
    rng = random.Random(5)
    trees = small_trees()
    assert len(trees) == 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23
    for a, b in itertools.combinations_with_replacement(range(len(trees)), 2):
        ta, tb = trees[a], relabel(trees[b], rng)
        assert is_isomorphic(ta, tb) == brute_isomorphic(ta, tb), (a, b)


def test_k2_orientations_isomorphic():
    g = build_complex(parse_tree(ROOT_DEG4))
    outs = [reconstruct(g, orientation=o).assembled for o in (0, 1)]
    assert str(outs[0]) != str(outs[1])
    assert is_isomorphic(outs[0], outs[1])
    assert brute_isomorphic(outs[0].adjacency(), outs[1].adjacency())
