import pytest
from hypothesis import given, settings, strategies as st

from k4t.canonical import is_isomorphic
from k4t.oracle import GenParams, gen_random_tree
from k4t.tree import (
    RootedPlaneTree,
    TreeParseError,
    core_tree,
    direction,
    homeo_reduce,
    is_stacked,
    mirror,
    parse_tree,
    serialize_tree,
    subdivide,
)

from conftest import BINARY, PATH, STAR3, TWO_CORE

R, U1, W1, W2, U2 = 1, 2, 3, 6, 9


def walk_direction(tree, x, y):
    """Path-walk oracle: climb from y to the root and look for x."""
    prev = None
    v = y
    while v != -1:
        if v == x:
            return 0 if prev is None else tree.children[x].index(prev) + 1
        prev, v = v, tree.parent(v)
    return 0


def ancestors(tree, v):
    out = set()
    while v != -1:
        out.add(v)
        v = tree.parent(v)
    return out


trees = st.builds(
    lambda seed, cores, binary, rate: gen_random_tree(GenParams(seed, cores, 5, binary, rate)),
    st.integers(0, 2**32), st.integers(0, 7), st.booleans(), st.sampled_from([0.0, 0.3]),
)


class TestParse:
    def test_single_core(self):
        t = parse_tree(STAR3)
        assert len(t) == 4 and t.n_edges == 3
        assert t.children[0] == (1,)
        assert t.children[1] == (2, 3)
        assert t.degree(1) == 3

    def test_two_core(self, two_core):
        assert two_core.children[:3] == ((1,), (2, 5), (3, 4))
        assert two_core.cores() == [1, 2]

    def test_binary(self, binary_tree):
        assert binary_tree.children[R] == (U1, U2)
        assert binary_tree.children[U1] == (W1, W2)
        assert binary_tree.cores() == [R, U1, W1, W2, U2]

    def test_whitespace_ignored(self):
        assert serialize_tree(parse_tree(" ( (\n() ( ) ) )")) == STAR3

    @pytest.mark.parametrize("text", ["", "   ", "(()", "())", "(()())", "()", "(a)", "(())()"])
    def test_errors(self, text):
        with pytest.raises(TreeParseError):
            parse_tree(text)

    def test_mirror_serializes_reversed(self, two_core):
        assert serialize_tree(mirror(two_core)) == "((()(()())))"

    @given(trees)
    def test_roundtrip(self, t):
        s = serialize_tree(t)
        assert serialize_tree(parse_tree(s)) == s
        assert parse_tree(s) == t

    def test_deep_path_no_recursion_error(self):
        t = RootedPlaneTree.from_parents([-1] + list(range(5000)))
        assert parse_tree(serialize_tree(t)) == t

    def test_invalid_structures(self):
        with pytest.raises(ValueError):
            RootedPlaneTree(((1, 2), (), ()))
        with pytest.raises(ValueError):
            RootedPlaneTree(((1,), (1,)))


class TestDirection:
    def test_examples(self, two_core, binary_tree):
        assert direction(two_core, 1, 2) == 1
        assert direction(two_core, 2, 1) == 0
        assert direction(binary_tree, R, W2) == 1
        assert direction(binary_tree, U1, W2) == 2
        assert direction(binary_tree, R, U2) == 2

    def test_same_vertex_rejected(self, two_core):
        with pytest.raises(ValueError):
            direction(two_core, 1, 1)

    def test_stacked(self, binary_tree):
        assert is_stacked(binary_tree, U1, W1)
        assert not is_stacked(binary_tree, U1, U2)
        assert not is_stacked(binary_tree, W1, U2)

    @settings(max_examples=40)
    @given(trees)
    def test_against_walk(self, t):
        for x in range(len(t)):
            for y in range(len(t)):
                if x == y:
                    continue
                d = direction(t, x, y)
                assert d == walk_direction(t, x, y)
                assert not (d >= 1 and direction(t, y, x) >= 1)
                assert is_stacked(t, x, y) == (d >= 1 or direction(t, y, x) >= 1)


class TestCoreTree:
    def test_path_is_empty(self):
        ct = core_tree(parse_tree(PATH))
        assert ct.cores == () and ct.edges == () and ct.core_root is None

    def test_two_core(self, two_core):
        ct = core_tree(two_core)
        assert ct.cores == (1, 2) and ct.edges == ((1, 2),) and ct.core_root == 1

    def test_binary(self, binary_tree):
        ct = core_tree(binary_tree)
        assert set(ct.edges) == {(R, U1), (R, U2), (U1, W1), (U1, W2)}
        assert ct.core_root == R
        assert sorted(ct.leaves()) == [W1, W2, U2]

    def test_single_core(self):
        ct = core_tree(parse_tree(STAR3))
        assert ct.cores == (1,) and ct.core_root == 1 and ct.leaves() == []

    @settings(max_examples=60)
    @given(trees)
    def test_invariants(self, t):
        ct = core_tree(t)
        cores = set(ct.cores)
        assert len(ct.edges) == max(len(cores) - 1, 0)
        adj = ct.adjacency()
        for v in ct.cores:
            below = [w for w in adj[v] if t.is_ancestor(w, v)]
            assert len(below) == (0 if v == ct.core_root else 1)
            for i in range(1, t.degree(v)):
                brute = {y for y in cores if y != v and walk_direction(t, v, y) == i}
                assert ct.above(v, i) == brute
        # a core-leaf root has everything above it in one direction
        if ct.core_root is not None and len(adj[ct.core_root]) == 1:
            dirs = {ct.dir_of[(ct.core_root, y)] for y in cores - {ct.core_root}}
            assert len(dirs) == 1
        for a, b in ct.edges:
            path = (ancestors(t, a) ^ ancestors(t, b)) | {a, b}
            assert (path & cores) == {a, b}


class TestHomeoReduce:
    def test_path(self):
        assert serialize_tree(homeo_reduce(parse_tree(PATH))) == "(())"

    def test_no_degree_two(self, two_core):
        assert homeo_reduce(two_core) == two_core

    def test_subdivided_edge(self):
        direct = parse_tree(TWO_CORE)
        long = parse_tree("(((((()())))()))")
        assert serialize_tree(homeo_reduce(long)) == TWO_CORE
        assert is_isomorphic(homeo_reduce(long), homeo_reduce(direct))

    def test_subdivide(self, two_core):
        t = subdivide(two_core, {2: 2, 1: 1})
        assert serialize_tree(t) == "((((((()())))())))"
        assert homeo_reduce(t) == two_core

    @settings(max_examples=60)
    @given(trees, st.randoms(use_true_random=False))
    def test_idempotent_and_invariant(self, t, rnd):
        h = homeo_reduce(t)
        assert homeo_reduce(h) == h
        assert all(h.degree(v) != 2 for v in range(len(h)))
        lengths = {v: rnd.randint(0, 3) for v in range(1, len(t))}
        assert is_isomorphic(h, homeo_reduce(subdivide(t, lengths)))
