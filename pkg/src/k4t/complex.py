"""The interaction graph K4T of a planted tree.

Vertices are tuples ``(k, x, p, q)`` attached to a core ``x`` (a vertex of
degree >= 3).  ``p`` and ``q`` together hold one non-negative entry per
upward edge of ``x``; the entries plus ``k`` sum to three.

Edges are decided by one number per side.  For a vertex ``v`` and another
core ``y``, ``weight_toward(v, y)`` is ``v.k`` when ``y`` is not above
``v.x`` and otherwise the entry of ``v`` at the direction of ``y``.  Two
unstacked vertices are adjacent when their ``k`` sum to at least 4; a
stacked pair reads the lower vertex's entry and the upper vertex's ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Literal, Sequence

import numpy as np

from .tree import RootedPlaneTree, direction, is_stacked


@dataclass(frozen=True)
class InteractionVertex:
    k: int
    x: int
    p: tuple[int, ...]
    q: tuple[int, ...]

    def entry(self, i: int) -> int:
        """Entry at direction ``i`` (1-based over p followed by q)."""
        if not 1 <= i <= len(self.p) + len(self.q):
            raise IndexError(f"direction {i} out of range")
        if i <= len(self.p):
            return self.p[i - 1]
        return self.q[i - 1 - len(self.p)]

    @property
    def entries(self) -> tuple[int, ...]:
        return self.p + self.q

    def in_p(self, i: int) -> bool:
        return i <= len(self.p)

    def sort_key(self):
        return (self.x, self.k, self.p, self.q)

    def __str__(self):
        def vec(t):
            return "(" + ",".join(map(str, t)) + ")"
        return f"({self.k},{self.x},{vec(self.p)},{vec(self.q)})"


@dataclass(frozen=True)
class BuildOptions:
    """Interpretation switches for the edge rules.

    The defaults are the semantics reconstruction relies on; the other
    values reproduce literal readings for differential testing.
    """

    include_isolated: bool = True
    same_core_edges: Literal["none", "rule1"] = "none"
    rule3_boundary: Literal["extended", "paperStrict"] = "extended"
    allow_empty_q: bool = False

    def __post_init__(self):
        if self.same_core_edges not in ("none", "rule1"):
            raise ValueError(f"bad same_core_edges {self.same_core_edges!r}")
        if self.rule3_boundary not in ("extended", "paperStrict"):
            raise ValueError(f"bad rule3_boundary {self.rule3_boundary!r}")


DEFAULT_OPTIONS = BuildOptions()


def compositions(total: int, parts: int):
    """All tuples of ``parts`` non-negative ints summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def core_vertices(x: int, degree: int, opts: BuildOptions = DEFAULT_OPTIONS):
    m = degree - 1
    max_len_p = m if opts.allow_empty_q else m - 1
    out = []
    for k in range(3):
        for ent in compositions(3 - k, m):
            for lp in range(1, max_len_p + 1):
                p, q = ent[:lp], ent[lp:]
                if sum(p) >= 1:
                    out.append(InteractionVertex(k, x, p, q))
    out.sort(key=InteractionVertex.sort_key)
    return out


def enumerate_vertices(tree: RootedPlaneTree, opts: BuildOptions = DEFAULT_OPTIONS):
    out = []
    for x in tree.cores():
        out.extend(core_vertices(x, tree.degree(x), opts))
    out.sort(key=InteractionVertex.sort_key)
    return out


def structurally_isolated(v: InteractionVertex) -> bool:
    """Tuples that can never carry an edge: k == 1 or sum(p) == 2."""
    return v.k == 1 or sum(v.p) == 2


def weight_toward(tree: RootedPlaneTree, v: InteractionVertex, y: int) -> int:
    i = direction(tree, v.x, y)
    return v.k if i == 0 else v.entry(i)


def adjacent(tree: RootedPlaneTree, u: InteractionVertex, w: InteractionVertex,
             opts: BuildOptions = DEFAULT_OPTIONS) -> bool:
    if u == w:
        raise ValueError("adjacent() needs two distinct vertices")
    if u.x == w.x:
        return opts.same_core_edges == "rule1" and u.k + w.k >= 4
    if not is_stacked(tree, u.x, w.x):
        return u.k + w.k >= 4
    lower, upper = (u, w) if tree.is_ancestor(u.x, w.x) else (w, u)
    i = direction(tree, lower.x, upper.x)
    e = lower.entry(i)
    s = e + upper.k
    if s >= 5:
        return True
    if s != 4:
        return False
    if lower.in_p(i):
        return e != sum(lower.p)
    return opts.rule3_boundary == "extended"


class ComplexGraph:
    """Simple undirected graph on vertices ``0..n-1`` with optional labels."""

    def __init__(self, n: int, edges, labels: Sequence[InteractionVertex] | None = None):
        norm = set()
        for a, b in edges:
            a, b = int(a), int(b)
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a}, {b}) out of range")
            norm.add((min(a, b), max(a, b)))
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("one label per vertex required")
            if len(set(labels)) != n:
                raise ValueError("labels must be distinct")
        self.n = n
        self.edges = tuple(sorted(norm))
        self.labels = labels

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nb = [set() for _ in range(self.n)]
        for a, b in self.edges:
            nb[a].add(b)
            nb[b].add(a)
        return tuple(frozenset(s) for s in nb)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adj]

    def has_edge(self, a: int, b: int) -> bool:
        return b in self.adj[a]

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def unlabeled(self) -> "ComplexGraph":
        return ComplexGraph(self.n, self.edges)

    def subgraph(self, keep: Sequence[int]) -> "ComplexGraph":
        """Induced subgraph on ``keep``, renumbered in the given order."""
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[a], index[b]) for a, b in self.edges if a in index and b in index]
        labels = None if self.labels is None else [self.labels[v] for v in keep]
        return ComplexGraph(len(keep), edges, labels)

    def __eq__(self, other):
        if not isinstance(other, ComplexGraph):
            return NotImplemented
        return (self.n, self.edges, self.labels) == (other.n, other.edges, other.labels)

    def __repr__(self):
        return f"ComplexGraph(n={self.n}, edges={self.n_edges})"


def _core_arrays(verts: Sequence[InteractionVertex]):
    k = np.array([v.k for v in verts], dtype=np.int64)
    ent = np.array([v.entries for v in verts], dtype=np.int64)
    lp = np.array([len(v.p) for v in verts], dtype=np.int64)
    sp = np.array([sum(v.p) for v in verts], dtype=np.int64)
    return k, ent, lp, sp


def _stacked_block(lower, upper_k, i, opts):
    k, ent, lp, sp = lower
    e = ent[:, i - 1]
    in_p = lp >= i
    boundary_ok = np.where(in_p, e != sp, opts.rule3_boundary == "extended")
    s = e[:, None] + upper_k[None, :]
    return (s >= 5) | ((s == 4) & boundary_ok[:, None])


def build_complex(tree: RootedPlaneTree, opts: BuildOptions = DEFAULT_OPTIONS) -> ComplexGraph:
    verts = enumerate_vertices(tree, opts)
    by_core: dict[int, list[int]] = {}
    for idx, v in enumerate(verts):
        by_core.setdefault(v.x, []).append(idx)
    cores = list(by_core)
    arrays = {x: _core_arrays([verts[i] for i in by_core[x]]) for x in cores}
    ids = {x: np.array(by_core[x]) for x in cores}

    blocks = []
    for x in cores:
        if opts.same_core_edges == "rule1":
            kx = arrays[x][0]
            m = np.triu((kx[:, None] + kx[None, :]) >= 4, 1)
            a, b = np.nonzero(m)
            blocks.append((ids[x][a], ids[x][b]))
    for x, y in combinations(cores, 2):
        if tree.is_ancestor(x, y):
            m = _stacked_block(arrays[x], arrays[y][0], direction(tree, x, y), opts)
        elif tree.is_ancestor(y, x):
            m = _stacked_block(arrays[y], arrays[x][0], direction(tree, y, x), opts).T
        else:
            m = (arrays[x][0][:, None] + arrays[y][0][None, :]) >= 4
        a, b = np.nonzero(m)
        if len(a):
            blocks.append((ids[x][a], ids[y][b]))

    edges = []
    for a, b in blocks:
        edges.extend(zip(a.tolist(), b.tolist()))
    g = ComplexGraph(len(verts), edges, verts)
    if not opts.include_isolated:
        g = prune_isolated(g)
    return g


def build_complex_pairwise(tree: RootedPlaneTree, opts: BuildOptions = DEFAULT_OPTIONS) -> ComplexGraph:
    """Same graph as :func:`build_complex`, one ``adjacent`` call per pair."""
    verts = enumerate_vertices(tree, opts)
    edges = [(a, b) for a, b in combinations(range(len(verts)), 2)
             if adjacent(tree, verts[a], verts[b], opts)]
    g = ComplexGraph(len(verts), edges, verts)
    return g if opts.include_isolated else prune_isolated(g)


def prune_isolated(g: ComplexGraph) -> ComplexGraph:
    return g.subgraph([v for v in range(g.n) if g.adj[v]])


def lambda_set(tree: RootedPlaneTree, x: int, i: int,
               opts: BuildOptions = DEFAULT_OPTIONS) -> list[InteractionVertex]:
    """Tuples at core ``x`` whose entry at direction ``i`` is at least 2."""
    d = tree.degree(x)
    if d < 3:
        raise ValueError(f"vertex {x} is not a core")
    if not 1 <= i <= d - 1:
        raise ValueError(f"direction {i} out of range 1..{d - 1}")
    return [v for v in core_vertices(x, d, opts) if v.entry(i) >= 2]
