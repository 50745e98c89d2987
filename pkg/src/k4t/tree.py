"""Rooted plane trees planted at a degree-one root.

Trees are written as nested parentheses: a leaf is ``()``, an internal
vertex is ``(`` followed by its children and ``)``.  The whole string is the
subtree of the root, so the root must have exactly one child, e.g.
``((()()))`` is the root, one vertex of degree three and two leaves.

Vertices are numbered in preorder, the root is always vertex 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator


class TreeParseError(ValueError):
    pass


@dataclass(frozen=True)
class RootedPlaneTree:
    """A plane tree with ordered children.

    ``children[v]`` lists the children of ``v`` in plane order.  The root has
    a single child, everything else has exactly one parent.
    """

    children: tuple[tuple[int, ...], ...]
    root: int = 0
    _parent: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.children)
        if n < 2:
            raise ValueError("a planted tree needs at least two vertices")
        parent = [-2] * n
        parent[self.root] = -1
        for v, kids in enumerate(self.children):
            for c in kids:
                if not 0 <= c < n or c == self.root or parent[c] != -2:
                    raise ValueError(f"vertex {c} has zero or several parents")
                parent[c] = v
        if -2 in parent:
            raise ValueError("tree is not connected")
        if len(self.children[self.root]) != 1:
            raise ValueError("the root must have exactly one child")
        # reject cycles not reachable from the root
        seen = 0
        stack = [self.root]
        while stack:
            v = stack.pop()
            seen += 1
            stack.extend(self.children[v])
        if seen != n:
            raise ValueError("tree is not connected")
        object.__setattr__(self, "_parent", tuple(parent))

    @classmethod
    def from_parents(cls, parents, root=0):
        """Build from a parent array; children keep increasing-id order."""
        kids = [[] for _ in parents]
        for v, p in enumerate(parents):
            if v != root:
                kids[p].append(v)
        return cls(tuple(tuple(k) for k in kids), root)

    def __len__(self):
        return len(self.children)

    @property
    def n_edges(self):
        return len(self.children) - 1

    def parent(self, v: int) -> int:
        """Parent of ``v``; -1 for the root."""
        return self._parent[v]

    def degree(self, v: int) -> int:
        return len(self.children[v]) + (v != self.root)

    def neighbors(self, v: int) -> list[int]:
        p = self._parent[v]
        return ([p] if p >= 0 else []) + list(self.children[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        for v, kids in enumerate(self.children):
            for c in kids:
                yield v, c

    def adjacency(self) -> dict[int, list[int]]:
        return {v: self.neighbors(v) for v in range(len(self))}

    @cached_property
    def depth(self) -> tuple[int, ...]:
        depth = [0] * len(self)
        for v in self.preorder():
            for c in self.children[v]:
                depth[c] = depth[v] + 1
        return tuple(depth)

    def preorder(self) -> Iterator[int]:
        stack = [self.root]
        while stack:
            v = stack.pop()
            yield v
            stack.extend(reversed(self.children[v]))

    def path_to_root(self, v: int) -> list[int]:
        path = [v]
        while self._parent[path[-1]] >= 0:
            path.append(self._parent[path[-1]])
        return path

    def is_ancestor(self, x: int, y: int) -> bool:
        """True if ``x`` lies on the path from ``y`` to the root (x may equal y)."""
        dx = self.depth[x]
        while self.depth[y] > dx:
            y = self._parent[y]
        return x == y

    def cores(self) -> list[int]:
        return [v for v in range(len(self)) if self.degree(v) >= 3]

    def __str__(self):
        return serialize_tree(self)


def parse_tree(text: str) -> RootedPlaneTree:
    s = "".join(text.split())
    if not s:
        raise TreeParseError("empty input")
    children: list[list[int]] = []
    stack: list[int] = []
    done = False
    for pos, ch in enumerate(s):
        if done:
            raise TreeParseError(f"trailing characters at position {pos}")
        if ch == "(":
            v = len(children)
            children.append([])
            if stack:
                children[stack[-1]].append(v)
            stack.append(v)
        elif ch == ")":
            if not stack:
                raise TreeParseError(f"unbalanced ')' at position {pos}")
            stack.pop()
            done = not stack
        else:
            raise TreeParseError(f"unexpected character {ch!r} at position {pos}")
    if stack:
        raise TreeParseError("unbalanced '(': missing closing parentheses")
    if len(children[0]) != 1:
        raise TreeParseError(
            f"root must have exactly one child, found {len(children[0])}")
    return RootedPlaneTree(tuple(tuple(c) for c in children), 0)


def serialize_tree(tree: RootedPlaneTree) -> str:
    return nested_string(tree.children, tree.root)


def nested_string(children, root) -> str:
    """Nested-parenthesis text for any rooted ordered tree given as child lists."""
    out = []
    # explicit stack: deep paths overflow the recursion limit
    stack = [(root, False)]
    while stack:
        v, closing = stack.pop()
        if closing:
            out.append(")")
            continue
        out.append("(")
        stack.append((v, True))
        for c in reversed(children[v]):
            stack.append((c, False))
    return "".join(out)


def mirror(tree: RootedPlaneTree) -> RootedPlaneTree:
    """Reflect the plane embedding (reverse every child list)."""
    return RootedPlaneTree(tuple(tuple(reversed(k)) for k in tree.children), tree.root)


def direction(tree: RootedPlaneTree, x: int, y: int) -> int:
    """Index of the edge at ``x`` through which ``y`` is reached going up.

    Edge 0 at ``x`` is the one toward the root; upward edges are numbered
    1, 2, ... in child order.  Returns 0 whenever ``x`` is not a strict
    ancestor of ``y``.
    """
    if x == y:
        raise ValueError("direction is undefined for x == y")
    dx = tree.depth[x]
    if tree.depth[y] <= dx:
        return 0
    while tree.depth[y] > dx + 1:
        y = tree.parent(y)
    if tree.parent(y) != x:
        return 0
    return tree.children[x].index(y) + 1


def is_stacked(tree: RootedPlaneTree, x: int, y: int) -> bool:
    if x == y:
        raise ValueError("is_stacked is undefined for x == y")
    return tree.is_ancestor(x, y) or tree.is_ancestor(y, x)


@dataclass(frozen=True)
class CoreTree:
    """The tree on vertices of degree at least three.

    ``dir_of[(x, y)]`` is ``direction(T, x, y)`` for every ordered pair of
    distinct stacked cores.
    """

    cores: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    core_root: int | None
    dir_of: dict[tuple[int, int], int]
    degrees: dict[int, int]

    def adjacency(self) -> dict[int, list[int]]:
        adj = {c: [] for c in self.cores}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def leaves(self) -> list[int]:
        if len(self.cores) <= 1:
            return []
        return [c for c, nb in self.adjacency().items() if len(nb) == 1]

    def above(self, x: int, i: int) -> set[int]:
        """Cores lying on x-direction ``i`` (i >= 1)."""
        return {y for (a, y), d in self.dir_of.items() if a == x and d == i}


def core_tree(tree: RootedPlaneTree) -> CoreTree:
    cores = tree.cores()
    core_set = set(cores)
    edges = []
    # nearest strict core ancestor gives the F(T) edge below each core
    for c in cores:
        v = tree.parent(c)
        while v >= 0 and v not in core_set:
            v = tree.parent(v)
        if v >= 0:
            edges.append((v, c))
    root = min(cores, key=lambda c: (tree.depth[c], c)) if cores else None
    dir_of = {}
    for x in cores:
        for y in cores:
            if x != y and tree.is_ancestor(x, y):
                dir_of[(x, y)] = direction(tree, x, y)
                dir_of[(y, x)] = 0
    return CoreTree(tuple(cores), tuple(sorted(edges)), root, dir_of,
                    {c: tree.degree(c) for c in cores})


def subdivide(tree: RootedPlaneTree, edge_lengths) -> RootedPlaneTree:
    """Replace each edge (parent, child) by a path.

    ``edge_lengths`` maps a child vertex to the number of degree-2 vertices
    inserted above it; missing entries insert nothing.
    """
    new_children: list[list[int]] = []

    def new_vertex():
        new_children.append([])
        return len(new_children) - 1

    root = new_vertex()
    stack = [(tree.root, root)]
    while stack:
        v, nv = stack.pop()
        for c in tree.children[v]:
            attach = nv
            for _ in range(edge_lengths.get(c, 0)):
                mid = new_vertex()
                new_children[attach].append(mid)
                attach = mid
            nc = new_vertex()
            new_children[attach].append(nc)
            stack.append((c, nc))
    return parse_tree(nested_string(new_children, root))


def homeo_reduce(tree: RootedPlaneTree) -> RootedPlaneTree:
    """Suppress every vertex of degree two.

    The result keeps the planted root and the plane order; for a path it is
    the single edge ``(())``.
    """
    new_children: list[list[int]] = [[]]
    stack = [(tree.root, 0)]
    while stack:
        v, nv = stack.pop()
        for c in tree.children[v]:
            while len(tree.children[c]) == 1:
                c = tree.children[c][0]
            nc = len(new_children)
            new_children.append([])
            new_children[nv].append(nc)
            stack.append((c, nc))
    return parse_tree(nested_string(new_children, 0))
