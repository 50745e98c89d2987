"""AHU canonical forms for rooted and unrooted trees."""

from __future__ import annotations

from collections.abc import Mapping

from .tree import RootedPlaneTree


def as_adjacency(tree) -> dict:
    """Undirected adjacency of a tree-like object.

    Accepts a RootedPlaneTree, anything with an ``adjacency()`` method, a
    mapping node -> neighbours, or an iterable of edges.
    """
    if hasattr(tree, "adjacency"):
        return {v: list(nb) for v, nb in tree.adjacency().items()}
    if isinstance(tree, Mapping):
        return {v: list(nb) for v, nb in tree.items()}
    adj: dict = {}
    for a, b in tree:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    return adj


def _default_root(tree):
    if isinstance(tree, RootedPlaneTree):
        return tree.root
    for attr in ("root", "core_root"):
        r = getattr(tree, attr, None)
        if r is not None:
            return r
    raise ValueError("rooted mode needs an explicit root")


def rooted_form(adj: Mapping, root, labels: Mapping | None = None) -> str:
    # postorder without recursion; children strings sorted at each node
    order = []
    parent = {root: None}
    stack = [root]
    while stack:
        v = stack.pop()
        order.append(v)
        for w in adj[v]:
            if w != parent[v]:
                parent[w] = v
                stack.append(w)
    label: dict = {}
    for v in reversed(order):
        kids = sorted(label[w] for w in adj[v] if w != parent[v])
        tag = "" if labels is None else str(labels[v])
        label[v] = "(" + tag + "".join(kids) + ")"
    return label[root]


def centroids(adj: Mapping) -> list:
    n = len(adj)
    if n == 0:
        return []
    root = next(iter(adj))
    order = []
    parent = {root: None}
    stack = [root]
    while stack:
        v = stack.pop()
        order.append(v)
        for w in adj[v]:
            if w != parent[v]:
                parent[w] = v
                stack.append(w)
    size = {}
    worst = {}
    for v in reversed(order):
        s = 1
        heavy = 0
        for w in adj[v]:
            if w != parent[v]:
                s += size[w]
                heavy = max(heavy, size[w])
        size[v] = s
        worst[v] = max(heavy, n - s)
    best = min(worst.values())
    return [v for v in order if worst[v] == best]


def canonical_form(tree, mode: str = "unrooted", root=None, labels: Mapping | None = None) -> str:
    """Canonical string; equal strings iff the trees are isomorphic.

    ``labels`` (node -> value) makes the form respect node labels, e.g.
    degrees.  Unrooted mode takes the minimum over the centroids.
    """
    adj = as_adjacency(tree)
    if not adj:
        return ""
    if mode == "rooted":
        return rooted_form(adj, _default_root(tree) if root is None else root, labels)
    if mode == "unrooted":
        return min(rooted_form(adj, c, labels) for c in centroids(adj))
    raise ValueError(f"unknown mode {mode!r}")


def is_isomorphic(a, b, mode: str = "unrooted", root_a=None, root_b=None) -> bool:
    return canonical_form(a, mode, root_a) == canonical_form(b, mode, root_b)
