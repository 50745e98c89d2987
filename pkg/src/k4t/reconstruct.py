"""Recover a planted tree, up to homeomorphism, from its abstract K4T graph.

Pipeline: drop isolated vertices, merge vertices with equal neighbourhoods,
peel clique-plus-pendant levels, link the levels into a core shape, read
branch degrees off class sizes, and hang pendant leaves.

Labels on the input graph are never consulted for decisions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .complex import ComplexGraph, prune_isolated
from .tree import RootedPlaneTree, nested_string, parse_tree


class ReconstructionError(ValueError):
    """Input is not the K4T of any tree (under the adopted edge rules)."""

    def __init__(self, stage: str, message: str):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage


INSUFFICIENT = "insufficient interaction data"


@dataclass
class NeighborhoodClass:
    representative: int
    members: tuple[int, ...]
    neighborhood: frozenset[int]  # class indices

    @property
    def multiplicity(self) -> int:
        return len(self.members)


@dataclass
class ReducedGraph:
    """One node per neighbourhood class of the pruned input."""

    classes: list[NeighborhoodClass]
    adj: list[frozenset[int]]

    def __len__(self):
        return len(self.classes)


@dataclass
class Level:
    index: int
    pairs: list[tuple[int, int]]  # (leaf class, its unique neighbour)

    @property
    def size(self) -> int:
        return len(self.pairs)


@dataclass
class CoreShape:
    """Tree on ``z0`` plus one node per peeled pair.

    Node names are ``"z0"`` and ``"z{level}_{j}"`` (1-based).  ``attachment``
    records for each non-z0 node whether its edge came from the minimum
    rule (``"min"``), from being in the last level (``"last"``) or from the
    z0 fallback (``"fallback"``).
    """

    nodes: list[str]
    edges: list[tuple[str, str]]
    attachment: dict[str, str]
    pair_of: dict[str, tuple[int, int]]

    def adjacency(self) -> dict[str, list[str]]:
        adj = {v: [] for v in self.nodes}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    @property
    def root(self) -> str:
        return "z0"

    def degree(self, node: str) -> int:
        return sum(node in e for e in self.edges)


@dataclass
class ReconstructionResult:
    shape: CoreShape
    degrees: dict[str, int]
    assembled: RootedPlaneTree
    levels: list[Level]
    reduced: ReducedGraph
    diagnostics: list[str] = field(default_factory=list)

    def core_tree_text(self) -> str:
        return shape_text(self.shape)

    def to_json(self) -> dict:
        return {
            "coreTree": self.core_tree_text(),
            "degrees": dict(self.degrees),
            "assembled": str(self.assembled),
            "diagnostics": list(self.diagnostics),
        }


def dedupe_classes(g: ComplexGraph) -> ReducedGraph:
    if any(not nb for nb in g.adj):
        raise ReconstructionError("dedupe", "graph has isolated vertices; prune first")
    groups: dict[frozenset[int], list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.adj[v], []).append(v)
    members = sorted(groups.values())
    cls_of = {v: c for c, ms in enumerate(members) for v in ms}
    classes = []
    adj = []
    for c, ms in enumerate(members):
        nb = frozenset(cls_of[w] for w in g.adj[ms[0]])
        classes.append(NeighborhoodClass(ms[0], tuple(ms), nb))
        adj.append(nb)
    # equal neighbourhoods are never adjacent, so the quotient has no loops
    return ReducedGraph(classes, adj)


def peel_levels(rg: ReducedGraph, orientation: int = 0, log: list[str] | None = None) -> list[Level]:
    """Split the reduced graph into KP_m layers.

    ``orientation`` picks which end of a final K2 residual plays the leaf
    role: 0 keeps the smaller class index as leaf, 1 swaps.
    """
    log = [] if log is None else log
    alive = set(range(len(rg)))
    levels: list[Level] = []
    while alive:
        deg = {v: len(rg.adj[v] & alive) for v in alive}
        if len(alive) == 2 and all(d == 1 for d in deg.values()):
            a, b = sorted(alive)
            leaf, hub = (a, b) if orientation == 0 else (b, a)
            log.append(f"level {len(levels) + 1}: K2 residual, oriented leaf=class {leaf}, "
                       f"neighbour=class {hub}")
            levels.append(Level(len(levels) + 1, [(leaf, hub)]))
            break
        if any(d == 0 for d in deg.values()):
            raise ReconstructionError("peel", "residual graph has an isolated vertex")
        leaves = sorted(v for v, d in deg.items() if d == 1)
        if not leaves:
            raise ReconstructionError("peel", f"no residual leaves among {len(alive)} classes")
        pairs = []
        hubs = set()
        for leaf in leaves:
            (hub,) = rg.adj[leaf] & alive
            if deg[hub] == 1:
                raise ReconstructionError("peel", "isolated K2 component inside a larger residual")
            if hub in hubs:
                raise ReconstructionError("peel", f"class {hub} touches two residual leaves")
            hubs.add(hub)
            pairs.append((leaf, hub))
        for a in hubs:
            if not (hubs - {a}) <= rg.adj[a]:
                raise ReconstructionError("peel", "neighbours of the residual leaves are not a clique")
        levels.append(Level(len(levels) + 1, pairs))
        alive -= set(leaves) | hubs
    for prev, nxt in zip(levels, levels[1:]):
        if nxt.size > prev.size:
            log.append(f"level sizes increase: m{prev.index}={prev.size} < m{nxt.index}={nxt.size}")
    return levels


def build_core_shape(levels: list[Level], rg: ReducedGraph, log: list[str] | None = None) -> CoreShape:
    log = [] if log is None else log
    if not levels:
        raise ReconstructionError("shape", "no levels")
    name = {}
    nodes = ["z0"]
    pair_of = {}
    for lev in levels:
        for j, pair in enumerate(lev.pairs, 1):
            z = f"z{lev.index}_{j}"
            name[(lev.index, j)] = z
            nodes.append(z)
            pair_of[z] = pair
    edges = []
    attachment = {}
    last = levels[-1].index
    for j in range(1, levels[-1].size + 1):
        edges.append((name[(last, j)], "z0"))
        attachment[name[(last, j)]] = "last"
    for lev in levels[:-1]:
        for j, (_, y) in enumerate(lev.pairs, 1):
            z = name[(lev.index, j)]
            targets = []
            for later in levels[lev.index:]:
                targets = [l for l, (x, _) in enumerate(later.pairs, 1) if x in rg.adj[y]]
                if targets:
                    targets = [name[(later.index, l)] for l in targets]
                    break
            if targets:
                edges.extend((z, t) for t in targets)
                attachment[z] = "min"
            else:
                edges.append((z, "z0"))
                attachment[z] = "fallback"
                log.append(f"{z}: no later leaf adjacent to its hub, attached to z0")
    shape = CoreShape(nodes, edges, attachment, pair_of)
    _check_tree(shape)
    return shape


def _check_tree(shape: CoreShape):
    if len(shape.edges) != len(shape.nodes) - 1:
        raise ReconstructionError("shape", f"{len(shape.nodes)} nodes but {len(shape.edges)} edges")
    adj = shape.adjacency()
    seen = {"z0"}
    stack = ["z0"]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != len(shape.nodes):
        raise ReconstructionError("shape", "core shape is disconnected")


def degree_from_multiplicity(t: int) -> int:
    """Solve (k-1)(k-2)/2 == t exactly for an integer k >= 3."""
    if t < 1:
        raise ReconstructionError("degrees", f"multiplicity {t} is not positive")
    # (2k-3)^2 == 8t + 1
    r = math.isqrt(8 * t + 1)
    if r * r != 8 * t + 1:
        raise ReconstructionError("degrees", f"multiplicity {t} is not a triangular number")
    return (r + 3) // 2


def recover_degrees(levels: list[Level], rg: ReducedGraph, shape: CoreShape,
                    log: list[str] | None = None) -> dict[str, int]:
    log = [] if log is None else log
    mult = [c.multiplicity for c in rg.classes]
    degrees = {}
    for z, (x, y) in shape.pair_of.items():
        degrees[z] = degree_from_multiplicity(mult[y])
    child_mults = {mult[shape.pair_of[z][0]] for z in shape.adjacency()["z0"]}
    if len(child_mults) != 1:
        raise ReconstructionError("degrees", f"children of z0 disagree on its degree: {sorted(child_mults)}")
    degrees["z0"] = degree_from_multiplicity(child_mults.pop())
    # leaf-class degree in the full graph equals the k=2 count at the leaf core
    for j, (x, y) in enumerate(levels[0].pairs, 1):
        full_deg = sum(mult[c] for c in rg.adj[x])
        if full_deg != mult[y]:
            log.append(f"z1_{j}: leaf degree {full_deg} differs from hub multiplicity {mult[y]}")
    return degrees


def assemble_tree(shape: CoreShape, degrees: dict[str, int]) -> RootedPlaneTree:
    adj = shape.adjacency()
    for z in shape.nodes:
        if degrees[z] < max(3, len(adj[z])):
            raise ReconstructionError("assemble", f"degree {degrees[z]} too small at {z}")
    # root the shape at z0, hang pendants, then plant the star on one pendant
    index = {z: i for i, z in enumerate(shape.nodes)}
    children: list[list[int]] = [[] for _ in shape.nodes]
    parent = {"z0": None}
    order = ["z0"]
    for z in order:
        for w in adj[z]:
            if w not in parent:
                parent[w] = z
                children[index[z]].append(index[w])
                order.append(w)
    pendant = {}
    for z in shape.nodes:
        for _ in range(degrees[z] - len(adj[z])):
            children.append([])
            children[index[z]].append(len(children) - 1)
            pendant.setdefault(z, len(children) - 1)
    # re-root at a pendant leaf of z0
    star = pendant.get("z0")
    if star is None:
        star = next(iter(pendant.values()))
    und = {v: set() for v in range(len(children))}
    for v, kids in enumerate(children):
        for c in kids:
            und[v].add(c)
            und[c].add(v)
    planted: list[list[int]] = [[] for _ in children]
    seen = {star}
    stack = [star]
    while stack:
        v = stack.pop()
        for w in sorted(und[v]):
            if w not in seen:
                seen.add(w)
                planted[v].append(w)
                stack.append(w)
    return parse_tree(nested_string(planted, star))


def shape_text(shape: CoreShape) -> str:
    """Nested-parenthesis text of the shape planted at one of its leaves."""
    adj = shape.adjacency()
    if len(shape.nodes) == 1:
        return "()"
    start = min(z for z in shape.nodes if len(adj[z]) == 1)
    children = {z: [] for z in shape.nodes}
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in sorted(adj[v]):
            if w not in seen:
                seen.add(w)
                children[v].append(w)
                stack.append(w)
    return nested_string(children, start)


def reconstruct(g: ComplexGraph, orientation: int = 0) -> ReconstructionResult:
    log: list[str] = []
    pruned = prune_isolated(g.unlabeled())
    if pruned.n == 0:
        raise ReconstructionError("prune", INSUFFICIENT)
    log.append(f"pruned {g.n - pruned.n} isolated vertices, {pruned.n} remain")
    rg = dedupe_classes(pruned)
    sizes = sorted((c.multiplicity for c in rg.classes), reverse=True)
    log.append(f"{len(rg)} neighbourhood classes, sizes {sizes}")
    levels = peel_levels(rg, orientation, log)
    log.append("level sizes " + str([lev.size for lev in levels]))
    shape = build_core_shape(levels, rg, log)
    degrees = recover_degrees(levels, rg, shape, log)
    assembled = assemble_tree(shape, degrees)
    return ReconstructionResult(shape, degrees, assembled, levels, rg, log)


def has_k2_choice(g: ComplexGraph) -> bool:
    """Whether peeling ends in a K2 residual (two orientations possible)."""
    pruned = prune_isolated(g.unlabeled())
    if pruned.n == 0:
        return False
    log: list[str] = []
    peel_levels(dedupe_classes(pruned), 0, log)
    return any("K2 residual" in line for line in log)
