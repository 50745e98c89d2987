"""Seeded random trees and executable checks of the combinatorial claims.

Every check takes a corpus (a list of trees) and returns a CheckReport; a
failing tree is recorded with its serialized text and the run carries on.
"""

from __future__ import annotations

import json
import random
from collections import Counter
from dataclasses import dataclass, field

from .canonical import canonical_form, is_isomorphic
from .complex import (
    BuildOptions,
    DEFAULT_OPTIONS,
    ComplexGraph,
    InteractionVertex,
    build_complex,
    core_vertices,
    enumerate_vertices,
    lambda_set,
    prune_isolated,
    structurally_isolated,
)
from .reconstruct import (
    ReconstructionError,
    dedupe_classes,
    has_k2_choice,
    peel_levels,
    reconstruct,
)
from .tree import RootedPlaneTree, core_tree, homeo_reduce, nested_string, parse_tree, subdivide


@dataclass(frozen=True)
class GenParams:
    seed: int = 0
    core_count: int = 3
    max_degree: int = 6
    binary_only: bool = False
    subdivision_rate: float = 0.0

    def __post_init__(self):
        if self.core_count < 0:
            raise ValueError("core_count must be >= 0")
        if self.max_degree < 3:
            raise ValueError("max_degree must be >= 3")
        if not 0.0 <= self.subdivision_rate <= 1.0:
            raise ValueError("subdivision_rate must lie in [0, 1]")


def gen_random_tree(params: GenParams) -> RootedPlaneTree:
    """Planted plane tree with exactly ``core_count`` vertices of degree >= 3.

    Cores are dropped one by one into a random free child slot of an
    existing core, with a bias toward the newest core so that long stacked
    chains show up.  Not uniform over shapes.
    """
    rng = random.Random(params.seed)
    if params.core_count == 0:
        length = rng.randint(1, 4)
        return RootedPlaneTree.from_parents([-1] + list(range(length)))

    def draw_degree():
        return 3 if params.binary_only else rng.randint(3, params.max_degree)

    slots: list[list[int | None]] = [[None] * (draw_degree() - 1)]
    for c in range(1, params.core_count):
        if rng.random() < 0.3:
            owner = c - 1
        else:
            owner = rng.randrange(c)
        free = [i for i, s in enumerate(slots[owner]) if s is None]
        while not free:
            owner = rng.randrange(c)
            free = [i for i, s in enumerate(slots[owner]) if s is None]
        slots[owner][rng.choice(free)] = c
        slots.append([None] * (draw_degree() - 1))

    children: list[list[int]] = [[1]]  # star -> first core

    def new_vertex():
        children.append([])
        return len(children) - 1

    core_vertex = {0: 1}
    children.append([])
    queue = [0]
    for c in queue:
        v = core_vertex[c]
        for s in slots[c]:
            if s is None:
                children[v].append(new_vertex())
            else:
                w = new_vertex()
                core_vertex[s] = w
                children[v].append(w)
                queue.append(s)
    # renumber in preorder like every parsed tree
    tree = parse_tree(nested_string(children, 0))
    if params.subdivision_rate > 0:
        tree = random_subdivision(tree, params.subdivision_rate, rng)
    return tree


def random_subdivision(tree: RootedPlaneTree, rate: float, rng: random.Random) -> RootedPlaneTree:
    lengths = {}
    for v in range(len(tree)):
        if v != tree.root and rng.random() < rate:
            lengths[v] = rng.randint(1, 3)
    return subdivide(tree, lengths)


def make_corpus(seed: int, n_trees: int, max_cores: int = 12, max_degree: int = 6,
                binary: bool | None = None, subdivision_rate: float = 0.0,
                min_cores: int = 1) -> list[RootedPlaneTree]:
    """``binary=None`` alternates binary and non-binary trees."""
    rng = random.Random(seed)
    out = []
    for idx in range(n_trees):
        b = (idx % 2 == 0) if binary is None else binary
        params = GenParams(
            seed=rng.getrandbits(64),
            core_count=rng.randint(min_cores, max_cores),
            max_degree=max_degree,
            binary_only=b,
            subdivision_rate=subdivision_rate,
        )
        out.append(gen_random_tree(params))
    return out


@dataclass
class CheckReport:
    check_name: str
    trees_tested: int = 0
    failures: list[tuple[str, str]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, tree: RootedPlaneTree, detail: str):
        self.failures.append((str(tree), detail))

    def to_json(self) -> dict:
        return {
            "checkName": self.check_name,
            "treesTested": self.trees_tested,
            "passed": self.passed,
            "failures": [{"tree": t, "detail": d} for t, d in self.failures],
            "notes": self.notes,
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.check_name}: {self.trees_tested} trees, {len(self.failures)} failures"


def reports_json(reports) -> str:
    return json.dumps([r.to_json() for r in reports], indent=2, sort_keys=True)


# -- clause-by-clause reading of the edge definition --------------------------

def clause_adjacent(tree: RootedPlaneTree, v: InteractionVertex, w: InteractionVertex,
                    opts: BuildOptions = DEFAULT_OPTIONS) -> tuple[bool, str]:
    """Edge test written directly from the three definition items.

    Returns ``(adjacent, clause)`` where clause names the item that decided.
    Uses explicit root paths instead of the production direction helpers.
    """
    if v.x == w.x:
        if opts.same_core_edges == "rule1":
            return v.k + w.k >= 4, "same-core/item1"
        return False, "same-core"
    path_v = tree.path_to_root(v.x)
    path_w = tree.path_to_root(w.x)
    if v.x not in path_w and w.x not in path_v:
        return v.k + w.k >= 4, "item1"
    # order the pair so that x2 lies on x1-direction i >= 1
    if v.x in path_w:
        one, two, path_two = v, w, path_w
    else:
        one, two, path_two = w, v, path_v
    below = path_two[path_two.index(one.x) - 1]
    i = tree.children[one.x].index(below) + 1
    k2 = two.k
    p1, q1 = one.p, one.q
    if len(p1) >= i:
        pi = p1[i - 1]
        other_nonzero = any(p1[j] != 0 for j in range(len(p1)) if j != i - 1)
        return pi > 4 - k2 or (pi + k2 == 4 and other_nonzero), "item2"
    qi = q1[i - len(p1) - 1]
    if qi > 4 - k2:
        return True, "item3"
    if opts.rule3_boundary == "extended" and qi + k2 == 4:
        return True, "item3-boundary"
    return False, "item3"


def clause_edges(tree: RootedPlaneTree, opts: BuildOptions = DEFAULT_OPTIONS):
    verts = enumerate_vertices(tree, opts)
    edges = {}
    for a in range(len(verts)):
        for b in range(a + 1, len(verts)):
            ok, clause = clause_adjacent(tree, verts[a], verts[b], opts)
            if ok:
                edges[(verts[a], verts[b])] = clause
    return verts, edges


def differential_edge_oracle(tree: RootedPlaneTree, opts_a: BuildOptions, opts_b: BuildOptions):
    """Vertex pairs whose adjacency differs between two option sets.

    Each entry is ``(u, w, in_a, in_b, clause)``; vertices existing under
    only one option set count as non-adjacent under the other.
    """
    verts_a = set(enumerate_vertices(tree, opts_a))
    verts_b = set(enumerate_vertices(tree, opts_b))
    verts = sorted(verts_a | verts_b, key=InteractionVertex.sort_key)
    out = []
    for a in range(len(verts)):
        for b in range(a + 1, len(verts)):
            u, w = verts[a], verts[b]
            in_a, ca = clause_adjacent(tree, u, w, opts_a) if u in verts_a and w in verts_a else (False, "absent")
            in_b, cb = clause_adjacent(tree, u, w, opts_b) if u in verts_b and w in verts_b else (False, "absent")
            if in_a != in_b:
                out.append((u, w, in_a, in_b, ca if in_a else cb))
    return out


# -- checks --------------------------------------------------------------------

def check_isolation_lemma(corpus) -> CheckReport:
    rep = CheckReport("isolation_lemma")
    for t in corpus:
        rep.trees_tested += 1
        g = build_complex(t)
        bad = [str(g.labels[v]) for v in range(g.n)
               if structurally_isolated(g.labels[v]) and g.degree(v) > 0]
        if bad:
            rep.fail(t, "non-isolated: " + ", ".join(bad[:5]))
    return rep


def triangular(d: int) -> int:
    return (d - 1) * (d - 2) // 2


def check_counts(corpus) -> CheckReport:
    rep = CheckReport("counts")
    table = Counter()
    for t in corpus:
        rep.trees_tested += 1
        for x in t.cores():
            d = t.degree(x)
            want = triangular(d)
            k2 = sum(v.k == 2 for v in core_vertices(x, d))
            if k2 != want:
                rep.fail(t, f"core {x} (d={d}): {k2} tuples with k=2, expected {want}")
            for i in range(1, d):
                got = sum(not structurally_isolated(v) for v in lambda_set(t, x, i))
                table[(d, got)] += 1
                if got != want:
                    rep.fail(t, f"core {x} (d={d}) direction {i}: |Lambda|={got}, expected {want}")
    rep.notes = [f"degree {d}: |Lambda_i| = {n} ({c} core-directions)"
                 for (d, n), c in sorted(table.items())]
    return rep


def designated_direction(v: InteractionVertex) -> int:
    """Direction whose cores a binary-tree vertex is adjacent to."""
    if v.k == 2:
        return 0
    return next(i for i in range(1, len(v.entries) + 1) if v.entry(i) >= 2)


def cores_at_direction(tree: RootedPlaneTree, ct, x: int, i: int) -> int:
    if i == 0:
        return sum(1 for y in ct.cores if y != x and not tree.is_ancestor(x, y))
    return len(ct.above(x, i))


def check_binary_structure(corpus) -> CheckReport:
    rep = CheckReport("binary_structure")
    for t in corpus:
        cores = t.cores()
        if len(cores) < 2:
            continue
        if any(t.degree(c) != 3 for c in cores):
            continue
        rep.trees_tested += 1
        ct = core_tree(t)
        g = prune_isolated(build_complex(t))
        leaves_k = sum(1 for v in range(g.n) if g.degree(v) == 1)
        leaves_f = len(ct.leaves())
        if leaves_k != leaves_f:
            rep.fail(t, f"{leaves_k} complex leaves vs {leaves_f} core-tree leaves")
        for v in range(g.n):
            lab = g.labels[v]
            want = cores_at_direction(t, ct, lab.x, designated_direction(lab))
            if g.degree(v) != want:
                rep.fail(t, f"{lab}: degree {g.degree(v)}, direction count {want}")
        if len(set(g.adj)) != g.n:
            rep.fail(t, "two vertices share a neighbourhood")
    return rep


def check_clique_independence(corpus) -> CheckReport:
    rep = CheckReport("clique_independence")
    checked = 0
    for t in corpus:
        if len(t.cores()) < 2:
            continue
        rep.trees_tested += 1
        g = prune_isolated(build_complex(t))
        rg = dedupe_classes(g)
        ct_edges = {frozenset(e) for e in core_tree(t).edges}
        try:
            levels = peel_levels(rg)
        except ReconstructionError as exc:
            rep.fail(t, str(exc))
            continue
        for lev in levels:
            if lev.size < 3:
                continue
            checked += 1
            cores = set()
            for _, y in lev.pairs:
                xs = {g.labels[m].x for m in rg.classes[y].members}
                if len(xs) != 1:
                    rep.fail(t, f"class {y} spans cores {sorted(xs)}")
                cores |= xs
            if len(cores) != lev.size:
                rep.fail(t, f"level {lev.index}: {lev.size} hubs on {len(cores)} cores")
            hit = [tuple(sorted(e)) for e in ct_edges if e <= cores]
            if hit:
                rep.fail(t, f"level {lev.index}: hub cores not independent, edges {hit}")
    rep.notes = [f"{checked} levels with a clique of size >= 3"]
    return rep


def _labeled_core_form(tree):
    ct = core_tree(tree)
    return canonical_form(ct.adjacency(), labels=ct.degrees)


def _result_key(res):
    return (str(res.assembled), sorted(res.degrees.items()), res.core_tree_text())


def roundtrip_one(tree: RootedPlaneTree) -> list[str]:
    """Problems found reconstructing ``tree``; empty when everything matches."""
    problems = []
    g = build_complex(tree).unlabeled()
    target_shape = canonical_form(core_tree(tree).adjacency())
    target_labeled = _labeled_core_form(tree)
    target_tree = homeo_reduce(tree)
    orientations = (0, 1) if has_k2_choice(g) else (0,)
    for o in orientations:
        try:
            res = reconstruct(g, orientation=o)
        except ReconstructionError as exc:
            problems.append(f"orientation {o}: {exc}")
            continue
        if canonical_form(res.shape) != target_shape:
            problems.append(f"orientation {o}: core shape differs from core tree")
        if canonical_form(res.shape, labels=res.degrees) != target_labeled:
            problems.append(f"orientation {o}: recovered degrees {res.degrees} do not match")
        if not is_isomorphic(res.assembled, target_tree):
            problems.append(f"orientation {o}: assembled tree {res.assembled} not homeomorphic")
    return problems


def roundtrip_check(corpus, subdivision_rate: float = 0.5, seed: int = 0) -> CheckReport:
    """End-to-end reconstruction, both K2 orientations, and subdivided twins."""
    rep = CheckReport("roundtrip")
    rng = random.Random(seed)
    for t in corpus:
        if len(t.cores()) < 2:
            continue
        rep.trees_tested += 1
        for problem in roundtrip_one(t):
            rep.fail(t, problem)
        if subdivision_rate > 0:
            twin = random_subdivision(t, subdivision_rate, rng)
            try:
                same = _result_key(reconstruct(build_complex(twin))) == _result_key(reconstruct(build_complex(t)))
            except ReconstructionError as exc:
                rep.fail(twin, f"subdivided twin: {exc}")
                continue
            if not same:
                rep.fail(twin, "subdivided twin reconstructs differently")
    return rep


def check_star_complex(max_m: int = 8) -> CheckReport:
    """Single-core trees give an edgeless complex once isolated vertices go.

    A complete graph on the k=2 tuples (with pendant neighbours) would need
    same-core edges, which the adopted rules do not have.
    """
    rep = CheckReport("single_core_edgeless")
    for m in range(3, max_m + 1):
        t = parse_tree("((" + "()" * (m - 1) + "))")
        rep.trees_tested += 1
        g = build_complex(t)
        if g.n_edges:
            rep.fail(t, f"K_(1,{m}) complex has {g.n_edges} edges")
    return rep


def check_clause_agreement(corpus, opts: BuildOptions = DEFAULT_OPTIONS) -> CheckReport:
    """Vectorized builder against the clause-by-clause reading."""
    rep = CheckReport("clause_agreement")
    for t in corpus:
        rep.trees_tested += 1
        g = build_complex(t, BuildOptions(True, opts.same_core_edges, opts.rule3_boundary, opts.allow_empty_q))
        verts, edges = clause_edges(t, opts)
        idx = {v: i for i, v in enumerate(verts)}
        want = sorted(tuple(sorted((idx[a], idx[b]))) for a, b in edges)
        if list(g.edges) != want:
            rep.fail(t, f"{len(set(g.edges) ^ set(want))} edge disagreements")
    return rep


SUITES = {
    "isolation": check_isolation_lemma,
    "counts": check_counts,
    "binary": check_binary_structure,
    "independence": check_clique_independence,
    "roundtrip": roundtrip_check,
}


def run_suites(names, corpus) -> list[CheckReport]:
    reports = [SUITES[n](corpus) for n in names]
    if "roundtrip" in names:
        reports.append(check_star_complex())
    return reports
