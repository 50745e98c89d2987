"""
Recovering a tree from its interaction graph
============================================

Reconstruction only sees the abstract graph: vertex labels are thrown away.
It merges vertices with equal neighbourhoods, peels off levels of pendant
cliques, rebuilds the tree of cores, reads each core degree from a class
multiplicity and finally reattaches the leaves.
"""

import random

from k4t import build_complex, canonical_form, homeo_reduce, parse_tree, reconstruct
from k4t.complex import ComplexGraph, prune_isolated

###############################################################################
# Start from a tree whose top core has degree four and scramble the vertex
# order of its graph, so nothing about the numbering can leak through.

tree = parse_tree("(((()())(()())()))")
g = prune_isolated(build_complex(tree))
perm = list(range(g.n))
random.Random(7).shuffle(perm)
scrambled = ComplexGraph(g.n, [(perm[a], perm[b]) for a, b in g.edges])
print(f"{scrambled.n} unlabeled vertices, {scrambled.n_edges} edges")

###############################################################################
# Run the pipeline and look at what each stage produced.

res = reconstruct(scrambled)
print("level sizes:", [lev.size for lev in res.levels])
print("core degrees:", res.degrees)
print("core tree:", res.to_json()["coreTree"])
for line in res.diagnostics:
    print("  |", line)

###############################################################################
# The answer is the tree with degree-2 vertices suppressed, up to isomorphism.

same = canonical_form(res.assembled) == canonical_form(homeo_reduce(tree))
print("assembled:", res.assembled, " matches input:", same)
