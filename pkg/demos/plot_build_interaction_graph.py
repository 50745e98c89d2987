"""
Building the interaction graph of a planted tree
================================================

A planted tree is written as nested parentheses: ``()`` is a leaf and the
outermost group is the planting vertex, which has exactly one child.  Every
vertex of degree at least three is a *core*, and each core contributes a
small family of interaction vertices ``(k, x, p, q)``.  Edges between them
record which pairs of local configurations can interact.
"""

import numpy as np

from k4t import build_complex, core_tree, parse_tree, prune_isolated

###############################################################################
# A binary tree with five cores.  Vertices are numbered in preorder with the
# planting vertex as 0.

tree = parse_tree("((((()())(()()))(()())))")
print("vertices:", len(tree), " cores:", tree.cores())

ct = core_tree(tree)
print("core tree edges:", ct.edges, " root core:", ct.core_root)

###############################################################################
# Each degree-3 core has six interaction vertices.  Most are isolated; the
# graph that matters is what survives pruning.

full = build_complex(tree)
graph = prune_isolated(full)
print(f"full graph: {full.n} vertices, {full.n_edges} edges")
print(f"pruned:     {graph.n} vertices, {graph.n_edges} edges")

for v, label in enumerate(graph.labels):
    print(f"  {v}: {label}  degree {graph.degree(v)}")

###############################################################################
# The degree sequence is a cheap fingerprint of the graph.

degrees = np.array(graph.degrees())
print("degree histogram:", np.bincount(degrees))
