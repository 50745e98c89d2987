"""
Verifying the combinatorics on a random corpus
==============================================

The oracle module regenerates a seeded corpus of planted trees and checks
structural facts about their graphs: isolated tuples really are isolated,
the k = 2 classes have triangular sizes, binary trees give the expected
level structure, and every tree survives a build/reconstruct roundtrip.
"""

from k4t.oracle import make_corpus, run_suites

###############################################################################
# Forty trees, mixing binary and non-binary ones, with up to eight cores.

corpus = make_corpus(seed=2024, n_trees=40, max_cores=8, max_degree=6)
sizes = sorted(len(t.cores()) for t in corpus)
print("core counts:", sizes)

###############################################################################
# Run every suite and print one summary line per report.

for rep in run_suites(["isolation", "counts", "binary", "independence", "roundtrip"], corpus):
    print(rep.summary())
    for note in rep.notes[:4]:
        print("    ", note)
