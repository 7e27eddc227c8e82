"""Walk through the Hadamard-table family for q = 3.

The multiplication table of GF(3) is a generalized Hadamard matrix GH(3, 1):
the differences of any two distinct rows cover the additive group evenly.
The scheme construction repeats every row q times, which adds a "repetition"
class with no counterpart in the weighing-matrix family.  The demo builds the
36-point scheme, exhibits that class, and prints the eigenmatrix data
including the symmetrizing fusion.
"""
import numpy as np

from gwschemes import (
    FusedEigensystem,
    gh_build,
    gh_matrix,
    gh_symmetric_fusion,
    scalar_to_str,
    verify_gh,
)
from gwschemes.spectra import gh_eigensystem

Q = 3


def show_hadamard_table():
    H = gh_matrix(Q)
    info = verify_gh(H, Q)
    print(f"generalized Hadamard matrix: {info['rows']} rows,"
          f" differences cover GF({Q}) {info['lam']} times per pair")
    for row in H:
        print("  " + " ".join(str(x) for x in row))
    print()


def show_scheme():
    s = gh_build(Q)
    print(f"scheme on {s.v} points with {s.nclasses - 1} classes: {s.classify()}")
    print(f"labels: {s.labels}")
    print(f"valencies: {s.valencies}")

    # the repetition class pairs the copies of the same table row; its square
    # spreads over every block-diagonal class
    r = s.label_index("2")
    support = [s.labels[k] for k in np.flatnonzero(s.p[r, r])]
    print(f"A_2 A_2 is supported on {support}")
    print()
    return s


def show_characters(s):
    es = gh_eigensystem(s, Q)
    dims = [b.dim for b in es.blocks]
    print(f"simple blocks: dimensions {dims}, multiplicities {es.multiplicities}")
    print("character table (rows = blocks, columns = classes):")
    for blk, row in zip(es.blocks, es.character_table()):
        cells = ", ".join(scalar_to_str(x) for x in row)
        print(f"  {blk.name}: [{cells}]")
    print()
    return es


def show_fusion(s, es):
    partition = gh_symmetric_fusion(Q)
    fused = s.fuse(partition)
    print(f"fusing classes {partition} gives: {fused.classify()},"
          f" labels {fused.labels}")
    fes = FusedEigensystem(es, partition)
    print("second eigenmatrix of the fusion (rows = classes, columns = idempotents):")
    for lbl, row in zip(fused.labels, fes.qhat):
        cells = ", ".join(scalar_to_str(x) for x in row)
        print(f"  {lbl}: [{cells}]")


if __name__ == "__main__":
    show_hadamard_table()
    s = show_scheme()
    es = show_characters(s)
    show_fusion(s, es)
