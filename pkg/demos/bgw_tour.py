"""Walk through the weighing-matrix family for (q, m) = (7, 3).

Builds the symmetric BGW(8, 7, 6) over Z_3 with blank diagonal, assembles the
six basis matrices of the scheme it generates, and prints the data that make
the scheme interesting: a noncommuting pair of relations, the intersection
numbers behind it, the character table, and the group divisible designs
sitting inside.
"""
import numpy as np

from gwschemes import (
    bgw_build,
    bgw_incidence,
    bgw_matrix,
    scalar_to_str,
    sgdd_params,
    verify_bgw,
)
from gwschemes.designs import BLANK
from gwschemes.spectra import bgw_eigensystem

Q, M = 7, 3


def show_weighing_matrix():
    W = bgw_matrix(Q, M)
    info = verify_bgw(W, M)
    print(f"BGW({info['v']},{info['k']},{info['lam']}) over Z_{M},"
          f" symmetric={info['symmetric']}, blank diagonal={info['blank_diagonal']}")
    for row in W:
        print("  " + " ".join("." if x == BLANK else str(x) for x in row))
    print()


def show_scheme():
    s = bgw_build(Q, M)
    print(f"scheme on {s.v} points with {s.nclasses - 1} classes: {s.classify()}")
    print(f"labels: {s.labels}")
    print(f"valencies: {s.valencies}")

    # the two kinds of classes multiply by shifting the group index; the
    # order of the factors decides whether the shift adds or subtracts
    i = s.label_index("(1,0)")
    j = s.label_index("(1,1)")
    ij = int(np.flatnonzero(s.p[i, j])[0])
    ji = int(np.flatnonzero(s.p[j, i])[0])
    print(f"A_(1,0) A_(1,1) is supported on {s.labels[ij]},"
          f" but A_(1,1) A_(1,0) on {s.labels[ji]}")
    print()
    return s


def show_characters(s):
    es = bgw_eigensystem(s, Q, M)
    dims = [b.dim for b in es.blocks]
    print(f"simple blocks: dimensions {dims}, multiplicities {es.multiplicities}")
    print("character table (rows = blocks, columns = classes):")
    for blk, row in zip(es.blocks, es.character_table()):
        cells = ", ".join(scalar_to_str(x) for x in row)
        print(f"  {blk.name}: [{cells}]")
    print()


def show_designs():
    # every level of the incidence construction is the same divisible design
    for level in range(M):
        params = sgdd_params(bgw_incidence(Q, M, level), M)
        print(f"level {level}: SGDD with v={params['v']} k={params['k']}"
              f" groups={params['groups']} lam1={params['lam1']} lam2={params['lam2']}")


if __name__ == "__main__":
    show_weighing_matrix()
    s = show_scheme()
    show_characters(s)
    show_designs()
