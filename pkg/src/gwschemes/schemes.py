"""Association schemes as verified families of 0/1 matrices.

A (possibly noncommutative) association scheme on v points is a list of 0/1
matrices A_0, ..., A_d with A_0 = I, sum J, the set closed under transpose,
and every product A_i A_j = sum_k p[i,j,k] A_k with integer intersection
numbers.  Construction always verifies all four axioms exactly and extracts
the full intersection tensor; an AssociationScheme instance is therefore a
certificate of schemehood.
"""
from __future__ import annotations

import numpy as np

from .errors import NotAScheme
from .matrixkit import is_zero_one


class AssociationScheme:
    def __init__(self, mats, labels, tensor, tpose, valencies):
        self.mats = mats
        self.labels = labels
        self.p = tensor
        self.tpose = tpose
        self.valencies = valencies
        self.v = mats[0].shape[0]
        self.nclasses = len(mats)

    @classmethod
    def from_matrices(cls, mats, labels=None) -> "AssociationScheme":
        """Verify the axioms and build the scheme; raises NotAScheme on failure."""
        mats = [np.ascontiguousarray(np.asarray(M, dtype=np.int64)) for M in mats]
        nm = len(mats)
        v = mats[0].shape[0]
        if labels is None:
            labels = [str(i) for i in range(nm)]
        if len(labels) != nm or len(set(labels)) != nm:
            raise ValueError("labels must be distinct and match the matrix count")
        for M in mats:
            if M.shape != (v, v):
                raise NotAScheme("matrices must be square of equal size")
            if not is_zero_one(M):
                raise NotAScheme("matrices must be 0/1")
        if not np.array_equal(mats[0], np.eye(v, dtype=np.int64)):
            raise NotAScheme("A_0 must be the identity")
        total = np.zeros((v, v), dtype=np.int64)
        for M in mats:
            total += M
        if (total != 1).any():
            raise NotAScheme("supports must partition all positions")

        # label matrix: entry (x, y) is the unique i with A_i[x, y] = 1
        L = np.zeros((v, v), dtype=np.int64)
        for i, M in enumerate(mats):
            L += i * M
        flat = L.reshape(-1)
        order = np.argsort(flat, kind="stable")
        sortedL = flat[order]
        starts = np.searchsorted(sortedL, np.arange(nm), side="left")
        counts = np.diff(np.append(starts, flat.size))
        if (counts == 0).any():
            raise NotAScheme("some relation is empty")

        def segment_values(M) -> np.ndarray:
            """Per-relation constant value of M over each relation's support.

            Raises NotAScheme if M is not constant on some relation.
            """
            vals = M.reshape(-1)[order]
            mins = np.minimum.reduceat(vals, starts)
            maxs = np.maximum.reduceat(vals, starts)
            if not np.array_equal(mins, maxs):
                raise NotAScheme("matrix not constant on a relation")
            return mins

        # transpose closure: relation i maps to the constant value of L^T on
        # the support of A_i, which forces A_i^T = A_{tpose[i]} as sets
        try:
            tvals = segment_values(L.T)
        except NotAScheme:
            raise NotAScheme("relation set is not closed under transpose")
        tpose = [int(t) for t in tvals]
        if sorted(tpose) != list(range(nm)):
            raise NotAScheme("transpose map is not a permutation")

        valencies = []
        for M in mats:
            rs = M.sum(axis=1)
            cs = M.sum(axis=0)
            if (rs != rs[0]).any() or (cs != rs[0]).any():
                raise NotAScheme("row/column sums not constant")
            valencies.append(int(rs[0]))

        # closure: every product decomposes over the relations; entries of
        # A_i A_j are bounded by v < 2**53 so the float64 BLAS product is exact
        tensor = np.zeros((nm, nm, nm), dtype=np.int64)
        for j in range(nm):
            tensor[0, j, j] = 1
            tensor[j, 0, j] = 1
        fmats = [M.astype(np.float64) for M in mats]
        done = set()
        for i in range(1, nm):
            for j in range(1, nm):
                if (i, j) in done:
                    continue
                P = fmats[i] @ fmats[j]
                vals = P.reshape(-1)[order]
                mins = np.minimum.reduceat(vals, starts)
                maxs = np.maximum.reduceat(vals, starts)
                if not np.array_equal(mins, maxs):
                    raise NotAScheme(
                        f"product A_{labels[i]} A_{labels[j]} leaves the span"
                    )
                row = mins.astype(np.int64)
                tensor[i, j] = row
                done.add((i, j))
                # (A_i A_j)^T = A_{tpose[j]} A_{tpose[i]} gives the partner
                ti, tj = tpose[j], tpose[i]
                if (ti, tj) not in done:
                    tensor[ti, tj] = row[tpose]
                    done.add((ti, tj))
        return cls(mats, list(labels), tensor, tpose, valencies)

    # -- structure --

    def is_symmetric(self) -> bool:
        return all(self.tpose[i] == i for i in range(self.nclasses))

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.p, self.p.transpose(1, 0, 2)))

    def classify(self) -> str:
        if self.is_symmetric():
            return "symmetric"
        if self.is_commutative():
            return "commutative"
        return "noncommutative"

    def label_index(self, label: str) -> int:
        return self.labels.index(label)

    def fuse(self, partition: list[list[int]]) -> "AssociationScheme":
        """Merge relations along a partition of class indices and re-verify.

        The cell containing 0 must be {0}.  The fused family is verified from
        scratch, so a partition that does not yield a scheme raises NotAScheme.
        """
        seen = sorted(i for cell in partition for i in cell)
        if seen != list(range(self.nclasses)):
            raise ValueError("partition must cover every class exactly once")
        for cell in partition:
            if 0 in cell and sorted(cell) != [0]:
                raise ValueError("the identity class must stay alone")
        fused_mats = []
        fused_labels = []
        for cell in partition:
            M = np.zeros((self.v, self.v), dtype=np.int64)
            for i in cell:
                M += self.mats[i]
            fused_mats.append(M)
            fused_labels.append("+".join(self.labels[i] for i in sorted(cell)))
        return AssociationScheme.from_matrices(fused_mats, fused_labels)

    def __repr__(self) -> str:
        return (
            f"AssociationScheme(v={self.v}, classes={self.nclasses}, "
            f"{self.classify()})"
        )


def scheme_verify(mats, labels=None) -> AssociationScheme:
    """Verify the scheme axioms for a family of 0/1 matrices."""
    return AssociationScheme.from_matrices(mats, labels)
