"""Constructions of the two scheme families.

bgw_build(q, m): a scheme of class 2m - 1 on (q+1) m points from a symmetric
BGW(q+1, q, q-1) over Z_m with blank diagonal.  Relations, in order:

    (gamma, 0): I_{q+1} (x) U^gamma                    for gamma in Z_m,
    (gamma, 1): blank-diagonal block matrix whose (i, j) block is
                U^{W[i,j] + gamma} R                   for gamma in Z_m,

where U is the cyclic shift on Z_m and R the back identity.

gh_build(q): a scheme of class 2q on (q+1) q^2 points from the multiplication
table of GF(q) (q odd) and a one-factorization of K_{q+1}.  Relations:

    (alpha, 0): I_{q+1} (x) I_q (x) phi(alpha)         for alpha in GF(q),
    (alpha, 1): sum_a P_a (x) (C_{a,alpha} R)          for alpha in GF(q),
    "2":        I_{q+1} (x) (J_{q^2} - I_q (x) J_q),

where phi(alpha) is the permutation of addition by alpha, P_a the factor of a,
R the digit reversal of GF(q) squared, and C_{a,alpha} the q^2 x q^2 block
matrix whose (beta, beta') block is phi(a (beta' - beta) + alpha).
"""
from __future__ import annotations

import numpy as np

from .algebra import FiniteField
from .designs import BLANK, bgw_matrix, one_factorization
from .matrixkit import back_identity, field_reversal, field_shift, kron, shift_matrix
from .schemes import AssociationScheme


def bgw_labels(m: int) -> list[str]:
    return [f"({g},0)" for g in range(m)] + [f"({g},1)" for g in range(m)]


def bgw_build(q: int, m: int) -> AssociationScheme:
    W = bgw_matrix(q, m)
    n = q
    v = (n + 1) * m
    U = shift_matrix(m)
    R = back_identity(m)
    UR = [np.linalg.matrix_power(U, a) @ R for a in range(m)]
    Upow = [np.linalg.matrix_power(U, a) for a in range(m)]
    eye = np.eye(n + 1, dtype=np.int64)
    mats = [kron(eye, Upow[g]) for g in range(m)]
    for g in range(m):
        A = np.zeros((v, v), dtype=np.int64)
        for i in range(n + 1):
            for j in range(n + 1):
                if i != j:
                    assert W[i, j] != BLANK
                    A[i * m : (i + 1) * m, j * m : (j + 1) * m] = UR[
                        (int(W[i, j]) + g) % m
                    ]
        mats.append(A)
    return AssociationScheme.from_matrices(mats, bgw_labels(m))


def bgw_incidence(q: int, m: int, level: int) -> np.ndarray:
    """The divisible design incidence N_level: J_m diagonal blocks plus the
    (level, 1) relation; equals sum_gamma A_{gamma,0} + A_{level,1}."""
    W = bgw_matrix(q, m)
    n = q
    v = (n + 1) * m
    U = shift_matrix(m)
    R = back_identity(m)
    UR = [np.linalg.matrix_power(U, a) @ R for a in range(m)]
    N = np.zeros((v, v), dtype=np.int64)
    for i in range(n + 1):
        N[i * m : (i + 1) * m, i * m : (i + 1) * m] = 1
        for j in range(n + 1):
            if i != j:
                N[i * m : (i + 1) * m, j * m : (j + 1) * m] = UR[
                    (int(W[i, j]) + level) % m
                ]
    return N


def gh_labels(q: int) -> list[str]:
    return (
        [f"({a},0)" for a in range(q)] + [f"({a},1)" for a in range(q)] + ["2"]
    )


def _block_c(F: FiniteField, a: int, alpha: int, phi: list[np.ndarray]) -> np.ndarray:
    q = F.q
    C = np.zeros((q * q, q * q), dtype=np.int64)
    for b1 in range(q):
        for b2 in range(q):
            delta = F.add(F.mul(a, F.sub(b2, b1)), alpha)
            C[b1 * q : (b1 + 1) * q, b2 * q : (b2 + 1) * q] = phi[delta]
    return C


def gh_build(q: int) -> AssociationScheme:
    F = FiniteField(q)
    if F.p == 2:
        raise ValueError("q must be odd")
    phi = [field_shift(F, x) for x in range(q)]
    Rq = field_reversal(F)
    R2 = kron(Rq, Rq)
    eye_pts = np.eye(q + 1, dtype=np.int64)
    eye_q = np.eye(q, dtype=np.int64)
    mats = [kron(eye_pts, eye_q, phi[alpha]) for alpha in range(q)]
    factors = one_factorization(q)
    for alpha in range(q):
        A = np.zeros(((q + 1) * q * q, (q + 1) * q * q), dtype=np.int64)
        for a in range(q):
            CR = _block_c(F, a, alpha, phi) @ R2
            A += kron(factors[a], CR)
        mats.append(A)
    J2 = np.ones((q * q, q * q), dtype=np.int64) - kron(eye_q, np.ones((q, q), dtype=np.int64))
    mats.append(kron(eye_pts, J2))
    return AssociationScheme.from_matrices(mats, gh_labels(q))
