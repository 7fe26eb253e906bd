"""Independent reference implementations the tests check against.

Everything here recomputes results from first principles (dense complex
matrices, exhaustive loops) without touching the package's own fast paths.
"""

from __future__ import annotations

import numpy as np

I2 = np.eye(2, dtype=complex)
X2 = np.array([[0, 1], [1, 0]], dtype=complex)
Y2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z2 = np.array([[1, 0], [0, -1]], dtype=complex)

LETTER_MATS = {"I": I2, "X": X2, "Y": Y2, "Z": Z2}


def dense_from_letters(letters: str) -> np.ndarray:
    """Tensor product with qubit 1 as the most significant factor."""
    mat = np.array([[1.0 + 0j]])
    for ch in letters:
        mat = np.kron(mat, LETTER_MATS[ch])
    return mat


def dense_from_observable(obs) -> np.ndarray:
    """The complex matrix an observable stands for, phase included."""
    return (1j) ** obs.phase_exp * dense_from_letters(obs.letters())


def commutes(a: np.ndarray, b: np.ndarray) -> bool:
    return np.array_equal(a @ b, b @ a)


def brute_rank(row_ints) -> int:
    """GF(2) rank via incremental span growth, no elimination."""
    span = {0}
    r = 0
    for row in row_ints:
        if row not in span:
            span |= {row ^ s for s in span}
            r += 1
    return r


def brute_coset_distance(row_ints, ncols: int, e_bits: int) -> int:
    """Min over all 2**ncols assignments of |A x - e|, one row at a time."""
    best = None
    for x in range(1 << ncols):
        miss = 0
        for i, row in enumerate(row_ints):
            axi = bin(row & x).count("1") & 1
            if axi != ((e_bits >> i) & 1):
                miss += 1
        if best is None or miss < best:
            best = miss
    return best


def brute_max_satisfied(row_ints, ncols: int, e_bits: int) -> int:
    """Max contexts a single assignment satisfies; l minus the coset distance."""
    return len(row_ints) - brute_coset_distance(row_ints, ncols, e_bits)
