"""Linear algebra over Z2 on numpy uint8 arrays"""

from typing import List, Optional, Sequence, Tuple

import numpy as np


def as_matrix(rows: Sequence[Sequence[int]], width: int) -> np.ndarray:
    """Stack 0/1 rows into a (len(rows), width) uint8 matrix"""
    if not rows:
        return np.zeros((0, width), dtype=np.uint8)
    return np.array(rows, dtype=np.uint8).reshape(len(rows), width) % 2


def row_reduce(matrix: np.ndarray) -> Tuple[np.ndarray, np.ndarray, List[int]]:
    """
    Reduced row echelon form by XOR elimination.

    Returns:
        (reduced rows, combination rows, pivot columns); row i of the
        reduced matrix is the XOR of the input rows flagged in combination
        row i
    """
    work = matrix.copy().astype(np.uint8) % 2
    k, n = work.shape
    combo = np.eye(k, dtype=np.uint8)
    pivots: List[int] = []
    r = 0
    for col in range(n):
        if r == k:
            break
        candidates = np.nonzero(work[r:, col])[0]
        if candidates.size == 0:
            continue
        p = r + int(candidates[0])
        if p != r:
            work[[r, p]] = work[[p, r]]
            combo[[r, p]] = combo[[p, r]]
        mask = work[:, col].astype(bool)
        mask[r] = False
        work[mask] ^= work[r]
        combo[mask] ^= combo[r]
        pivots.append(col)
        r += 1
    return work, combo, pivots


def rank(matrix: np.ndarray) -> int:
    return len(row_reduce(matrix)[2])


def solve(matrix: np.ndarray, target: Sequence[int]) -> Optional[np.ndarray]:
    """
    Find coefficients c with XOR of rows i where c[i] == 1 equal to target.

    Returns:
        uint8 coefficient vector, or None if target is outside the row span
    """
    reduced, combo, pivots = row_reduce(matrix)
    residual = np.array(target, dtype=np.uint8) % 2
    coefficients = np.zeros(matrix.shape[0], dtype=np.uint8)
    for row, col in enumerate(pivots):
        if residual[col]:
            residual ^= reduced[row]
            coefficients ^= combo[row]
    if residual.any():
        return None
    return coefficients
