"""Reference implementations of the hot kernels in plain Python.

Every function here has a twin in ``_ckernels.pyx`` with the same signature and
the same results; the package picks one at import time.
"""
from __future__ import annotations

import numpy as np


def _find(parent: list[int], a: int) -> int:
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


def _membership(grid: np.ndarray):
    boxes = set(map(tuple, np.argwhere(grid).tolist()))
    return boxes


def _classify(gens, pi, pj, lcms, boxes, w):
    g = len(gens)
    wx, wy, wz = w
    active = [(a + wx, b + wy, c + wz) in boxes for a, b, c in gens]
    parent = list(range(g))
    forced = [False] * g
    for k in range(len(pi)):
        a, b, c = lcms[k]
        if (a + wx, b + wy, c + wz) not in boxes:
            continue
        i, j = pi[k], pj[k]
        if active[i] and active[j]:
            ri, rj = _find(parent, i), _find(parent, j)
            if ri != rj:
                if ri < rj:
                    parent[rj] = ri
                else:
                    parent[ri] = rj
        elif active[i]:
            forced[i] = True
        elif active[j]:
            forced[j] = True
    labels = [-1] * g
    class_of_root: dict[int, int] = {}
    class_forced: list[int] = []
    for i in range(g):
        if not active[i]:
            continue
        r = _find(parent, i)
        if r not in class_of_root:
            class_of_root[r] = len(class_forced)
            class_forced.append(0)
        labels[i] = class_of_root[r]
    for i in range(g):
        if forced[i]:
            class_forced[labels[i]] = 1
    return labels, class_forced


def classify_weight(gens: np.ndarray, pi: np.ndarray, pj: np.ndarray, lcms: np.ndarray,
                    grid: np.ndarray, w) -> tuple[np.ndarray, np.ndarray]:
    """Coefficient classes of the pure-weight piece of weight ``w``.

    Returns ``(labels, forced)``: ``labels[i]`` is the class of generator ``i``
    (``-1`` when its shifted position is outside the target staircase) and
    ``forced[c]`` is 1 when class ``c`` must vanish.
    """
    labels, forced = _classify(gens.tolist(), pi.tolist(), pj.tolist(), lcms.tolist(),
                               _membership(grid), [int(v) for v in w])
    return np.asarray(labels, dtype=np.int64), np.asarray(forced, dtype=np.uint8)


def weight_dimensions(gens: np.ndarray, pi: np.ndarray, pj: np.ndarray, lcms: np.ndarray,
                      grid: np.ndarray, weights: np.ndarray) -> np.ndarray:
    """Number of unforced classes for every row of ``weights``."""
    g, a, b, l = gens.tolist(), pi.tolist(), pj.tolist(), lcms.tolist()
    boxes = _membership(grid)
    out = []
    for w in weights.tolist():
        _, forced = _classify(g, a, b, l, boxes, w)
        out.append(len(forced) - sum(forced))
    return np.asarray(out, dtype=np.int64)


def integer_rank(matrix) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination on integer entries."""
    m = [list(map(int, row)) for row in np.asarray(matrix, dtype=object).tolist()]
    m = [row for row in m if any(row)]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank, prev = 0, 1
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        top = m[rank]
        p = top[col]
        for r in range(rank + 1, nrows):
            row = m[r]
            f = row[col]
            for c in range(col + 1, ncols):
                row[c] = (p * row[c] - f * top[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank
