# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pure.py``."""
import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t, uint8_t

cnp.import_array()

cdef extern from *:
    """
    static inline int hs_mul(long long a, long long b, long long *out) {
        return __builtin_mul_overflow(a, b, out);
    }
    static inline int hs_sub(long long a, long long b, long long *out) {
        return __builtin_sub_overflow(a, b, out);
    }
    """
    int hs_mul(long long a, long long b, long long *out) nogil
    int hs_sub(long long a, long long b, long long *out) nogil


cdef inline bint _inside(const uint8_t[:, :, ::1] grid, int64_t x, int64_t y, int64_t z) noexcept nogil:
    if x < 0 or y < 0 or z < 0:
        return False
    if x >= grid.shape[0] or y >= grid.shape[1] or z >= grid.shape[2]:
        return False
    return grid[x, y, z] != 0


cdef inline Py_ssize_t _find(Py_ssize_t[::1] parent, Py_ssize_t a) noexcept nogil:
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


cdef Py_ssize_t _classify(const int64_t[:, ::1] gens, const int64_t[::1] pi, const int64_t[::1] pj,
                          const int64_t[:, ::1] lcms, const uint8_t[:, :, ::1] grid,
                          int64_t wx, int64_t wy, int64_t wz,
                          uint8_t[::1] active, uint8_t[::1] forced, Py_ssize_t[::1] parent,
                          int64_t[::1] labels, uint8_t[::1] cforced) noexcept nogil:
    cdef Py_ssize_t g = gens.shape[0]
    cdef Py_ssize_t i, j, k, ri, rj, nclass = 0, r
    for i in range(g):
        active[i] = _inside(grid, gens[i, 0] + wx, gens[i, 1] + wy, gens[i, 2] + wz)
        forced[i] = 0
        parent[i] = i
        labels[i] = -1
    for k in range(pi.shape[0]):
        if not _inside(grid, lcms[k, 0] + wx, lcms[k, 1] + wy, lcms[k, 2] + wz):
            continue
        i = pi[k]
        j = pj[k]
        if active[i] and active[j]:
            ri = _find(parent, i)
            rj = _find(parent, j)
            if ri < rj:
                parent[rj] = ri
            elif rj < ri:
                parent[ri] = rj
        elif active[i]:
            forced[i] = 1
        elif active[j]:
            forced[j] = 1
    for i in range(g):
        if not active[i]:
            continue
        r = _find(parent, i)
        if r == i:
            labels[i] = nclass
            cforced[nclass] = 0
            nclass += 1
        else:
            labels[i] = labels[r]
    for i in range(g):
        if forced[i]:
            cforced[labels[i]] = 1
    return nclass


def classify_weight(gens, pi, pj, lcms, grid, w):
    cdef Py_ssize_t g = gens.shape[0]
    active = np.zeros(g, dtype=np.uint8)
    forced = np.zeros(g, dtype=np.uint8)
    parent = np.zeros(g, dtype=np.intp)
    labels = np.zeros(g, dtype=np.int64)
    cforced = np.zeros(g, dtype=np.uint8)
    cdef Py_ssize_t n = _classify(np.ascontiguousarray(gens, dtype=np.int64),
                                  np.ascontiguousarray(pi, dtype=np.int64),
                                  np.ascontiguousarray(pj, dtype=np.int64),
                                  np.ascontiguousarray(lcms, dtype=np.int64).reshape(-1, 3),
                                  np.ascontiguousarray(grid, dtype=np.uint8),
                                  int(w[0]), int(w[1]), int(w[2]),
                                  active, forced, parent, labels, cforced)
    return labels, cforced[:n].copy()


def weight_dimensions(gens, pi, pj, lcms, grid, weights):
    cdef const int64_t[:, ::1] G = np.ascontiguousarray(gens, dtype=np.int64)
    cdef const int64_t[::1] PI = np.ascontiguousarray(pi, dtype=np.int64)
    cdef const int64_t[::1] PJ = np.ascontiguousarray(pj, dtype=np.int64)
    cdef const int64_t[:, ::1] L = np.ascontiguousarray(lcms, dtype=np.int64).reshape(-1, 3)
    cdef const uint8_t[:, :, ::1] grid_v = np.ascontiguousarray(grid, dtype=np.uint8)
    cdef const int64_t[:, ::1] W = np.ascontiguousarray(weights, dtype=np.int64).reshape(-1, 3)
    cdef Py_ssize_t g = G.shape[0], nw = W.shape[0], t, c, n, dim
    cdef uint8_t[::1] active = np.zeros(g, dtype=np.uint8)
    cdef uint8_t[::1] forced = np.zeros(g, dtype=np.uint8)
    cdef Py_ssize_t[::1] parent = np.zeros(g, dtype=np.intp)
    cdef int64_t[::1] labels = np.zeros(g, dtype=np.int64)
    cdef uint8_t[::1] cforced = np.zeros(g, dtype=np.uint8)
    out = np.zeros(nw, dtype=np.int64)
    cdef int64_t[::1] out_v = out
    with nogil:
        for t in range(nw):
            n = _classify(G, PI, PJ, L, grid_v, W[t, 0], W[t, 1], W[t, 2],
                          active, forced, parent, labels, cforced)
            dim = 0
            for c in range(n):
                if not cforced[c]:
                    dim += 1
            out_v[t] = dim
    return out


def integer_rank(matrix):
    """Bareiss rank in 64-bit integers; raises OverflowError instead of wrapping."""
    a = np.array(matrix, dtype=np.int64, copy=True)
    if a.ndim != 2 or a.shape[0] == 0 or a.shape[1] == 0:
        return 0
    cdef int64_t[:, ::1] m = np.ascontiguousarray(a)
    cdef Py_ssize_t nrows = m.shape[0], ncols = m.shape[1]
    cdef Py_ssize_t rank = 0, col, r, c, piv
    cdef long long prev = 1, p, f, t1, t2, diff
    cdef int64_t tmp
    cdef bint bad = False
    with nogil:
        for col in range(ncols):
            piv = -1
            for r in range(rank, nrows):
                if m[r, col] != 0:
                    piv = r
                    break
            if piv < 0:
                continue
            if piv != rank:
                for c in range(ncols):
                    tmp = m[rank, c]
                    m[rank, c] = m[piv, c]
                    m[piv, c] = tmp
            p = m[rank, col]
            for r in range(rank + 1, nrows):
                f = m[r, col]
                for c in range(col + 1, ncols):
                    if hs_mul(p, m[r, c], &t1) or hs_mul(f, m[rank, c], &t2) or hs_sub(t1, t2, &diff):
                        bad = True
                        break
                    m[r, c] = diff // prev
                if bad:
                    break
                m[r, col] = 0
            if bad:
                break
            prev = p
            rank += 1
            if rank == nrows:
                break
    if bad:
        raise OverflowError("64-bit Bareiss elimination overflowed")
    return rank
