"""Reference computations written from scratch with sympy, sharing no code with the package.

Ideals are plain lists of exponent tuples here.
"""
from __future__ import annotations

import itertools

import sympy


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimal(gens):
    gens = {tuple(g) for g in gens}
    return sorted(g for g in gens if not any(h != g and _divides(h, g) for h in gens))


def standard_monomials(gens):
    gens = minimal(gens)
    d = len(gens[0])
    bound = [max(g[k] for g in gens if all(g[j] == 0 for j in range(d) if j != k)) for k in range(d)]
    return sorted(p for p in itertools.product(*(range(b) for b in bound))
                  if not any(_divides(g, p) for g in gens))


def _hom_basis(I, J):
    """Null-space basis of Hom(I, R/J) as sympy column vectors, with coordinate labels."""
    I, J = minimal(I), minimal(J)
    std = standard_monomials(J)
    where = {s: k for k, s in enumerate(std)}
    coords = [(i, s) for i in range(len(I)) for s in std]
    col = {c: k for k, c in enumerate(coords)}
    rows = []
    for i, j in itertools.combinations(range(len(I)), 2):
        L = tuple(max(a, b) for a, b in zip(I[i], I[j]))
        mi = tuple(l - a for l, a in zip(L, I[i]))
        mj = tuple(l - a for l, a in zip(L, I[j]))
        for t in std:
            row = [0] * len(coords)
            si = tuple(a - b for a, b in zip(t, mi))
            sj = tuple(a - b for a, b in zip(t, mj))
            if si in where:
                row[col[(i, si)]] += 1
            if sj in where:
                row[col[(j, sj)]] -= 1
            if any(row):
                rows.append(row)
    if not coords:
        return [], coords
    M = sympy.Matrix(rows) if rows else sympy.zeros(1, len(coords))
    return M.nullspace(), coords


def hom_dim(I, J=None) -> int:
    basis, _ = _hom_basis(I, I if J is None else J)
    return len(basis)


def rank(rows) -> int:
    return sympy.Matrix(rows).rank() if rows and rows[0] else 0


def nested_dim(I, J) -> int:
    """dim of the kernel of psi - phi on Hom(I,R/I) ⊕ Hom(J,R/J)."""
    I, J = minimal(I), minimal(J)
    b1, c1 = _hom_basis(I, I)
    b2, c2 = _hom_basis(J, J)
    stdJ = standard_monomials(J)
    target = [(i, s) for i in range(len(I)) for s in stdJ]
    tix = {c: k for k, c in enumerate(target)}
    cols = []
    for v in b1:
        w = [0] * len(target)
        for k, (i, s) in enumerate(c1):
            if (i, s) in tix:
                w[tix[(i, s)]] += v[k]
        cols.append(w)
    for v in b2:
        w = [0] * len(target)
        for k, (c, s) in enumerate(c2):
            for i, a in enumerate(I):
                g = J[c]
                # use the first generator of J dividing a
                first = next(h for h in range(len(J)) if _divides(J[h], a))
                if first != c:
                    continue
                t = tuple(x + y - z for x, y, z in zip(s, a, g))
                if (i, t) in tix:
                    w[tix[(i, t)]] -= v[k]
        cols.append(w)
    if not cols:
        return 0
    M = sympy.Matrix(cols).T
    return len(cols) - M.rank()


def count_partitions(n: int) -> int:
    """p(n) by the pentagonal-number recurrence."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        k, total = 1, 0
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def count_plane_partitions(n: int) -> int:
    """Coefficient of q^n in prod 1/(1-q^k)^k."""
    c = [1] + [0] * n
    for k in range(1, n + 1):
        for _ in range(k):
            for m in range(k, n + 1):
                c[m] += c[m - k]
    return c[n]


def downward_closed_sets(n: int, d: int):
    """All downward-closed sets of n lattice points in N^d, by growing one corner at a time."""
    level = {frozenset([(0,) * d])}
    for _ in range(n - 1):
        nxt = set()
        for s in level:
            for b in s:
                for k in range(d):
                    c = b[:k] + (b[k] + 1,) + b[k + 1:]
                    if c in s:
                        continue
                    if all(c[j] == 0 or c[:j] + (c[j] - 1,) + c[j + 1:] in s for j in range(d)):
                        nxt.add(s | {c})
        level = nxt
    return level
