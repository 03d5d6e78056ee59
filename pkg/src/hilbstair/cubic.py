"""Three-variable staircases whose horizontal layers are rectangles.

When no minimal generator involves both ``x`` and ``y``, every z-layer of the
staircase is a rectangle and the tangent space splits into three families of
``n`` morphisms each: upward arrows from the xz-chain, upward arrows from the
yz-chain, and downward arrows that cannot be dragged any lower.  The families
are enumerated explicitly through drag closures and counted against boxes.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .errors import HypothesisViolated, VerificationError, WrongDimension
from .hom import PureWeightMorphism, drag_closure, hom_dim
from .monomial import Exponent, MonomialIdeal, Staircase, from_generators, sub

# vertical axis z, then y, then x
ORIENTATIONS: tuple[tuple[int, int, int], ...] = ((0, 1, 2), (2, 0, 1), (1, 2, 0))


@dataclass(frozen=True)
class LayerProfile:
    layers: tuple  # Staircase per z value
    heights: tuple

    @property
    def rectangular(self) -> bool:
        return all(_is_rectangle(s) for s in self.layers)


@dataclass(frozen=True)
class GeneratorChains:
    alphas: tuple  # generator indices, xz-plane, z descending
    betas: tuple   # generator indices, yz-plane, z descending


@dataclass(frozen=True)
class SurfaceCell:
    cell: Exponent
    column_count: int


@dataclass
class TypeFamilies:
    type1: dict = field(default_factory=dict)  # alpha index -> morphisms
    type2: dict = field(default_factory=dict)
    type3: list = field(default_factory=list)

    @property
    def counts(self) -> tuple[int, int, int]:
        return (sum(map(len, self.type1.values())), sum(map(len, self.type2.values())),
                len(self.type3))

    def all_morphisms(self) -> list[PureWeightMorphism]:
        out = [f for fs in self.type1.values() for f in fs]
        out += [f for fs in self.type2.values() for f in fs]
        return out + list(self.type3)


@dataclass
class DragLemmaReport:
    checked: int = 0
    blocked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _need_3d(ideal: MonomialIdeal) -> None:
    if ideal.dim != 3:
        raise WrongDimension("expected an ideal in three variables")


def _is_rectangle(s: Staircase) -> bool:
    rows = s.partition if s.boxes else ()
    return len(set(rows)) <= 1


def permute(ideal: MonomialIdeal, perm) -> MonomialIdeal:
    """Relabel axes: new coordinate ``k`` is old coordinate ``perm[k]``."""
    _need_3d(ideal)
    return from_generators([tuple(g[p] for p in perm) for g in ideal.generators], 3)


def layers(ideal: MonomialIdeal) -> LayerProfile:
    _need_3d(ideal)
    boxes = ideal.staircase.boxes
    out = []
    for z in range(ideal.staircase.bounds[2]):
        out.append(Staircase(frozenset((x, y) for x, y, c in boxes if c == z), 2))
    for lo, hi in zip(out, out[1:]):
        if not hi.boxes <= lo.boxes:
            raise VerificationError("layer above is not contained in the layer below")
    return LayerProfile(tuple(out), tuple(len(s) for s in out))


def rectangular_layers_orientation(ideal: MonomialIdeal) -> Optional[tuple[int, int, int]]:
    for perm in ORIENTATIONS:
        if layers(permute(ideal, perm)).rectangular:
            return perm
    return None


def has_xz_yz_generators(ideal: MonomialIdeal) -> bool:
    _need_3d(ideal)
    return not any(g[0] > 0 and g[1] > 0 for g in ideal.generators)


def generator_chains(ideal: MonomialIdeal) -> GeneratorChains:
    if not has_xz_yz_generators(ideal):
        raise HypothesisViolated(f"{ideal} has a generator divisible by xy")
    gens = ideal.generators
    alphas = sorted((i for i, g in enumerate(gens) if g[1] == 0), key=lambda i: -gens[i][2])
    betas = sorted((i for i, g in enumerate(gens) if g[0] == 0), key=lambda i: -gens[i][2])
    return GeneratorChains(tuple(alphas), tuple(betas))


def _upward_family(ideal: MonomialIdeal, chain) -> dict:
    gens = ideal.generators
    boxes = sorted(ideal.staircase.boxes)
    out = {}
    for pos in range(1, len(chain)):
        i = chain[pos]
        higher = set(chain[:pos])
        found = {}
        for b in boxes:
            if b[2] < gens[i][2]:
                continue
            f = drag_closure(i, b, ideal, ideal)
            if f is not None and not (f.support & higher):
                found.setdefault(f.signature, f)
        out[i] = [found[k] for k in sorted(found)]
    return out


def _downward_family(ideal: MonomialIdeal) -> list[PureWeightMorphism]:
    gens = ideal.generators
    boxes = sorted(ideal.staircase.boxes)
    found = {}
    for i, g in enumerate(gens):
        lower = {j for j, h in enumerate(gens) if h[2] < g[2]}
        for b in boxes:
            if b[2] >= g[2]:
                continue
            f = drag_closure(i, b, ideal, ideal)
            if f is not None and not (f.support & lower):
                found.setdefault(f.signature, f)
    return [found[k] for k in sorted(found)]


def type_families(ideal: MonomialIdeal) -> TypeFamilies:
    ch = generator_chains(ideal)
    return TypeFamilies(_upward_family(ideal, ch.alphas), _upward_family(ideal, ch.betas),
                        _downward_family(ideal))


def type_counts(ideal: MonomialIdeal) -> tuple[int, int, int]:
    """(t1, t2, t3); each must equal the colength, otherwise ``VerificationError``."""
    fam = type_families(ideal)
    counts = fam.counts
    n = ideal.colength
    if counts != (n, n, n):
        raise VerificationError(f"type counts {counts} for {ideal}, expected {n} each")
    distinct = {f.signature for f in fam.all_morphisms()}
    if len(distinct) != 3 * n:
        raise VerificationError(f"the three families of {ideal} overlap")
    return counts


def slab_report(ideal: MonomialIdeal) -> dict:
    """Per chain generator: (type-1 count, boxes in its z-slab); plus a cover check.

    The slab of ``alphas[i]`` is the z-range from its height up to just below
    ``alphas[i-1]``.  Returns ``{"alphas": {...}, "betas": {...}, "cover": bool}``.
    """
    ch = generator_chains(ideal)
    fam = type_families(ideal)
    gens = ideal.generators
    boxes = ideal.staircase.boxes
    out = {"cover": True}
    for name, chain, family in (("alphas", ch.alphas, fam.type1), ("betas", ch.betas, fam.type2)):
        seen: list = []
        table = {}
        for pos in range(1, len(chain)):
            lo, hi = gens[chain[pos]][2], gens[chain[pos - 1]][2]
            slab = [b for b in boxes if lo <= b[2] < hi]
            seen += slab
            table[chain[pos]] = (len(family[chain[pos]]), len(slab))
        out[name] = table
        out["cover"] &= len(seen) == len(set(seen)) == len(boxes)
    return out


def upward_surface_partition(ideal: MonomialIdeal) -> list[SurfaceCell]:
    _need_3d(ideal)
    boxes = ideal.staircase.boxes
    cells = [b for b in boxes if (b[0], b[1], b[2] + 1) not in boxes]
    return [SurfaceCell(c, c[2] + 1) for c in sorted(cells)]


def layer_surface_split(ideal: MonomialIdeal) -> list[dict]:
    """For every height with a generator above z=0, the upward surface of the layer below.

    One generator: the surface is a single rectangle.  Two (one on each chain):
    it is a ``p x q`` rectangle beside an ``r x s`` one, with ``p`` the x-gap to
    the next alpha, ``q`` the least power with ``y^q * alpha / z`` in the ideal,
    ``r`` the x-offset of alpha and ``s`` the y-gap to the next beta.
    """
    ch = generator_chains(ideal)
    gens = ideal.generators
    boxes = ideal.staircase.boxes
    out = []
    for c in sorted({g[2] for g in gens if g[2] > 0}):
        surface = {b for b in boxes if b[2] == c - 1 and (b[0], b[1], c) not in boxes}
        at = [i for i in range(len(gens)) if gens[i][2] == c]
        a = [i for i in at if i in ch.alphas and gens[i][0] > 0]
        b = [i for i in at if i in ch.betas and gens[i][1] > 0]
        rec = {"height": c, "generators": at, "surface": len(surface)}
        if a and b:
            ai, bj = a[0], b[0]
            nxt_a = ch.alphas[ch.alphas.index(ai) + 1]
            nxt_b = ch.betas[ch.betas.index(bj) + 1]
            p = gens[nxt_a][0] - gens[ai][0]
            below = (gens[ai][0], 0, c - 1)
            q = next(k for k in range(1, 10 ** 6) if (below[0], k, c - 1) not in boxes)
            r = gens[ai][0]
            s = gens[nxt_b][1] - gens[bj][1]
            y0 = gens[bj][1]
            rects = {(x, y, c - 1) for x in range(r, r + p) for y in range(q)}
            rects2 = {(x, y, c - 1) for x in range(r) for y in range(y0, y0 + s)}
            rec.update(p=p, q=q, r=r, s=s,
                       ok=not (rects & rects2) and (rects | rects2) == surface)
        else:
            xs = {t[0] for t in surface}
            ys = {t[1] for t in surface}
            rec["ok"] = len(surface) == len(xs) * len(ys) and bool(surface)
        out.append(rec)
    return out


def _drag_reaches_lower(ideal: MonomialIdeal, tail: int, delta, max_tail_z: Optional[int]) -> bool:
    """BFS over geometric drags of ``a_tail -> a_tail + delta``.

    Tails stay in the ideal region, heads in the staircase or past an axis,
    everything inside a box around the staircase.  ``max_tail_z`` caps the
    tail's height (``None`` for no cap).
    """
    gens = ideal.generators
    start = gens[tail]
    z0 = start[2]
    targets = {g for g in gens if g[2] < z0}
    boxes = ideal.staircase.boxes
    hi = [ideal.staircase.bounds[k] + abs(delta[k]) + 1 for k in range(3)]

    def ok(t) -> bool:
        if any(t[k] < 0 or t[k] > hi[k] for k in range(3)):
            return False
        if max_tail_z is not None and t[2] > max_tail_z:
            return False
        if t in boxes:
            return False
        h = tuple(t[k] + delta[k] for k in range(3))
        return min(h) < 0 or h in boxes

    seen = {start}
    todo = deque([start])
    while todo:
        t = todo.popleft()
        if t in targets:
            return True
        for k in range(3):
            for s in (-1, 1):
                u = t[:k] + (t[k] + s,) + t[k + 1:]
                if u not in seen and ok(u):
                    seen.add(u)
                    todo.append(u)
    return False


def verify_indirect_drag_lemma(ideal: MonomialIdeal) -> DragLemmaReport:
    """Downward arrows that no direct drag brings to a lower generator stay stuck under any drag."""
    if not has_xz_yz_generators(ideal):
        raise HypothesisViolated(f"{ideal} does not have rectangular layers")
    report = DragLemmaReport()
    gens = ideal.generators
    boxes = sorted(ideal.staircase.boxes)
    for i, g in enumerate(gens):
        for b in boxes:
            if b[2] >= g[2]:
                continue
            report.checked += 1
            delta = sub(b, g)
            if _drag_reaches_lower(ideal, i, delta, g[2]):
                continue
            report.blocked += 1
            if _drag_reaches_lower(ideal, i, delta, None):
                report.violations.append((i, b))
    return report


def tangent_dim_3d(ideal: MonomialIdeal) -> tuple[int, str]:
    """(dim Hom(I,R/I), method): ``"theorem2"`` via the type counts, else ``"oracle"``."""
    _need_3d(ideal)
    n = ideal.colength
    perm = rectangular_layers_orientation(ideal)
    if perm is not None:
        oriented = permute(ideal, perm)
        type_counts(oriented)
        engine = hom_dim(ideal, ideal)
        if engine != 3 * n:
            raise VerificationError(f"weight engine gives {engine} for {ideal}, expected {3 * n}")
        return 3 * n, "theorem2"
    engine = hom_dim(ideal, ideal)
    if engine < 3 * n:
        raise VerificationError(f"{engine} < 3n for {ideal}: the oracle is broken")
    return engine, "oracle"
