"""Nested pairs I ⊆ J in two variables whose difference S_I minus S_J is a rectangle.

Windows are translates of the difference rectangle ``R``.  A lattice point of
the plane is identified with the box it is the upper-right corner of, so a
point is "above the boundary of S_I" when that box lies in the ideal region of
I.  For a window with bottom-left box ``(p, q)`` and size ``w x h``:

* bottom-left corner point  -> box ``(p-1, q-1)``
* upper-right corner point  -> box ``(p+w-1, q+h-1)``
* top side                  -> boxes ``(p-1 .. p+w-1, q+h-1)``
* right side                -> boxes ``(p+w-1, q-1 .. q+h-1)``

G-type: both sides above the boundary, bottom-left corner not.  Kernel-type:
upper-right corner above, and both sides cross the boundary.  A G-type window
whose bottom-left corner point lies in R is an overlap window.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import kernels
from .errors import NotNested, NotRectangular, VerificationError, WrongDimension
from .hom import (PureWeightMorphism, hom_dim, hom_dimension, nested_tangent_dimension,
                  weight_piece, candidate_weights)
from .monomial import Exponent, MonomialIdeal, add, is_subideal


class WindowClass(enum.Enum):
    GTYPE = "G"
    GPRIME = "G'"
    KERNEL = "kernel"
    OVERLAP = "overlap"
    NONE = "none"


@dataclass(frozen=True)
class DifferenceRegion:
    boxes: frozenset
    is_rectangle: bool
    width: int = 0
    height: int = 0
    anchor: Optional[Exponent] = None

    def __len__(self) -> int:
        return len(self.boxes)


@dataclass(frozen=True)
class RectangleWindow:
    anchor: Exponent
    width: int
    height: int
    kind: WindowClass


@dataclass(frozen=True)
class CokerFamilies:
    G: tuple
    Gprime: tuple
    ker_psi: tuple


@dataclass(frozen=True)
class SliceCount:
    position: int
    g_windows: int
    kernel_windows: int
    expected: int

    @property
    def ok(self) -> bool:
        return self.g_windows == self.expected == self.kernel_windows


@dataclass
class HeightReport:
    heights: list = field(default_factory=list)
    columns: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.heights) and all(s.ok for s in self.columns)


def _check_pair(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.dim != 2 or J.dim != 2:
        raise WrongDimension("nested pairs are two-dimensional")
    if not is_subideal(I, J):
        raise NotNested(f"{I} is not contained in {J}")
    if J.colength == 0:
        raise NotNested("J must be a proper ideal")


def difference_region(I: MonomialIdeal, J: MonomialIdeal) -> DifferenceRegion:
    _check_pair(I, J)
    boxes = frozenset(I.staircase.boxes - J.staircase.boxes)
    if not boxes:
        return DifferenceRegion(boxes, True)
    x0 = min(b[0] for b in boxes)
    y0 = min(b[1] for b in boxes)
    w = max(b[0] for b in boxes) - x0 + 1
    h = max(b[1] for b in boxes) - y0 + 1
    return DifferenceRegion(boxes, w * h == len(boxes), w, h, (x0, y0))


def _rect(I: MonomialIdeal, J: MonomialIdeal) -> DifferenceRegion:
    region = difference_region(I, J)
    if not region.is_rectangle:
        raise NotRectangular(f"{J} minus {I} is not a rectangle")
    return region


def ker_psi_basis(I: MonomialIdeal, J: MonomialIdeal) -> list[PureWeightMorphism]:
    """Weight-basis morphisms of Hom(I,R/I) whose heads all lie in S_I minus S_J."""
    _check_pair(I, J)
    j_boxes = J.staircase.boxes
    return [f for f in hom_dimension(I, I).basis()
            if all(h not in j_boxes for h in f.heads().values())]


def _coker_pieces(I: MonomialIdeal, J: MonomialIdeal) -> tuple[list, list]:
    """Classes of Hom(I,R/J) that complete the image of psi, split by direction.

    Within one weight every class of Hom(I,R/J) sits inside a class of
    Hom(I,R/I); they got separated because the dragging between them passes
    through the difference region.  psi hits the sum of the pieces of an
    unforced outer class, so all pieces but one are new: for downward weights
    the lowest piece is dropped (the rest form G), for the others the highest
    piece is dropped (the rest form G').  Pieces of a forced outer class are all
    new.
    """
    G, Gp = [], []
    for w in candidate_weights(I, J):
        inner = weight_piece(I, J, w)
        live = [c for c, f in zip(inner.classes, inner.forced) if not f]
        if not live:
            continue
        outer = weight_piece(I, I, w)
        groups: dict[int, list] = {}
        for c in live:
            groups.setdefault(outer.class_of(min(c)), []).append(c)
        down = w[1] < 0
        for k, pieces in sorted(groups.items()):
            pieces = sorted(pieces, key=min)
            if not outer.forced[k]:
                pieces = pieces[1:] if down else pieces[:-1]
            target = G if down else Gp
            target += [PureWeightMorphism(w, c, I, J) for c in pieces]
    return G, Gp


def coker_families(I: MonomialIdeal, J: MonomialIdeal) -> CokerFamilies:
    _rect(I, J)
    G, Gp = _coker_pieces(I, J)
    return CokerFamilies(tuple(G), tuple(Gp), tuple(ker_psi_basis(I, J)))


def _in_ideal(I: MonomialIdeal, box) -> bool:
    return box[0] >= 0 and box[1] >= 0 and box not in I.staircase.boxes


CONVENTIONS = ("corner", "box")


def _classify(I: MonomialIdeal, region: DifferenceRegion, p: int, q: int,
              convention: str = "corner") -> WindowClass:
    w, h = region.width, region.height
    a, b = region.anchor
    if convention == "corner":
        top = [_in_ideal(I, (x, q + h - 1)) for x in range(p - 1, p + w)]
        right = [_in_ideal(I, (p + w - 1, y)) for y in range(q - 1, q + h)]
        bl = (p - 1, q - 1)
    elif convention == "box":
        # the window's own boxes: top row, right column, bottom-left box
        top = [_in_ideal(I, (x, q + h - 1)) for x in range(p, p + w)]
        right = [_in_ideal(I, (p + w - 1, y)) for y in range(q, q + h)]
        bl = (p, q)
    else:
        raise ValueError(f"unknown window convention {convention!r}")
    if all(top) and all(right) and not _in_ideal(I, bl):
        if bl in region.boxes:
            return WindowClass.OVERLAP
        return WindowClass.GTYPE if q > b else WindowClass.GPRIME
    if top[-1] and not all(top) and not all(right):
        return WindowClass.KERNEL
    return WindowClass.NONE


def classify_window(I: MonomialIdeal, J: MonomialIdeal, anchor,
                    convention: str = "corner") -> RectangleWindow:
    """Classify the window whose bottom-left box is ``anchor``.

    ``convention="box"`` reads the sides as the window's own top row and right
    column; it is kept for comparison and fails the bijection checks.
    """
    region = _rect(I, J)
    if not region.boxes:
        raise NotRectangular("the difference region is empty; there are no windows")
    p, q = anchor
    kind = _classify(I, region, p, q, convention)
    return RectangleWindow((p, q), region.width, region.height, kind)


def windows(I: MonomialIdeal, J: MonomialIdeal, convention: str = "corner") -> list[RectangleWindow]:
    """Every classified (non-``NONE``) window, row by row from the bottom."""
    region = _rect(I, J)
    if not region.boxes:
        return []
    W, H = I.staircase.bounds
    out = []
    for q in range(-region.height, H + 2):
        for p in range(-region.width, W + 2):
            kind = _classify(I, region, p, q, convention)
            if kind is not WindowClass.NONE:
                out.append(RectangleWindow((p, q), region.width, region.height, kind))
    return out


def _row_len(I: MonomialIdeal, y: int) -> int:
    rows = I.staircase.partition
    return rows[y] if 0 <= y < len(rows) else 0


def _col_len(I: MonomialIdeal, x: int) -> int:
    return sum(1 for r in I.staircase.partition if r > x) if x >= 0 else 0


def per_height_counts(I: MonomialIdeal, J: MonomialIdeal) -> HeightReport:
    """G-type and kernel-type windows per height above R, G'-type per column right of R.

    Each count is compared with ``min(d, w)`` (``min(d, h)`` for columns), where
    ``d`` is how much farther the row just below the height interval reaches than
    the row at its top.
    """
    region = _rect(I, J)
    report = HeightReport()
    if not region.boxes:
        return report
    w, h = region.width, region.height
    a, b = region.anchor
    W, H = I.staircase.bounds
    wins = windows(I, J)
    for q in range(b + 1, H + 1):
        at = [x for x in wins if x.anchor[1] == q]
        g = sum(1 for x in at if x.kind in (WindowClass.GTYPE, WindowClass.OVERLAP))
        k = sum(1 for x in at if x.kind is WindowClass.KERNEL)
        d = _row_len(I, q - 1) - _row_len(I, q + h - 1)
        report.heights.append(SliceCount(q, g, k, min(d, w)))
    for p in range(a + 1, W + 1):
        at = [x for x in wins if x.anchor[0] == p]
        g = sum(1 for x in at if x.kind in (WindowClass.GPRIME, WindowClass.OVERLAP))
        k = sum(1 for x in at if x.kind is WindowClass.KERNEL)
        d = _col_len(I, p - 1) - _col_len(I, p + w - 1)
        report.columns.append(SliceCount(p, g, k, min(d, h)))
    return report


def _window_of(region: DifferenceRegion, f: PureWeightMorphism) -> Exponent:
    return (region.anchor[0] - f.weight[0], region.anchor[1] - f.weight[1])


def window_bijections(I: MonomialIdeal, J: MonomialIdeal, convention: str = "corner") -> list[str]:
    """Compare the window classes with the morphism families; return every mismatch."""
    region = _rect(I, J)
    fam = coker_families(I, J)
    problems = []
    if not region.boxes:
        if fam.G or fam.Gprime or fam.ker_psi:
            problems.append("empty difference region with nonempty families")
        return problems
    by_kind: dict = {k: [] for k in WindowClass}
    for win in windows(I, J, convention):
        by_kind[win.kind].append(win.anchor)
    checks = [
        ("kernel", fam.ker_psi, by_kind[WindowClass.KERNEL]),
        ("G", fam.G, by_kind[WindowClass.GTYPE]),
        ("G'", fam.Gprime, by_kind[WindowClass.GPRIME]),
    ]
    for name, morphs, anchors in checks:
        images = [_window_of(region, f) for f in morphs]
        if len(set(images)) != len(images):
            problems.append(f"{name}: two morphisms share a window")
        if sorted(set(images)) != sorted(anchors):
            problems.append(f"{name}: windows {sorted(anchors)} vs morphisms {sorted(images)}")
    if len(by_kind[WindowClass.OVERLAP]) != len(region.boxes):
        problems.append(f"overlap windows {len(by_kind[WindowClass.OVERLAP])} != n-m {len(region.boxes)}")
    return problems


def decomposition_rank(I: MonomialIdeal, J: MonomialIdeal) -> tuple[int, int]:
    """(rank of im psi + G + G', dim Hom(I,R/J)) computed weight by weight."""
    fam = _coker_pieces(I, J)
    extra: dict = {}
    for f in fam[0] + fam[1]:
        extra.setdefault(f.weight, []).append(f.support)
    j_boxes = J.staircase.boxes
    total = 0
    for w in candidate_weights(I, J):
        coords = [i for i, g in enumerate(I.generators) if add(g, w) in j_boxes]
        cols = [c for c, f in zip(*_outer(I, w)) if not f]
        vecs = [[1 if i in c else 0 for i in coords] for c in cols]
        vecs += [[1 if i in s else 0 for i in coords] for s in extra.get(w, [])]
        vecs = [v for v in vecs if any(v)]
        if vecs:
            total += kernels.integer_rank(np.array(vecs, dtype=np.int64))
    return total, hom_dim(I, J)


def _outer(I: MonomialIdeal, w):
    piece = weight_piece(I, I, w)
    return piece.classes, piece.forced


@dataclass(frozen=True)
class Theorem1Ledger:
    n: int
    m: int
    dim_hom_jj: int
    dim_ker_psi: int
    g: int
    g_prime: int
    dimension: int


def theorem1_ledger(I: MonomialIdeal, J: MonomialIdeal) -> Theorem1Ledger:
    region = _rect(I, J)
    fam = coker_families(I, J)
    dim_jj = hom_dim(J, J)
    dim = dim_jj + len(fam.ker_psi) - len(fam.G) - len(fam.Gprime)
    return Theorem1Ledger(I.colength, J.colength, dim_jj, len(fam.ker_psi),
                          len(fam.G), len(fam.Gprime), dim)


def nested_dim_rectangular(I: MonomialIdeal, J: MonomialIdeal) -> int:
    """Tangent dimension at a rectangular nested pair, through the exact-sequence ledger.

    The ledger value is checked against the kernel of psi - phi and against
    ``dim Ker psi = |G| + |G'| + 2(n - m)``.
    """
    led = theorem1_ledger(I, J)
    nm = led.n - led.m
    if led.dim_ker_psi != led.g + led.g_prime + 2 * nm:
        raise VerificationError(f"dim Ker psi {led.dim_ker_psi} != |G|+|G'|+2(n-m) "
                                f"= {led.g}+{led.g_prime}+{2 * nm} for {I} ⊆ {J}")
    report = nested_tangent_dimension(I, J)
    if report.dim_kernel != led.dimension:
        raise VerificationError(f"ledger {led.dimension} != kernel {report.dim_kernel} for {I} ⊆ {J}")
    return led.dimension
