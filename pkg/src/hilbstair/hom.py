"""Hom_R(I, R/J) for monomial ideals I ⊆ J.

Two independent routes compute the same dimension:

* the weight engine: the torus acts on Hom_R(I, R/J), so the space splits into
  pure-weight pieces.  In weight ``w`` a homomorphism sends generator ``a_i`` to
  ``c_i * x^(a_i + w)``; the syzygy ``lcm/a_i * a_i = lcm/a_j * a_j`` either ties
  ``c_i`` to ``c_j`` (both targets standard), forces ``c_i = 0`` (only one target
  standard), or says nothing (``lcm + w`` not standard).  The piece dimension
  is the number of linked classes that are not forced to zero.
* the dense oracle: one unknown per (generator, standard monomial), one linear
  equation per syzygy pair and standard monomial, solved by exact elimination.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional, Sequence

import numpy as np

from . import kernels
from .errors import HeadInIdeal, NotNested, SizeCapExceeded, WrongDimension
from .monomial import Exponent, MonomialIdeal, Region, add, contains, divides, is_subideal, sub

DENSE_UNKNOWN_CAP = 20_000

Weight = tuple[int, ...]


@dataclass(frozen=True)
class PureWeightMorphism:
    """A homomorphism I -> R/J of one torus weight with 0/1 coefficients.

    ``support`` holds the indices of generators of ``source`` with nonzero
    image; generator ``i`` goes to the monomial ``a_i + weight``.
    """

    weight: Weight
    support: frozenset
    source: MonomialIdeal
    target: MonomialIdeal

    def heads(self) -> dict[int, Exponent]:
        gens = self.source.generators
        return {i: add(gens[i], self.weight) for i in sorted(self.support)}

    def images(self) -> dict[int, Optional[Exponent]]:
        heads = self.heads()
        return {i: heads.get(i) for i in range(len(self.source.generators))}

    def arrows(self) -> list[tuple[Exponent, Exponent]]:
        gens = self.source.generators
        return [(gens[i], h) for i, h in self.heads().items()]

    @property
    def signature(self) -> tuple[Weight, tuple[int, ...]]:
        return self.weight, tuple(sorted(self.support))


@dataclass(frozen=True)
class WeightPiece:
    weight: Weight
    active: frozenset
    classes: tuple  # frozensets of generator indices, ordered by smallest member
    forced: tuple   # one bool per class
    source: MonomialIdeal
    target: MonomialIdeal

    @property
    def dimension(self) -> int:
        return sum(1 for f in self.forced if not f)

    @property
    def forced_zero(self) -> frozenset:
        return frozenset(i for c, f in zip(self.classes, self.forced) if f for i in c)

    def class_of(self, i: int) -> Optional[int]:
        for k, c in enumerate(self.classes):
            if i in c:
                return k
        return None

    def basis(self) -> list[PureWeightMorphism]:
        return [PureWeightMorphism(self.weight, c, self.source, self.target)
                for c, f in zip(self.classes, self.forced) if not f]


@dataclass(frozen=True)
class HomSpace:
    source: MonomialIdeal
    target: MonomialIdeal
    pieces: tuple

    @property
    def dimension(self) -> int:
        return sum(p.dimension for p in self.pieces)

    def basis(self) -> list[PureWeightMorphism]:
        return [f for p in self.pieces for f in p.basis()]


@dataclass(frozen=True)
class PairTangentReport:
    dim_hom_ii: int
    dim_hom_jj: int
    dim_hom_ij: int
    rank_psi: int
    rank_psi_minus_phi: int
    dim_kernel: int

    @property
    def surjective(self) -> bool:
        return self.rank_psi_minus_phi == self.dim_hom_ij

    @property
    def dim_ker_psi(self) -> int:
        return self.dim_hom_ii - self.rank_psi


def _pad(v: Sequence[int]) -> tuple[int, int, int]:
    return tuple(v) + (0,) * (3 - len(v))


@dataclass(frozen=True)
class _Arrays:
    gens: np.ndarray
    pi: np.ndarray
    pj: np.ndarray
    lcms: np.ndarray
    grid: np.ndarray


@lru_cache(maxsize=8192)
def _arrays(source: MonomialIdeal, target: MonomialIdeal) -> _Arrays:
    gens = np.array([_pad(g) for g in source.generators], dtype=np.int64).reshape(-1, 3)
    syz = source.syzygies
    pi = np.array([s.i for s in syz], dtype=np.int64)
    pj = np.array([s.j for s in syz], dtype=np.int64)
    lcms = np.array([_pad(s.lcm) for s in syz], dtype=np.int64).reshape(-1, 3)
    stair = target.staircase
    shape = _pad(stair.bounds)
    shape = (shape[0], shape[1], max(shape[2], 1))
    grid = np.zeros(shape, dtype=np.uint8)
    for b in stair.boxes:
        grid[_pad(b)] = 1
    return _Arrays(gens, pi, pj, lcms, grid)


def _require_nested(source: MonomialIdeal, target: MonomialIdeal) -> None:
    if source.dim != target.dim:
        raise WrongDimension("ideals live in different polynomial rings")
    if not is_subideal(source, target):
        raise NotNested(f"{source} is not contained in {target}")


def candidate_weights(source: MonomialIdeal, target: MonomialIdeal) -> list[Weight]:
    """All ``s - a_i`` with ``s`` standard for ``target`` and ``a_i`` a generator of ``source``."""
    return sorted({sub(s, g) for s in target.staircase.boxes for g in source.generators})


def weight_piece(source: MonomialIdeal, target: MonomialIdeal, w: Sequence[int]) -> WeightPiece:
    arr = _arrays(source, target)
    labels, forced = kernels.classify_weight(arr.gens, arr.pi, arr.pj, arr.lcms, arr.grid, _pad(w))
    classes: list[set] = [set() for _ in range(len(forced))]
    for i, c in enumerate(labels.tolist()):
        if c >= 0:
            classes[c].add(i)
    return WeightPiece(
        weight=tuple(w),
        active=frozenset(i for i, c in enumerate(labels.tolist()) if c >= 0),
        classes=tuple(frozenset(c) for c in classes),
        forced=tuple(bool(f) for f in forced.tolist()),
        source=source,
        target=target,
    )


def hom_dimension(source: MonomialIdeal, target: MonomialIdeal) -> HomSpace:
    """Weight-by-weight decomposition of Hom_R(source, R/target)."""
    _require_nested(source, target)
    pieces = tuple(weight_piece(source, target, w) for w in candidate_weights(source, target))
    return HomSpace(source, target, pieces)


def hom_dim(source: MonomialIdeal, target: MonomialIdeal) -> int:
    """Total dimension only, through the batched kernel."""
    _require_nested(source, target)
    weights = candidate_weights(source, target)
    if not weights:
        return 0
    arr = _arrays(source, target)
    w = np.array([_pad(v) for v in weights], dtype=np.int64)
    return int(kernels.weight_dimensions(arr.gens, arr.pi, arr.pj, arr.lcms, arr.grid, w).sum())


def dense_system(source: MonomialIdeal, target: MonomialIdeal,
                 cap: int = DENSE_UNKNOWN_CAP) -> tuple[np.ndarray, int]:
    """Constraint matrix of the dense oracle and its number of unknowns."""
    std = sorted(target.staircase.boxes)
    index = {s: k for k, s in enumerate(std)}
    gens = source.generators
    n_unknowns = len(gens) * len(std)
    if n_unknowns > cap:
        raise SizeCapExceeded(f"{n_unknowns} unknowns exceed the dense cap {cap}")
    rows = []
    for syz in source.syzygies:
        mi = sub(syz.lcm, gens[syz.i])
        mj = sub(syz.lcm, gens[syz.j])
        for t in std:
            row = {}
            si, sj = sub(t, mi), sub(t, mj)
            if si in index:
                row[syz.i * len(std) + index[si]] = 1
            if sj in index:
                k = syz.j * len(std) + index[sj]
                row[k] = row.get(k, 0) - 1
            if any(row.values()):
                rows.append(row)
    mat = np.zeros((len(rows), n_unknowns), dtype=np.int64)
    for r, row in enumerate(rows):
        for k, v in row.items():
            mat[r, k] = v
    return mat, n_unknowns


def hom_dimension_dense(source: MonomialIdeal, target: MonomialIdeal,
                        cap: int = DENSE_UNKNOWN_CAP, allow_unit: bool = False) -> int:
    """dim Hom_R(source, R/target) from the full linear system, no weight splitting."""
    _require_nested(source, target)
    if target.colength == 0 and not allow_unit:
        raise NotNested("target is the unit ideal; pass allow_unit=True to compute anyway")
    mat, n = dense_system(source, target, cap)
    if n == 0:
        return 0
    return n - (kernels.integer_rank(mat) if mat.shape[0] else 0)


def drag_closure(tail: int, head: Sequence[int], source: MonomialIdeal,
                 target: MonomialIdeal) -> Optional[PureWeightMorphism]:
    """Smallest pure-weight morphism containing the arrow ``a_tail -> head``.

    Returns ``None`` when the syzygies force the arrow's coefficient to vanish
    (including heads with a negative coordinate).
    """
    region = contains(target, head)
    if region is Region.IDEAL:
        raise HeadInIdeal(f"head {tuple(head)} lies in the ideal")
    if region is Region.Z:
        return None
    w = sub(head, source.generators[tail])
    piece = weight_piece(source, target, w)
    k = piece.class_of(tail)
    if k is None or piece.forced[k]:
        return None
    return PureWeightMorphism(w, piece.classes[k], source, target)


def psi_of(f: PureWeightMorphism, target: MonomialIdeal) -> Optional[PureWeightMorphism]:
    """Compose ``f: I -> R/I`` with the projection ``R/I -> R/J``."""
    boxes = target.staircase.boxes
    keep = frozenset(i for i, h in f.heads().items() if h in boxes)
    if not keep:
        return None
    return PureWeightMorphism(f.weight, keep, f.source, target)


def _first_divisor(alpha: Exponent, gens: Sequence[Exponent]) -> int:
    return next(k for k, g in enumerate(gens) if divides(g, alpha))


def phi_of(g: PureWeightMorphism, source: MonomialIdeal,
           pick: Optional[Callable[[Exponent, list[int]], int]] = None) -> Optional[PureWeightMorphism]:
    """Restrict ``g: J -> R/J`` along the inclusion ``I -> J``.

    Each generator ``a`` of I is written as ``(a / c) * c`` for a generator ``c``
    of J dividing it; ``pick`` chooses ``c`` among the candidates (the first by
    default).  The result does not depend on that choice.
    """
    J = g.source
    boxes = g.target.staircase.boxes
    keep = set()
    for i, alpha in enumerate(source.generators):
        cands = [k for k, c in enumerate(J.generators) if divides(c, alpha)]
        k = pick(alpha, cands) if pick else cands[0]
        if k in g.support and add(alpha, g.weight) in boxes:
            keep.add(i)
    if not keep:
        return None
    return PureWeightMorphism(g.weight, frozenset(keep), source, g.target)


def _unforced(piece: WeightPiece) -> list[frozenset]:
    return [c for c, f in zip(piece.classes, piece.forced) if not f]


def nested_tangent_dimension(I: MonomialIdeal, J: MonomialIdeal) -> PairTangentReport:
    """dim Ker(psi - phi) on Hom(I,R/I) ⊕ Hom(J,R/J), assembled weight by weight."""
    if I.dim != 2 or J.dim != 2:
        raise WrongDimension("nested pairs are supported in two variables only")
    _require_nested(I, J)
    if J.colength == 0:
        raise NotNested("J must be a proper ideal")
    j_boxes = J.staircase.boxes
    weights = sorted(set(candidate_weights(I, I)) | set(candidate_weights(J, J)))
    dim_ii = dim_jj = rank_total = rank_psi = 0
    for w in weights:
        cols_ii = _unforced(weight_piece(I, I, w))
        cols_jj = _unforced(weight_piece(J, J, w))
        dim_ii += len(cols_ii)
        dim_jj += len(cols_jj)
        coords = [i for i, a in enumerate(I.generators) if add(a, w) in j_boxes]
        if not coords or not (cols_ii or cols_jj):
            continue
        divisor = [_first_divisor(I.generators[i], J.generators) for i in coords]
        mat = np.zeros((len(coords), len(cols_ii) + len(cols_jj)), dtype=np.int64)
        for c, cls in enumerate(cols_ii):
            for r, i in enumerate(coords):
                mat[r, c] = 1 if i in cls else 0
        for c, cls in enumerate(cols_jj, start=len(cols_ii)):
            for r, k in enumerate(divisor):
                mat[r, c] = -1 if k in cls else 0
        rank_total += kernels.integer_rank(mat)
        if cols_ii:
            rank_psi += kernels.integer_rank(mat[:, :len(cols_ii)])
    return PairTangentReport(
        dim_hom_ii=dim_ii,
        dim_hom_jj=dim_jj,
        dim_hom_ij=hom_dim(I, J),
        rank_psi=rank_psi,
        rank_psi_minus_phi=rank_total,
        dim_kernel=dim_ii + dim_jj - rank_total,
    )
