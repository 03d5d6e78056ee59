"""Arrow calculus on two-variable staircases.

Generators are indexed bottom to top: index 0 is the pure power of ``x`` and
the last index the pure power of ``y``.  Dragging is never simulated here;
every morphism comes from :func:`hilbstair.hom.drag_closure`.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import InvalidArrow, WrongDimension
from .hom import PureWeightMorphism, drag_closure, weight_piece
from .monomial import Exponent, MonomialIdeal, sub


class ArrowKind(enum.Enum):
    K1 = 1  # direction in [left, up)
    K2 = 2  # strictly down-left
    K3 = 3  # direction in (right, down]


@dataclass(frozen=True)
class Arrow:
    tail: int
    head: Exponent


@dataclass(frozen=True)
class PQTable:
    p_sets: dict
    q_sets: dict
    p_gaps: tuple
    q_gaps: tuple
    p_slabs: dict = field(default_factory=dict)
    q_slabs: dict = field(default_factory=dict)

    @property
    def p_total(self) -> int:
        return sum(len(s) for s in self.p_sets.values())

    @property
    def q_total(self) -> int:
        return sum(len(s) for s in self.q_sets.values())


@dataclass
class Kind2Report:
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _need_2d(ideal: MonomialIdeal) -> None:
    if ideal.dim != 2:
        raise WrongDimension("arrow calculus here is two-dimensional")


def kind_of_delta(dx: int, dy: int) -> ArrowKind:
    if dx < 0 and dy >= 0:
        return ArrowKind.K1
    if dx < 0 and dy < 0:
        return ArrowKind.K2
    if dx >= 0 and dy < 0:
        return ArrowKind.K3
    raise InvalidArrow(f"displacement ({dx},{dy}) points into the ideal")


def arrow_kind(arrow: Arrow, ideal: MonomialIdeal) -> ArrowKind:
    _need_2d(ideal)
    if ideal.in_ideal(arrow.head):
        raise InvalidArrow(f"head {arrow.head} lies in the ideal")
    dx, dy = sub(arrow.head, ideal.generators[arrow.tail])
    return kind_of_delta(dx, dy)


def vertical_gaps(ideal: MonomialIdeal) -> list[int]:
    _need_2d(ideal)
    g = ideal.generators
    return [g[i + 1][1] - g[i][1] for i in range(len(g) - 1)]


def horizontal_gaps(ideal: MonomialIdeal) -> list[int]:
    _need_2d(ideal)
    g = ideal.generators
    return [g[i - 1][0] - g[i][0] for i in range(1, len(g))]


def pq_table(ideal: MonomialIdeal) -> PQTable:
    """P and Q box sets per generator, plus the row/column slabs they are counted by.

    ``P[i]``: boxes strictly left of generator ``i`` that leave the staircase when
    pushed up by the vertical gap to generator ``i+1``.  ``Q[i]``: boxes strictly
    below generator ``i`` that leave it when pushed right by the horizontal gap to
    generator ``i-1``.
    """
    _need_2d(ideal)
    gens = ideal.generators
    boxes = ideal.staircase.boxes
    pg, qg = vertical_gaps(ideal), horizontal_gaps(ideal)
    p_sets, q_sets, p_slabs, q_slabs = {}, {}, {}, {}
    for i, (gx, gy) in enumerate(gens):
        if i < len(gens) - 1:
            p = pg[i]
            p_sets[i] = frozenset(b for b in boxes if b[0] < gx and (b[0], b[1] + p) not in boxes)
            p_slabs[i] = frozenset(b for b in boxes if gy <= b[1] < gy + p)
        else:
            p_sets[i] = p_slabs[i] = frozenset()
        if i > 0:
            q = qg[i - 1]
            q_sets[i] = frozenset(b for b in boxes if b[1] < gy and (b[0] + q, b[1]) not in boxes)
            q_slabs[i] = frozenset(b for b in boxes if gx <= b[0] < gx + q)
        else:
            q_sets[i] = q_slabs[i] = frozenset()
    return PQTable(p_sets, q_sets, tuple(pg), tuple(qg), p_slabs, q_slabs)


def basis_arrows(ideal: MonomialIdeal) -> list[tuple[str, Arrow]]:
    """Generating arrows of the 2n-element basis, tagged ``"P"`` or ``"Q"``."""
    table = pq_table(ideal)
    out = []
    for i in range(len(ideal.generators)):
        out += [("P", Arrow(i, b)) for b in sorted(table.p_sets[i])]
    for i in range(len(ideal.generators)):
        out += [("Q", Arrow(i, b)) for b in sorted(table.q_sets[i])]
    return out


def basis_2d(ideal: MonomialIdeal) -> list[PureWeightMorphism]:
    """``<a -> b>`` for every ``b`` in ``P[a]`` and in ``Q[a]``.

    Raises ``AssertionError`` if one of them is zero or fails to kill the
    generators on the far side of its tail; both would contradict the count.
    """
    out = []
    for tag, arrow in basis_arrows(ideal):
        f = drag_closure(arrow.tail, arrow.head, ideal, ideal)
        assert f is not None, f"<{arrow}> vanished for {ideal}"
        if tag == "P":
            assert all(j <= arrow.tail for j in f.support), f"P-morphism {f.support} reaches above"
        else:
            assert all(j >= arrow.tail for j in f.support), f"Q-morphism {f.support} reaches below"
        out.append(f)
    return out


def verify_kind2_vanishing(ideal: MonomialIdeal) -> Kind2Report:
    """Every strictly down-left arrow into the staircase generates the zero morphism."""
    _need_2d(ideal)
    report = Kind2Report()
    boxes = sorted(ideal.staircase.boxes)
    for i, (gx, gy) in enumerate(ideal.generators):
        for b in boxes:
            if b[0] < gx and b[1] < gy:
                report.checked += 1
                f = drag_closure(i, b, ideal, ideal)
                if f is not None:
                    report.violations.append((i, b, sorted(f.support)))
    return report


def weight_profile(ideal: MonomialIdeal) -> dict:
    """Basis morphisms grouped by weight, for comparison with the piece dimensions."""
    groups: dict = {}
    for f in basis_2d(ideal):
        groups.setdefault(f.weight, set()).add(f.support)
    return {w: (len(s), weight_piece(ideal, ideal, w).dimension) for w, s in groups.items()}
