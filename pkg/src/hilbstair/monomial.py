"""Monomials, monomial ideals of finite colength and their staircase diagrams.

Exponent vectors are plain tuples of ints.  A :class:`MonomialIdeal` stores its
minimal generators in a fixed order (ascending in the last coordinate, then the
one before, ...), which in two variables lists the generators from the pure
``x`` power at the bottom of the diagram to the pure ``y`` power at the top.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import EmptyInput, InfiniteColength, InvalidExponent, SizeCapExceeded

Exponent = tuple[int, ...]

MAX_EXPONENT = 2**31
DEFAULT_COLENGTH_CAP = 10**6


class Region(enum.Enum):
    IDEAL = "InIdeal"
    STAIRCASE = "InStaircase"
    Z = "InZ"


def colex_key(v: Sequence[int]) -> tuple[int, ...]:
    return tuple(reversed(v))


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    """True when the monomial with exponents ``a`` divides the one with ``b``."""
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Sequence[int], b: Sequence[int]) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def add(a: Sequence[int], b: Sequence[int]) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


def unit(k: int, d: int) -> Exponent:
    return tuple(1 if i == k else 0 for i in range(d))


@dataclass(frozen=True)
class Staircase:
    """Finite downward-closed set of boxes in N^d."""

    boxes: frozenset
    dim: int

    def __post_init__(self):
        for b in self.boxes:
            for k in range(self.dim):
                if b[k] > 0:
                    below = b[:k] + (b[k] - 1,) + b[k + 1:]
                    if below not in self.boxes:
                        raise ValueError(f"box {b} present but {below} missing")

    def __len__(self) -> int:
        return len(self.boxes)

    def __contains__(self, p) -> bool:
        return tuple(p) in self.boxes

    def __iter__(self):
        return iter(sorted(self.boxes, key=colex_key))

    @cached_property
    def bounds(self) -> Exponent:
        """Extent along each axis (one past the largest coordinate)."""
        if not self.boxes:
            return (0,) * self.dim
        return tuple(max(b[k] for b in self.boxes) + 1 for k in range(self.dim))

    @cached_property
    def partition(self) -> tuple[int, ...]:
        """Row lengths ``(len(y=0), len(y=1), ...)``; two variables only."""
        if self.dim != 2:
            raise ValueError("partition profile is defined for d=2")
        rows = [0] * (self.bounds[1])
        for x, y in self.boxes:
            rows[y] = max(rows[y], x + 1)
        return tuple(rows)

    @cached_property
    def layers(self) -> tuple[tuple[int, ...], ...]:
        """z-slices, each as a 2D row-length partition; three variables only."""
        if self.dim != 3:
            raise ValueError("layer profile is defined for d=3")
        out = []
        for z in range(self.bounds[2]):
            flat = Staircase(frozenset((x, y) for x, y, c in self.boxes if c == z), 2)
            out.append(flat.partition)
        return tuple(out)

    def minimal_generators(self) -> list[Exponent]:
        """Inner corners: the minimal monomials outside the staircase."""
        d = self.dim
        if not self.boxes:
            return [(0,) * d]
        cands = {add(b, unit(k, d)) for b in self.boxes for k in range(d)}
        gens = []
        for c in cands:
            if c in self.boxes:
                continue
            if all(c[k] == 0 or sub(c, unit(k, d)) in self.boxes for k in range(d)):
                gens.append(c)
        return sorted(gens, key=colex_key)

    def to_ideal(self) -> MonomialIdeal:
        return from_generators(self.minimal_generators(), self.dim)


@dataclass(frozen=True)
class SyzygyPair:
    i: int
    j: int
    lcm: Exponent


@dataclass(frozen=True)
class MonomialIdeal:
    generators: tuple[Exponent, ...]
    dim: int
    colength_cap: int = field(default=DEFAULT_COLENGTH_CAP, compare=False, repr=False)

    @cached_property
    def staircase(self) -> Staircase:
        return staircase_of(self)

    @property
    def colength(self) -> int:
        return len(self.staircase)

    @cached_property
    def syzygies(self) -> tuple[SyzygyPair, ...]:
        return tuple(syzygy_pairs(self))

    def region(self, p: Sequence[int]) -> Region:
        return contains(self, p)

    def in_ideal(self, p: Sequence[int]) -> bool:
        return all(c >= 0 for c in p) and tuple(p) not in self.staircase.boxes

    def to_json(self) -> dict:
        return {"dim": self.dim, "generators": [list(g) for g in self.generators]}

    def label(self) -> str:
        """Compact, canonical text form: the generator list as JSON."""
        return "[" + ",".join("[" + ",".join(map(str, g)) + "]" for g in self.generators) + "]"

    def __str__(self) -> str:
        names = "xyz"
        terms = []
        for g in self.generators:
            t = "".join(names[k] + (f"^{e}" if e > 1 else "") for k, e in enumerate(g) if e)
            terms.append(t or "1")
        return "(" + ",".join(terms) + ")"


def _check_vector(v, d: int) -> Exponent:
    v = tuple(v)
    if len(v) != d:
        raise InvalidExponent(f"generator {list(v)} has length {len(v)}, expected {d}")
    for c in v:
        if not isinstance(c, int) or isinstance(c, bool):
            raise InvalidExponent(f"generator {list(v)} has a non-integer exponent")
        if c < 0:
            raise InvalidExponent(f"generator {list(v)} has a negative exponent")
        if c >= MAX_EXPONENT:
            raise InvalidExponent(f"generator {list(v)} exceeds the exponent bound 2^31")
    return v


def from_generators(gens: Iterable[Sequence[int]], d: int,
                    colength_cap: int = DEFAULT_COLENGTH_CAP) -> MonomialIdeal:
    """Normalise ``gens`` to the minimal generating set of the ideal they span.

    Raises :class:`EmptyInput` for an empty list and :class:`InfiniteColength`
    when some variable has no pure power among the generators.
    """
    if d not in (2, 3):
        raise InvalidExponent(f"dimension must be 2 or 3, got {d}")
    vecs = {_check_vector(g, d) for g in gens}
    if not vecs:
        raise EmptyInput("no generators given")
    minimal = [v for v in vecs if not any(u != v and divides(u, v) for u in vecs)]
    for k in range(d):
        if not any(all(v[j] == 0 for j in range(d) if j != k) for v in minimal):
            raise InfiniteColength(f"no pure power of variable {'xyz'[k]} in the ideal")
    minimal.sort(key=colex_key)
    return MonomialIdeal(tuple(minimal), d, colength_cap)


def staircase_of(ideal: MonomialIdeal) -> Staircase:
    d = ideal.dim
    gens = ideal.generators
    boxes: list[Exponent] = []

    def killed(prefix: tuple[int, ...]) -> bool:
        k = len(prefix)
        return any(all(g[i] <= prefix[i] for i in range(k)) and not any(g[k:]) for g in gens)

    def walk(prefix: tuple[int, ...]) -> None:
        k = len(prefix)
        if k == d - 1:
            top = min((g[-1] for g in gens if all(g[i] <= prefix[i] for i in range(k))))
            boxes.extend(prefix + (z,) for z in range(top))
            if len(boxes) > ideal.colength_cap:
                raise SizeCapExceeded(f"colength exceeds cap {ideal.colength_cap}")
            return
        c = 0
        while not killed(prefix + (c,)):
            walk(prefix + (c,))
            c += 1

    if not killed(()):
        walk(())
    return Staircase(frozenset(boxes), d)


def colength(ideal: MonomialIdeal) -> int:
    return ideal.colength


def contains(ideal: MonomialIdeal, p: Sequence[int]) -> Region:
    if len(p) != ideal.dim:
        raise InvalidExponent(f"point {list(p)} has length {len(p)}, expected {ideal.dim}")
    if any(c < 0 for c in p):
        return Region.Z
    if tuple(p) in ideal.staircase.boxes:
        return Region.STAIRCASE
    return Region.IDEAL


def is_subideal(i: MonomialIdeal, j: MonomialIdeal) -> bool:
    """True iff ``i`` is contained in ``j``."""
    if i.dim != j.dim:
        return False
    return all(any(divides(h, g) for h in j.generators) for g in i.generators)


def syzygy_pairs(ideal: MonomialIdeal) -> list[SyzygyPair]:
    gens = ideal.generators
    return [SyzygyPair(i, j, lcm(gens[i], gens[j]))
            for i, j in itertools.combinations(range(len(gens)), 2)]


def from_partition(rows: Sequence[int]) -> MonomialIdeal:
    """Ideal whose staircase has row lengths ``rows`` (row y=0 first)."""
    rows = list(rows)
    if not rows or any(r <= 0 for r in rows):
        raise EmptyInput("partition must be a non-empty list of positive row lengths")
    if any(a < b for a, b in zip(rows, rows[1:])):
        raise InvalidExponent(f"partition {rows} is not weakly decreasing")
    boxes = frozenset((x, y) for y, r in enumerate(rows) for x in range(r))
    return Staircase(boxes, 2).to_ideal()


def from_plane_partition(layers: Sequence[Sequence[int]]) -> MonomialIdeal:
    """Ideal from a stack of row-length partitions, layer z=0 first."""
    layers = [list(l) for l in layers]
    if not layers or not layers[0]:
        raise EmptyInput("plane partition must have a non-empty bottom layer")
    for z, rows in enumerate(layers):
        if not rows or any(r <= 0 for r in rows):
            raise InvalidExponent(f"layer z={z} must be a non-empty list of positive row lengths")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise InvalidExponent(f"layer z={z} {rows} is not weakly decreasing")
        if z > 0:
            below = layers[z - 1]
            if len(rows) > len(below) or any(r > below[y] for y, r in enumerate(rows)):
                raise InvalidExponent(f"layer z={z} {rows} is not contained in layer z={z - 1}")
    boxes = frozenset((x, y, z) for z, rows in enumerate(layers)
                      for y, r in enumerate(rows) for x in range(r))
    return Staircase(boxes, 3).to_ideal()
