"""Cross-checks every applicable method on an instance and shrinks failures."""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .arrows2d import basis_2d
from .cubic import rectangular_layers_orientation, permute, type_counts
from .enumeration import nested_pairs, partition_tuples, plane_partition_layers
from .errors import SizeCapExceeded, StaircaseError
from .hom import hom_dim, hom_dimension, hom_dimension_dense, nested_tangent_dimension
from .monomial import (MonomialIdeal, Staircase, from_generators, from_partition,
                       from_plane_partition)
from .nested import difference_region, theorem1_ledger, window_bijections

DEFAULT_SWEEP = {"hilb2": 8, "hilb3": 5, "nested": 6}


@dataclass(frozen=True)
class Instance:
    kind: str
    generators: tuple
    dim: int
    j_generators: Optional[tuple] = None

    @property
    def ideal(self) -> MonomialIdeal:
        return from_generators(self.generators, self.dim)

    @property
    def j_ideal(self) -> Optional[MonomialIdeal]:
        return None if self.j_generators is None else from_generators(self.j_generators, self.dim)

    def key(self):
        return (("hilb2", "hilb3", "nested").index(self.kind), self.ideal.colength,
                self.generators, self.j_generators or ())

    def to_json(self) -> dict:
        d = {"dim": self.dim, "generators": [list(g) for g in self.generators]}
        if self.j_generators is None:
            return d
        return {"I": d, "J": {"dim": self.dim, "generators": [list(g) for g in self.j_generators]}}


@dataclass
class Result:
    instance: Instance
    values: dict = field(default_factory=dict)
    problems: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems and len(set(self.values.values())) <= 1

    def line(self) -> str:
        inst = self.instance
        label = inst.ideal.label() + ("" if inst.j_generators is None else " ⊆ " + inst.j_ideal.label())
        vals = " ".join(f"{k}={v}" for k, v in self.values.items())
        return f"{'ok' if self.ok else 'MISMATCH'} {inst.kind} {label} {vals}".rstrip()


def instance_of(ideal: MonomialIdeal, J: Optional[MonomialIdeal] = None) -> Instance:
    if J is not None:
        return Instance("nested", ideal.generators, ideal.dim, J.generators)
    return Instance("hilb2" if ideal.dim == 2 else "hilb3", ideal.generators, ideal.dim)


def check(inst: Instance, dense_cap: int = 20_000) -> Result:
    res = Result(inst)
    I = inst.ideal
    v = res.values
    try:
        if inst.kind == "nested":
            J = inst.j_ideal
            report = nested_tangent_dimension(I, J)
            v["kernel"] = report.dim_kernel
            if difference_region(I, J).is_rectangle:
                v["theorem1"] = theorem1_ledger(I, J).dimension
                v["2n"] = 2 * I.colength
                if not report.surjective:
                    res.problems.append("psi - phi is not surjective")
                res.problems += window_bijections(I, J)
            return res
        n = I.colength
        if I.dim == 2:
            v["arrow-2d"] = len(basis_2d(I))
        else:
            perm = rectangular_layers_orientation(I)
            if perm is not None:
                type_counts(permute(I, perm))
                v["theorem2"] = 3 * n
        v["weight"] = hom_dimension(I, I).dimension
        v["batched"] = hom_dim(I, I)
        try:
            v["dense"] = hom_dimension_dense(I, I, cap=dense_cap)
        except SizeCapExceeded:
            pass
        if v["weight"] < I.dim * n:
            res.problems.append(f"dimension {v['weight']} below {I.dim}n")
    except StaircaseError as exc:
        res.problems.append(f"{type(exc).__name__}: {exc}")
    return res


def default_instances(sizes: Optional[dict] = None) -> list[Instance]:
    sizes = dict(DEFAULT_SWEEP if sizes is None else sizes)
    out = []
    for n in range(1, sizes.get("hilb2", 0) + 1):
        out += [instance_of(from_partition(p)) for p in partition_tuples(n)]
    for n in range(1, sizes.get("hilb3", 0) + 1):
        out += [instance_of(from_plane_partition(pp)) for pp in plane_partition_layers(n)]
    for n in range(1, sizes.get("nested", 0) + 1):
        for m in range(1, n + 1):
            out += [instance_of(I, J) for I, J in nested_pairs(n, m, rectangular_only=True)]
    return sorted(out, key=Instance.key)


def run(instances: Sequence[Instance], jobs: int = 1) -> list[Result]:
    if jobs > 1 and len(instances) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(check, instances, chunksize=max(1, len(instances) // (4 * jobs))))
    return [check(i) for i in instances]


def _smaller(inst: Instance) -> list[Instance]:
    """Instances obtained by deleting one outer corner box of the staircase."""
    I = inst.ideal
    boxes = I.staircase.boxes
    d = I.dim
    out = []
    for b in sorted(boxes):
        if any(tuple(b[j] + (j == k) for j in range(d)) in boxes for k in range(d)):
            continue
        rest = boxes - {b}
        if not rest:
            continue
        gens = tuple(Staircase(frozenset(rest), d).to_ideal().generators)
        if inst.j_generators is None:
            out.append(Instance(inst.kind, gens, d))
        elif b not in inst.j_ideal.staircase.boxes:
            out.append(Instance(inst.kind, gens, d, inst.j_generators))
    return out


def minimize(inst: Instance) -> Instance:
    """Greedily remove corner boxes while the instance keeps failing."""
    current = inst
    while True:
        for smaller in _smaller(current):
            if not check(smaller).ok:
                current = smaller
                break
        else:
            return current


def dump(result: Result) -> str:
    small = minimize(result.instance)
    payload = {"instance": small.to_json(), "kind": small.kind,
               "values": check(small).values, "problems": check(small).problems}
    return json.dumps(payload, sort_keys=True)
