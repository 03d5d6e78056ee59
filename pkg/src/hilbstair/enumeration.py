"""Torus-fixed points (partitions, plane partitions, nested pairs) and smoothness scans."""
from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .arrows2d import basis_2d
from .cubic import tangent_dim_3d
from .errors import SizeCapExceeded
from .hom import hom_dim, nested_tangent_dimension
from .monomial import MonomialIdeal, Staircase, from_partition, from_plane_partition
from .nested import difference_region, nested_dim_rectangular

KINDS = ("hilb2", "hilb3", "nested")
DEFAULT_CAPS = {"hilb2": 20, "hilb3": 10, "nested": 12}
CSV_COLUMNS = ("kind", "n", "m", "ideal", "idealJ", "tangentDim", "expectedDim", "smooth", "method")


def caps() -> dict:
    """Default caps, or a single override for every kind from ``STAIRCASE_CAP``."""
    env = os.environ.get("STAIRCASE_CAP")
    if env:
        return {k: int(env) for k in KINDS}
    return dict(DEFAULT_CAPS)


def partition_tuples(n: int, largest: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` as weakly decreasing tuples, in reverse lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partition_tuples(n - k, k):
            yield (k,) + rest


def partitions(n: int) -> Iterator[Staircase]:
    if n < 1:
        raise ValueError("n must be positive")
    for p in partition_tuples(n):
        yield from_partition(p).staircase


def _sub_partitions(outer: tuple[int, ...], total: int) -> Iterator[tuple[int, ...]]:
    """Partitions of ``total`` fitting inside ``outer`` row by row."""
    def rec(i: int, left: int, cap: int):
        if left == 0:
            yield ()
            return
        if i >= len(outer):
            return
        for k in range(min(left, cap, outer[i]), 0, -1):
            for rest in rec(i + 1, left - k, k):
                yield (k,) + rest
    yield from rec(0, total, total)


def plane_partition_layers(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Stacks of partitions, each inside the one below, with ``n`` boxes in total."""
    def rec(left: int, below: Optional[tuple[int, ...]]):
        if left == 0:
            yield ()
            return
        for size in range(left, 0, -1):
            cands = partition_tuples(size) if below is None else _sub_partitions(below, size)
            for layer in cands:
                for rest in rec(left - size, layer):
                    yield (layer,) + rest
    yield from rec(n, None)


def plane_partitions(n: int) -> Iterator[Staircase]:
    if n < 1:
        raise ValueError("n must be positive")
    for layers in plane_partition_layers(n):
        yield from_plane_partition(layers).staircase


def nested_pairs(n: int, m: int, rectangular_only: bool = False
                 ) -> Iterator[tuple[MonomialIdeal, MonomialIdeal]]:
    if not n >= m >= 1:
        raise ValueError("need n >= m >= 1")
    for p in partition_tuples(n):
        I = from_partition(p)
        for q in _sub_partitions(p, m):
            J = from_partition(q)
            if rectangular_only and not difference_region(I, J).is_rectangle:
                continue
            yield I, J


@dataclass(frozen=True)
class ScanRecord:
    kind: str
    n: int
    m: int
    ideal: str
    idealJ: str
    tangentDim: int
    expectedDim: int
    smooth: bool
    method: str

    def csv_row(self) -> list:
        d = asdict(self)
        d["smooth"] = "true" if self.smooth else "false"
        return [d[c] for c in CSV_COLUMNS]


def _record_hilb2(rows: tuple[int, ...]) -> ScanRecord:
    I = from_partition(rows)
    n = I.colength
    dim = len(basis_2d(I))
    engine = hom_dim(I, I)
    method = "arrow-2d" if dim == engine else "arrow-2d!=engine"
    return ScanRecord("hilb2", n, 0, I.label(), "", engine, 2 * n, engine == 2 * n, method)


def _record_hilb3(layers: tuple) -> ScanRecord:
    I = from_plane_partition(layers)
    n = I.colength
    dim, method = tangent_dim_3d(I)
    return ScanRecord("hilb3", n, 0, I.label(), "", dim, 3 * n, dim == 3 * n, method)


def _record_nested(pair: tuple) -> ScanRecord:
    I, J = from_partition(pair[0]), from_partition(pair[1])
    n, m = I.colength, J.colength
    if difference_region(I, J).is_rectangle:
        dim, method = nested_dim_rectangular(I, J), "theorem1"
    else:
        dim, method = nested_tangent_dimension(I, J).dim_kernel, "kernel"
    return ScanRecord("nested", n, m, I.label(), J.label(), dim, 2 * n, dim == 2 * n, method)


def _tasks(kind: str, sizes: Sequence[int], ms: Optional[Sequence[int]], rect_only: bool) -> list:
    tasks = []
    for n in sizes:
        if kind == "hilb2":
            tasks += [(kind, p) for p in partition_tuples(n)]
        elif kind == "hilb3":
            tasks += [(kind, pp) for pp in plane_partition_layers(n)]
        else:
            for m in (ms if ms is not None else range(1, n + 1)):
                if not 1 <= m <= n:
                    continue
                for I, J in nested_pairs(n, m, rect_only):
                    tasks.append((kind, (I.staircase.partition, J.staircase.partition)))
    return tasks


def _run(task) -> ScanRecord:
    kind, payload = task
    return {"hilb2": _record_hilb2, "hilb3": _record_hilb3, "nested": _record_nested}[kind](payload)


def sort_key(r: ScanRecord):
    return (KINDS.index(r.kind), r.n, r.m, r.ideal, r.idealJ)


def scan(kind: str, sizes: Iterable[int], ms: Optional[Iterable[int]] = None,
         rect_only: bool = False, jobs: int = 1, cap: Optional[int] = None) -> list[ScanRecord]:
    """One record per fixed point, sorted canonically whatever the worker count."""
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    sizes = sorted(set(sizes))
    limit = cap if cap is not None else caps()[kind]
    if sizes and (sizes[0] < 1 or sizes[-1] > limit):
        raise SizeCapExceeded(f"{kind} sizes must lie in 1..{limit}")
    tasks = _tasks(kind, sizes, sorted(set(ms)) if ms is not None else None, rect_only)
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_run, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        records = [_run(t) for t in tasks]
    return sorted(records, key=sort_key)


def to_csv(records: Sequence[ScanRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in records:
        w.writerow(r.csv_row())
    return buf.getvalue()


def to_jsonl(records: Sequence[ScanRecord]) -> str:
    return "".join(json.dumps(asdict(r), sort_keys=True) + "\n" for r in records)
