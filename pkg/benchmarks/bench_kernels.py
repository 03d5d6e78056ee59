"""Time the compiled and pure-Python kernels on the same inputs.

Run with ``python3 benchmarks/bench_kernels.py``.  Both backends must give
identical answers; the script stops if they do not.
"""
import argparse
import time

import numpy as np

from hilbstair import kernels
from hilbstair.enumeration import partition_tuples, plane_partition_layers
from hilbstair.hom import _arrays, _pad, candidate_weights, dense_system
from hilbstair.monomial import from_partition, from_plane_partition


def weight_inputs(n2: int, n3: int):
    ideals = [from_partition(p) for p in partition_tuples(n2)]
    ideals += [from_plane_partition(l) for l in plane_partition_layers(n3)]
    out = []
    for I in ideals:
        arr = _arrays(I, I)
        w = np.array([_pad(v) for v in candidate_weights(I, I)], dtype=np.int64)
        out.append((arr.gens, arr.pi, arr.pj, arr.lcms, arr.grid, w))
    return out


def rank_inputs(n2: int):
    return [dense_system(I, I)[0] for I in map(from_partition, partition_tuples(n2))]


def timed(fn, inputs, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        res = [fn(*args) if isinstance(args, tuple) else fn(args) for args in inputs]
        best = min(best, time.perf_counter() - t)
    return best, res


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n2", type=int, default=12, help="colength of 2D ideals")
    ap.add_argument("--n3", type=int, default=7, help="colength of 3D ideals")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled backend not built; only the Python kernels are available")
    cases = {
        "weight_dimensions": weight_inputs(args.n2, args.n3),
        "integer_rank": rank_inputs(min(args.n2, 9)),
    }
    for name, inputs in cases.items():
        times, answers = {}, {}
        for label, mod in backends.items():
            fn = getattr(mod, name)
            times[label], res = timed(fn, inputs, args.repeat)
            answers[label] = [np.asarray(r).tolist() for r in res]
        if len({repr(a) for a in answers.values()}) != 1:
            raise SystemExit(f"{name}: backends disagree")
        line = "  ".join(f"{k}={v * 1e3:9.2f} ms" for k, v in times.items())
        if "cython" in times:
            line += f"  speedup x{times['python'] / times['cython']:.1f}"
        print(f"{name:18s} {len(inputs):4d} inputs  {line}")


if __name__ == "__main__":
    main()
