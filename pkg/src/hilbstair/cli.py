"""``hilbstair`` command line.

Exit codes: 0 ok, 2 input error, 3 size cap exceeded, 4 methods disagree.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from typing import Optional, Sequence

from . import io as hio
from .arrows2d import basis_2d
from .cubic import tangent_dim_3d
from .enumeration import KINDS, caps, scan, to_csv, to_jsonl
from .errors import SizeCapExceeded, StaircaseError, VerificationError
from .hom import hom_dim, nested_tangent_dimension
from .monomial import MonomialIdeal, from_generators
from .nested import difference_region, nested_dim_rectangular
from .render import RenderSpec, render
from . import verify as ver

EXIT_OK, EXIT_INPUT, EXIT_CAP, EXIT_MISMATCH = 0, 2, 3, 4

# colength-7 ideal that is easily mistaken for the colength-4 cube of the maximal ideal
_LOOKALIKE = ((2, 0, 0), (0, 2, 0), (1, 1, 1), (0, 0, 2))


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def parse_range(text: str) -> list[int]:
    """``"5"``, ``"1..10"`` or ``"2,4,6"``."""
    out: list[int] = []
    try:
        for part in text.split(","):
            if ".." in part:
                lo, hi = part.split("..")
                out += range(int(lo), int(hi) + 1)
            else:
                out.append(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}") from None
    return sorted(set(out))


def _emit(text: str, out: Optional[str]) -> None:
    """Write atomically to ``out``, or to stdout."""
    if out is None:
        sys.stdout.write(text)
        return
    d = os.path.dirname(os.path.abspath(out))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".hilbstair-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _load(args) -> object:
    if args.input is None:
        raise CliError(EXIT_INPUT, "--input is required")
    return hio.load(args.input)


def _with_cap(ideal: MonomialIdeal, cap: Optional[int]) -> MonomialIdeal:
    if cap is None:
        return ideal
    capped = from_generators(ideal.generators, ideal.dim, colength_cap=cap)
    capped.colength  # raises SizeCapExceeded early
    return capped


def _report(fields: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(fields, sort_keys=True) + "\n"
    return "".join(f"{k}: {v}\n" for k, v in fields.items())


def cmd_tangent(args) -> int:
    ideal = _load(args)
    if isinstance(ideal, tuple):
        raise CliError(EXIT_INPUT, "tangent takes a single ideal; use 'nested' for pairs")
    ideal = _with_cap(ideal, args.cap)
    n = ideal.colength
    if ideal.dim == 2:
        dim, method = len(basis_2d(ideal)), "arrow-2d"
        engine = hom_dim(ideal, ideal)
        if engine != dim:
            raise VerificationError(f"arrow basis {dim} != weight engine {engine}")
    else:
        dim, method = tangent_dim_3d(ideal)
    fields = {"ideal": str(ideal), "n": n, "dim": dim, "expected": ideal.dim * n,
              "method": method, "smooth": dim == ideal.dim * n}
    if ideal.dim == 3 and set(ideal.generators) == set(_LOOKALIKE):
        fields["note"] = ("this ideal has colength 7; the colength-4 point with an "
                          "18-dimensional tangent space is (x,y,z)^2")
    _emit(_report(fields, args.format), args.out)
    return EXIT_OK


def cmd_nested(args) -> int:
    pair = _load(args)
    if not isinstance(pair, tuple):
        raise CliError(EXIT_INPUT, "nested expects an object with keys 'I' and 'J'")
    I, J = (_with_cap(x, args.cap) for x in pair)
    region = difference_region(I, J)
    report = nested_tangent_dimension(I, J)
    if region.is_rectangle:
        dim, method = nested_dim_rectangular(I, J), "theorem1"
    else:
        dim, method = report.dim_kernel, "kernel"
    fields = {"I": str(I), "J": str(J), "n": I.colength, "m": J.colength,
              "rectangular": region.is_rectangle, "dim": dim, "expected": 2 * I.colength,
              "method": method, "surjective": report.surjective,
              "smooth": dim == 2 * I.colength}
    _emit(_report(fields, args.format), args.out)
    return EXIT_OK


def cmd_scan(args) -> int:
    if args.kind is None or args.n is None:
        raise CliError(EXIT_INPUT, "scan needs --kind and --n")
    records = scan(args.kind, args.n, args.m, args.rect_only, args.jobs, args.cap)
    text = to_jsonl(records) if args.format == "json" else to_csv(records)
    _emit(text, args.out)
    singular = sum(1 for r in records if not r.smooth)
    summary = (f"{args.kind}: {len(records)} fixed points, "
               + ("all smooth" if not singular else f"{singular} singular, {len(records) - singular} smooth"))
    print(summary, file=sys.stderr if args.out is None else sys.stdout)
    for r in records:
        if not r.smooth:
            print(f"  singular n={r.n} {r.ideal} {r.idealJ} dim={r.tangentDim}".rstrip(),
                  file=sys.stderr if args.out is None else sys.stdout)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.input is not None:
        obj = _load(args)
        inst = ver.instance_of(*obj) if isinstance(obj, tuple) else ver.instance_of(obj)
        instances = [inst]
    else:
        sizes = dict(ver.DEFAULT_SWEEP)
        if args.cap is not None:
            sizes = {k: min(v, args.cap) for k, v in sizes.items()}
        if args.kind is not None:
            sizes = {args.kind: max(args.n) if args.n else sizes[args.kind]}
        limits = caps()
        for k, v in sizes.items():
            if v > limits[k]:
                raise SizeCapExceeded(f"{k} sweep up to {v} exceeds cap {limits[k]}")
        instances = ver.default_instances(sizes)
    results = ver.run(instances, args.jobs)
    bad = [r for r in results if not r.ok]
    if args.format == "json":
        lines = [json.dumps({"instance": r.instance.to_json(), "kind": r.instance.kind,
                             "values": r.values, "problems": r.problems, "ok": r.ok},
                            sort_keys=True) for r in results]
    elif len(results) == 1:
        lines = [results[0].line()]
    else:
        lines = []
        for kind in KINDS:
            mine = [r for r in results if r.instance.kind == kind]
            if mine:
                nbad = sum(1 for r in mine if not r.ok)
                lines.append(f"{kind}: {len(mine)} instances, "
                             + ("all methods agree" if not nbad else f"{nbad} disagreements"))
        lines += [r.line() for r in bad]
    if bad:
        lines.append("counter-instance: " + ver.dump(min(bad, key=lambda r: r.instance.key())))
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_render(args) -> int:
    ideal = _load(args)
    if isinstance(ideal, tuple):
        raise CliError(EXIT_INPUT, "render takes a single ideal")
    ideal = _with_cap(ideal, args.cap)
    fmt = args.format if args.format in ("ascii", "svg") else "ascii"
    spec = RenderSpec(fmt, args.filter is not None, args.filter or "all")
    _emit(render(ideal, spec), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", metavar="FILE|-", help="ideal JSON file, '-' for stdin")
    common.add_argument("--format", choices=("text", "json", "csv", "svg", "ascii"))
    common.add_argument("--cap", type=int, help="size cap (largest n, or largest colength)")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--kind", choices=KINDS)
    common.add_argument("--n", type=parse_range, help="sizes: 5, 1..10 or 2,4")
    common.add_argument("--m", type=parse_range)
    common.add_argument("--rect-only", action="store_true")
    common.add_argument("--filter", choices=("all", "P", "Q", "kind1", "kind3",
                                             "type1", "type2", "type3"))
    parser = argparse.ArgumentParser(prog="hilbstair",
                                     description="Tangent spaces at monomial points of Hilbert schemes.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, func, helptext in (
            ("tangent", cmd_tangent, "tangent dimension at one ideal"),
            ("nested", cmd_nested, "tangent dimension at a nested pair I ⊆ J"),
            ("scan", cmd_scan, "smoothness scan over fixed points"),
            ("verify", cmd_verify, "cross-check all methods"),
            ("render", cmd_render, "draw a staircase with its arrows")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.set_defaults(func=func)
    return parser


_DEFAULT_FORMAT = {"tangent": "text", "nested": "text", "scan": "csv", "verify": "text",
                   "render": "ascii"}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = _DEFAULT_FORMAT[args.command]
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except SizeCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except VerificationError as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except StaircaseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
