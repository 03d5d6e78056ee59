"""JSON input for ideals and nested pairs.

Accepted forms::

    {"dim": 2, "generators": [[6,0],[5,1],[2,2],[0,4]]}
    {"dim": 2, "partition": [6,5,2,2]}                 # row lengths, y=0 first
    {"dim": 3, "plane_partition": [[3,3],[2,2],[1]]}   # layers z=0 first, each by row lengths
    {"I": <ideal>, "J": <ideal>}                       # nested pair
"""
from __future__ import annotations

import json
import sys
from typing import Any, Union

from .errors import ParseError, StaircaseError
from .monomial import MonomialIdeal, from_generators, from_partition, from_plane_partition


def read_source(source: str) -> str:
    """Text of a file path, or of stdin for ``-``."""
    if source == "-":
        return sys.stdin.read()
    try:
        with open(source, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {source}: {exc.strerror}") from exc


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def parse_ideal(obj: Any) -> MonomialIdeal:
    if not isinstance(obj, dict):
        raise ParseError("an ideal must be a JSON object")
    forms = [k for k in ("generators", "partition", "plane_partition") if k in obj]
    if len(forms) != 1:
        raise ParseError("give exactly one of 'generators', 'partition', 'plane_partition'")
    form = forms[0]
    dim = obj.get("dim", 3 if form == "plane_partition" else 2)
    if dim not in (2, 3):
        raise ParseError(f"dim must be 2 or 3, got {dim!r}")
    data = obj[form]
    if not isinstance(data, list):
        raise ParseError(f"'{form}' must be a list")
    if form == "generators":
        for k, g in enumerate(data):
            if not isinstance(g, list) or len(g) != dim:
                raise ParseError(f"generator #{k} {g!r} is not a list of {dim} exponents")
            if any(not isinstance(c, int) or isinstance(c, bool) or c < 0 for c in g):
                raise ParseError(f"generator #{k} {g!r} must have non-negative integer exponents")
        return _wrap(lambda: from_generators(data, dim))
    if form == "partition":
        if dim != 2:
            raise ParseError("'partition' describes a two-variable ideal")
        _ints(data, "partition")
        return _wrap(lambda: from_partition(data))
    if dim != 3:
        raise ParseError("'plane_partition' describes a three-variable ideal")
    for z, layer in enumerate(data):
        if not isinstance(layer, list):
            raise ParseError(f"layer z={z} must be a list of row lengths")
        _ints(layer, f"layer z={z}")
    return _wrap(lambda: from_plane_partition(data))


def parse_nested(obj: Any) -> tuple[MonomialIdeal, MonomialIdeal]:
    if not isinstance(obj, dict) or "I" not in obj or "J" not in obj:
        raise ParseError("a nested pair is an object with keys 'I' and 'J'")
    return parse_ideal(obj["I"]), parse_ideal(obj["J"])


def load(source: str) -> Union[MonomialIdeal, tuple[MonomialIdeal, MonomialIdeal]]:
    obj = loads(read_source(source))
    if isinstance(obj, dict) and "I" in obj:
        return parse_nested(obj)
    return parse_ideal(obj)


def _ints(xs: list, what: str) -> None:
    for k, c in enumerate(xs):
        if not isinstance(c, int) or isinstance(c, bool):
            raise ParseError(f"{what} entry #{k} {c!r} is not an integer")


def _wrap(build) -> MonomialIdeal:
    try:
        return build()
    except ParseError:
        raise
    except StaircaseError as exc:
        raise ParseError(str(exc)) from exc
