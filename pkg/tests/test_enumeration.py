import pytest

from hilbstair.enumeration import (CSV_COLUMNS, nested_pairs, partitions, plane_partitions, scan,
                                   to_csv, to_jsonl)
from hilbstair.errors import SizeCapExceeded

import oracles


def test_partition_counts():
    for n in range(1, 13):
        got = list(partitions(n))
        assert len(got) == len({s.boxes for s in got}) == oracles.count_partitions(n)
    assert sum(oracles.count_partitions(n) for n in range(1, 13)) == 271


def test_partitions_canonical():
    for s in partitions(6):
        rows = s.partition
        assert sum(rows) == 6 and list(rows) == sorted(rows, reverse=True)


def test_plane_partition_counts():
    for n in range(1, 9):
        got = {s.boxes for s in plane_partitions(n)}
        assert len(got) == oracles.count_plane_partitions(n)
    for n in range(1, 6):
        assert {s.boxes for s in plane_partitions(n)} == oracles.downward_closed_sets(n, 3)


def test_nested_pairs():
    assert len(list(nested_pairs(2, 1))) == 2
    assert len(list(nested_pairs(4, 4))) == 5
    rect = list(nested_pairs(4, 1, rectangular_only=True))
    assert any(I.staircase.partition == (4,) for I, _ in rect)
    assert all(J.staircase.boxes <= I.staircase.boxes for I, J in nested_pairs(5, 3))
    with pytest.raises(ValueError):
        list(nested_pairs(2, 3))


def test_scan_records():
    recs = scan("hilb2", range(1, 9))
    assert len(recs) == sum(oracles.count_partitions(n) for n in range(1, 9))
    assert all(r.smooth and r.tangentDim == 2 * r.n for r in recs)
    recs = scan("hilb3", [4])
    assert any(r.tangentDim > 12 for r in recs)
    assert all(r.tangentDim >= 12 for r in recs)
    recs = scan("nested", range(2, 9), rect_only=True)
    assert all(r.smooth for r in recs if r.m == r.n - 1)


def test_scan_caps(monkeypatch):
    with pytest.raises(SizeCapExceeded):
        scan("hilb2", [21])
    monkeypatch.setenv("STAIRCASE_CAP", "3")
    with pytest.raises(SizeCapExceeded):
        scan("hilb2", [4])


def test_formats_stable():
    recs = scan("nested", [3])
    text = to_csv(recs)
    assert text.splitlines()[0] == ",".join(CSV_COLUMNS)
    assert len(to_jsonl(recs).splitlines()) == len(recs)
    assert to_csv(scan("nested", [3], jobs=2)) == text
