import pytest
from hypothesis import given

from hilbstair.errors import NotNested, NotRectangular
from hilbstair.hom import hom_dim, nested_tangent_dimension
from hilbstair.monomial import from_generators, from_partition
from hilbstair.nested import (WindowClass, classify_window, coker_families, decomposition_rank,
                              difference_region, ker_psi_basis, nested_dim_rectangular,
                              per_height_counts, theorem1_ledger, window_bijections, windows)

import oracles
from strategies import rectangular_pairs

XY = from_generators([(1, 0), (0, 1)], 2)
X3Y = from_generators([(3, 0), (0, 1)], 2)
SQ = from_generators([(2, 0), (0, 2)], 2)


def test_difference_regions():
    r = difference_region(SQ, XY)
    assert r.boxes == {(1, 0), (0, 1), (1, 1)} and not r.is_rectangle
    r = difference_region(X3Y, XY)
    assert r.is_rectangle and (r.width, r.height, r.anchor) == (2, 1, (1, 0))
    r = difference_region(SQ, SQ)
    assert r.is_rectangle and len(r) == 0 and (r.width, r.height) == (0, 0)
    with pytest.raises(NotNested):
        difference_region(XY, SQ)


def test_ker_psi_basis_examples():
    assert len(ker_psi_basis(SQ, XY)) == 6
    assert ker_psi_basis(SQ, SQ) == []
    basis = ker_psi_basis(X3Y, XY)
    # (x^3, y) ⊆ (x, y): Hom(I,R/J) has dimension 2, so the kernel is 6 - 2
    assert hom_dim(X3Y, XY) == 2
    assert len(basis) == nested_tangent_dimension(X3Y, XY).dim_ker_psi == 4


def test_coker_families_small():
    fam = coker_families(X3Y, XY)
    assert fam.G == () and fam.Gprime == ()
    rk = nested_tangent_dimension(X3Y, XY).rank_psi
    assert len(fam.G) + len(fam.Gprime) == hom_dim(X3Y, XY) - rk
    fam = coker_families(SQ, SQ)
    assert fam.G == fam.Gprime == fam.ker_psi == ()
    with pytest.raises(NotRectangular):
        coker_families(SQ, XY)


def test_one_box_difference():
    J = from_generators([(2, 0), (1, 1), (0, 2)], 2)
    assert difference_region(SQ, J).width == 1
    assert nested_dim_rectangular(SQ, J) == 8 == nested_tangent_dimension(SQ, J).dim_kernel


def test_windows_of_strip():
    kinds = {w.anchor: w.kind for w in windows(X3Y, XY)}
    assert [a for a, k in kinds.items() if k is WindowClass.KERNEL] == [(2, 0), (3, 0), (-1, 1), (0, 1)]
    assert sorted(a for a, k in kinds.items() if k is WindowClass.OVERLAP) == [(2, 1), (3, 1)]
    assert classify_window(X3Y, XY, (2, 1)).kind is WindowClass.OVERLAP
    assert classify_window(X3Y, XY, (1, 0)).kind is WindowClass.NONE


def test_literal_box_reading_fails_bijection():
    # reading the sides as the window's own boxes loses every kernel window here
    problems = window_bijections(X3Y, XY, convention="box")
    assert any(p.startswith("kernel") for p in problems)
    assert window_bijections(X3Y, XY) == []


def test_ledger_examples():
    assert nested_dim_rectangular(X3Y, XY) == 6
    assert nested_dim_rectangular(SQ, SQ) == 8
    led = theorem1_ledger(X3Y, XY)
    assert (led.dim_hom_jj, led.dim_ker_psi, led.g, led.g_prime) == (2, 4, 0, 0)


def test_heights_width_one_and_flat_rows():
    I = from_partition([3, 3, 1])
    J = from_partition([3, 2, 1])
    rep = per_height_counts(I, J)
    assert rep.ok
    assert all(s.expected in (0, 1) for s in rep.heights)


def test_sufficient_not_necessary():
    assert nested_tangent_dimension(SQ, XY).dim_kernel == 8 == oracles.nested_dim(
        [(2, 0), (0, 2)], [(1, 0), (0, 1)])


def test_single_box_difference_always_smooth():
    from hilbstair.enumeration import nested_pairs
    for n in range(2, 11):
        for I, J in nested_pairs(n, n - 1):
            assert nested_dim_rectangular(I, J) == 2 * n


@given(rectangular_pairs(max_n=10))
def test_rectangular_pair_identities(pair):
    I, J = pair
    n, m = I.colength, J.colength
    report = nested_tangent_dimension(I, J)
    assert report.dim_kernel == 2 * n and report.surjective
    fam = coker_families(I, J)
    assert len(fam.ker_psi) == report.dim_ker_psi == len(fam.G) + len(fam.Gprime) + 2 * (n - m)
    assert decomposition_rank(I, J) == (hom_dim(I, J),) * 2
    assert per_height_counts(I, J).ok
    assert window_bijections(I, J) == []
    if n <= 6:
        assert oracles.nested_dim(list(I.generators), list(J.generators)) == 2 * n


@given(rectangular_pairs(max_n=8))
def test_overlap_windows_count(pair):
    I, J = pair
    if I == J:
        return
    over = [w for w in windows(I, J) if w.kind is WindowClass.OVERLAP]
    assert len(over) == I.colength - J.colength
