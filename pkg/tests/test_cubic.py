import pytest
from hypothesis import given

from hilbstair.cubic import (generator_chains, has_xz_yz_generators, layer_surface_split, layers,
                             permute, rectangular_layers_orientation, slab_report, tangent_dim_3d,
                             type_counts, type_families, upward_surface_partition,
                             verify_indirect_drag_lemma)
from hilbstair.errors import HypothesisViolated, WrongDimension
from hilbstair.hom import hom_dim, hom_dimension_dense
from hilbstair.monomial import from_generators

import oracles
from strategies import staircases3

EX = from_generators([(3, 0, 0), (0, 2, 0), (2, 0, 1), (1, 0, 2), (0, 1, 2), (0, 0, 3)], 3)
M = from_generators([(1, 0, 0), (0, 1, 0), (0, 0, 1)], 3)
COL2 = from_generators([(1, 0, 0), (0, 1, 0), (0, 0, 2)], 3)
COL3 = from_generators([(1, 0, 0), (0, 1, 0), (0, 0, 3)], 3)
LOOK = from_generators([(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 1)], 3)
M2 = from_generators([(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)], 3)


def test_layers():
    prof = layers(EX)
    assert [(s.partition) for s in prof.layers] == [(3, 3), (2, 2), (1,)]
    assert prof.heights == (6, 4, 1) and prof.rectangular
    assert layers(M).heights == (1,)
    look = layers(LOOK)
    assert look.layers[1].boxes == {(0, 0), (1, 0), (0, 1)} and not look.rectangular


def test_orientation():
    assert rectangular_layers_orientation(EX) == (0, 1, 2)
    assert rectangular_layers_orientation(LOOK) is None
    assert rectangular_layers_orientation(COL2) == (0, 1, 2)
    # a single L-shaped z-layer: slicing along y gives two strips
    flat = from_generators([(3, 0, 0), (1, 1, 0), (0, 2, 0), (0, 0, 1)], 3)
    assert rectangular_layers_orientation(flat) == (2, 0, 1)


def test_hypothesis_flag():
    assert has_xz_yz_generators(EX) and has_xz_yz_generators(M)
    assert not has_xz_yz_generators(LOOK)
    with pytest.raises(HypothesisViolated):
        type_counts(LOOK)
    with pytest.raises(WrongDimension):
        layers(from_generators([(1, 0), (0, 1)], 2))


def test_chains():
    ch = generator_chains(EX)
    gens = EX.generators
    assert [gens[i] for i in ch.alphas] == [(0, 0, 3), (1, 0, 2), (2, 0, 1), (3, 0, 0)]
    assert [gens[i] for i in ch.betas] == [(0, 0, 3), (0, 1, 2), (0, 2, 0)]
    assert set(ch.alphas) | set(ch.betas) == set(range(len(gens)))


@pytest.mark.parametrize("ideal,counts", [(EX, (11, 11, 11)), (M, (1, 1, 1)), (COL2, (2, 2, 2))])
def test_type_counts(ideal, counts):
    assert type_counts(ideal) == counts


def test_tangent_dim_methods():
    assert tangent_dim_3d(EX) == (33, "theorem2")
    assert tangent_dim_3d(M2) == (18, "oracle")
    dim, method = tangent_dim_3d(LOOK)
    assert method == "oracle" and dim == oracles.hom_dim(list(LOOK.generators)) == 21


def test_slabs_of_example():
    rep = slab_report(EX)
    assert rep["cover"]
    assert all(a == b for table in (rep["alphas"], rep["betas"]) for a, b in table.values())


def test_surface_split_example():
    rows = layer_surface_split(EX)
    two = [r for r in rows if len(r["generators"]) == 2]
    assert two and all(r["ok"] for r in rows)
    assert (two[0]["p"], two[0]["q"], two[0]["r"], two[0]["s"]) == (1, 2, 1, 1)


def test_drag_lemma_examples():
    assert verify_indirect_drag_lemma(EX).ok
    # z -> 1 is the only downward arrow of (x,y,z); it cannot move at all
    rep = verify_indirect_drag_lemma(M)
    assert (rep.checked, rep.blocked, rep.ok) == (1, 1, True)
    rep = verify_indirect_drag_lemma(COL3)
    assert (rep.checked, rep.blocked, rep.ok) == (3, 3, True)


def test_upward_surfaces():
    cells = upward_surface_partition(COL3)
    assert [(c.cell, c.column_count) for c in cells] == [((0, 0, 2), 3)]
    assert [(c.cell, c.column_count) for c in upward_surface_partition(M)] == [((0, 0, 0), 1)]
    assert sum(c.column_count for c in upward_surface_partition(EX)) == 11


@given(staircases3())
def test_hypotheses_equivalent(s):
    I = s.to_ideal()
    assert has_xz_yz_generators(I) == layers(I).rectangular


@given(staircases3())
def test_theorem2_or_oracle(s):
    I = s.to_ideal()
    n = I.colength
    perm = rectangular_layers_orientation(I)
    dim, method = tangent_dim_3d(I)
    assert dim == hom_dim(I, I) >= 3 * n
    if perm is not None:
        O = permute(I, perm)
        assert method == "theorem2" and type_counts(O) == (n, n, n)
        assert slab_report(O)["cover"]
        assert all(r["ok"] for r in layer_surface_split(O))
        fam = type_families(O)
        assert len({f.signature for f in fam.all_morphisms()}) == 3 * n
    if n <= 6:
        assert dim == hom_dimension_dense(I, I)


@given(staircases3())
def test_surface_counts_each_box_once(s):
    I = s.to_ideal()
    cells = upward_surface_partition(I)
    assert sum(c.column_count for c in cells) == I.colength
    columns = {(c.cell[0], c.cell[1]) for c in cells}
    assert len(columns) == len(cells)
