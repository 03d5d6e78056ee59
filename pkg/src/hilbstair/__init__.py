"""Tangent spaces of Hilbert schemes of points at monomial ideals, computed from staircase diagrams."""
from .errors import (EmptyInput, HeadInIdeal, HypothesisViolated, InfiniteColength, InvalidArrow,
                     InvalidExponent, NotNested, NotRectangular, ParseError, SizeCapExceeded,
                     StaircaseError, VerificationError, WrongDimension)
from .monomial import (MonomialIdeal, Region, Staircase, SyzygyPair, colength, contains,
                       from_generators, from_partition, from_plane_partition, is_subideal,
                       staircase_of, syzygy_pairs)
from .hom import (HomSpace, PureWeightMorphism, WeightPiece, drag_closure, hom_dim,
                  hom_dimension, hom_dimension_dense, nested_tangent_dimension)
from .arrows2d import basis_2d, pq_table, verify_kind2_vanishing
from .nested import (coker_families, classify_window, difference_region, ker_psi_basis,
                     nested_dim_rectangular, per_height_counts)
from .cubic import (has_xz_yz_generators, layers, rectangular_layers_orientation, tangent_dim_3d,
                    type_counts, upward_surface_partition, verify_indirect_drag_lemma)
from .enumeration import nested_pairs, partitions, plane_partitions, scan

__version__ = "0.1.0"
