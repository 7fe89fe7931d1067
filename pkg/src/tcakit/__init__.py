"""Exact combinatorics of modules over the twisted commutative algebra Sym(C^d (x) C^infinity)."""

__version__ = "0.1.0"

from .partitions import Partition, Weight, transpose, concat_weight, fits_rectangle
from .schur import SchurElement, lr_coefficient, multiply, star
from .bott import BottResult, bott_sort, bwb_pushforward, bott_infinite
from .characters import (
    EquivCharacter,
    cauchy_A,
    k_module_character,
    torsion_injective_character,
    dimension_series,
)
from .localcoh import derived_saturation, saturation_closed_form
from .resolutions import (
    BettiTable,
    betti_table,
    exterior_xi_terms,
    regularity_report,
    cogeneration_bound,
    linear_strand,
)
from .ktheory import GrKClass, KClass, pairing_matrix, basis_class, project_block, serre_dual_gr, fourier
from .spectrum import ChainLabel, krull_dimension, maximal_chain
