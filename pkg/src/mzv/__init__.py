"""Exact toolkit for the harmonic-product relation space of multiple zeta values."""

from .indices import (
    PHI,
    Combination,
    MultiIndex,
    SubsetCode,
    all_indices,
    as_combination,
    as_index,
    coarsen,
    coarsen_inv,
    concat,
    decode_subset,
    drop_last,
    dual,
    encode_subset,
    format_combination,
    format_index,
    idx,
    lower_last,
    merge_concat,
    ones,
    parse_combination,
    parse_index,
    partition,
    raise_last,
    refine,
    refine_inv,
    refines,
    reverse,
    signed,
)
from .products import (
    StuffleMatrix,
    circ,
    circ_bar,
    enumerate_stuffle,
    mult_by,
    stuffle,
    stuffle_bar,
)
from .lyndon import (
    binary_lyndon_count,
    dimension_formula,
    enumerate_lyndon,
    is_lyndon,
    moebius,
    psi2,
    zagier_dim,
)
from .ohno import (
    ohno_apply,
    ohno_bar_apply,
    ohno_bar_u,
    ohno_u,
)
from .relations import (
    LinearRelation,
    QuadraticRelation,
    duality_relation,
    kawashima_basis,
    kawashima_relation,
    ohno_relations,
    quadratic_relation,
)
from .qlinalg import MODULAR_PRIMES, RelationMatrix
from .numeric import MzvEstimate, verify_linear, verify_quadratic, zeta_bar, zeta_plus, zeta_strict

__version__ = "0.1.0"
