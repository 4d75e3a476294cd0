"""Admissible discrete vector fields over GF(2) and DVF-accelerated Betti numbers."""

from .cubical import (
    BinaryImage,
    CubicalComplex,
    FiniteChainComplex,
    betti,
    build_complex,
    count_components,
    load_pbm,
    synth_image,
)
from .dvf import (
    RelationGraph,
    VectorField,
    add_relations,
    gen_orders,
    is_adm_vector_field,
    is_discrete_vector_field,
    would_create_cycle,
)
from .errors import BoundsError, FormatError, ParameterError, PivotError
from .gf2core import Gf2Matrix, column_support, from_rows, rank_dense
from .reduce import ReducedMatrix, ReductionReport, eliminate_pivots, rank_via_dvf, rank_with_field, reduction_report
from .rsalg import DvfResult, generate_with_strategy, random_strategy, rs_generate, rs_strategy

__version__ = "0.1.0"

__all__ = [
    "BinaryImage", "CubicalComplex", "FiniteChainComplex", "betti", "build_complex",
    "count_components", "load_pbm", "synth_image",
    "RelationGraph", "VectorField", "add_relations", "gen_orders", "is_adm_vector_field",
    "is_discrete_vector_field", "would_create_cycle",
    "BoundsError", "FormatError", "ParameterError", "PivotError",
    "Gf2Matrix", "column_support", "from_rows", "rank_dense",
    "ReducedMatrix", "ReductionReport", "eliminate_pivots", "rank_via_dvf", "rank_with_field",
    "reduction_report",
    "DvfResult", "generate_with_strategy", "random_strategy", "rs_generate", "rs_strategy",
]
