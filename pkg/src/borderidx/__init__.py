"""Exact index generating functions of finite monomial order ideals."""
from .decomposition import (
    AdmissibilityVerdict,
    Cone,
    IndGF,
    PartitionReport,
    StanleyDecomposition,
    VerifyReport,
    assemble_ind_gf,
    check_admissible,
    cone_disjoint,
    enlarged_box_decomposition,
    ind_gf,
    ind_gf_2d,
    validate_partition,
    verify_ind_gf,
)
from .gf import (
    Polynomial,
    RationalGF,
    SeriesTable,
    clears_denominator,
    expand,
    gf_add,
    gf_scale_monomial,
    gf_sum,
)
from .index import IndexTable, border, higher_border, index_by_divisor, index_table
from .lattice import (
    BoundingBox,
    DimensionMismatch,
    EmptyOrderIdeal,
    InvalidOrderIdeal,
    OrderIdeal,
    bounding_box,
    free_directions,
    minimal_generators_of_complement,
    order_ideal_from_generators,
    order_ideal_from_partition,
    validate_order_ideal,
)
from .pn import LinearWeight, pn_closed, pn_derivative_oracle, pn_series_oracle

__version__ = "0.1.0"
