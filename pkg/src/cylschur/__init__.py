"""Exact-arithmetic cylindric Schur functions and fusion coefficients."""

from .partitions import (
    CylProfile,
    Partition,
    SkewShape,
    enumerate_nl_partitions,
    horizontal_strip_extensions,
    is_horizontal_strip,
    is_nl_horizontal_strip,
    is_nl_partition,
    make_partition,
    make_profile,
    make_skew_shape,
)
from .tableaux import (
    classical_kostka,
    count_cyl_tableaux,
    enumerate_cyl_tableaux,
    make_weight,
)
from .schur import (
    cylindric_schur,
    h_to_schur,
    lr_coefficient,
    schur_product,
    schur_to_monomial,
)
from .fusion import (
    build_degree_quotient,
    fusion_h_expansion,
    fusion_product,
    ideal_generators,
    reduce_schur,
    verify_pieri,
)
from .verify import (
    ScanConfig,
    VerificationReport,
    export_fusion_table,
    scan,
    verify_pieri_report,
    verify_proposition1,
    verify_theorem1,
)

__all__ = [
    "CylProfile", "Partition", "SkewShape",
    "make_partition", "make_profile", "make_skew_shape", "make_weight",
    "is_horizontal_strip", "is_nl_partition", "is_nl_horizontal_strip",
    "enumerate_nl_partitions", "horizontal_strip_extensions",
    "count_cyl_tableaux", "enumerate_cyl_tableaux", "classical_kostka",
    "cylindric_schur", "lr_coefficient", "schur_product",
    "schur_to_monomial", "h_to_schur",
    "ideal_generators", "build_degree_quotient", "reduce_schur",
    "fusion_product", "fusion_h_expansion", "verify_pieri",
    "ScanConfig", "VerificationReport", "scan",
    "verify_theorem1", "verify_proposition1", "verify_pieri_report",
    "export_fusion_table",
]

__version__ = "0.1.0"
