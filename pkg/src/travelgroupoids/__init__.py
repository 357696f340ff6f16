"""Travel groupoids and T-partition systems on finite graphs.

Axiom checkers for operation tables and cell systems, the conversion
maps between the two representations, and exhaustive enumeration with
an independent brute-force oracle. See the README for the file formats
and the command-line interface.
"""

from .correspondence import (
    CorrespondenceReport,
    ValidationError,
    phi,
    psi,
    verify_roundtrip,
)
from .enumeration import (
    DEFAULT_ORACLE_LIMIT,
    FILTERS,
    CrossValidationReport,
    EnumerationResult,
    OracleLimitError,
    cross_validate,
    enumerate_systems,
    oracle_enumerate,
)
from .graphs import Graph, GraphFormatError, parse_graph, render_graph
from .groupoids import (
    DEFAULT_WITNESS_LIMIT,
    AxiomReport,
    OpTable,
    TableFormatError,
    associated_graph,
    check_simple,
    check_smooth,
    check_semismooth,
    check_t1,
    check_t2,
    is_on_graph,
    is_travel_groupoid,
    parse_table,
    render_table,
)
from .systems import (
    PARTITION_AXIOMS,
    SystemFormatError,
    TPartitionSystem,
    associated_groupoid,
    check_P0,
    check_P1a,
    check_P1b,
    check_P1c,
    check_P2,
    check_R1,
    check_R2,
    check_R3,
    check_R4,
    check_R5,
    is_tpartition_system,
    is_travel_groupoid_via_translation,
    parse_system,
    partition_reports,
    render_system,
    right_translation_system,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomReport",
    "CorrespondenceReport",
    "CrossValidationReport",
    "DEFAULT_ORACLE_LIMIT",
    "DEFAULT_WITNESS_LIMIT",
    "EnumerationResult",
    "FILTERS",
    "Graph",
    "GraphFormatError",
    "OpTable",
    "OracleLimitError",
    "PARTITION_AXIOMS",
    "SystemFormatError",
    "TPartitionSystem",
    "TableFormatError",
    "ValidationError",
    "associated_graph",
    "associated_groupoid",
    "check_P0",
    "check_P1a",
    "check_P1b",
    "check_P1c",
    "check_P2",
    "check_R1",
    "check_R2",
    "check_R3",
    "check_R4",
    "check_R5",
    "check_simple",
    "check_smooth",
    "check_semismooth",
    "check_t1",
    "check_t2",
    "cross_validate",
    "enumerate_systems",
    "is_on_graph",
    "is_travel_groupoid",
    "is_travel_groupoid_via_translation",
    "is_tpartition_system",
    "oracle_enumerate",
    "parse_graph",
    "parse_system",
    "parse_table",
    "partition_reports",
    "phi",
    "psi",
    "render_graph",
    "render_system",
    "render_table",
    "right_translation_system",
    "verify_roundtrip",
]
