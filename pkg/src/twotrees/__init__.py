"""2-trees with a small maximum-degree core and tail degrees in {2, 3}:
construction, recognition, classification, and exhaustive enumeration."""

from .canon import (
    MAX_CANON_N,
    CanonicalForm,
    canonical_form,
    canonical_graph,
    is_isomorphic,
)
from .census import (
    MAX_ENUM_N,
    AuditEntry,
    EnumerationRecord,
    TheoremAuditReport,
    audit_theorems,
    clear_cache,
    emit_table,
    enumerate_central,
    enumerate_two_trees,
    table_csv,
    table_rows,
    two_tree_certificates,
)
from .classify import CentralClassification, Unclassifiable, classify_central, sigma
from .degseq import (
    CentralProfile,
    DegreeSequence,
    bose_two_tree_sequence,
    central_sequence,
    delta_range,
    divisibility_check,
    erdos_gallai_graphic,
    tail_params,
)
from .families import (
    bicentral_sigma3,
    bicentral_standard,
    book,
    fan,
    tricentral_extremal,
    tricentral_gpq,
)
from .graph import (
    Graph,
    StackingTrace,
    is_two_tree,
    new_edge,
    new_triangle,
    relabel,
    replay_trace,
    stack,
    stacking_trace,
)
from .kernel import BACKEND

__version__ = "0.1.0"

__all__ = [
    "MAX_CANON_N",
    "MAX_ENUM_N",
    "AuditEntry",
    "BACKEND",
    "CanonicalForm",
    "CentralClassification",
    "CentralProfile",
    "DegreeSequence",
    "EnumerationRecord",
    "Graph",
    "StackingTrace",
    "TheoremAuditReport",
    "Unclassifiable",
    "audit_theorems",
    "bicentral_sigma3",
    "bicentral_standard",
    "book",
    "bose_two_tree_sequence",
    "canonical_form",
    "canonical_graph",
    "central_sequence",
    "classify_central",
    "clear_cache",
    "delta_range",
    "divisibility_check",
    "emit_table",
    "enumerate_central",
    "enumerate_two_trees",
    "erdos_gallai_graphic",
    "fan",
    "is_isomorphic",
    "is_two_tree",
    "new_edge",
    "new_triangle",
    "relabel",
    "replay_trace",
    "sigma",
    "stack",
    "stacking_trace",
    "table_csv",
    "table_rows",
    "tail_params",
    "tricentral_extremal",
    "tricentral_gpq",
    "two_tree_certificates",
    "__version__",
]
