"""Exact structure analysis of group-graded Lie superalgebras over Q.

Structure constants are :class:`fractions.Fraction`; every analysis is exact
and re-verified before it is returned.
"""
from .algebra import (
    GradedSubspace,
    GradedSuperalgebra,
    Support,
    ValidationReport,
    Violation,
    bracket,
    direct_sum,
    homogeneous_component,
    regrade,
    support,
    validate,
)
from .connections import (
    ConnectionClass,
    SupportGraph,
    connection_class,
    connection_classes,
    oracle_connected,
    oracle_partition,
    support_graph,
)
from .corpus import builtin, builtin_names, from_matrices
from .decomposition import (
    ComponentVerdict,
    Kind,
    StructureReport,
    classify_small,
    co1_direct_sum,
    restrict,
    split_component,
    teo2_decompose,
    teo4_pipeline,
)
from .errors import (
    DirectSumFailure,
    GroupError,
    GrSuperError,
    HypothesesNotMet,
    NonSymmetricSupport,
    ParseError,
    StructureError,
    ValidationError,
    VerificationFailure,
)
from .groups import GroupElement, GroupSpec
from .ideals import (
    center,
    class_ideal,
    hypothesis_report,
    ideal_closure,
    is_gr_simple,
    is_graded_ideal,
    Verdict,
)
from .io import parse, serialize

__version__ = "0.1.0"
