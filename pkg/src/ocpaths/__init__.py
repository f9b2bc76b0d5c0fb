"""Edge-disjoint, pairwise order-compatible path systems in finite multigraphs."""

from .backbone import AuxiliaryGraph, Backbone, auxiliary_graph, extract_backbone, lift, weave
from .compose import (
    Cascade,
    TerminalReport,
    build_cascade,
    cascade_compose,
    compose,
    compose_best,
    compose_terminal_free,
    compose_via_terminal,
    find_terminals,
)
from .connectivity import (
    ConnectivityReport,
    Separator,
    connectivity_report,
    kappa_e,
    kappa_v,
    min_internal_separator,
    min_total_edge_system,
)
from .dirac import DiracResult, dirac_system, max_oc_system
from .errors import InfeasibleError, InputError, OCPathsError, SoundnessBreach
from .graph import (
    MultiGraph,
    OrientedPath,
    PathSystem,
    format_graph,
    format_path,
    format_system,
    parse_graph,
    parse_path,
    parse_system,
    partition_by_length,
    validate_path,
)
from .oracle import OracleLimits, brute_kappa_E, brute_max_oc, enumerate_paths
from .order import (
    InversionCertificate,
    SharedEdgeCertificate,
    VerificationReport,
    concatenate_pair,
    is_order_compatible,
    verify_system,
)

__version__ = "0.1.0"
