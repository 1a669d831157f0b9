"""Exact degree-based topological indices and extremal checks for unicyclic graphs."""

from .cases import CaseClass, PendantContext, admissible_classes, choose_u0, classify
from .enumeration import RootedTreeCode, free_trees, rooted_trees, unicyclic_graphs
from .families import FamilyId, build, closed_form_rrr
from .graph import (
    CanonicalCertificate,
    Graph,
    are_isomorphic,
    canonical_certificate,
    delete_vertex,
    from_edge_list,
    is_connected,
    is_unicyclic,
    pendant_vertices,
)
from .indices import EdgeFunctional, abc, azi, index, randic, rrr
from .radical import Ordering, RadicalSum, compare, sqrt_int, sqrt_rational, to_decimal
from .verify import (
    MinResult,
    VerificationReport,
    brute_min,
    check_deletion_recurrence,
    crossover_table,
    threshold_table,
    tree_floor_check,
    verify_theorem,
)

__version__ = "0.1.0"
