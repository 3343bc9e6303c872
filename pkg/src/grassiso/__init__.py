"""Isomorphism of Grassmannian Schubert varieties and Richardson skew shapes.

The package works entirely with the combinatorics that index these
varieties: partitions, skew diagrams and their cell posets.
"""

from .deciders import (
    RichardsonVerdict,
    SchubertReport,
    Verdict,
    invariant_signature,
    richardson_isomorphic_sufficient,
    schubert_distinguishing_invariants,
    schubert_isomorphic,
)
from .errors import DomainError, ParseError, ResourceBoundError
from .partitions import (
    BoxFrame,
    Partition,
    RectangleDecomposition,
    contains,
    dual_in_box,
    intersect,
    parse_partition,
    rect_decomposition,
    subdiagram_counts,
    transpose,
    union_,
    xi,
)
from .posets import (
    CellPoset,
    InvariantSignature,
    automorphism_count,
    build_poset,
    canonical_skew_class,
    find_isomorphisms,
    is_connected_poset,
    opposite,
    order_ideal_counts,
    semi_isomorphic,
)
from .render import render_ascii
from .singular import (
    components_intersect_properly,
    is_smooth,
    lambda_zero,
    removed_hook,
    sing_components,
)
from .skew import (
    SkewShape,
    connected_components_diag,
    from_partitions,
    is_skew,
    parse_skew,
    rotate180,
    shape_equal,
    transpose_skew,
)

__version__ = "0.1.0"
