"""Spine partitions of finite posets, a calculus of scattered order-type
terms, and bounded verification of five infinite example orders.

A *spine* of a poset is a chain together with a partition into antichains
such that every part meets the chain exactly once.  The finite half of the
package constructs and checks such certificates (:mod:`fishbone.partition`)
over an exact finite-poset core (:mod:`fishbone.poset`).  The infinite half
works with symbolic objects: sum/repetition terms over finite chains, omega
and its reverse (:mod:`fishbone.ordertype`), five concrete infinite orders
with decidable comparison (:mod:`fishbone.families`), and exhaustive desk
checks of the counting lemmas about the fifth one (:mod:`fishbone.verify`).
"""

from .poset import (
    CycleError,
    FinitePoset,
    NotAChain,
    PosetError,
    UnknownElement,
    load_poset,
    loads_poset,
    poset_from_json_dict,
)
from .partition import (
    NoEligiblePoint,
    SpineCertificate,
    ThresholdTooSmall,
    check_spine,
    extend_spine_partition,
    find_spine,
    greedy_antichain_from_chains,
    height,
    height_and_max_chain,
    is_spine,
    is_strongly_maximal,
    load_certificate,
    loads_certificate,
    mirsky_partition,
    smc_gap_witness,
    strong_thick_check,
    thick_degree,
    width,
    width_and_dilworth,
)
from .ordertype import (
    OMEGA,
    OMEGA_STAR,
    Fin,
    Omega,
    OmegaRep,
    OmegaStar,
    OmegaStarRep,
    OrderTerm,
    ParseError,
    Sum,
    alternation_number,
    has_maximum,
    has_minimum,
    hausdorff_rank,
    is_finite,
    is_vacillating_chain,
    limit_point_counts,
    normalize,
    parse_term,
    predicates,
    render,
    reverse,
    term_report,
)
from .families import (
    FAMILIES,
    FamilyMismatch,
    UnknownClaim,
    UnknownName,
    WindowSpec,
    check_bounded_bicomparable,
    check_bounded_cofinally_above,
    claim_names,
    elem_comparable,
    elem_le,
    elem_lt,
    element_id,
    named_subset,
    parse_element,
    verify_claim,
    window,
)
from .verify import (
    PreconditionViolated,
    desk_preset,
    interpolate_chain,
    level_window,
    verify_constant_on_rows,
    verify_final_counting,
    verify_level_structure,
    verify_min_drop,
)
from .report import FAIL, PASS, UP_TO_BOUND, VerificationReport

__version__ = "0.1.0"

__all__ = [
    "CycleError",
    "FinitePoset",
    "NotAChain",
    "PosetError",
    "UnknownElement",
    "load_poset",
    "loads_poset",
    "poset_from_json_dict",
    "NoEligiblePoint",
    "SpineCertificate",
    "ThresholdTooSmall",
    "check_spine",
    "extend_spine_partition",
    "find_spine",
    "greedy_antichain_from_chains",
    "height",
    "height_and_max_chain",
    "is_spine",
    "is_strongly_maximal",
    "load_certificate",
    "loads_certificate",
    "mirsky_partition",
    "smc_gap_witness",
    "strong_thick_check",
    "thick_degree",
    "width",
    "width_and_dilworth",
    "OMEGA",
    "OMEGA_STAR",
    "Fin",
    "Omega",
    "OmegaRep",
    "OmegaStar",
    "OmegaStarRep",
    "OrderTerm",
    "ParseError",
    "Sum",
    "alternation_number",
    "has_maximum",
    "has_minimum",
    "hausdorff_rank",
    "is_finite",
    "is_vacillating_chain",
    "limit_point_counts",
    "normalize",
    "parse_term",
    "predicates",
    "render",
    "reverse",
    "term_report",
    "FAMILIES",
    "FamilyMismatch",
    "UnknownClaim",
    "UnknownName",
    "WindowSpec",
    "check_bounded_bicomparable",
    "check_bounded_cofinally_above",
    "claim_names",
    "elem_comparable",
    "elem_le",
    "elem_lt",
    "element_id",
    "named_subset",
    "parse_element",
    "verify_claim",
    "window",
    "PreconditionViolated",
    "desk_preset",
    "interpolate_chain",
    "level_window",
    "verify_constant_on_rows",
    "verify_final_counting",
    "verify_level_structure",
    "verify_min_drop",
    "FAIL",
    "PASS",
    "UP_TO_BOUND",
    "VerificationReport",
    "__version__",
]
