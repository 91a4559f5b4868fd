"""Minimal spanning trees, degree bounds, and packing certificates in normed spaces."""

from minktree._core import (
    DegreeReport,
    InvalidInstanceError,
    Norm,
    PackingCertificate,
    ParseError,
    PerturbationTrace,
    PointSet,
    SearchResult,
    TieBreak,
    Tree,
    UnsupportedError,
    angle_size,
    brute_force_mst_weight,
    check_incident_angles,
    degree_report,
    enumerate_msts,
    is_generic,
    known_hadwiger,
    known_packing,
    known_strict_hadwiger,
    known_values_table,
    lookup_known_value,
    low_degree_mst,
    min_pairwise_distance,
    mst,
    render_svg,
    sample_perturbation,
    search_lower_bound,
    star_hard_instance,
    verify_certificate,
)

__all__ = [
    "DegreeReport",
    "InvalidInstanceError",
    "Norm",
    "PackingCertificate",
    "ParseError",
    "PerturbationTrace",
    "PointSet",
    "SearchResult",
    "TieBreak",
    "Tree",
    "UnsupportedError",
    "angle_size",
    "brute_force_mst_weight",
    "check_incident_angles",
    "degree_report",
    "enumerate_msts",
    "is_generic",
    "known_hadwiger",
    "known_packing",
    "known_strict_hadwiger",
    "known_values_table",
    "lookup_known_value",
    "low_degree_mst",
    "min_pairwise_distance",
    "mst",
    "render_svg",
    "sample_perturbation",
    "search_lower_bound",
    "star_hard_instance",
    "verify_certificate",
]

__version__ = "0.1.0"
