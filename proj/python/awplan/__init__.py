"""Alien-wavelength planning over a fixed-grid DWDM host network."""

from ._core import (
    Error,
    ParseError,
    aggregate_path,
    calibrate,
    carve_dedicated_partition,
    classify_q,
    compute_voa_settings,
    dump_canonical,
    estimate_q,
    export_q_vs_distance,
    first_fit_allocate,
    neighbor_context,
    parse_topology,
    plan_link,
    sha256_hex,
    superchannel_capacity,
    to_csv,
    validate_grid,
    validate_topology,
)

__all__ = [
    "Error",
    "ParseError",
    "aggregate_path",
    "calibrate",
    "carve_dedicated_partition",
    "classify_q",
    "compute_voa_settings",
    "dump_canonical",
    "estimate_q",
    "export_q_vs_distance",
    "first_fit_allocate",
    "neighbor_context",
    "parse_topology",
    "plan_link",
    "sha256_hex",
    "superchannel_capacity",
    "to_csv",
    "validate_grid",
    "validate_topology",
]
