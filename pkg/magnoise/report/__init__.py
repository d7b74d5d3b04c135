"""Scenario builders, config files and deterministic emitters."""

from .config_file import (
    Parameter,
    RawEntry,
    load_config,
    parse_config_text,
    render_config,
    resolve_parameters,
)
from .emit import compute_sha256, envelope, inputs_fingerprint, to_csv, to_json
from .scenarios import (
    SCENARIO_DEFAULTS,
    SCENARIOS,
    Provenance,
    Quantity,
    ScenarioReport,
    scenario_atom_trap,
    scenario_kane,
    scenario_mrfm,
    tip_field,
)

__all__ = [
    "SCENARIOS",
    "SCENARIO_DEFAULTS",
    "Parameter",
    "Provenance",
    "Quantity",
    "RawEntry",
    "ScenarioReport",
    "compute_sha256",
    "envelope",
    "inputs_fingerprint",
    "load_config",
    "parse_config_text",
    "render_config",
    "resolve_parameters",
    "scenario_atom_trap",
    "scenario_kane",
    "scenario_mrfm",
    "tip_field",
    "to_csv",
    "to_json",
]
