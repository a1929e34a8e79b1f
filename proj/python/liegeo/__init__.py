"""Finite incidence geometry engine.

Thin wrapper over the C++ core: construction strings build point-line
geometries, `analyze` runs the full parapolar report (axioms, symps,
lacunarity spectrum, residual fingerprints), and `button`/`unbutton`
assemble and disassemble locally disconnected geometries.
"""

import json as _json

from liegeo._core import (  # noqa: F401
    Geometry,
    InputError,
    SizeExceededError,
    VerificationError,
    analyze_json,
    build,
    button,
    fingerprint,
    iso,
    plg_text,
    read_plg,
    residual,
    unbutton,
    verify_tables,
    write_plg,
)


def analyze(geometry, sample_residuals=-1, threads=0):
    """Full parapolar analysis as a dict; see the README for the schema."""
    return _json.loads(analyze_json(geometry, sample_residuals, threads))


__all__ = [
    "Geometry",
    "InputError",
    "SizeExceededError",
    "VerificationError",
    "analyze",
    "analyze_json",
    "build",
    "button",
    "fingerprint",
    "iso",
    "plg_text",
    "read_plg",
    "residual",
    "unbutton",
    "verify_tables",
    "write_plg",
]
