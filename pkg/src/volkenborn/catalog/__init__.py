"""Executable catalog of identities: manifest, runner, reports and tables."""

from .manifest import ManifestEntry, load_manifest
from .registry import CHECKS, Ranges
from .runner import (
    IdentityResult,
    Status,
    UnknownIdentity,
    errata_section,
    has_failure,
    report_json,
    report_tsv,
    resolve_id,
    run,
)
from .tables import PRINTED_TABLES, emit_tables, table_rows

__all__ = [
    "CHECKS",
    "IdentityResult",
    "ManifestEntry",
    "PRINTED_TABLES",
    "Ranges",
    "Status",
    "UnknownIdentity",
    "emit_tables",
    "errata_section",
    "has_failure",
    "load_manifest",
    "report_json",
    "report_tsv",
    "resolve_id",
    "run",
    "table_rows",
]
