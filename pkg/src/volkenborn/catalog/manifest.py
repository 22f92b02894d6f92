"""The machine-readable catalog manifest shipped as package data."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Any


@dataclass(frozen=True)
class Erratum:
    kind: str  # "bulk", "boundary" or "declared"
    reason: str
    corrected: str | None = None


@dataclass(frozen=True)
class ManifestEntry:
    id: str
    group: str
    paper_eq: str
    anchor: str
    check: str
    n_min: int = 0
    n_cap: int | None = None
    m_min: int = 0
    erratum: Erratum | None = None

    @classmethod
    def from_json(cls, d: dict[str, Any]) -> "ManifestEntry":
        err = d.get("erratum")
        return cls(
            id=d["id"],
            group=d["group"],
            paper_eq=d["paper_eq"],
            anchor=d["anchor"],
            check=d["check"],
            n_min=d.get("n_min", 0),
            n_cap=d.get("n_cap"),
            m_min=d.get("m_min", 0),
            erratum=Erratum(**err) if err else None,
        )


def _raw() -> dict[str, Any]:
    text = resources.files(__package__).joinpath("manifest.json").read_text(encoding="utf-8")
    return json.loads(text)


@lru_cache(maxsize=1)
def load_manifest() -> dict[str, ManifestEntry]:
    """id -> entry, in file order.  Importing the check modules registers them."""
    from . import checks_fac, checks_ferm, checks_gf, checks_ident, checks_seq, checks_volk  # noqa: F401
    from .registry import CHECKS

    out: dict[str, ManifestEntry] = {}
    for d in _raw()["entries"]:
        e = ManifestEntry.from_json(d)
        if e.id in out:
            raise ValueError(f"duplicate manifest id {e.id}")
        for name in filter(None, (e.check, e.erratum.corrected if e.erratum else None)):
            if name not in CHECKS:
                raise ValueError(f"manifest entry {e.id} names unknown check {name!r}")
        out[e.id] = e
    return out
