"""Evaluate catalog entries and build their results."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Iterable

from ..arith import format_rational
from ..poly import BiPolynomial, Polynomial
from ..polytext import format_poly
from ..series import TruncatedSeries
from .manifest import ManifestEntry, load_manifest
from .registry import CHECKS, Ranges


class Status(Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    ERRATUM_CANDIDATE = "ERRATUM_CANDIDATE"


class UnknownIdentity(KeyError):
    pass


@dataclass
class Counterexample:
    params: dict[str, Any]
    lhs: str
    rhs: str

    def as_dict(self) -> dict[str, Any]:
        return {"params": {k: _fmt(v) for k, v in self.params.items()}, "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class Outcome:
    """Result of running one check function."""

    check: str
    tested: int
    counterexample: Counterexample | None

    @property
    def agrees(self) -> bool:
        return self.counterexample is None


@dataclass
class IdentityResult:
    id: str
    paper_eq: str
    tested: int
    status: Status
    counterexample: Counterexample | None = None
    report: dict[str, Any] | None = None
    seconds: float = 0.0
    group: str = ""

    def as_dict(self, with_report: bool = False) -> dict[str, Any]:
        d: dict[str, Any] = {
            "id": self.id,
            "paper_eq": self.paper_eq,
            "tested": self.tested,
            "status": self.status.value,
        }
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample.as_dict()
        if with_report and self.report is not None:
            d["report"] = self.report
        return d


def _fmt(v: Any) -> str:
    if isinstance(v, bool):
        return str(v)
    if isinstance(v, (int, Fraction)):
        return format_rational(v)
    if isinstance(v, Polynomial):
        return format_poly(v.to_monomial())
    if isinstance(v, BiPolynomial):
        terms = sorted(v.terms().items())
        if not terms:
            return "0"
        return " + ".join(f"{format_rational(c)}*x^{i}*y^{j}" for (i, j), c in terms)
    if isinstance(v, TruncatedSeries):
        return "[" + ", ".join(format_rational(c) for c in v.coeffs) + "]"
    if isinstance(v, (tuple, list)):
        return "(" + ", ".join(_fmt(x) for x in v) + ")"
    return str(v)


def _as_poly(v: Any) -> Polynomial | None:
    if isinstance(v, Polynomial):
        return v
    if isinstance(v, (int, Fraction)):
        return Polynomial.constant(v)
    return None


def sides_equal(a: Any, b: Any) -> bool:
    if isinstance(a, Polynomial) or isinstance(b, Polynomial):
        pa, pb = _as_poly(a), _as_poly(b)
        if pa is None or pb is None:
            return False
        return pa.same_function(pb)
    if isinstance(a, (tuple, list)) and isinstance(b, (tuple, list)):
        return len(a) == len(b) and all(sides_equal(x, y) for x, y in zip(a, b))
    return a == b


def evaluate_check(name: str, ranges: Ranges) -> Outcome:
    """Run every case of one check; keep the first disagreement."""
    try:
        fn = CHECKS[name]
    except KeyError:
        raise UnknownIdentity(f"no check named {name!r}") from None
    tested = 0
    bad: Counterexample | None = None
    for params, lhs, rhs in fn(ranges):
        tested += 1
        if bad is None and not sides_equal(lhs, rhs):
            bad = Counterexample(dict(params), _fmt(lhs), _fmt(rhs))
    return Outcome(name, tested, bad)


def entry_ranges(entry: ManifestEntry, max_n: int | None, base: Ranges | None = None) -> Ranges:
    base = base or Ranges()
    n_max = base.n_max if max_n is None else max_n
    if entry.n_cap is not None:
        n_max = min(n_max, entry.n_cap)
    return base.with_(n_max=n_max, n_min=entry.n_min, m_min=entry.m_min)


def run_entry(entry: ManifestEntry, max_n: int | None = None, base: Ranges | None = None) -> IdentityResult:
    start = time.perf_counter()
    ranges = entry_ranges(entry, max_n, base)
    printed = evaluate_check(entry.check, ranges)
    report = None
    if entry.erratum is None:
        status = Status.PASS if printed.agrees else Status.FAIL
    else:
        status = Status.ERRATUM_CANDIDATE
        report = {
            "kind": entry.erratum.kind,
            "reason": entry.erratum.reason,
            "printed": {
                "check": printed.check,
                "tested": printed.tested,
                "agrees": printed.agrees,
                "counterexample": printed.counterexample.as_dict() if printed.counterexample else None,
            },
        }
        if entry.erratum.corrected:
            fixed = evaluate_check(entry.erratum.corrected, ranges)
            report["corrected"] = {
                "check": fixed.check,
                "tested": fixed.tested,
                "agrees": fixed.agrees,
                "counterexample": fixed.counterexample.as_dict() if fixed.counterexample else None,
            }
    return IdentityResult(
        id=entry.id,
        paper_eq=entry.paper_eq,
        tested=printed.tested,
        status=status,
        counterexample=printed.counterexample,
        report=report,
        seconds=time.perf_counter() - start,
        group=entry.group,
    )


def resolve_id(ident: str, manifest: dict[str, ManifestEntry] | None = None) -> str:
    """Full "GROUP.ID" for ``ident``; a bare id is accepted when it is unique."""
    manifest = manifest if manifest is not None else load_manifest()
    if ident in manifest:
        return ident
    hits = [k for k in manifest if k.split(".", 1)[1] == ident]
    if len(hits) == 1:
        return hits[0]
    if hits:
        raise UnknownIdentity(f"ambiguous identity id {ident!r}: {', '.join(hits)}")
    raise UnknownIdentity(f"unknown identity id {ident!r}")


def _run_one(args) -> IdentityResult:
    entry, max_n, base = args
    return run_entry(entry, max_n, base)


def run(
    ids: Iterable[str] | None = None,
    max_n: int | None = None,
    *,
    ranges: Ranges | None = None,
    workers: int = 1,
) -> list[IdentityResult]:
    """Run the selected entries (all when ``ids`` is None), ordered as in the manifest."""
    manifest = load_manifest()
    if ids is None:
        selected = list(manifest.values())
    else:
        selected = [manifest[resolve_id(i, manifest)] for i in ids]
    jobs = [(e, max_n, ranges) for e in selected]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_one, jobs))
    else:
        results = [_run_one(j) for j in jobs]
    return results


def has_failure(results: Iterable[IdentityResult]) -> bool:
    return any(r.status is Status.FAIL for r in results)


def report_tsv(results: list[IdentityResult], errata: bool = False) -> str:
    lines = ["id\tpaper_eq\ttested\tstatus\tcounterexample"]
    for r in results:
        ce = ""
        if r.counterexample is not None:
            ce = json.dumps(r.counterexample.as_dict(), sort_keys=True)
        lines.append(f"{r.id}\t{r.paper_eq}\t{r.tested}\t{r.status.value}\t{ce}")
    if errata:
        lines.append("")
        lines.append(errata_section(results))
    return "\n".join(lines) + "\n"


def report_json(results: list[IdentityResult], errata: bool = False) -> str:
    return json.dumps([r.as_dict(with_report=errata) for r in results], indent=2, sort_keys=True) + "\n"


def errata_section(results: list[IdentityResult]) -> str:
    out = ["# erratum candidates"]
    for r in results:
        if r.status is not Status.ERRATUM_CANDIDATE or r.report is None:
            continue
        rep = r.report
        out.append(f"## {r.id} ({rep['kind']})")
        out.append(f"reason: {rep['reason']}")
        pr = rep["printed"]
        out.append(f"printed form agrees on all {pr['tested']} cases: {pr['agrees']}")
        if pr["counterexample"]:
            ce = pr["counterexample"]
            out.append(f"  first disagreement at {ce['params']}: lhs = {ce['lhs']}, rhs = {ce['rhs']}")
        if "corrected" in rep:
            cr = rep["corrected"]
            out.append(f"corrected form agrees on all {cr['tested']} cases: {cr['agrees']}")
            if cr["counterexample"]:
                ce = cr["counterexample"]
                out.append(f"  first disagreement at {ce['params']}: lhs = {ce['lhs']}, rhs = {ce['rhs']}")
    return "\n".join(out) + "\n"
