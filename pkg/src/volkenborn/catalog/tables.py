"""Printable number tables in a byte-stable TSV or JSON layout.

Each table is a square block: row i lists entries j = 0..size, zero padded
above the diagonal, under a header line naming the row and column indices.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Callable, Iterable

from ..arith import RationalLike, format_rational
from ..families.triangles import TriangleFamily, even_central, triangle

# name -> (entry function, default size, row label, column label)
_Entry = Callable[[int, int], Fraction]

_PRINTED_TABLES: dict[str, tuple[_Entry, int, str, str]] = {
    "stirling1": (lambda n, k: triangle(TriangleFamily.S1, n, k), 5, "n", "k"),
    "stirling2": (lambda n, k: triangle(TriangleFamily.S2, n, k), 5, "n", "k"),
    "lah": (lambda n, k: triangle(TriangleFamily.LAH_UNSIGNED, n, k), 5, "n", "k"),
    "central_T_even": (lambda i, j: even_central(i, j)[1], 6, "i", "j"),
    "central_t_even": (lambda i, j: even_central(i, j)[0], 6, "i", "j"),
}

PRINTED_TABLES = tuple(_PRINTED_TABLES)

_ALIASES = {
    "S1": "stirling1",
    "S2": "stirling2",
    "LAH_UNSIGNED": "lah",
    "EVEN_T": "central_T_even",
    "EVEN_t": "central_t_even",
}


def table_names() -> list[str]:
    """Every name accepted by :func:`table_rows`."""
    return list(PRINTED_TABLES) + [f.value for f in TriangleFamily if f.value not in _ALIASES] + ["EVEN_T", "EVEN_t"]


def _lookup(name: str, param: RationalLike | None) -> tuple[_Entry, int, str, str]:
    name = _ALIASES.get(name, name)
    if name in _PRINTED_TABLES:
        return _PRINTED_TABLES[name]
    try:
        fam = TriangleFamily(name.upper())
    except ValueError:
        raise ValueError(f"unknown table {name!r}; choose from {', '.join(table_names())}") from None
    if fam is TriangleFamily.LAMBDA_S2 and param is None:
        raise ValueError("LAMBDA_S2 needs --param")
    return (lambda n, k: triangle(fam, n, k, param)), 5, "n", "k"


def table_rows(name: str, size: int | None = None, param: RationalLike | None = None) -> list[list[Fraction]]:
    """Rows 0..size of table ``name``, each padded to size + 1 entries."""
    entry, default, _, _ = _lookup(name, param)
    size = default if size is None else size
    if size < 0:
        raise ValueError("table size must be non-negative")
    return [[entry(i, j) for j in range(size + 1)] for i in range(size + 1)]


def format_tsv(name: str, rows: list[list[Fraction]], labels: tuple[str, str] = ("n", "k")) -> str:
    width = len(rows[0]) if rows else 0
    lines = [f"# {name}", "\t".join([f"{labels[0]}\\{labels[1]}"] + [str(j) for j in range(width)])]
    for i, row in enumerate(rows):
        lines.append("\t".join([str(i)] + [format_rational(v) for v in row]))
    return "\n".join(lines) + "\n"


def emit_tables(which: Iterable[str] | None = None, max: int | None = None, format: str = "tsv",
                param: RationalLike | None = None) -> str:
    """Render the chosen tables (all printed tables when ``which`` is None).

    ``max`` is the last row index; None keeps each table at its printed size
    (rows 0..5 for the triangles, 0..6 for the even central matrices).
    """
    names = list(PRINTED_TABLES) if which is None else list(which)
    if format not in ("tsv", "json"):
        raise ValueError("format must be tsv or json")
    blocks = []
    for name in names:
        _, _, row_label, col_label = _lookup(name, param)
        rows = table_rows(name, max, param)
        if format == "tsv":
            blocks.append(format_tsv(name, rows, (row_label, col_label)))
        else:
            blocks.append({"table": name, "rows": [[format_rational(v) for v in r] for r in rows]})
    if format == "tsv":
        return "\n".join(blocks)
    return json.dumps(blocks, indent=1) + "\n"
