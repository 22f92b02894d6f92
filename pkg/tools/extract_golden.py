"""Transcribe the printed number tables of the source document into TSV golden files.

Run once from the repository root: python3 tools/extract_golden.py
The output lands in tests/golden/ and is checked in; the tests never read the source document.
"""

from __future__ import annotations

import re
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
OUT = ROOT / "tests" / "golden"

# table name -> (text that precedes the array, row label, column label)
TABLES = {
    "stirling1": ("Stirling numbers of the first kind\n$S_{1}(n,k)$ are given by the following table", "n", "k"),
    "stirling2": ("$S_{2}(n,k)$ are given by the following table", "n", "k"),
    "lah": ("L(n,k)\\right\\vert $ are given by the following table", "n", "k"),
    "central_T_even": ("\\left( T(i,j)\\right) _{i,j=0}^{6}", "i", "j"),
    "central_t_even": ("\\left( t(i,j)\\right) _{i,j=0}^{6}", "i", "j"),
}


def array_after(text: str, marker: str) -> list[list[str]]:
    start = text.index(marker)
    body = text[text.index("\\begin{array}", start):text.index("\\end{array}", start)]
    body = re.sub(r"^\\begin\{array\}\{c*\}", "", body)
    rows = []
    for line in body.split("\\\\"):
        cells = [c.strip() for c in line.split("&")]
        if not cells[0] or cells[0].startswith("n\\backslash"):
            continue
        rows.append(cells)
    return rows


def main() -> None:
    text = (ROOT / "paper.md").read_text(encoding="utf-8")
    OUT.mkdir(parents=True, exist_ok=True)
    for name, (marker, rl, cl) in TABLES.items():
        marker = re.sub(r"\s+", " ", marker)
        flat = re.sub(r"[ \t]*\n[ \t]*", " ", text)
        rows = array_after(flat.replace(" \\\\ ", "\\\\\n"), marker)
        if rl == "n":  # the triangles carry their row index in the first column
            rows = [r[1:] for r in rows]
        width = len(rows[0])
        lines = [f"# {name}", "\t".join([f"{rl}\\{cl}"] + [str(j) for j in range(width)])]
        lines += ["\t".join([str(i)] + r) for i, r in enumerate(rows)]
        (OUT / f"{name}.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")
        print(name, len(rows), "rows")


if __name__ == "__main__":
    main()
