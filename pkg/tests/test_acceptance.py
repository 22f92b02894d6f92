"""Acceptance suite: one check per acceptance criterion.

Each criterion prints a single line "criterion N: PASS|FAIL  <detail>".  The
lines are also collected into the terminal summary of a pytest run, and the
file can be executed directly: python3 tests/test_acceptance.py
"""

from __future__ import annotations

import random
import sys
import time
from fractions import Fraction
from math import factorial
from pathlib import Path

import pytest

HERE = Path(__file__).resolve().parent
sys.path.insert(0, str(HERE))

import oracles  # noqa: E402
from volkenborn.arith import INFINITY, ord_p  # noqa: E402
from volkenborn.catalog import Status, load_manifest, run  # noqa: E402
from volkenborn.catalog.tables import emit_tables  # noqa: E402
from volkenborn.families import bernoulli, euler, euler_star  # noqa: E402
from volkenborn.families.sequences import sequence, y_sequences  # noqa: E402
from volkenborn.families.triangles import cf_T, cf_t  # noqa: E402
from volkenborn.integrate import alternating_sum, fermionic, riemann_sum, volkenborn, volkenborn_value  # noqa: E402
from volkenborn.measures import Measure, additivity_residual  # noqa: E402
from volkenborn.poly import Basis, Polynomial  # noqa: E402

RESULTS: dict[int, str] = {}

# Y(n,B) in printed form, coefficient of B_{2k} for k = 0..n
PRINTED_Y = {
    0: [1],
    1: [0, 1],
    2: [0, -1, 1],
    3: [0, 4, -5, 1],
    4: [0, -36, 49, -14, 1],
    5: [0, 576, -870, 273, -30, 1],
    6: [0, -14400, 21076, -7645, 1023, -55, 1],
}

DECLARED = {"FAC.SCHLOMILCH", "SEQ.UNIT_T"}


def _record(num: int, ok: bool, detail: str) -> bool:
    line = f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[num] = line
    print(line)
    return ok


def criterion_1() -> bool:
    start = time.perf_counter()
    bad = []
    for name in ("stirling1", "stirling2", "lah", "central_T_even", "central_t_even"):
        golden = (HERE / "golden" / f"{name}.tsv").read_text(encoding="utf-8")
        ours = emit_tables([name])
        if ours != golden:
            cells = [
                f"{name} row {g.split(chr(9))[0]}: printed {g.split(chr(9))[1:]} computed {o.split(chr(9))[1:]}"
                for g, o in zip(golden.splitlines(), ours.splitlines())
                if g != o
            ]
            bad.extend(cells)
    secs = time.perf_counter() - start
    ok = not bad and secs < 1
    detail = f"golden tables, {secs:.2f}s" + ("" if not bad else "; mismatch " + "; ".join(bad))
    return _record(1, ok, detail)


def criterion_2() -> bool:
    checks = [
        bernoulli(12) == Fraction(-691, 2730),
        bernoulli(20) == Fraction(-174611, 330),
        euler_star(10) == -50521,
        euler(3) == Fraction(1, 4),
    ]
    checks += [sequence("DAEHEE1", n) == Fraction((-1) ** n * factorial(n), n + 1) for n in range(21)]
    checks += [sequence("CHANGHEE1", n) == Fraction((-1) ** n * factorial(n), 2**n) for n in range(21)]
    # the closed forms are also the integrals of x_(n)
    checks += [volkenborn_value(Polynomial.term(n, 1, Basis.FALLING)) == sequence("DAEHEE1", n) for n in range(21)]
    return _record(2, all(checks), f"value spot-set, {sum(checks)}/{len(checks)} exact")


def criterion_3() -> bool:
    rng = random.Random(20240601)
    start = time.perf_counter()
    disagreements = 0
    for _ in range(200):
        deg = rng.randint(0, 12)
        cs = [Fraction(rng.randint(-100, 100), rng.randint(1, 100)) for _ in range(deg + 1)]
        p = Polynomial(cs, rng.choice(list(Basis)))
        for integral in (volkenborn, fermionic):
            try:
                if not integral(p).agrees:
                    disagreements += 1
            except Exception:
                disagreements += 1
    secs = time.perf_counter() - start
    return _record(3, disagreements == 0 and secs < 10, f"dual routes on 200 polynomials x 2 measures, "
                   f"{disagreements} disagreements, {secs:.2f}s")


def criterion_4() -> bool:
    start = time.perf_counter()
    results = run()
    secs = time.perf_counter() - start
    manifest = load_manifest()
    fails = [r.id for r in results if r.status is Status.FAIL]
    extra = [r.id for r in results if r.status is Status.ERRATUM_CANDIDATE and r.id not in DECLARED]
    declared_ok = all(
        r.report and r.report.get("printed") and r.report.get("reason")
        for r in results if r.id in DECLARED
    )
    passed = sum(r.status is Status.PASS for r in results)
    ok = not fails and not extra and declared_ok and secs < 300 and len(results) == len(manifest)
    detail = f"{len(results)} entries, {passed} PASS, {len(fails)} FAIL, {secs:.1f}s"
    if extra:
        detail += f"; printed forms false beyond the two declared entries: {' '.join(extra)}"
    return _record(4, ok, detail)


def criterion_5() -> bool:
    problems = []
    for n in range(9):
        lhs = y_sequences(n, "B")
        if lhs != sum((cf_t(2 * n, 2 * k) * bernoulli(2 * k) for k in range(n + 1)), Fraction(0)):
            problems.append(f"Y({n},B) vs t-sum")
        if bernoulli(2 * n) != sum((cf_T(2 * n, 2 * k) * y_sequences(k, "B") for k in range(n + 1)), Fraction(0)):
            problems.append(f"B_{2 * n} vs T-sum")
        if n >= 1 and y_sequences(n, "E") != 0:
            problems.append(f"Y({n},E) != 0")
    for n, printed in PRINTED_Y.items():
        computed = [cf_t(2 * n, 2 * k) for k in range(n + 1)]
        # the expansion is the polynomial x_(n) x^(n) in powers x^(2k)
        direct = oracles.poly_mul(oracles.falling_coeffs(n), oracles.rising_coeffs(n))[0::2]
        if computed != direct:
            problems.append(f"n={n} t-row disagrees with the direct product")
        if [Fraction(c) for c in printed] != computed:
            problems.append(f"Y({n},B) printed {printed} computed {[int(c) for c in computed]}")
    return _record(5, not problems, "Y-sequence theorems n<=8" + ("" if not problems else "; " + "; ".join(problems)))


def criterion_6() -> bool:
    problems = []
    for n in range(7):
        f = Polynomial.term(n)
        exact_b, exact_e = bernoulli(n), euler(n)
        for p in (3, 5, 7):
            vr = [ord_p(riemann_sum(f, p, N) - exact_b, p) for N in range(1, 6)]
            va = [ord_p(alternating_sum(f, p, N) - exact_e, p) for N in range(1, 6)]
            for label, vals in (("riemann", vr), ("alternating", va)):
                if n == 0:
                    # f = 1: every finite sum is already exact
                    if any(v is not INFINITY for v in vals):
                        problems.append(f"n=0 {label} p={p} not exact: {vals}")
                elif not all(b > a for a, b in zip(vals, vals[1:])):
                    problems.append(f"n={n} {label} p={p}: {vals}")
    return _record(6, not problems, "p-adic convergence x^n n=1..6, p in 3,5,7, N=1..5 (n=0 exact)"
                   + ("" if not problems else "; " + "; ".join(problems)))


def criterion_7() -> bool:
    measures = [("HAAR", None), ("MAZUR", None)] + [("BERNOULLI_K", k) for k in range(5)]
    measures += [("DIRAC", a) for a in (0, 1, 7, -1, Fraction(1, 2), Fraction(-3, 4))]
    bad = []
    count = 0
    for p in (3, 5):
        for kind, param in measures:
            m = Measure(kind, p, param)
            for N in range(3):
                for a in range(p**N):
                    count += 1
                    if additivity_residual(m, a, N) != 0:
                        bad.append((kind, param, p, a, N))
    return _record(7, not bad, f"distribution compatibility, {count} cosets, {len(bad)} nonzero residuals")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 8)])
def test_acceptance(criterion):
    assert criterion(), RESULTS[CRITERIA.index(criterion) + 1]


if __name__ == "__main__":
    outcomes = [c() for c in CRITERIA]
    sys.exit(0 if all(outcomes) else 1)
