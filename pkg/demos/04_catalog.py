"""Running the identity catalog and reading the erratum report.

Every identity in the manifest is tested exactly over a range of its
parameters.  Entries whose printed form turns out to be false carry a
corrected form; the report shows where the printed one breaks and that the
corrected one holds.

Run with: python3 demos/04_catalog.py
"""

from collections import Counter

from volkenborn.catalog import errata_section, run

results = run(max_n=6)
print("Status counts:", dict(Counter(r.status.value for r in results)))

picked = [r for r in results if r.id in ("FAC.GG2", "SEQ.YB_VALUES", "FAC.SCHLOMILCH")]
print()
print(errata_section(picked))

# a bare id is enough when only one group uses it
(one,) = run(["YB_CF"], 4)
print(f"A single entry: {one.id} tested {one.tested} cases, status {one.status.value}")
