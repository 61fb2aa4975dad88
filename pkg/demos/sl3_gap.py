"""An SL3 element whose set of classes skips some intermediate classes.

The golden file in tests/golden lists more of these; here we recompute one
and show which classes between the smallest and largest are missing.
"""

from newtonstrata import build_root_datum, gap_search, parse_element, strata_table
from newtonstrata.sigma import fmt_q

G = build_root_datum("SL:3")
x = parse_element("t[-2,0,2]*s1*s2*s1", G)
table = strata_table(G, x)

print("classes meeting IxI:")
for row in table.rows:
    print("  nu=(%s)  dim=%s  virtual=%s" % (", ".join(fmt_q(c) for c in row.cls.nu),
                                              row.dim, fmt_q(row.vdim)))
print("saturated:", table.saturated)
print("missing  :", [[fmt_q(c) for c in b.nu] for b in table.gaps])

# A short search finds the same phenomenon elsewhere.
found = gap_search(G, 5)
print("elements up to length 5 with a gap:", len(found))
