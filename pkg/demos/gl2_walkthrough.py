"""A first look at one Iwahori double coset in GL2.

Run with ``python demos/gl2_walkthrough.py``.
"""

from newtonstrata import (build_root_datum, eta, find_minimal_pair, kappa, length, minimal_newton,
                          parse_element, shrunken_status, strata_table)
from newtonstrata.sigma import class_of, defect

G = build_root_datum("GL:2")
x = parse_element("t[1,0]*s1", G)

# Start with the basic numerical invariants of x.
print("x            =", "t[1,0]*s1")
print("length       =", length(G, x))
print("eta(x)       =", "*".join("s%d" % (i + 1) for i in eta(G, x).word) or "1")
print("kappa(x)     =", list(kappa(G, x).coords))
print("shrunken     =", shrunken_status(G, x))

# The class of x itself, and the unique smallest class meeting IxI.
b = class_of(x, G)
print("class of x   =", b, "defect", defect(b))
cert = find_minimal_pair(G, x)
print("certificate  =", cert.to_json(G))
print("minimal      =", minimal_newton(G, x))

# Reduction gives every class meeting IxI together with its dimension.
table = strata_table(G, x)
print()
print(table.to_csv())
