"""Passing from a Levi of GL4 to GL4 can merge classes.

M is the block diagonal GL2 x GL2. Each factor carries the GL2 element
t[1,0]*s, which meets two classes, so the product meets four. Two of
those four become the same class of GL4.
"""

from newtonstrata import build_root_datum, find_minimal_pair, length, parse_element, reduce
from newtonstrata import affine as aw
from newtonstrata.sigma import levi_transfer

G = build_root_datum("GL:4")
M = G.levi([0, 2])
xt = parse_element("t[1,0,1,0]*s1*s3", G)

levi_classes = reduce(M, aw.as_level(M, xt))
print("classes of the Levi element:")
for b in sorted(levi_classes, key=lambda b: b.sort_key()):
    print("  ", b, "->", levi_transfer(b))

images = {levi_transfer(b) for b in levi_classes}
print("distinct images in GL4:", len(images))

# The same element read in GL4 meets exactly those three classes.
g_classes = reduce(G, xt)
print("length in GL4:", length(G, xt))
print("classes in GL4:", sorted(g_classes, key=lambda b: b.sort_key()))
print("same set:", set(g_classes) == images)
print("minimal certificate:", find_minimal_pair(G, xt).to_json(G))
