"""
Nesting solid tori
==================

Geometric and algebraic indices multiply when one solid torus sits inside
another. Facts are combined directly, without building the nested link.
"""

from chamberlink import Leaf, build, evaluate, geometric_index, nest
from chamberlink.composer import leaf_from_report
from chamberlink.engine import separating_torus_conclusions

whitehead = leaf_from_report(geometric_index(build("whitehead")), "whitehead")
knotted = leaf_from_report(geometric_index(build("knotted3")), "knotted3")

print("whitehead in whitehead:", evaluate(nest(whitehead, whitehead)))
print("knotted3 in whitehead: ", evaluate(nest(knotted, whitehead)))

# an uncertified factor keeps its interval through the product
print("[0,2] in whitehead:    ", evaluate(nest(Leaf((0, 2), 0), whitehead)))

# index 2 splits only as 1*2 or 2*1, so the middle torus is parallel to one side
for c in separating_torus_conclusions(2):
    print(c.inner, "x", c.outer, c.tags)
