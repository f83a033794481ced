"""
Splitting an Antoine clasp
==========================

An Antoine clasp is a chain of two Whitehead clasps through a middle ring.
Cutting its chamber with one more disc gives two Whitehead chambers, and
the certified index does not change.
"""

from chamberlink import generate_complicated, geometric_index
from chamberlink.composer import split_antoine_chambers
from chamberlink.dsl import emit

link = generate_complicated(["antoine", "spans"] * 4)
split = split_antoine_chambers(link)

print("before:", link.m, "chambers,", geometric_index(link).geometric)
print("after: ", split.m, "chambers,", geometric_index(split).geometric)
print(emit(split).splitlines()[:8])
