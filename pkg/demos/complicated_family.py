"""
The eight-chamber family
========================

Each of the eight chambers holds one replacement pattern: eight spans, or a
Whitehead, square knot or Antoine clasp beside six spans. Every one of the
4**8 choices has index 8; here a random sample of them is checked.
"""

import random
from collections import Counter

from chamberlink import Pattern, generate_complicated, geometric_index
from chamberlink.render import render_ascii

link = generate_complicated()
print(render_ascii(link))
report = geometric_index(link)
print("index:", report.geometric, " algebraic total:", report.algebraic_total_signed)

rng = random.Random(8)
values = Counter()
for _ in range(300):
    patterns = [rng.choice(list(Pattern)) for _ in range(8)]
    values[geometric_index(generate_complicated(patterns)).geometric] += 1
print(values)
