"""
When chamber indices are not enough
===================================

Three chambers whose indices are 4, 2 and 2, glued along discs that meet
the link 4, 2 and 4 times. Knowing the chamber indices does not pin down
the index of the whole link, so the engine only returns bounds.
"""

from chamberlink import ChamberLink, Side, Span, Turn, chamber_index_bounds, geometric_index

link = ChamberLink(
    (
        [Span(j, j) for j in range(4)],
        [Span(0, 0), Span(1, 1), Turn(Side.BOTTOM, (2, 3))],
        [Span(0, 2), Span(1, 3), Turn(Side.TOP, (0, 1))],
    ),
    "mismatch",
)

print("chamber bounds:", [chamber_index_bounds(c) for c in link.chambers])

report = geometric_index(link)
print("disc counts:", report.disc_counts)
print("result:", report.geometric)
for reason in report.refusal_reasons:
    print("refused:", reason.code, "-", reason.detail)
