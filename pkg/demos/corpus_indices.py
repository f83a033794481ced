"""
Geometric index of the shipped links
====================================

Each corpus link is cut into chambers by meridional discs. When every disc
meets the link the same number of times and every chamber reaches that
number, the geometric index is certified.
"""

from chamberlink import CORPUS_NAMES, geometric_index, load_corpus

for name in CORPUS_NAMES:
    link = load_corpus(name)
    report = geometric_index(link)
    print(f"{name:12s} m={link.m}  discs={report.disc_counts}  index={report.geometric}")

# the certificates say which chamber rule licensed the value
report = geometric_index(load_corpus("knotted3"))
for c in report.certificates:
    print(f"chamber {c.chamber}: {c.rule} with {c.k} clasp(s) and {c.l} span(s)")
