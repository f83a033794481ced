"""Certified geometric and algebraic index of links in a solid torus.

A link is cut by meridional discs into chambers; each chamber holds
spanning arcs, named clasps, turn-backs and circles.  When every disc meets
the link in ``n`` points and every chamber has index ``n``, the geometric
index of the whole link is ``n``.
"""
from .catalog import (
    ChamberContent,
    Circle,
    Clasp,
    ClaspKind,
    NotSplittable,
    Side,
    Span,
    Turn,
    endpoint_profile,
    index_contribution,
    split_antoine,
)
from .composer import (
    CORPUS_NAMES,
    Leaf,
    Nest,
    Pattern,
    PatternChoice,
    build,
    evaluate,
    generate_complicated,
    nest,
)
from .dsl import ParseError, emit, load_corpus, parse
from .engine import (
    Bounds,
    Exact,
    IndexReport,
    algebraic_index,
    chamber_index_bounds,
    check_geq_algebraic,
    even_index_audit,
    geometric_index,
    separating_torus_conclusions,
)
from .link import (
    ChamberLink,
    InvalidLink,
    disc_counts,
    rotate,
    total_signed_sum,
    trace_components,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "ChamberContent", "Circle", "Clasp", "ClaspKind", "NotSplittable", "Side", "Span", "Turn",
    "endpoint_profile", "index_contribution", "split_antoine",
    "CORPUS_NAMES", "Leaf", "Nest", "Pattern", "PatternChoice", "build", "evaluate",
    "generate_complicated", "nest",
    "ParseError", "emit", "load_corpus", "parse",
    "Bounds", "Exact", "IndexReport", "algebraic_index", "chamber_index_bounds",
    "check_geq_algebraic", "even_index_audit", "geometric_index", "separating_torus_conclusions",
    "ChamberLink", "InvalidLink", "disc_counts", "rotate", "total_signed_sum",
    "trace_components", "validate",
]
