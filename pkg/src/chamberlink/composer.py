"""Satellite index algebra and builders for the standard link families.

Nesting works on index facts only: if ``T0 ⊂ T1 ⊂ T2`` then both the
geometric and the algebraic index of ``T0`` in ``T2`` are the products of
the two intermediate ones.  The companion ``T1`` has to be a single solid
torus, so the outer operand of :func:`nest` must describe a one-component
link.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, Sequence, Tuple, Union

from .catalog import ChamberContent, Clasp, ClaspKind, Span, split_antoine
from .engine import Exact, IndexReport, geometric_index
from .link import ChamberLink

__all__ = [
    "CORPUS_NAMES",
    "DEFAULT_COMPLICATED",
    "Facts",
    "IndexExpr",
    "Leaf",
    "MultiComponentCompanion",
    "Nest",
    "Pattern",
    "PatternChoice",
    "UnknownName",
    "build",
    "evaluate",
    "generate_complicated",
    "leaf_from_link",
    "nest",
    "split_antoine_chambers",
]

Geometric = Union[int, Tuple[int, int]]


class MultiComponentCompanion(ValueError):
    """The outer operand of a nest has more than one component."""


class UnknownName(KeyError):
    pass


@dataclass(frozen=True)
class Facts:
    geometric: Geometric
    algebraic_total: int

    @property
    def exact(self) -> bool:
        return isinstance(self.geometric, int)


def _mul(x: Geometric, y: Geometric) -> Geometric:
    if isinstance(x, int) and isinstance(y, int):
        return x * y
    lo1, hi1 = (x, x) if isinstance(x, int) else x
    lo2, hi2 = (y, y) if isinstance(y, int) else y
    # all endpoints are nonnegative, so the product interval is endpoint-wise
    return (lo1 * lo2, hi1 * hi2)


@dataclass(frozen=True)
class Leaf:
    geometric: Geometric
    algebraic_total: int
    components: int = 1
    source: str = ""

    def __post_init__(self):
        g = self.geometric
        if not isinstance(g, int):
            lo, hi = g
            g = lo if lo == hi else (int(lo), int(hi))
            object.__setattr__(self, "geometric", g)
        if self.algebraic_total < 0:
            raise ValueError("algebraic_total is an absolute value")


@dataclass(frozen=True)
class Nest:
    inner: "IndexExpr"
    outer: "IndexExpr"


IndexExpr = Union[Leaf, Nest]


def components(expr: IndexExpr) -> int:
    return expr.components if isinstance(expr, Leaf) else components(expr.inner)


def nest(inner: IndexExpr, outer: IndexExpr) -> Nest:
    """Place ``inner`` inside the solid torus whose core is ``outer``."""
    if components(outer) != 1:
        raise MultiComponentCompanion(
            f"companion must have one component, {_name(outer)} has {components(outer)}"
        )
    return Nest(inner, outer)


def _name(expr: IndexExpr) -> str:
    if isinstance(expr, Leaf):
        return expr.source or "leaf"
    return f"({_name(expr.inner)} in {_name(expr.outer)})"


def evaluate(expr: IndexExpr) -> Facts:
    if isinstance(expr, Leaf):
        return Facts(expr.geometric, expr.algebraic_total)
    if components(expr.outer) != 1:
        raise MultiComponentCompanion(f"companion {_name(expr.outer)} is not a single torus")
    a, b = evaluate(expr.inner), evaluate(expr.outer)
    return Facts(_mul(a.geometric, b.geometric), a.algebraic_total * b.algebraic_total)


def leaf_from_report(report: IndexReport, source: str = "") -> Leaf:
    g = report.geometric
    geometric = g.value if isinstance(g, Exact) else (g.lower, g.upper)
    return Leaf(geometric, abs(report.algebraic_total_signed), len(report.windings), source)


def leaf_from_link(link: ChamberLink) -> Leaf:
    return leaf_from_report(geometric_index(link), link.name)


# --- link families -----------------------------------------------------------


class Pattern(str, Enum):
    SPANS_ONLY = "spans"
    WHITEHEAD_PLUS_SPANS = "whitehead"
    SQUARE_KNOT_PLUS_SPANS = "squareknot"
    ANTOINE_PLUS_SPANS = "antoine"


@dataclass(frozen=True)
class PatternChoice:
    slot: int
    pattern: Pattern

    def __post_init__(self):
        object.__setattr__(self, "pattern", Pattern(self.pattern))
        if not 0 <= self.slot < 8:
            raise ValueError(f"pattern slot must be in 0..7, got {self.slot}")

    def content(self, strands: int = 8) -> ChamberContent:
        if self.pattern is Pattern.SPANS_ONLY:
            # strand pairs (2k, 2k+1) move up one pair, so every pair
            # eventually meets a clasp and turns back
            return ChamberContent(tuple(Span(j, (j + 2) % strands) for j in range(strands)))
        kind = ClaspKind(self.pattern.value)
        # the clasp takes the two lowest slots, the rest run straight through
        pieces = [Clasp(kind, (0, 1), (0, 1))]
        pieces += [Span(j, j) for j in range(2, strands)]
        return ChamberContent(tuple(pieces))


DEFAULT_COMPLICATED = (
    Pattern.WHITEHEAD_PLUS_SPANS,
    Pattern.SQUARE_KNOT_PLUS_SPANS,
    Pattern.ANTOINE_PLUS_SPANS,
    Pattern.SPANS_ONLY,
) * 2


def generate_complicated(
    choices: Sequence[Union[PatternChoice, Pattern, str]] = DEFAULT_COMPLICATED,
    name: str = "complicated",
) -> ChamberLink:
    """Eight-chamber link with eight strands, one replacement pattern per chamber."""
    if len(choices) != 8:
        raise ValueError(f"need exactly 8 pattern choices, got {len(choices)}")
    picked = [
        c if isinstance(c, PatternChoice) else PatternChoice(i, Pattern(c))
        for i, c in enumerate(choices)
    ]
    by_slot = {c.slot: c for c in picked}
    if sorted(by_slot) != list(range(8)):
        raise ValueError("pattern choices must cover slots 0..7 exactly once")
    return ChamberLink(tuple(by_slot[i].content() for i in range(8)), name)


def split_antoine_chambers(link: ChamberLink, which=None) -> ChamberLink:
    """Split the listed chambers (default: every Antoine chamber) in two."""
    if which is None:
        which = [
            i for i, c in enumerate(link.chambers)
            if any(cl.kind is ClaspKind.ANTOINE for cl in c.clasps)
        ]
    chambers = []
    for i, content in enumerate(link.chambers):
        if i in which:
            lower, upper, _ = split_antoine(content)
            chambers += [lower, upper]
        else:
            chambers.append(content)
    return ChamberLink(tuple(chambers), link.name)


def _clasp_chamber(kind, top, bottom, spans) -> ChamberContent:
    return ChamberContent((Clasp(kind, top, bottom),) + tuple(Span(b, t) for b, t in spans))


def _shifted_chamber(a: int, b: int, strands: int = 6) -> ChamberContent:
    """Whitehead clasp at top slots (a, a+1) and bottom slots (b, b+1);
    the other strands keep their left-to-right order."""
    top = [j for j in range(strands) if j not in (a, a + 1)]
    bottom = [j for j in range(strands) if j not in (b, b + 1)]
    return _clasp_chamber(ClaspKind.WHITEHEAD, (a, a + 1), (b, b + 1), zip(bottom, top))


W, S = ClaspKind.WHITEHEAD, ClaspKind.SQUARE_KNOT


def whitehead() -> ChamberLink:
    return ChamberLink(
        (_clasp_chamber(W, (0, 1), (0, 1), ()), ChamberContent((Span(0, 0), Span(1, 1)))),
        "whitehead",
    )


def bing() -> ChamberLink:
    clasp = _clasp_chamber(W, (0, 1), (0, 1), ())
    return ChamberLink((clasp, clasp), "bing")


def antoine() -> ChamberLink:
    return ChamberLink((_clasp_chamber(W, (0, 1), (0, 1), ()),) * 4, "antoine")


def algebraic2() -> ChamberLink:
    # one curve going twice around the torus
    return ChamberLink((ChamberContent((Span(0, 1), Span(1, 0))),), "algebraic2")


def mcmillan4() -> ChamberLink:
    # twice around forward, clasp, twice around backward: one curve of winding 0
    return ChamberLink(
        (
            _clasp_chamber(W, (0, 1), (0, 1), [(2, 2), (3, 3)]),
            ChamberContent((Span(0, 2), Span(1, 3), Span(2, 0), Span(3, 1))),
        ),
        "mcmillan4",
    )


def knotted3() -> ChamberLink:
    # a single curve of winding 1 through a Whitehead and a square knot clasp
    return ChamberLink(
        (
            _clasp_chamber(W, (0, 1), (0, 1), [(2, 2)]),
            _clasp_chamber(S, (1, 2), (1, 2), [(0, 0)]),
        ),
        "knotted3",
    )


def gabai() -> ChamberLink:
    # shifted form: the clasp steps across the six strands and back
    shifts = [(0, 0), (2, 2), (4, 4), (2, 2), (0, 0)]
    return ChamberLink(tuple(_shifted_chamber(a, b) for a, b in shifts), "gabai")


_BUILDERS: Dict[str, Callable[[], ChamberLink]] = {
    "whitehead": whitehead,
    "bing": bing,
    "antoine": antoine,
    "algebraic2": algebraic2,
    "mcmillan4": mcmillan4,
    "knotted3": knotted3,
    "gabai": gabai,
    "complicated": generate_complicated,
}

CORPUS_NAMES = tuple(_BUILDERS)


def build(name: str) -> ChamberLink:
    """Canonical encoding of a named corpus link."""
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise UnknownName(f"unknown corpus link {name!r}; known: {', '.join(CORPUS_NAMES)}") from None
