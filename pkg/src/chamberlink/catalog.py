"""Chamber contents: spanning arcs, turn-backs, named clasps and free circles.

A chamber is a copy of ``B^2 x I`` cut out of a solid torus by two meridional
discs.  Everything that happens inside one chamber is described by a
:class:`ChamberContent`, an ordered collection of :class:`Piece` objects.
Every arc endpoint sits on the bottom or the top disc at an integer *slot*;
slots on each side are dense and 0-based, and two adjacent chambers are glued
by identifying equal slots on the shared disc.

Only spanning arcs and the three named clasps carry a certified lower bound
on the chamber index.  Turn-backs and circles are representable but count
for nothing.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Tuple, Union

__all__ = [
    "ClaspKind",
    "Side",
    "Span",
    "Turn",
    "Clasp",
    "Circle",
    "Piece",
    "ChamberContent",
    "InvalidContent",
    "NotSplittable",
    "endpoint_profile",
    "index_contribution",
    "split_antoine",
]


class InvalidContent(ValueError):
    """A piece or chamber content violates its structural invariants."""


class NotSplittable(ValueError):
    """Raised by :func:`split_antoine` when the chamber is not Antoine + spans."""


class ClaspKind(str, Enum):
    WHITEHEAD = "whitehead"
    SQUARE_KNOT = "squareknot"
    ANTOINE = "antoine"

    @property
    def glyph(self) -> str:
        return {"whitehead": "W", "squareknot": "S", "antoine": "A"}[self.value]


class Side(str, Enum):
    BOTTOM = "bottom"
    TOP = "top"


Endpoint = Tuple[Side, int]
Arc = Tuple[Endpoint, Endpoint]


def _pair(pair, what: str) -> Tuple[int, int]:
    a, b = (int(x) for x in pair)
    if a < 0 or b < 0:
        raise InvalidContent(f"{what}: slot indices must be nonnegative, got {pair!r}")
    if a == b:
        raise InvalidContent(f"{what}: the two endpoints of a pair must differ, got {pair!r}")
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Span:
    """An arc running from ``bottom`` slot to ``top`` slot."""

    bottom: int
    top: int

    def __post_init__(self):
        if self.bottom < 0 or self.top < 0:
            raise InvalidContent(f"span: slot indices must be nonnegative, got {self}")

    def arcs(self) -> Tuple[Arc, ...]:
        return (((Side.BOTTOM, self.bottom), (Side.TOP, self.top)),)


@dataclass(frozen=True)
class Turn:
    """An unknotted, unlinked arc with both endpoints on one disc."""

    side: Side
    pair: Tuple[int, int]

    def __post_init__(self):
        object.__setattr__(self, "side", Side(self.side))
        object.__setattr__(self, "pair", _pair(self.pair, "turn"))

    def arcs(self) -> Tuple[Arc, ...]:
        a, b = self.pair
        return (((self.side, a), (self.side, b)),)


@dataclass(frozen=True)
class Clasp:
    """A named clasp: one arc with both ends on top, one with both ends on bottom.

    Any linking circles that belong to the clasp (the middle ring of the
    Antoine clasp, for instance) are part of the piece and are not traced
    as separate components.
    """

    kind: ClaspKind
    top_pair: Tuple[int, int]
    bottom_pair: Tuple[int, int]

    def __post_init__(self):
        object.__setattr__(self, "kind", ClaspKind(self.kind))
        object.__setattr__(self, "top_pair", _pair(self.top_pair, "clasp top"))
        object.__setattr__(self, "bottom_pair", _pair(self.bottom_pair, "clasp bottom"))

    def arcs(self) -> Tuple[Arc, ...]:
        (a, b), (c, d) = self.top_pair, self.bottom_pair
        return (
            ((Side.TOP, a), (Side.TOP, b)),
            ((Side.BOTTOM, c), (Side.BOTTOM, d)),
        )


@dataclass(frozen=True)
class Circle:
    """A closed curve in the chamber interior."""

    def arcs(self) -> Tuple[Arc, ...]:
        return ()


Piece = Union[Span, Turn, Clasp, Circle]

_KIND_ORDER = {ClaspKind.WHITEHEAD: 0, ClaspKind.SQUARE_KNOT: 1, ClaspKind.ANTOINE: 2}


def _piece_key(piece: Piece):
    # canonical order: clasps, spans by bottom slot, turns, circles
    if isinstance(piece, Clasp):
        return (0, piece.top_pair, piece.bottom_pair, _KIND_ORDER[piece.kind])
    if isinstance(piece, Span):
        return (1, (piece.bottom, piece.top))
    if isinstance(piece, Turn):
        return (2, (0 if piece.side is Side.BOTTOM else 1,) + piece.pair)
    if isinstance(piece, Circle):
        return (3,)
    raise TypeError(f"not a chamber piece: {piece!r}")


@dataclass(frozen=True)
class ChamberContent:
    """The pieces inside one chamber, kept in canonical order.

    Construction only checks the pieces themselves.  Slot collisions and
    gaps are reported by :meth:`problems` so that a link validator can list
    them instead of failing on the first one.
    """

    pieces: Tuple[Piece, ...] = field(default_factory=tuple)

    def __post_init__(self):
        pieces = tuple(self.pieces)
        for p in pieces:
            _piece_key(p)
        object.__setattr__(self, "pieces", tuple(sorted(pieces, key=_piece_key)))

    def __iter__(self) -> Iterator[Piece]:
        return iter(self.pieces)

    def __len__(self) -> int:
        return len(self.pieces)

    def slots(self, side: Side) -> list:
        """All slot indices used on ``side``, with repetition, in piece order."""
        side = Side(side)
        return [slot for p in self.pieces for arc in p.arcs() for s, slot in arc if s is side]

    def problems(self) -> list:
        """List of ``(code, message)`` for every broken slot invariant."""
        out = []
        for side in Side:
            used = Counter(self.slots(side))
            seen = set(used)
            dups = sorted(s for s, n in used.items() if n > 1)
            if dups:
                out.append(("E_DUPLICATE_SLOT", f"{side.value} slot(s) {dups} used more than once"))
            if seen != set(range(len(seen))):
                missing = sorted(set(range(max(seen) + 1)) - seen)
                out.append(("E_NONDENSE", f"{side.value} slots are not dense: missing {missing}"))
        return out

    @property
    def is_valid(self) -> bool:
        return not self.problems()

    @property
    def clasps(self) -> Tuple[Clasp, ...]:
        return tuple(p for p in self.pieces if isinstance(p, Clasp))

    @property
    def spans(self) -> Tuple[Span, ...]:
        return tuple(p for p in self.pieces if isinstance(p, Span))

    @property
    def only_clasps_and_spans(self) -> bool:
        return all(isinstance(p, (Clasp, Span)) for p in self.pieces)

    def summary(self) -> str:
        """Short human label such as ``"W + 2 spans"``."""
        parts = [c.kind.glyph for c in self.clasps]
        counts = [
            (len(self.spans), "span"),
            (sum(isinstance(p, Turn) for p in self.pieces), "turn"),
            (sum(isinstance(p, Circle) for p in self.pieces), "circle"),
        ]
        parts += [f"{n} {word}{'s' if n != 1 else ''}" for n, word in counts if n]
        return " + ".join(parts) if parts else "empty"


def endpoint_profile(content: ChamberContent) -> Tuple[int, int]:
    """Number of distinct slots used on the (bottom, top) discs."""
    return (len(set(content.slots(Side.BOTTOM))), len(set(content.slots(Side.TOP))))


def index_contribution(piece: Piece) -> int:
    """Certified lower-bound contribution of one piece to its chamber index.

    >>> index_contribution(Span(0, 0))
    1
    >>> index_contribution(Clasp(ClaspKind.SQUARE_KNOT, (0, 1), (0, 1)))
    2
    >>> index_contribution(Turn(Side.TOP, (0, 1)))
    0
    """
    if isinstance(piece, Span):
        return 1
    if isinstance(piece, Clasp):
        return 2
    if isinstance(piece, (Turn, Circle)):
        return 0
    raise TypeError(f"not a chamber piece: {piece!r}")


def split_antoine(content: ChamberContent) -> Tuple[ChamberContent, ChamberContent, int]:
    """Cut an Antoine clasp chamber in two along a middle meridional disc.

    The middle ring of the Antoine clasp is cut into two arcs; each half is
    then a Whitehead clasp.  On the middle disc the ring takes slots 0 and 1
    and the spans follow at 2, 3, ... in their canonical (bottom slot) order.

    Returns ``(lower, upper, middle_disc_count)``.
    """
    clasps = content.clasps
    others = [p for p in content.pieces if not isinstance(p, (Clasp, Span))]
    if len(clasps) != 1 or clasps[0].kind is not ClaspKind.ANTOINE or others:
        raise NotSplittable(
            "split_antoine needs exactly one Antoine clasp and otherwise only spans; "
            f"got {content.summary()}"
        )
    (clasp,) = clasps
    spans = content.spans
    lower = [Clasp(ClaspKind.WHITEHEAD, top_pair=(0, 1), bottom_pair=clasp.bottom_pair)]
    upper = [Clasp(ClaspKind.WHITEHEAD, top_pair=clasp.top_pair, bottom_pair=(0, 1))]
    for j, span in enumerate(spans, start=2):
        lower.append(Span(span.bottom, j))
        upper.append(Span(j, span.top))
    return ChamberContent(tuple(lower)), ChamberContent(tuple(upper)), 2 + len(spans)
