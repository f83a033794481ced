"""Links in a solid torus as cyclic sequences of chambers.

Disc ``i`` is the top of chamber ``i`` and the bottom of chamber ``i + 1``
(indices mod ``m``), so chamber 0 sits between disc ``m - 1`` and disc 0.
A crossing of disc ``i`` is signed ``+1`` when the component passes from
chamber ``i`` into chamber ``i + 1``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from .catalog import ChamberContent, Circle, Side, endpoint_profile

__all__ = [
    "ChamberLink",
    "ComponentTrace",
    "DiscCrossing",
    "InvalidLink",
    "ValidationReport",
    "Violation",
    "disc_counts",
    "rotate",
    "signed_sum_at",
    "total_signed_sum",
    "trace_components",
    "validate",
]


class InvalidLink(ValueError):
    """The operation needs a structurally valid link."""

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = tuple(violations)


@dataclass(frozen=True)
class ChamberLink:
    chambers: Tuple[ChamberContent, ...]
    name: str = "L"

    def __post_init__(self):
        chambers = tuple(
            c if isinstance(c, ChamberContent) else ChamberContent(tuple(c)) for c in self.chambers
        )
        if not chambers:
            raise InvalidLink("a chamber link needs at least one chamber")
        object.__setattr__(self, "chambers", chambers)

    @property
    def m(self) -> int:
        return len(self.chambers)

    def __len__(self) -> int:
        return len(self.chambers)

    def __getitem__(self, i: int) -> ChamberContent:
        return self.chambers[i % self.m]

    def replace_chamber(self, i: int, *contents: ChamberContent) -> "ChamberLink":
        """New link with chamber ``i`` replaced by ``contents`` (in order)."""
        chambers = self.chambers[:i] + tuple(contents) + self.chambers[i + 1:]
        return ChamberLink(chambers, self.name)


@dataclass(frozen=True)
class Violation:
    code: str
    chamber: int
    message: str


@dataclass(frozen=True)
class ValidationReport:
    disc_counts: Tuple[int, ...]
    violations: Tuple[Violation, ...] = ()

    @property
    def uniform(self) -> bool:
        return len(set(self.disc_counts)) <= 1

    @property
    def accepted(self) -> bool:
        return not self.violations

    @property
    def flags(self) -> Tuple[str, ...]:
        return () if self.uniform else ("NonUniformDiscCounts",)


def validate(link: ChamberLink) -> ValidationReport:
    """Check slot density and disc agreement; never raises.

    Non-uniform disc counts do not make a link invalid, they are only
    flagged (certification needs uniformity, representation does not).
    """
    violations = []
    for i, content in enumerate(link.chambers):
        for code, msg in content.problems():
            violations.append(Violation(code, i, f"chamber {i + 1}: {msg}"))
    m = link.m
    for i in range(m):
        j = (i + 1) % m
        top = endpoint_profile(link.chambers[i])[1]
        bottom = endpoint_profile(link.chambers[j])[0]
        if top != bottom:
            violations.append(
                Violation(
                    "E_PROFILE_MISMATCH",
                    j,
                    f"chamber {j + 1}: expects bottom count {top} "
                    f"(top count of chamber {i + 1}), found {bottom}",
                )
            )
    counts = tuple(endpoint_profile(c)[1] for c in link.chambers)
    return ValidationReport(counts, tuple(violations))


def _require_valid(link: ChamberLink) -> ValidationReport:
    report = validate(link)
    if not report.accepted:
        raise InvalidLink(
            "; ".join(v.message for v in report.violations), report.violations
        )
    return report


def disc_counts(link: ChamberLink) -> List[int]:
    """``[n_0, ..., n_{m-1}]`` with ``n_i`` the crossing count of disc ``i``."""
    return list(_require_valid(link).disc_counts)


@dataclass(frozen=True)
class DiscCrossing:
    disc: int
    slot: int
    sign: int


@dataclass(frozen=True)
class ComponentTrace:
    """One link component as a cyclic walk through the chamber pieces.

    ``pieces`` lists ``(chamber, piece_index)`` in walk order; a clasp shows
    up once per arc of it the component uses.
    """

    id: int
    crossings: Tuple[DiscCrossing, ...]
    winding: int
    pieces: Tuple[Tuple[int, int], ...] = field(default=())

    def signed_sum_at(self, disc: int) -> int:
        return sum(c.sign for c in self.crossings if c.disc == disc)

    @property
    def discs(self) -> Tuple[int, ...]:
        return tuple(sorted({c.disc for c in self.crossings}))


_SIDE_RANK = {Side.BOTTOM: 0, Side.TOP: 1}


def _arc_table(link: ChamberLink) -> Dict[tuple, tuple]:
    """Map each endpoint ``(chamber, side, slot)`` to ``(other endpoint, piece_index)``."""
    table = {}
    for c, content in enumerate(link.chambers):
        for p, piece in enumerate(content.pieces):
            for (s1, k1), (s2, k2) in piece.arcs():
                a, b = (c, s1, k1), (c, s2, k2)
                table[a] = (b, p)
                table[b] = (a, p)
    return table


def _crossing_at(endpoint: tuple, m: int, leaving: bool) -> DiscCrossing:
    """Crossing made when the walk leaves (or enters) a chamber at ``endpoint``."""
    c, side, slot = endpoint
    if side is Side.TOP:
        return DiscCrossing(c, slot, +1 if leaving else -1)
    return DiscCrossing((c - 1) % m, slot, -1 if leaving else +1)


def _across(endpoint: tuple, m: int) -> tuple:
    c, side, slot = endpoint
    if side is Side.TOP:
        return ((c + 1) % m, Side.BOTTOM, slot)
    return ((c - 1) % m, Side.TOP, slot)


def _walk(start: tuple, table: dict, m: int):
    """Walk the closed component that enters its chamber at ``start``.

    Returns the crossings in walk order (the entry into ``start`` first),
    the ``(chamber, piece)`` traversed after each crossing, and every
    endpoint touched.
    """
    crossings, pieces, touched = [], [], []
    here = start
    while True:
        crossings.append(_crossing_at(here, m, leaving=False))
        there, p = table[here]
        pieces.append((here[0], p))
        touched += (here, there)
        here = _across(there, m)
        if here == start:
            return crossings, pieces, touched


def trace_components(link: ChamberLink) -> List[ComponentTrace]:
    """Partition the link into oriented components.

    Components are discovered in lexicographic ``(chamber, side, slot)``
    order of their endpoints, bottom before top; circles follow in chamber
    order.  A component with nonzero winding is oriented so its winding is
    positive; otherwise its first discovered crossing is positive.
    """
    _require_valid(link)
    m = link.m
    table = _arc_table(link)
    order = sorted(table, key=lambda e: (e[0], _SIDE_RANK[e[1]], e[2]))
    visited = set()
    traces = []
    for endpoint in order:
        if endpoint in visited:
            continue
        # a +1 crossing enters through a bottom endpoint or leaves through a top one
        start = endpoint if endpoint[1] is Side.BOTTOM else _across(endpoint, m)
        crossings, pieces, touched = _walk(start, table, m)
        visited.update(touched)
        winding = _winding(crossings)
        if winding < 0:
            crossings, pieces = _reverse(crossings, pieces)
            winding = -winding
        traces.append(ComponentTrace(len(traces), tuple(crossings), winding, tuple(pieces)))
    for c, content in enumerate(link.chambers):
        for p, piece in enumerate(content.pieces):
            if isinstance(piece, Circle):
                traces.append(ComponentTrace(len(traces), (), 0, ((c, p),)))
    return traces


def _reverse(crossings, pieces):
    # keep the first crossing first; piece k sits between crossings k and k+1
    rev = [crossings[0]] + crossings[:0:-1]
    rev = [DiscCrossing(x.disc, x.slot, -x.sign) for x in rev]
    return rev, pieces[::-1]


def _winding(crossings: Sequence[DiscCrossing]) -> int:
    if not crossings:
        return 0
    discs = {x.disc for x in crossings}
    disc = 0 if 0 in discs else crossings[0].disc
    return sum(x.sign for x in crossings if x.disc == disc)


def signed_sum_at(link: ChamberLink, disc: int) -> int:
    """Signed crossing count of the whole (canonically oriented) link at ``disc``."""
    return sum(t.signed_sum_at(disc) for t in trace_components(link))


def total_signed_sum(link: ChamberLink) -> int:
    """Signed crossing count at disc 0; the same at every disc."""
    return signed_sum_at(link, 0)


def rotate(link: ChamberLink, k: int) -> ChamberLink:
    """Relabel so that chamber ``k`` becomes chamber 0."""
    k %= link.m
    return ChamberLink(link.chambers[k:] + link.chambers[:k], link.name)
