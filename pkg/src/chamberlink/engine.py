"""Algebraic and geometric index of a chamber link.

The geometric index is certified only through the chamber criterion: every
disc meets the link in the same number ``n`` of points and every chamber has
index exactly ``n``.  A chamber's index is bracketed below by the certified
pieces (two per clasp, one per spanning arc) and above by the count of a
disc pushed in close to either end.  When the criterion fails the engine
returns the sound interval ``[|s|, min n_i]`` and says why it abstained.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from .catalog import ChamberContent, Clasp, InvalidContent, Span, endpoint_profile, index_contribution
from .link import ChamberLink, _require_valid, trace_components

__all__ = [
    "Bounds",
    "Certificate",
    "ChamberIndexBound",
    "Exact",
    "FactorConclusion",
    "IndexReport",
    "Refusal",
    "UnknownComponent",
    "algebraic_index",
    "chamber_index_bounds",
    "check_geq_algebraic",
    "even_index_audit",
    "geometric_index",
    "separating_torus_conclusions",
]

CLASP_COROLLARY = "Clasp Corollary"
CHAMBER_COROLLARY = "Chamber Corollary"


class UnknownComponent(LookupError):
    pass


@dataclass(frozen=True)
class ChamberIndexBound:
    lower: int
    upper: int

    @property
    def exact(self) -> bool:
        return self.lower == self.upper


def chamber_index_bounds(content: ChamberContent) -> ChamberIndexBound:
    """Interval for the index of one chamber.

    >>> from .catalog import Clasp, ClaspKind
    >>> chamber_index_bounds(ChamberContent((Clasp(ClaspKind.WHITEHEAD, (0, 1), (0, 1)),)))
    ChamberIndexBound(lower=2, upper=2)
    """
    problems = content.problems()
    if problems:
        raise InvalidContent("; ".join(msg for _, msg in problems))
    lower = sum(index_contribution(p) for p in content.pieces)
    upper = min(endpoint_profile(content))
    return ChamberIndexBound(lower, upper)


@dataclass(frozen=True)
class Certificate:
    chamber: int
    rule: str
    k: int
    l: int  # noqa: E741
    n: int

    def __str__(self):
        return f"chamber {self.chamber}: {self.rule}, k={self.k}, l={self.l}, n={self.n}"


@dataclass(frozen=True)
class Refusal:
    code: str
    chamber: Optional[int] = None
    detail: str = ""

    def __str__(self):
        where = f" (chamber {self.chamber})" if self.chamber is not None else ""
        return f"{self.code}{where}: {self.detail}" if self.detail else f"{self.code}{where}"


@dataclass(frozen=True)
class Exact:
    value: int


@dataclass(frozen=True)
class Bounds:
    lower: int
    upper: int
    parity: int


@dataclass(frozen=True)
class IndexReport:
    disc_counts: Tuple[int, ...]
    windings: Tuple[int, ...]
    algebraic_total_signed: int
    geometric: Union[Exact, Bounds]
    certificates: Tuple[Certificate, ...] = ()
    refusal_reasons: Tuple[Refusal, ...] = ()

    @property
    def algebraic_per_component(self) -> Tuple[int, ...]:
        return tuple(abs(w) for w in self.windings)

    @property
    def certified(self) -> bool:
        return isinstance(self.geometric, Exact)

    @property
    def lower(self) -> int:
        g = self.geometric
        return g.value if isinstance(g, Exact) else g.lower


def algebraic_index(link: ChamberLink, component: int) -> int:
    traces = trace_components(link)
    if not 0 <= component < len(traces):
        raise UnknownComponent(f"no component {component}; the link has {len(traces)}")
    return abs(traces[component].winding)


def geometric_index(link: ChamberLink) -> IndexReport:
    validation = _require_valid(link)
    counts = validation.disc_counts
    traces = trace_components(link)
    windings = tuple(t.winding for t in traces)
    s = sum(t.signed_sum_at(0) for t in traces)

    refusals = []
    if not validation.uniform:
        refusals.append(Refusal("NonUniformDiscCounts", detail=" ".join(map(str, counts))))
    n = min(counts)

    certificates = []
    for i, content in enumerate(link.chambers):
        bound = chamber_index_bounds(content)
        k = sum(isinstance(p, Clasp) for p in content.pieces)
        ell = sum(isinstance(p, Span) for p in content.pieces)
        if validation.uniform and bound.exact and bound.lower == n:
            rule = CLASP_COROLLARY if content.only_clasps_and_spans else CHAMBER_COROLLARY
            certificates.append(Certificate(i, rule, k, ell, n))
        elif validation.uniform:
            refusals.append(
                Refusal(
                    "UncertifiedChamber",
                    i,
                    f"chamber index in [{bound.lower}, {bound.upper}], needs exactly {n}",
                )
            )

    if not refusals and n == 0:
        # identical chamber indices can hide either index 0 or 2, so 0 is never certified
        refusals.append(Refusal("ZeroIndex", detail="index 0 has no certificate"))

    if refusals:
        geometric = Bounds(abs(s), n, abs(s) % 2)
        certificates = []
    else:
        geometric = Exact(n)
    return IndexReport(
        tuple(counts), windings, s, geometric, tuple(certificates), tuple(refusals)
    )


def check_geq_algebraic(report: IndexReport) -> bool:
    """Self-audit: the geometric claim is at least the algebraic total."""
    return report.lower >= abs(report.algebraic_total_signed)


def even_index_audit(link: ChamberLink, report: IndexReport) -> bool:
    """When every component winds 0 times, a certified index must be even.

    Vacuously true when some component has nonzero winding.
    """
    if any(t.winding != 0 for t in trace_components(link)):
        return True
    if isinstance(report.geometric, Exact):
        return report.geometric.value % 2 == 0
    return True


@dataclass(frozen=True)
class FactorConclusion:
    """One factorisation ``inner * outer`` of a nested index.

    ``inner`` is the index of the innermost torus in the separating torus,
    ``outer`` the index of the separating torus in the ambient one.
    """

    inner: int
    outer: int

    @property
    def parallel_to_inner(self) -> bool:
        return self.inner == 1

    @property
    def parallel_to_outer(self) -> bool:
        return self.outer == 1

    @property
    def tags(self) -> Tuple[str, ...]:
        return tuple(
            tag
            for tag, on in (("ParallelToInner", self.parallel_to_inner), ("ParallelToOuter", self.parallel_to_outer))
            if on
        )

    def __str__(self):
        tags = " and ".join(self.tags) or "no parallelism forced"
        return f"({self.inner}, {self.outer}): {tags}"


class Conclusions(List[FactorConclusion]):
    """List of factor conclusions with an optional explanatory note."""

    note: str = ""


def separating_torus_conclusions(total_index: int) -> Conclusions:
    """All ordered factorisations of ``total_index`` with forced parallelism.

    A factor of 1 forces the separating torus boundary to be parallel to
    the corresponding side.  For total index 2 this is the Whitehead
    dichotomy; a total of 0 constrains nothing and yields an empty list.
    """
    if total_index < 0:
        raise ValueError("total index must be nonnegative")
    out = Conclusions()
    if total_index == 0:
        out.note = "ZeroTotal: index 0 admits no factorization constraint"
        return out
    out.extend(
        FactorConclusion(a, total_index // a)
        for a in range(1, total_index + 1)
        if total_index % a == 0
    )
    return out
