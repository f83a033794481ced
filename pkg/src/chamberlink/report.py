"""Versioned JSON form of an index report."""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Tuple, Union

from .engine import Exact, IndexReport

SCHEMA_VERSION = "1"


@dataclass(frozen=True)
class Geometric:
    kind: str  # "Exact" or "Bounds"
    value: Union[int, Tuple[int, int]]
    parity: int

    def __post_init__(self):
        if not isinstance(self.value, int):
            object.__setattr__(self, "value", tuple(self.value))


@dataclass(frozen=True)
class ReportDocument:
    link_name: str
    disc_counts: Tuple[int, ...]
    components: Tuple[Tuple[int, int], ...]
    algebraic_total: int
    geometric: Geometric
    certificates: Tuple[dict, ...] = ()
    refusals: Tuple[dict, ...] = ()
    schema_version: str = SCHEMA_VERSION

    @classmethod
    def from_report(cls, report: IndexReport, link_name: str) -> "ReportDocument":
        g = report.geometric
        if isinstance(g, Exact):
            geometric = Geometric("Exact", g.value, g.value % 2)
        else:
            geometric = Geometric("Bounds", (g.lower, g.upper), g.parity)
        return cls(
            link_name=link_name,
            disc_counts=tuple(report.disc_counts),
            components=tuple(enumerate(report.windings)),
            algebraic_total=report.algebraic_total_signed,
            geometric=geometric,
            certificates=tuple(
                {"chamber": c.chamber, "rule": c.rule, "k": c.k, "l": c.l, "n": c.n}
                for c in report.certificates
            ),
            refusals=tuple(
                {"code": r.code, "chamber": r.chamber, "detail": r.detail}
                for r in report.refusal_reasons
            ),
        )

    def to_dict(self) -> dict:
        g = self.geometric
        return {
            "schema_version": self.schema_version,
            "link_name": self.link_name,
            "disc_counts": list(self.disc_counts),
            "components": [{"id": i, "winding": w} for i, w in self.components],
            "algebraic_total": self.algebraic_total,
            "geometric": {
                "kind": g.kind,
                "value": g.value if isinstance(g.value, int) else list(g.value),
                "parity": g.parity,
            },
            "certificates": [dict(c) for c in self.certificates],
            "refusals": [dict(r) for r in self.refusals],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "ReportDocument":
        g = data["geometric"]
        return cls(
            link_name=data["link_name"],
            disc_counts=tuple(data["disc_counts"]),
            components=tuple((c["id"], c["winding"]) for c in data["components"]),
            algebraic_total=data["algebraic_total"],
            geometric=Geometric(g["kind"], g["value"], g["parity"]),
            certificates=tuple(data["certificates"]),
            refusals=tuple(data["refusals"]),
            schema_version=data["schema_version"],
        )

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        return cls.from_dict(json.loads(text))


def load_schema() -> dict:
    text = resources.files("chamberlink").joinpath("report.schema.json").read_text(encoding="utf-8")
    return json.loads(text)
