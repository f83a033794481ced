"""Schematic drawings of chamber links (fixed-width text and static SVG)."""
from __future__ import annotations

from typing import List
from xml.sax.saxutils import escape

from .catalog import Circle, Clasp, Side, Span, Turn
from .link import ChamberLink, disc_counts


def _piece_line(piece) -> str:
    if isinstance(piece, Clasp):
        (a, b), (c, d) = piece.top_pair, piece.bottom_pair
        g = piece.kind.glyph
        return f"{c},{d} ]{g}[ {a},{b}"
    if isinstance(piece, Span):
        return f"{piece.bottom} ----- {piece.top}"
    if isinstance(piece, Turn):
        a, b = piece.pair
        return f"{a},{b} <" if piece.side is Side.BOTTOM else f"> {a},{b}"
    return "o"


def render_ascii(link: ChamberLink) -> str:
    """One block per chamber, ``|`` marking the discs between them.

    Slots on the bottom disc are written on the left of each piece, slots
    on the top disc on the right.
    """
    counts = disc_counts(link)
    blocks: List[List[str]] = []
    for i, content in enumerate(link.chambers):
        lines = [f"C{i}: {content.summary()}"]
        lines += [_piece_line(p) for p in content.pieces]
        blocks.append(lines)
    height = max(len(b) for b in blocks)
    widths = [max(len(line) for line in b) for b in blocks]
    out = [
        f"link {link.name}  m={link.m}",
        "disc counts: " + " ".join(map(str, counts)),
    ]
    for row in range(height):
        cells = [
            (b[row] if row < len(b) else "").ljust(w) for b, w in zip(blocks, widths)
        ]
        out.append("| " + " | ".join(cells) + " |")
    return "\n".join(line.rstrip() for line in out) + "\n"


_CHAMBER_W = 160
_SLOT_H = 22
_TOP = 40


def render_svg(link: ChamberLink) -> str:
    """Static SVG 1.1 schematic; chambers left to right, bottom disc on the left."""
    counts = disc_counts(link)
    rows = max(max(counts, default=0), 1)
    width = _CHAMBER_W * link.m + 40
    height = _TOP + rows * _SLOT_H + 40

    def y(slot):
        return _TOP + slot * _SLOT_H + _SLOT_H // 2

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<title>{escape(link.name)}</title>',
        '<g font-family="monospace" font-size="11" fill="none" stroke="black">',
    ]
    for i in range(link.m + 1):
        x = 20 + i * _CHAMBER_W
        parts.append(f'<line x1="{x}" y1="{_TOP - 10}" x2="{x}" y2="{height - 20}" stroke-dasharray="4 3"/>')
        disc = (i - 1) % link.m
        parts.append(f'<text x="{x + 3}" y="{_TOP - 14}" stroke="none" fill="black">D{disc}:{counts[disc]}</text>')
    for i, content in enumerate(link.chambers):
        x0 = 20 + i * _CHAMBER_W
        x1 = x0 + _CHAMBER_W
        mid = (x0 + x1) // 2
        circles = 0
        for piece in content.pieces:
            if isinstance(piece, Span):
                parts.append(f'<line x1="{x0}" y1="{y(piece.bottom)}" x2="{x1}" y2="{y(piece.top)}"/>')
            elif isinstance(piece, Turn):
                a, b = piece.pair
                xe, xt = (x0, x0 + 40) if piece.side is Side.BOTTOM else (x1, x1 - 40)
                parts.append(f'<path d="M {xe} {y(a)} C {xt} {y(a)} {xt} {y(b)} {xe} {y(b)}"/>')
            elif isinstance(piece, Clasp):
                (a, b), (c, d) = piece.top_pair, piece.bottom_pair
                parts.append(f'<path d="M {x0} {y(c)} C {mid + 25} {y(c)} {mid + 25} {y(d)} {x0} {y(d)}"/>')
                parts.append(f'<path d="M {x1} {y(a)} C {mid - 25} {y(a)} {mid - 25} {y(b)} {x1} {y(b)}"/>')
                ym = (y(min(a, c)) + y(max(b, d))) // 2
                parts.append(
                    f'<text x="{mid - 4}" y="{ym + 4}" stroke="none" fill="black">{piece.kind.glyph}</text>'
                )
            elif isinstance(piece, Circle):
                cy = height - 30
                parts.append(f'<circle cx="{x0 + 15 + 18 * circles}" cy="{cy}" r="7"/>')
                circles += 1
    parts += ["</g>", "</svg>"]
    return "\n".join(parts) + "\n"
