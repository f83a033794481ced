"""The ``.cld`` chamber link description language.

Grammar::

    link    := "link" IDENT "{" chamber+ "}"
    chamber := "chamber" "{" piece* "}"
    piece   := "span" INT "->" INT ";"
             | "turn" ("bottom" | "top") "(" INT "," INT ")" ";"
             | KIND "top" "(" INT "," INT ")" "bottom" "(" INT "," INT ")" ";"
             | "circle" ";"
    KIND    := "whitehead" | "squareknot" | "antoine"

``#`` starts a comment running to the end of the line.  Chambers are cyclic
in the order listed.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from typing import List, Optional, Tuple

from .catalog import ChamberContent, Circle, Clasp, ClaspKind, InvalidContent, Side, Span, Turn
from .composer import CORPUS_NAMES, UnknownName
from .link import ChamberLink, InvalidLink, validate

__all__ = [
    "ParseDiagnostic",
    "ParseError",
    "SourceDocument",
    "emit",
    "load_corpus",
    "parse",
    "parse_with_diagnostics",
]

ERROR, WARNING = "error", "warning"


@dataclass(frozen=True)
class SourceDocument:
    text: str
    origin: str = "<memory>"


@dataclass(frozen=True)
class ParseDiagnostic:
    severity: str
    line: int
    column: int
    message: str
    code: str

    def format(self, origin: str = "<memory>") -> str:
        return f"{origin}:{self.line}:{self.column}: {self.severity} {self.code}: {self.message}"


class ParseError(ValueError):
    def __init__(self, diagnostics, origin="<memory>"):
        self.diagnostics = tuple(diagnostics)
        self.origin = origin
        super().__init__("\n".join(d.format(origin) for d in self.diagnostics))


_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<int>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_\-]*)
  | (?P<arrow>->)
  | (?P<punct>[{}(),;])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    line: int
    col: int


class _Stop(Exception):
    pass


def _tokenize(text: str, diags: list) -> List[_Tok]:
    toks, pos, line, line_start = [], 0, 1, 0
    while pos < len(text):
        mo = _TOKEN.match(text, pos)
        if mo is None:
            diags.append(
                ParseDiagnostic(ERROR, line, pos - line_start + 1, f"unexpected character {text[pos]!r}", "E_LEX")
            )
            raise _Stop
        kind = mo.lastgroup
        if kind not in ("ws", "comment"):
            toks.append(_Tok(kind, mo.group(), line, pos - line_start + 1))
        for i, ch in enumerate(mo.group()):
            if ch == "\n":
                line += 1
                line_start = pos + i + 1
        pos = mo.end()
    toks.append(_Tok("eof", "", line, pos - line_start + 1))
    return toks


class _Parser:
    def __init__(self, toks, diags):
        self.toks = toks
        self.i = 0
        self.diags = diags

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def fail(self, expected: str, tok: Optional[_Tok] = None):
        tok = tok or self.tok
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        self.diags.append(ParseDiagnostic(ERROR, tok.line, tok.col, f"expected {expected}, found {found}", "E_SYNTAX"))
        raise _Stop

    def expect(self, text: str) -> _Tok:
        tok = self.tok
        if tok.text != text:
            self.fail(repr(text))
        self.i += 1
        return tok

    def integer(self) -> int:
        tok = self.tok
        if tok.kind != "int":
            self.fail("a slot index")
        self.i += 1
        return int(tok.text)

    def pair(self, keyword: str) -> Tuple[int, int]:
        self.expect(keyword)
        self.expect("(")
        a = self.integer()
        self.expect(",")
        b = self.integer()
        self.expect(")")
        return a, b

    def link(self):
        self.expect("link")
        if self.tok.kind != "ident":
            self.fail("a link name")
        name = self.tok.text
        self.i += 1
        self.expect("{")
        chambers = []
        while self.tok.text == "chamber":
            chambers.append(self.chamber())
        if not chambers:
            self.fail("'chamber'")
        self.expect("}")
        if self.tok.kind != "eof":
            self.fail("end of input")
        return name, chambers

    def chamber(self):
        head = self.expect("chamber")
        self.expect("{")
        pieces = []
        while not (self.tok.kind == "punct" and self.tok.text == "}"):
            pieces.append(self.piece())
        self.expect("}")
        return head, pieces

    def piece(self):
        tok = self.tok
        word = tok.text if tok.kind == "ident" else None
        try:
            if word == "span":
                self.i += 1
                bottom = self.integer()
                self.expect("->")
                top = self.integer()
                piece = Span(bottom, top)
            elif word == "turn":
                self.i += 1
                if self.tok.text not in ("bottom", "top"):
                    self.fail("'bottom' or 'top'")
                side = Side(self.tok.text)
                piece = Turn(side, self.pair(self.tok.text))
            elif word in ("whitehead", "squareknot", "antoine"):
                self.i += 1
                top = self.pair("top")
                bottom = self.pair("bottom")
                piece = Clasp(ClaspKind(word), top, bottom)
            elif word == "circle":
                self.i += 1
                piece = Circle()
            else:
                self.fail("a piece (span, turn, whitehead, squareknot, antoine, circle) or '}'")
        except InvalidContent as exc:
            self.diags.append(ParseDiagnostic(ERROR, tok.line, tok.col, str(exc), "E_PAIR_REPEAT"))
            raise _Stop from None
        self.expect(";")
        return tok, piece


def parse_with_diagnostics(doc) -> Tuple[Optional[ChamberLink], List[ParseDiagnostic]]:
    """Parse a document; returns ``(link or None, diagnostics)``.

    ``link`` is None exactly when some diagnostic is an error.
    """
    if isinstance(doc, str):
        doc = SourceDocument(doc)
    diags: List[ParseDiagnostic] = []
    try:
        toks = _tokenize(doc.text, diags)
        name, raw = _Parser(toks, diags).link()
    except _Stop:
        return None, diags

    link = ChamberLink(tuple(ChamberContent(tuple(p for _, p in pieces)) for _, pieces in raw), name)
    report = validate(link)
    for v in report.violations:
        head = raw[v.chamber][0]
        diags.append(ParseDiagnostic(ERROR, head.line, head.col, v.message, v.code))
    if any(d.severity == ERROR for d in diags):
        return None, diags
    if not report.uniform:
        head = raw[0][0]
        counts = " ".join(map(str, report.disc_counts))
        diags.append(
            ParseDiagnostic(
                WARNING, head.line, head.col,
                f"disc crossing counts are not uniform ({counts}); the index cannot be certified",
                "W_NONUNIFORM",
            )
        )
    return link, diags


def parse(doc) -> ChamberLink:
    """Parse ``.cld`` text (or a :class:`SourceDocument`); raise :class:`ParseError` on errors."""
    origin = doc.origin if isinstance(doc, SourceDocument) else "<memory>"
    link, diags = parse_with_diagnostics(doc)
    if link is None:
        raise ParseError([d for d in diags if d.severity == ERROR], origin)
    return link


def _emit_piece(piece) -> str:
    if isinstance(piece, Span):
        return f"span {piece.bottom} -> {piece.top};"
    if isinstance(piece, Turn):
        a, b = piece.pair
        return f"turn {piece.side.value}({a},{b});"
    if isinstance(piece, Clasp):
        (a, b), (c, d) = piece.top_pair, piece.bottom_pair
        return f"{piece.kind.value} top({a},{b}) bottom({c},{d});"
    return "circle;"


def emit(link: ChamberLink) -> str:
    """Canonical text: one piece per line, two-space indents, LF endings."""
    report = validate(link)
    if not report.accepted:
        raise InvalidLink("; ".join(v.message for v in report.violations), report.violations)
    lines = [f"link {link.name} {{"]
    for content in link.chambers:
        lines.append("  chamber {")
        lines += [f"    {_emit_piece(p)}" for p in content.pieces]
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def corpus_text(name: str) -> str:
    if name not in CORPUS_NAMES:
        raise UnknownName(f"unknown corpus link {name!r}; known: {', '.join(CORPUS_NAMES)}")
    return resources.files("chamberlink").joinpath("corpus", f"{name}.cld").read_text(encoding="utf-8")


def load_corpus(name: str) -> ChamberLink:
    """Parse the shipped ``corpus/<name>.cld`` file."""
    return parse(SourceDocument(corpus_text(name), f"corpus/{name}.cld"))
