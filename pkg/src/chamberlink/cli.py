"""Command line interface.

Exit status: 0 success (``index``: certified), 1 invalid input,
2 usage error, 3 ``index`` could only bound the geometric index.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from . import composer
from .catalog import NotSplittable
from .composer import CORPUS_NAMES, MultiComponentCompanion, Pattern, UnknownName, evaluate, leaf_from_report, nest
from .dsl import SourceDocument, corpus_text, emit, load_corpus, parse, parse_with_diagnostics, ParseError
from .engine import Exact, geometric_index, separating_torus_conclusions
from .link import ChamberLink, validate
from .render import render_ascii, render_svg
from .report import ReportDocument

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_BOUNDS = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _InputError(Exception):
    pass


def _read(path: str) -> SourceDocument:
    try:
        return SourceDocument(Path(path).read_text(encoding="utf-8"), path)
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror}") from None


def _patterns(spec: Optional[str]):
    if spec is None:
        return composer.DEFAULT_COMPLICATED
    names = [p.strip() for p in spec.split(",")]
    try:
        patterns = [Pattern(p) for p in names]
    except ValueError:
        allowed = ", ".join(p.value for p in Pattern)
        raise _UsageError(f"unknown pattern in {spec!r}; choose from {allowed}") from None
    if len(patterns) != 8:
        raise _UsageError(f"--patterns needs 8 comma-separated entries, got {len(patterns)}")
    return patterns


def _named_link(name: str, patterns: Optional[str] = None) -> ChamberLink:
    if name not in CORPUS_NAMES:
        raise _UsageError(f"unknown corpus link {name!r}; known: {', '.join(CORPUS_NAMES)}")
    if name == "complicated" and patterns is not None:
        return composer.generate_complicated(_patterns(patterns))
    return load_corpus(name)


def _load(args) -> ChamberLink:
    if getattr(args, "corpus", None):
        if getattr(args, "file", None):
            raise _UsageError("give either a file or --corpus, not both")
        return _named_link(args.corpus, getattr(args, "patterns", None))
    if not getattr(args, "file", None):
        raise _UsageError("a .cld file or --corpus NAME is required")
    return parse(_read(args.file))


def _out(args, text: str):
    if not args.quiet or args.json:
        sys.stdout.write(text)


# --- subcommands -------------------------------------------------------------


def cmd_validate(args) -> int:
    doc = _read(args.file)
    link, diags = parse_with_diagnostics(doc)
    if not args.quiet:
        for d in diags:
            print(d.format(doc.origin), file=sys.stderr)
    if args.json:
        body = {
            "valid": link is not None,
            "disc_counts": list(validate(link).disc_counts) if link else None,
            "diagnostics": [
                {"severity": d.severity, "line": d.line, "column": d.column, "code": d.code, "message": d.message}
                for d in diags
            ],
        }
        _out(args, json.dumps(body, indent=2) + "\n")
    elif link is not None:
        counts = validate(link).disc_counts
        _out(args, f"{doc.origin}: valid, m={link.m}, disc counts {' '.join(map(str, counts))}\n")
    return EXIT_OK if link is not None else EXIT_INVALID


def format_report(doc: ReportDocument) -> str:
    g = doc.geometric
    windings = " ".join(str(w) for _, w in doc.components)
    lines = [
        f"link {doc.link_name}: m={len(doc.disc_counts)}, disc counts {' '.join(map(str, doc.disc_counts))}",
        f"components: {len(doc.components)} (windings {windings or '-'}), algebraic total {doc.algebraic_total}",
    ]
    if g.kind == "Exact":
        lines.append(f"geometric index: {g.value} (certified)")
        for c in doc.certificates:
            lines.append(f"  chamber {c['chamber']}: {c['rule']}, k={c['k']}, l={c['l']}, n={c['n']}")
    else:
        lo, hi = g.value
        lines.append(f"geometric index: in [{lo}, {hi}], parity {g.parity} (not certified)")
        for r in doc.refusals:
            where = f" chamber {r['chamber']}" if r["chamber"] is not None else ""
            lines.append(f"  refused: {r['code']}{where}: {r['detail']}")
    return "\n".join(lines) + "\n"


def cmd_index(args) -> int:
    link = _load(args)
    report = geometric_index(link)
    doc = ReportDocument.from_report(report, link.name)
    _out(args, doc.to_json() if args.json else format_report(doc))
    return EXIT_OK if isinstance(report.geometric, Exact) else EXIT_BOUNDS


def cmd_compose(args) -> int:
    names = [n.strip() for n in args.chain.split(",") if n.strip()]
    if not names:
        raise _UsageError("--chain needs at least one name")
    leaves = []
    for name in names:
        link = _named_link(name, args.patterns) if name in CORPUS_NAMES else parse(_read(name))
        leaves.append(leaf_from_report(geometric_index(link), name))
    expr = leaves[0]
    for leaf in leaves[1:]:
        expr = nest(expr, leaf)
    facts = evaluate(expr)
    g = facts.geometric
    if args.json:
        body = {
            "chain": names,
            "geometric": g if isinstance(g, int) else list(g),
            "exact": facts.exact,
            "algebraic_total": facts.algebraic_total,
        }
        _out(args, json.dumps(body, indent=2) + "\n")
    else:
        shown = str(g) if isinstance(g, int) else f"in [{g[0]}, {g[1]}]"
        _out(
            args,
            f"chain: {' in '.join(names)}\n"
            f"geometric index: {shown}\n"
            f"algebraic index: {facts.algebraic_total}\n",
        )
    return EXIT_OK


def cmd_split_antoine(args) -> int:
    link = parse(_read(args.file))
    if not 0 <= args.chamber < link.m:
        raise _UsageError(f"--chamber must be in 0..{link.m - 1}")
    try:
        split = composer.split_antoine_chambers(link, [args.chamber])
    except NotSplittable as exc:
        raise _InputError(str(exc)) from None
    text = emit(split)
    Path(args.output).write_text(text, encoding="utf-8", newline="\n")
    _out(args, f"wrote {args.output}: m={split.m}\n")
    return EXIT_OK


def cmd_corpus(args) -> int:
    if args.action == "list":
        if args.json:
            _out(args, json.dumps(list(CORPUS_NAMES)) + "\n")
        else:
            _out(args, "".join(f"{n}\n" for n in CORPUS_NAMES))
        return EXIT_OK
    if not args.name:
        raise _UsageError("corpus show needs a NAME")
    if args.name not in CORPUS_NAMES:
        raise _UsageError(f"unknown corpus link {args.name!r}; known: {', '.join(CORPUS_NAMES)}")
    _out(args, corpus_text(args.name))
    return EXIT_OK


def cmd_render(args) -> int:
    link = _load(args)
    _out(args, render_svg(link) if args.format == "svg" else render_ascii(link))
    return EXIT_OK


def cmd_check_parallel(args) -> int:
    if args.total < 0:
        raise _UsageError("--total must be nonnegative")
    conclusions = separating_torus_conclusions(args.total)
    if args.json:
        body = {
            "total": args.total,
            "note": conclusions.note,
            "factorizations": [
                {"inner": c.inner, "outer": c.outer, "tags": list(c.tags)} for c in conclusions
            ],
        }
        _out(args, json.dumps(body, indent=2) + "\n")
        return EXIT_OK
    if not conclusions:
        _out(args, conclusions.note + "\n")
    for c in conclusions:
        if c.parallel_to_inner and c.parallel_to_outer:
            text = "boundary parallel to both the inner and the outer torus"
        elif c.parallel_to_inner:
            text = "boundary parallel to the inner torus"
        elif c.parallel_to_outer:
            text = "boundary parallel to the outer torus"
        else:
            text = "no parallelism forced"
        _out(args, f"inner index {c.inner} x outer index {c.outer}: {text}\n")
    return EXIT_OK


# --- argument parsing --------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    # the global flags are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS, help="suppress text output")

    parser = argparse.ArgumentParser(
        prog="chamberlink",
        description="Certify the geometric index of links in a solid torus from chamber encodings.",
    )
    parser.add_argument("--json", action="store_true", default=False, help="machine-readable output")
    parser.add_argument("--quiet", action="store_true", default=False, help="suppress text output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check a .cld file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("index", parents=[common], help="algebraic and geometric index report")
    p.add_argument("file", nargs="?")
    p.add_argument("--corpus", metavar="NAME")
    p.add_argument("--patterns", help="8 comma-separated patterns for the complicated family")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("compose", parents=[common], help="nest index facts, innermost first")
    p.add_argument("--chain", required=True, metavar="NAME[,NAME...]", help="corpus names or .cld paths")
    p.add_argument("--patterns", help="8 comma-separated patterns for the complicated family")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("split-antoine", parents=[common], help="split an Antoine clasp chamber in two")
    p.add_argument("file")
    p.add_argument("--chamber", type=int, required=True, metavar="I", help="0-based chamber index")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_split_antoine)

    p = sub.add_parser("corpus", parents=[common], help="list or show the shipped encodings")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("render", parents=[common], help="draw a schematic")
    p.add_argument("file", nargs="?")
    p.add_argument("--corpus", metavar="NAME")
    p.add_argument("--patterns", help=argparse.SUPPRESS)
    p.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("check-parallel", parents=[common], help="factorizations of a nested index")
    p.add_argument("--total", type=int, required=True, metavar="N")
    p.set_defaults(func=cmd_check_parallel)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"chamberlink: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        if not args.quiet:
            print(exc, file=sys.stderr)
        return EXIT_INVALID
    except (_InputError, UnknownName, MultiComponentCompanion) as exc:
        print(f"chamberlink: error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
