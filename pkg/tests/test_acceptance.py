"""Acceptance criteria, one marked group per criterion.

Every check here is exact; there are no numeric tolerances in this domain.
"""
import itertools
import json
import random
from collections import Counter

import pytest

from chamberlink.catalog import ClaspKind
from chamberlink.cli import main
from chamberlink.composer import (
    DEFAULT_COMPLICATED,
    Leaf,
    Pattern,
    build,
    evaluate,
    generate_complicated,
    nest,
    split_antoine_chambers,
)
from chamberlink.dsl import emit, parse
from chamberlink.engine import (
    Bounds,
    Exact,
    algebraic_index,
    chamber_index_bounds,
    check_geq_algebraic,
    even_index_audit,
    geometric_index,
    separating_torus_conclusions,
)
from chamberlink.link import ChamberLink, disc_counts, rotate, signed_sum_at, total_signed_sum, trace_components

from linkgen import random_links
from test_link import nonuniform_mismatch

PROPERTY_LINKS = 1000


def criterion(number, title):
    return pytest.mark.criterion(number, title)


def index_json(capsys, *argv):
    code = main(["--json", "index", *argv])
    out, _ = capsys.readouterr()
    return code, json.loads(out)


# --- 1 ----------------------------------------------------------------------

CORPUS_VALUES = [
    ("whitehead", 2),
    ("bing", 2),
    ("antoine", 2),
    ("algebraic2", 2),
    ("knotted3", 3),
    ("mcmillan4", 4),
    ("gabai", 6),
    ("complicated", 8),
]


@criterion(1, "corpus reproduction through `index --corpus`")
@pytest.mark.parametrize("name, value", CORPUS_VALUES)
def test_c1_corpus_values(capsys, name, value):
    code, data = index_json(capsys, "--corpus", name)
    assert code == 0
    assert data["geometric"]["kind"] == "Exact" and data["geometric"]["value"] == value


def _complicated_assignments():
    patterns = list(Pattern)
    uniform = [(p,) * 8 for p in patterns]
    rng = random.Random(20260)
    space = list(itertools.product(patterns, repeat=8))
    sampled = rng.sample(space, 200)
    return uniform + sampled


@criterion(1, "corpus reproduction through `index --corpus`")
def test_c1_complicated_assignments(capsys):
    assignments = _complicated_assignments()
    assert len(assignments) >= 104
    for patterns in assignments:
        spec = ",".join(p.value for p in patterns)
        code, data = index_json(capsys, "--corpus", "complicated", "--patterns", spec)
        assert code == 0, spec
        assert data["geometric"]["value"] == 8, spec


# --- 2 ----------------------------------------------------------------------


@criterion(2, "algebraic indices")
def test_c2_algebraic_indices():
    assert total_signed_sum(build("whitehead")) == 0
    bing = build("bing")
    assert [algebraic_index(bing, j) for j in range(2)] == [0, 0]
    assert algebraic_index(build("algebraic2"), 0) == 2
    knotted = geometric_index(build("knotted3"))
    assert sum(1 for w in knotted.windings if w % 2 == 1) == 1
    assert knotted.geometric == Exact(3)


# --- 3 ----------------------------------------------------------------------


@criterion(3, "non-uniform configuration is bounded, never certified")
def test_c3_nonuniform(capsys, tmp_path):
    link = nonuniform_mismatch()
    assert [chamber_index_bounds(c).lower for c in link.chambers] == [4, 2, 2]
    assert disc_counts(link) != [disc_counts(link)[0]] * link.m
    path = tmp_path / "mismatch.cld"
    path.write_text(emit(link))
    code, data = index_json(capsys, str(path))
    assert code == 3
    assert data["geometric"]["kind"] == "Bounds" and data["geometric"]["value"] == [0, 2]
    for k in range(link.m):
        report = geometric_index(rotate(link, k))
        assert not isinstance(report.geometric, Exact)
        assert report.geometric == Bounds(0, 2, 0)


# --- 4 ----------------------------------------------------------------------


@criterion(4, "multiplicativity of nested indices")
def test_c4_compose(capsys):
    assert main(["--json", "compose", "--chain", "whitehead,whitehead"]) == 0
    assert json.loads(capsys.readouterr()[0])["geometric"] == 4
    assert main(["--json", "compose", "--chain", ",".join(["whitehead"] * 4)]) == 0
    assert json.loads(capsys.readouterr()[0])["geometric"] == 16
    identity = Leaf(1, 1)
    for name in ("whitehead", "knotted3", "gabai", "algebraic2"):
        report = geometric_index(build(name))
        leaf = Leaf(report.geometric.value, abs(report.algebraic_total_signed), len(report.windings), name)
        assert evaluate(nest(leaf, identity)) == evaluate(leaf)
        if leaf.components == 1:
            assert evaluate(nest(identity, leaf)) == evaluate(leaf)
    # nested facts against plain multiplication
    a, b = Leaf(3, 1), Leaf(2, 2)
    facts = evaluate(nest(a, b))
    assert (facts.geometric, facts.algebraic_total) == (3 * 2, 1 * 2)


# --- 5 ----------------------------------------------------------------------


@criterion(5, "splitting Antoine chambers keeps the certified value")
def test_c5_antoine_split():
    rng = random.Random(5)
    cases = [["antoine"] * 8, list(DEFAULT_COMPLICATED)]
    cases += [[rng.choice(list(Pattern)) for _ in range(8)] for _ in range(30)]
    for patterns in cases:
        link = generate_complicated(patterns)
        antoine = sum(1 for c in link.chambers for p in c.clasps if p.kind is ClaspKind.ANTOINE)
        split = split_antoine_chambers(link)
        assert split.m == link.m + antoine
        before, after = geometric_index(link), geometric_index(split)
        assert before.geometric == after.geometric == Exact(8)
        assert after.algebraic_total_signed == before.algebraic_total_signed


# --- 6 ----------------------------------------------------------------------


@pytest.fixture(scope="module")
def sample():
    links = random_links(PROPERTY_LINKS, seed=2026)
    assert len(links) >= PROPERTY_LINKS
    return links


def _comparable(report):
    return (
        report.geometric,
        report.algebraic_total_signed,
        sorted(report.windings),
        sorted(report.disc_counts),
        sorted((c.rule, c.k, c.l, c.n) for c in report.certificates),
        sorted(r.code for r in report.refusal_reasons),
    )


@criterion(6, "property suites on random links")
def test_c6a_signed_sum_same_at_every_disc(sample):
    for link in sample:
        s = total_signed_sum(link)
        assert all(signed_sum_at(link, i) == s for i in range(link.m))


@criterion(6, "property suites on random links")
def test_c6b_disc_counts_share_parity(sample):
    for link in sample:
        s = total_signed_sum(link)
        assert all((n - s) % 2 == 0 for n in disc_counts(link))


@criterion(6, "property suites on random links")
def test_c6c_traces_partition_crossings(sample):
    for link in sample:
        seen = Counter((x.disc, x.slot) for t in trace_components(link) for x in t.crossings)
        expected = Counter((d, s) for d, n in enumerate(disc_counts(link)) for s in range(n))
        assert seen == expected


@criterion(6, "property suites on random links")
def test_c6d_parse_emit_round_trip(sample):
    for link in sample:
        text = emit(link)
        assert parse(text) == link and emit(parse(text)) == text


@criterion(6, "property suites on random links")
def test_c6e_rotation_invariance(sample):
    for link in sample:
        base = _comparable(geometric_index(link))
        for k in range(1, link.m):
            assert _comparable(geometric_index(rotate(link, k))) == base


@criterion(6, "property suites on random links")
def test_c6f_chamberwise_equal_contents(sample):
    for link in sample:
        twin = ChamberLink(tuple(type(c)(tuple(reversed(c.pieces))) for c in link.chambers), "twin")
        assert geometric_index(twin) == geometric_index(link)


@criterion(6, "property suites on random links")
def test_c6g_lower_bound_and_parity(sample):
    for link in sample:
        report = geometric_index(link)
        s = report.algebraic_total_signed
        g = report.geometric
        low = g.value if isinstance(g, Exact) else g.lower
        assert low >= abs(s) and (low - s) % 2 == 0
        assert check_geq_algebraic(report)


# --- 7 ----------------------------------------------------------------------


def _divisor_oracle(n):
    pairs = [(d, n // d) for d in range(1, n + 1) if n % d == 0]
    return [(a, b, a == 1, b == 1) for a, b in pairs]


@criterion(7, "separating torus conclusions")
@pytest.mark.parametrize("total, pairs", [(2, 2), (1, 1), (6, 4)])
def test_c7_separating_torus(total, pairs):
    out = separating_torus_conclusions(total)
    got = [(c.inner, c.outer, c.parallel_to_inner, c.parallel_to_outer) for c in out]
    assert got == _divisor_oracle(total)
    assert len(got) == pairs
    if total == 2:
        assert [c.tags for c in out] == [("ParallelToInner",), ("ParallelToOuter",)]
    if total == 1:
        assert out[0].parallel_to_inner and out[0].parallel_to_outer


# --- 8 ----------------------------------------------------------------------


@criterion(8, "even index audit on winding-zero links")
@pytest.mark.parametrize("name", ["whitehead", "bing", "mcmillan4", "gabai", "complicated"])
def test_c8_even_index_audit(name):
    link = build(name)
    report = geometric_index(link)
    assert set(report.windings) == {0}
    assert isinstance(report.geometric, Exact) and report.geometric.value % 2 == 0
    assert even_index_audit(link, report)
