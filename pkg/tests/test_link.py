from collections import Counter

import pytest
from hypothesis import given, settings

from chamberlink.catalog import Circle, Clasp, ClaspKind, Side, Span, Turn
from chamberlink.composer import build
from chamberlink.link import (
    ChamberLink,
    InvalidLink,
    disc_counts,
    rotate,
    signed_sum_at,
    total_signed_sum,
    trace_components,
    validate,
)

from linkgen import links, oracle_components

W = ClaspKind.WHITEHEAD


def nonuniform_mismatch():
    # chamber A: four spans; B: two spans and a bottom turn; C: two spans and a top turn
    return ChamberLink(
        (
            [Span(j, j) for j in range(4)],
            [Turn(Side.BOTTOM, (2, 3)), Span(0, 0), Span(1, 1)],
            [Turn(Side.TOP, (0, 1)), Span(0, 2), Span(1, 3)],
        ),
        "mismatch",
    )


def test_needs_a_chamber():
    with pytest.raises(InvalidLink):
        ChamberLink(())


def test_validate_antoine():
    report = validate(build("antoine"))
    assert report.disc_counts == (2, 2, 2, 2)
    assert report.uniform and report.accepted


def test_validate_core_circle():
    report = validate(ChamberLink(([Span(0, 0)],)))
    assert report.disc_counts == (1,) and report.uniform and report.accepted


def test_validate_flags_nonuniform_but_accepts():
    report = validate(nonuniform_mismatch())
    assert report.disc_counts == (4, 2, 4)
    assert report.accepted
    assert not report.uniform
    assert report.flags == ("NonUniformDiscCounts",)


def test_validate_reports_profile_mismatch():
    link = ChamberLink(([Span(0, 0)], []))
    report = validate(link)
    assert not report.accepted
    assert [(v.code, v.chamber) for v in report.violations] == [
        ("E_PROFILE_MISMATCH", 1),
        ("E_PROFILE_MISMATCH", 0),
    ]
    assert "expects bottom count 1" in report.violations[0].message


def test_validate_reports_nondense():
    link = ChamberLink(([Span(0, 1), Span(1, 2)],))
    codes = {v.code for v in validate(link).violations}
    assert "E_NONDENSE" in codes


def test_disc_counts():
    assert disc_counts(build("gabai")) == [6, 6, 6, 6, 6]
    assert disc_counts(ChamberLink(([],))) == [0]
    assert disc_counts(build("mcmillan4")) == [4, 4]
    with pytest.raises(InvalidLink):
        disc_counts(ChamberLink(([Span(0, 0)], [])))


def test_trace_whitehead():
    (t,) = trace_components(build("whitehead"))
    assert t.winding == 0
    assert len(t.crossings) == 4


def test_trace_bing():
    traces = trace_components(build("bing"))
    assert [t.winding for t in traces] == [0, 0]


def test_trace_core_circle_is_positive():
    (t,) = trace_components(ChamberLink(([Span(0, 0)],)))
    assert t.winding == 1
    assert t.crossings == (t.crossings[0],) and t.crossings[0].sign == 1


def test_trace_first_discovered_crossing_is_positive_when_winding_zero():
    for name in ("whitehead", "bing", "antoine", "mcmillan4", "gabai"):
        for t in trace_components(build(name)):
            assert t.winding == 0
            assert t.crossings[0].sign == 1


def test_circles_are_zero_crossing_components():
    link = ChamberLink(([Span(0, 0), Circle(), Circle()],))
    traces = trace_components(link)
    assert [len(t.crossings) for t in traces] == [1, 0, 0]
    assert [t.winding for t in traces] == [1, 0, 0]


def test_total_signed_sum_examples():
    assert abs(total_signed_sum(build("algebraic2"))) == 2
    clasps_and_turns = ChamberLink(
        (
            [Clasp(W, (0, 1), (0, 1)), Turn(Side.TOP, (2, 3))],
            [Turn(Side.BOTTOM, (2, 3)), Clasp(ClaspKind.ANTOINE, (0, 1), (0, 1))],
        )
    )
    assert total_signed_sum(clasps_and_turns) == 0


def test_trace_rejects_invalid():
    with pytest.raises(InvalidLink):
        trace_components(ChamberLink(([Span(0, 0)], [])))


def test_rotation_relabels_chambers():
    link = nonuniform_mismatch()
    assert rotate(link, 1).chambers == link.chambers[1:] + link.chambers[:1]
    assert rotate(link, 3) == link


@settings(max_examples=300, deadline=None)
@given(links())
def test_signed_sum_is_the_same_at_every_disc(link):
    s = total_signed_sum(link)
    assert all(signed_sum_at(link, i) == s for i in range(link.m))


@settings(max_examples=300, deadline=None)
@given(links())
def test_disc_counts_share_parity_with_signed_sum(link):
    s = total_signed_sum(link)
    assert all((n - s) % 2 == 0 for n in disc_counts(link))


@settings(max_examples=300, deadline=None)
@given(links())
def test_traces_partition_crossings_and_pieces(link):
    traces = trace_components(link)
    seen = Counter((x.disc, x.slot) for t in traces for x in t.crossings)
    counts = disc_counts(link)
    expected = Counter((d, s) for d, n in enumerate(counts) for s in range(n))
    assert seen == expected
    used = Counter(p for t in traces for p in t.pieces)
    for c, content in enumerate(link.chambers):
        for p, piece in enumerate(content.pieces):
            assert used[(c, p)] == max(len(piece.arcs()), 1)


@settings(max_examples=300, deadline=None)
@given(links())
def test_traces_agree_with_independent_oracle(link):
    traces = [t for t in trace_components(link) if t.crossings]
    oracle = oracle_components(link)
    assert len(traces) == len(oracle)
    windings = []
    for sums, counts in oracle:
        values = {sums.get(i, 0) for i in range(link.m)}
        assert len(values) == 1  # homological invariance, checked independently
        windings.append(abs(values.pop()))
    assert sorted(windings) == sorted(t.winding for t in traces)
    assert sorted(sum(c.values()) for _, c in oracle) == sorted(len(t.crossings) for t in traces)


@settings(max_examples=100, deadline=None)
@given(links())
def test_trace_is_deterministic(link):
    assert trace_components(link) == trace_components(ChamberLink(link.chambers, link.name))
