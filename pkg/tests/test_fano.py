from collections import Counter
from itertools import combinations, permutations

import pytest
from hypothesis import given, strategies as st

from octo.fano import (
    MAX_COUNTEREXAMPLES,
    FanoPlane,
    OrientedFanoPlane,
    PlaneInputError,
    complementary_lines,
    invert,
    is_plane_isomorphism,
    lines_through,
    plane_from_json,
    plane_from_text,
    planes_isomorphic,
    standard_fano,
    underlying,
    verify_projective_plane,
)

STANDARD = standard_fano()
PLANE = STANDARD.underlying()


def index_rule_lines():
    return [((n + 1) % 7, (n + 2) % 7, (n + 4) % 7) for n in range(7)]


def test_standard_contains_line_124():
    assert (1, 2, 4) in STANDARD.lines


def test_standard_contains_n6_line():
    n = 6
    assert ((n + 1) % 7, (n + 2) % 7, (n + 4) % 7) == (0, 1, 3)
    assert (0, 1, 3) in STANDARD.lines


def test_standard_is_canonical_and_sorted():
    assert list(STANDARD.lines) == sorted(STANDARD.lines)
    assert all(line[0] == min(line) for line in STANDARD.lines)


def test_standard_passes_axioms():
    report = verify_projective_plane(underlying(STANDARD).lines)
    assert report.passed
    assert all(not r.counterexamples for r in report.results)


def test_duplicate_lines_fail_distinctness():
    report = verify_projective_plane([(0, 1, 2)] * 7)
    assert not report.passed
    assert not report["distinct_lines"].passed
    assert len(report["line_intersection"].counterexamples) == MAX_COUNTEREXAMPLES


def test_complementary_plane_passes():
    assert verify_projective_plane(complementary_lines()).passed


@pytest.mark.parametrize(
    "lines",
    [
        [(0, 1)] + [(0, 1, 2)] * 6,
        [(0, 1, 7)] + [(0, 1, 2)] * 6,
        [(0, 0, 1)] + [(0, 1, 2)] * 6,
        [(0, 1, 2)] * 6,
    ],
)
def test_malformed_input_is_an_input_error(lines):
    with pytest.raises(PlaneInputError):
        verify_projective_plane(lines)


def test_lines_through_zero():
    expected = {frozenset(l) for l in index_rule_lines() if 0 in l}
    assert expected == {frozenset({0, 1, 3}), frozenset({0, 2, 6}), frozenset({0, 4, 5})}
    assert lines_through(PLANE, 0) == expected


def test_lines_through_counts_and_pairs():
    for p in range(7):
        assert len(lines_through(PLANE, p)) == 3
    assert len(lines_through(PLANE, 1) & lines_through(PLANE, 2)) == 1
    with pytest.raises(ValueError):
        lines_through(PLANE, 7)


def test_isomorphism_identity_and_shift():
    assert planes_isomorphic(PLANE, PLANE) == tuple(range(7))
    shift = tuple((x + 1) % 7 for x in range(7))
    shifted = PLANE.relabel(shift)
    perm = planes_isomorphic(PLANE, shifted)
    assert perm is not None and is_plane_isomorphism(perm, PLANE, shifted)
    assert is_plane_isomorphism(shift, PLANE, shifted)


def test_isomorphism_to_complementary_plane():
    comp = FanoPlane(complementary_lines())
    brute = [p for p in permutations(range(7)) if is_plane_isomorphism(p, PLANE, comp)]
    assert len(brute) == 168  # |PGL(3,2)|
    perm = planes_isomorphic(PLANE, comp)
    assert perm == brute[0]


@given(st.permutations(range(7)))
def test_isomorphism_symmetric(perm):
    other = PLANE.relabel(tuple(perm))
    found = planes_isomorphic(PLANE, other)
    assert found is not None
    assert is_plane_isomorphism(invert(found), other, PLANE)


def test_underlying_forgets_orientation():
    assert underlying(STANDARD) == PLANE
    assert underlying(STANDARD.reversed()) == PLANE
    assert STANDARD.reversed() != STANDARD


def test_oriented_rejects_bad_plane():
    with pytest.raises(ValueError):
        OrientedFanoPlane(((0, 1, 2),) * 7)


@given(st.lists(st.sampled_from(list(combinations(range(7), 3))), min_size=7, max_size=7))
def test_axioms_agree_with_pair_counting(lines):
    counts = Counter(pair for line in lines for pair in combinations(sorted(line), 2))
    counting_ok = len(counts) == 21 and set(counts.values()) == {1}
    assert verify_projective_plane(lines).passed == counting_ok


def test_all_thirty_labelled_planes_pass():
    labelled = {frozenset(frozenset(p[q] for q in l) for l in PLANE.lines) for p in permutations(range(7))}
    assert len(labelled) == 30  # 5040 / 168
    for lines in labelled:
        assert verify_projective_plane([tuple(l) for l in lines]).passed


def test_text_and_json_round_trip():
    assert STANDARD.to_text().splitlines()[0] == "cyclic: 0 1 3"
    assert PLANE.to_text().splitlines()[0] == "0 1 3"
    for obj in (STANDARD, PLANE):
        assert plane_from_text(obj.to_text()) == obj
        assert plane_from_json(obj.to_json()) == obj
