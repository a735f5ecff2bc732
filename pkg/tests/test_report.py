"""Tests for report serialization."""

import json
from fractions import Fraction

from nabelian.higher import detect_n
from nabelian.homological import Bound
from nabelian.report import Timings, invariants_report, to_json, to_text, verdict_report


def test_json_has_sorted_keys():
    text = to_json({"b": Fraction(1, 2), "a": Bound.INFINITE})
    assert text.index('"a"') < text.index('"b"')
    assert json.loads(text) == {"a": "Infinite", "b": "1/2"}


def test_same_input_same_bytes(a3_radical_square_zero):
    first = to_json(verdict_report(detect_n(a3_radical_square_zero)))
    second = to_json(verdict_report(detect_n(a3_radical_square_zero)))
    assert first == second


def test_timings_attach_only_when_enabled():
    off = Timings()
    with off.section("work"):
        pass
    assert "timings" not in off.attach({})
    on = Timings(enabled=True)
    with on.section("work"):
        pass
    report = on.attach({})
    assert list(report["timings"]) == ["work"]
    assert report["timings"]["work"] >= 0


def test_invariants_report(a2):
    data = invariants_report(a2, 5)
    assert data["algebra"]["basis"] == ["e_1", "e_2", "a"]
    assert data["gldim"] == 1
    assert data["semisimple"] is False


def test_text_view(a2):
    text = to_text(verdict_report(detect_n(a2)))
    lines = text.splitlines()
    assert lines[0] == "verdict: NotNAbelianUpTo(5)"
    assert "gldim: 1" in lines


def test_text_view_renders_raw_values():
    text = to_text({"ratio": Fraction(3, 4), "bound": Bound.AT_LEAST_CAP, "dims": (1, 0, 2), "witness": None})
    assert text.splitlines() == ["bound: AtLeastCap", "dims: [1, 0, 2]", "ratio: 3/4", "witness: -"]
