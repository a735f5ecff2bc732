"""Tests for resolutions, Ext, Tor and the dimension invariants."""

import logging

import pytest

from nabelian.homological import (
    Bound,
    codomdim,
    default_cap,
    domdim,
    ext_table,
    format_value,
    gldim,
    grade,
    grade_profile,
    injective_coresolution_terms,
    is_injective_via_ext,
    is_projective_via_ext,
    minimal_resolution,
    pdim,
    projective_injective_vertices,
    projective_presentation,
    stable_hom_dim,
    syzygy,
    tensor,
    tor_table,
    tor_table_via_right,
)
from nabelian.modules import (
    Representation,
    injective_module,
    projective_module,
    regular_module,
    simple_module,
)


def test_minimal_resolution_of_a_simple(a3_radical_square_zero):
    A = a3_radical_square_zero
    res = minimal_resolution(simple_module(A, 0), 5)
    assert res.terms == ((0,), (1,), (2,))
    assert res.length == 2
    assert res.complete and res.minimal
    assert res.is_exact()
    assert res.is_radical()
    assert res.to_json()["terms"] == [["1"], ["2"], ["3"]]


def test_truncated_resolution_is_incomplete(corpus_algebra):
    A = corpus_algebra("nakayama_x2")
    res = minimal_resolution(simple_module(A, 0), 3)
    assert res.length == 3
    assert not res.complete
    assert res.is_exact()
    with pytest.raises(ValueError):
        minimal_resolution(simple_module(A, 0), -1)


def test_presentation_of_a_projective_has_no_relations(a3_radical_square_zero):
    A = a3_radical_square_zero
    pres = projective_presentation(projective_module(A, 1))
    assert pres.differential.shape == (0, 1)
    assert pres.augmentation.is_isomorphism()


def test_syzygies(a3_radical_square_zero):
    A = a3_radical_square_zero
    assert syzygy(simple_module(A, 0), 1).dims == (0, 1, 0)
    assert syzygy(simple_module(A, 0), 2).dims == (0, 0, 1)
    assert syzygy(simple_module(A, 0), 3).is_zero()


def test_projective_and_global_dimension(a3_radical_square_zero, corpus_algebra):
    A = a3_radical_square_zero
    assert [pdim(simple_module(A, i)) for i in range(3)] == [2, 1, 0]
    assert gldim(A) == 2
    assert gldim(A.opposite()) == 2
    assert gldim(corpus_algebra("semisimple3")) == 0
    assert pdim(simple_module(corpus_algebra("nakayama_x2"), 0), 4) is Bound.ABOVE_CAP


def test_capped_values_format():
    assert format_value(3) == 3
    assert format_value(Bound.AT_LEAST_CAP) == "AtLeastCap"
    assert str(Bound.INFINITE) == "Infinite"


def test_default_cap(a2):
    assert default_cap(a2) == 5


def test_ext_table(a3_radical_square_zero):
    A = a3_radical_square_zero
    table = ext_table(simple_module(A, 0), simple_module(A, 2), 3)
    assert table.values == (0, 0, 1, 0)
    assert not table.vanishes(1, 2)
    assert table.vanishes(0, 1)
    assert ext_table(simple_module(A, 0), simple_module(A, 1), 2).values == (0, 1, 0)


def test_dominant_dimension(a3_radical_square_zero, a2, corpus_algebra):
    A = a3_radical_square_zero
    assert projective_injective_vertices(A) == (1, 2)
    assert domdim(A) == 2
    assert codomdim(A) == 2
    assert domdim(a2) == 1
    assert domdim(corpus_algebra("semisimple3")) is Bound.INFINITE
    assert domdim(corpus_algebra("nakayama_x2")) is Bound.INFINITE


def test_injective_coresolution_of_the_regular_module(a3_radical_square_zero):
    A = a3_radical_square_zero
    terms = injective_coresolution_terms(regular_module(A), 4)
    assert terms == ((1, 2, 2), (1,), (0,))


def test_grade(a3_radical_square_zero):
    A = a3_radical_square_zero
    assert grade(simple_module(A, 0)) == 2
    assert grade(simple_module(A, 1)) == 0
    assert grade(projective_module(A, 0)) == 0
    assert grade(Representation.zero(A)) is Bound.INFINITE


def test_grade_profile_counts_every_sample(a3_radical_square_zero):
    profile = grade_profile(a3_radical_square_zero, seed=3, samples=5, cap=3)
    assert sum(profile.values()) == 5
    assert set(profile) <= {"0", "2", "Infinite"}


def test_tor_from_both_sides(a3_radical_square_zero):
    A = a3_radical_square_zero
    op = A.opposite()
    M = simple_module(A, 0)
    N = simple_module(op, 0)
    assert tensor(M, N).dimension == 1
    left = tor_table(M, N, 2)
    assert left == tor_table_via_right(M, N, 2)
    assert left[0] == 1


def test_stable_hom(a3_radical_square_zero):
    A = a3_radical_square_zero
    assert stable_hom_dim(projective_module(A, 0), simple_module(A, 0)) == 0
    assert stable_hom_dim(simple_module(A, 0), simple_module(A, 0)) == 1


def test_ext_oracles(a3_radical_square_zero):
    A = a3_radical_square_zero
    assert is_projective_via_ext(projective_module(A, 0))
    assert not is_projective_via_ext(simple_module(A, 0))
    assert is_injective_via_ext(injective_module(A, 0))
    assert not is_injective_via_ext(simple_module(A, 2))


def test_cap_truncation_is_a_warning(a3_radical_square_zero, corpus_algebra, caplog):
    nakayama = corpus_algebra("nakayama_x2")
    caplog.set_level(logging.WARNING, logger="nabelian")
    assert gldim(nakayama, 3) is Bound.ABOVE_CAP
    assert domdim(a3_radical_square_zero, 1) is Bound.AT_LEAST_CAP
    messages = [r.getMessage() for r in caplog.records if r.levelno == logging.WARNING]
    assert len(messages) == 2
    assert "exceeds cap 3" in messages[0]
    assert "reaches cap 1" in messages[1]

    caplog.clear()
    assert gldim(nakayama, 3, warn=False) is Bound.ABOVE_CAP
    assert domdim(a3_radical_square_zero, 1, warn=False) is Bound.AT_LEAST_CAP
    assert not caplog.records
