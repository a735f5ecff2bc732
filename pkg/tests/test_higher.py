"""Tests for duals, transposes, n-cokernels and the n-abelian verdict.

Most facts here are about 1 -a-> 2 -b-> 3 with ab = 0, where proj is
abelian (1-abelian): gldim 2 = domdim.
"""

import pytest

from nabelian.algebra import ProjMatrix
from nabelian.errors import NotComposableError, PreconditionError
from nabelian.higher import (
    CheckStatus,
    SequenceMode,
    SequenceOfProjectives,
    VerdictKind,
    check_sequence,
    cross_check,
    detect_n,
    double_dual_sequence,
    eta,
    is_epi_in_proj,
    is_k_torsion_free,
    is_m_spherical,
    is_mono_in_proj,
    is_n_abelian,
    is_reflexive,
    is_syzygy_module,
    is_von_neumann_regular,
    m_l,
    m_r,
    n_cokernel,
    n_kernel,
    splits,
    splitting_tests,
    star_dual,
    transpose,
    trivial_n_exact,
)
from nabelian.higher import _random_monos, _sampled_status
from nabelian.corpus import load_corpus
from nabelian.homological import Bound
from nabelian.modules import projective_module, simple_module


@pytest.fixture
def path_b(a3_radical_square_zero):
    """P(3) -> P(2), the arrow b."""
    A = a3_radical_square_zero
    return ProjMatrix(A, (2,), (1,), ((A.element([(1, ("b",))]),),))


@pytest.fixture
def path_a(a3_radical_square_zero):
    """P(2) -> P(1), the arrow a."""
    A = a3_radical_square_zero
    return ProjMatrix(A, (1,), (0,), ((A.element([(1, ("a",))]),),))


def test_star_dual_of_a_projective(a3_radical_square_zero):
    A = a3_radical_square_zero
    D = star_dual(projective_module(A, 1))
    assert D.module.algebra is A.opposite()
    assert D.module.dims == projective_module(A.opposite(), 1).dims
    assert star_dual(simple_module(A, 0)).module.is_zero()


def test_projectives_are_reflexive(a3_radical_square_zero):
    A = a3_radical_square_zero
    for i in range(3):
        P = projective_module(A, i)
        assert eta(P).is_isomorphism()
        assert is_reflexive(P)
    S1 = simple_module(A, 0)
    assert not is_reflexive(S1)
    assert not is_syzygy_module(S1)
    # S(2) is the socle of P(1), so it embeds in a projective
    assert is_syzygy_module(simple_module(A, 1))


def test_transpose_of_a_simple(a3_radical_square_zero):
    A = a3_radical_square_zero
    tr = transpose(simple_module(A, 0))
    assert tr.module.algebra is A.opposite()
    assert tr.module.dims == (0, 1, 0)
    assert (tr.presentation.row_vertices, tr.presentation.col_vertices) == ((1,), (0,))


def test_transpose_of_a_projective_is_zero(a3_radical_square_zero):
    A = a3_radical_square_zero
    assert transpose(projective_module(A, 0)).module.is_zero()


def test_torsion_freeness(a3_radical_square_zero):
    A = a3_radical_square_zero
    assert is_k_torsion_free(projective_module(A, 0), 2)
    result = is_k_torsion_free(simple_module(A, 0), 1)
    assert not result
    assert result.ext[1] != 0
    with pytest.raises(ValueError):
        is_k_torsion_free(simple_module(A, 0), 0)


def test_double_dual_sequence_of_a_simple(a3_radical_square_zero):
    A = a3_radical_square_zero
    seq = double_dual_sequence(simple_module(A, 0))
    assert seq.e1.dims == (1, 0, 0)
    assert seq.e2.is_zero()
    assert seq.is_exact()
    assert seq.matches_ext()
    assert seq.euler == 0


def test_double_dual_sequence_of_a_file_module():
    parsed = load_corpus("auslander_kx2").parse()
    seq = double_dual_sequence(parsed.modules["M"])
    assert seq.is_exact() and seq.matches_ext()


def test_spherical_modules(a3_radical_square_zero):
    A = a3_radical_square_zero
    assert is_m_spherical(simple_module(A, 1), 1)
    assert not is_m_spherical(simple_module(A, 0), 1)
    assert is_m_spherical(simple_module(A, 0), 2)


def test_cokernels_on_both_sides(path_b):
    assert m_r(path_b).dims == (0, 1, 0)
    assert m_l(path_b).algebra is path_b.algebra.opposite()
    assert m_l(path_b).dims == (0, 0, 1)


def test_mono_and_epi(path_b, path_a):
    assert is_mono_in_proj(path_b)
    assert not is_epi_in_proj(path_b)
    assert not is_mono_in_proj(path_a)
    assert is_epi_in_proj(path_a)


def test_n_cokernel_of_a_mono(path_b, path_a):
    seq = n_cokernel(path_b, 1)
    assert len(seq) == 1
    assert seq.morphisms[0] == path_a
    full = seq.prepend(path_b)
    assert check_sequence(full, SequenceMode.N_EXACT, 1)
    assert check_sequence(full, SequenceMode.PRE_COSEGMENT)
    assert splitting_tests(full) == (False, False)
    assert not splits(full)


def test_n_kernel_of_an_epi(path_b, path_a):
    seq = n_kernel(path_a, 1)
    assert seq.morphisms == (path_b,)
    assert check_sequence(SequenceOfProjectives((path_b, path_a)), SequenceMode.PRE_SEGMENT)


def test_n_cokernel_pads_with_zero_objects(path_b):
    seq = n_cokernel(path_b, 3)
    assert len(seq) == 3
    assert seq.objects[-1] == ()
    assert check_sequence(seq.prepend(path_b), SequenceMode.PRE_COSEGMENT)


def test_sequence_validation(path_b, path_a):
    with pytest.raises(NotComposableError):
        SequenceOfProjectives((path_a, path_b))
    with pytest.raises(PreconditionError):
        SequenceOfProjectives(())
    with pytest.raises(PreconditionError):
        check_sequence(SequenceOfProjectives((path_b, path_a)), SequenceMode.N_EXACT, 2)


def test_trivial_sequences_split(a3_radical_square_zero):
    A = a3_radical_square_zero
    for position in (1, 2, 3):
        seq = trivial_n_exact(A, (0, 1), 2, position)
        assert len(seq) == 3
        assert check_sequence(seq, SequenceMode.N_EXACT, 2)
        assert splits(seq)
    with pytest.raises(ValueError):
        trivial_n_exact(A, (0,), 1, 3)


def test_splits_needs_an_exact_sequence(path_a, a3_radical_square_zero):
    A = a3_radical_square_zero
    seq = SequenceOfProjectives((path_a, ProjMatrix.zero(A, (0,), ())))
    with pytest.raises(PreconditionError):
        splits(seq)


def test_n_abelian_condition(a3_radical_square_zero, corpus_algebra):
    A = a3_radical_square_zero
    check = is_n_abelian(A, 1)
    assert check
    assert check.gldim == 2
    # domdim is only computed up to n + 1
    assert check.domdim is Bound.AT_LEAST_CAP
    assert not is_n_abelian(A, 2)
    assert is_von_neumann_regular(corpus_algebra("semisimple3"))
    assert not is_von_neumann_regular(A)


def test_detect_n(a3_radical_square_zero, a2, corpus_algebra):
    verdict = detect_n(a3_radical_square_zero)
    assert verdict.kind is VerdictKind.EXACTLY_N
    assert verdict.n == 1
    assert verdict.label == "ExactlyN(1)"
    assert verdict.claims(1) and not verdict.claims(2)
    assert verdict.is_consistent()

    semisimple = detect_n(corpus_algebra("semisimple3"))
    assert semisimple.kind is VerdictKind.ALL_N
    assert semisimple.claims(5)

    hereditary = detect_n(a2, cap=6)
    assert hereditary.label == "NotNAbelianUpTo(6)"
    assert not hereditary.claims(1)
    assert hereditary.is_consistent()
    with pytest.raises(ValueError):
        detect_n(a2, cap=1)


def test_hereditary_a2_is_not_n_abelian_up_to_ten(a2):
    verdict = detect_n(a2, cap=11)
    assert verdict.label == "NotNAbelianUpTo(11)"
    assert (verdict.evidence.gldim, verdict.evidence.domdim) == (1, 1)
    assert verdict.is_consistent()
    assert not any(is_n_abelian(a2, n) for n in range(1, 11))


def test_verdict_json(a3_radical_square_zero):
    data = detect_n(a3_radical_square_zero).to_json()
    assert data["result"] == "ExactlyN(1)"
    assert data["evidence"]["gldim"] == 2
    assert data["evidence"]["domdim"] == 2


def test_cross_check_on_an_abelian_case(a3_radical_square_zero):
    report = cross_check(a3_radical_square_zero, 1, seed=5, samples=4, pair_samples=2)
    names = [c.name for c in report.checks]
    assert names[:2] == ["r2", "r2op"]
    assert "verdict_consistency" in names
    assert not report.fatal
    by_name = {c.name: c for c in report.checks}
    assert by_name["grade_profile"].status is CheckStatus.PASS
    assert by_name["splitting"].status is CheckStatus.PASS


def test_cross_check_finds_the_hereditary_witness(a2):
    report = cross_check(a2, 1, seed=1, samples=3, pair_samples=2)
    r2 = report.checks[0]
    assert r2.name == "r2"
    assert r2.status is CheckStatus.FAIL
    assert r2.witness == "S(1)"
    assert report.failed
    assert not report.fatal
    skipped = {c.name for c in report.checks if c.status is CheckStatus.SKIP}
    assert {"grade_profile", "higher_splitting", "transpose_pdim"} <= skipped


def test_cross_check_is_deterministic(a3_radical_square_zero):
    first = cross_check(a3_radical_square_zero, 1, seed=9, samples=3, pair_samples=2).to_json()
    second = cross_check(a3_radical_square_zero, 1, seed=9, samples=3, pair_samples=2).to_json()
    assert first == second


def test_direct_sum_of_sequences(a3_radical_square_zero):
    A = a3_radical_square_zero
    seq = trivial_n_exact(A, (0,), 1, 1).direct_sum(trivial_n_exact(A, (2,), 1, 2))
    assert seq.objects == [(2,), (0, 2), (0,)]
    assert check_sequence(seq, SequenceMode.N_EXACT, 1)
    assert splits(seq)
    with pytest.raises(PreconditionError):
        seq.direct_sum(trivial_n_exact(A, (0,), 2, 1))


def test_monos_reach_the_requested_count(a3_radical_square_zero, corpus_algebra):
    semisimple = corpus_algebra("semisimple3")
    for A in (a3_radical_square_zero, semisimple):
        monos = _random_monos(A, 3, 40, 2)
        assert len(monos) == 40
        assert all(is_mono_in_proj(f) for _, f in monos)
    # no arrows and no random tries leave nothing to combine
    assert _random_monos(semisimple, 3, 5, 2, attempts=0) == []


def test_sampled_status():
    assert _sampled_status(True, True, 5, 5) is CheckStatus.PASS
    assert _sampled_status(True, True, 4, 5) is CheckStatus.SKIP
    assert _sampled_status(False, False, 1, 5) is CheckStatus.FAIL
    assert _sampled_status(False, True, 1, 5) is CheckStatus.FATAL


def test_cross_check_reaches_its_sample_targets(a3_radical_square_zero):
    report = cross_check(a3_radical_square_zero, 1, seed=3, samples=12, pair_samples=10)
    by_name = {c.name: c for c in report.checks}
    for name in ("r2", "r2op"):
        assert by_name[name].status is CheckStatus.PASS
        assert by_name[name].detail["cokernels"] == 12
    splitting = by_name["splitting"]
    assert splitting.status is CheckStatus.PASS
    assert splitting.samples >= 10
    # the arrow b is a radical mono, so its sequence cannot split
    assert splitting.detail["non_split"] >= 1
    higher = by_name["higher_splitting"]
    assert higher.samples > 0
    assert higher.status is CheckStatus.PASS


def test_everything_splits_over_a_semisimple_algebra(corpus_algebra):
    report = cross_check(corpus_algebra("semisimple3"), 1, seed=2, samples=6, pair_samples=6)
    splitting = {c.name: c for c in report.checks}["splitting"]
    assert splitting.status is CheckStatus.PASS
    assert splitting.samples >= 6
    assert splitting.detail["non_split"] == 0


@pytest.mark.slow
@pytest.mark.parametrize("name", ["auslander_kx2", "aus2_a2"])
def test_default_sample_targets_on_the_corpus(name, corpus_algebra):
    A = corpus_algebra(name)
    verdict = detect_n(A)
    report = cross_check(A, verdict.n, seed=42, verdict=verdict)
    by_name = {c.name: c for c in report.checks}
    for tag in ("r2", "r2op"):
        assert by_name[tag].status is CheckStatus.PASS
        assert by_name[tag].detail["cokernels"] >= 200
    assert by_name["splitting"].status is CheckStatus.PASS
    assert by_name["splitting"].samples >= 100
    if name == "auslander_kx2":
        assert by_name["splitting"].detail["non_split"] >= 1
    assert not report.fatal
