"""Tests for representations, module maps and the standard modules."""

import pytest

from nabelian.algebra import ProjMatrix
from nabelian.errors import InvalidModuleError, UnknownVertexError
from nabelian.linalg import ExactMatrix
from nabelian.modules import (
    ModuleMap,
    Representation,
    checked,
    direct_sum,
    hom_basis,
    injective_envelope,
    injective_module,
    is_injective,
    is_isomorphic,
    is_projective,
    k_dual,
    map_cokernel,
    map_kernel,
    map_to_projmatrix,
    projective_cover,
    projective_module,
    projmatrix_to_map,
    random_module,
    simple_module,
    socle,
    top_radical,
    validate,
)


def test_standard_modules(a3_radical_square_zero):
    A = a3_radical_square_zero
    assert [projective_module(A, i).dims for i in range(3)] == [(1, 1, 0), (0, 1, 1), (0, 0, 1)]
    assert [injective_module(A, i).dims for i in range(3)] == [(1, 0, 0), (1, 1, 0), (0, 1, 1)]
    assert simple_module(A, 1).dims == (0, 1, 0)
    assert simple_module(A, 1).name == "S(2)"
    with pytest.raises(UnknownVertexError):
        simple_module(A, 3)


def test_relations_are_checked(a3_radical_square_zero):
    A = a3_radical_square_zero
    one = ExactMatrix.identity(A.field, 1)
    bad = Representation.from_dims(A, [1, 1, 1], {"a": one, "b": one})
    assert validate(bad) is not None
    with pytest.raises(InvalidModuleError):
        checked(bad)
    good = Representation.from_dims(A, [1, 1, 0], {"a": one})
    assert validate(good) is None


def test_hom_dimensions(a3_radical_square_zero):
    A = a3_radical_square_zero
    P1, P2 = projective_module(A, 0), projective_module(A, 1)
    S1 = simple_module(A, 0)
    assert len(hom_basis(P1, S1)) == 1
    assert len(hom_basis(S1, P1)) == 0
    assert len(hom_basis(P2, P1)) == 1
    assert all(f.is_valid() for f in hom_basis(P2, P1))


def test_projective_cover_and_kernel(a3_radical_square_zero):
    A = a3_radical_square_zero
    cover = projective_cover(simple_module(A, 0))
    assert cover.vertices == (0,)
    assert cover.epi.is_surjective()
    K, inclusion = map_kernel(cover.epi)
    assert K.dims == (0, 1, 0)
    assert inclusion.is_injective()


def test_injective_envelope(a3_radical_square_zero):
    A = a3_radical_square_zero
    env = injective_envelope(simple_module(A, 1))
    assert env.vertices == (1,)
    assert env.mono.is_injective()
    assert env.injective.dims == (1, 1, 0)


def test_projectivity_and_injectivity(a3_radical_square_zero):
    A = a3_radical_square_zero
    assert all(is_projective(projective_module(A, i)) for i in range(3))
    assert all(is_injective(injective_module(A, i)) for i in range(3))
    assert not is_projective(simple_module(A, 0))
    assert not is_injective(simple_module(A, 2))


def test_top_radical_socle(a3_radical_square_zero):
    P1 = projective_module(a3_radical_square_zero, 0)
    top, rad, pi = top_radical(P1)
    assert top.dims == (1, 0, 0)
    assert rad.dims == (0, 1, 0)
    assert pi.is_surjective()
    soc, _ = socle(P1)
    assert soc.dims == (0, 1, 0)


def test_k_dual_swaps_sides(a3_radical_square_zero):
    A = a3_radical_square_zero
    D = k_dual(projective_module(A, 0))
    assert D.algebra is A.opposite()
    assert D.dims == (1, 1, 0)
    assert validate(D) is None


def test_projective_sum_of_injective_and_projective_match(a3_radical_square_zero):
    A = a3_radical_square_zero
    assert is_isomorphic(injective_module(A, 1), projective_module(A, 0))
    assert not is_isomorphic(simple_module(A, 0), simple_module(A, 1))


def test_projmatrix_round_trip(a3_radical_square_zero):
    A = a3_radical_square_zero
    b = ProjMatrix(A, (2,), (1,), ((A.element([(1, ("b",))]),),))
    g = projmatrix_to_map(b)
    assert g.is_valid()
    assert g.is_injective()
    assert map_to_projmatrix(g, (2,), (1,)) == b
    Q, _ = map_cokernel(g)
    assert Q.dims == (0, 1, 0)


def test_direct_sum_dimensions(a3_radical_square_zero):
    A = a3_radical_square_zero
    M = direct_sum(projective_module(A, 0), simple_module(A, 2))
    assert M.dims == (1, 1, 1)
    assert validate(M) is None
    assert ModuleMap.identity(M).is_isomorphism()


def test_random_modules_are_seeded_and_valid(a3_radical_square_zero):
    A = a3_radical_square_zero
    M = random_module(A, 7)
    assert M == random_module(A, 7)
    assert validate(M) is None
    with pytest.raises(ValueError):
        random_module(A, 7, max_vertex_dim=0)
