"""Tests for quivers, Groebner bases and the path algebra."""

import pytest

from nabelian.algebra import (
    Arrow,
    ProjMatrix,
    Quiver,
    Relation,
    build_algebra,
    dual_projmatrix,
    groebner_complete,
    projmatrix_hom_basis,
)
from nabelian.errors import (
    AlgebraMismatchError,
    InadmissibleError,
    NabelianError,
    NotComposableError,
    NotFiniteDimensionalError,
    ShapeError,
    UnknownVertexError,
)
from nabelian.linalg import FieldSpec

Q = FieldSpec.rationals()


def commutative_square():
    quiver = Quiver(
        ("1", "2", "3", "4"),
        (Arrow("a", "1", "2"), Arrow("b", "2", "4"), Arrow("c", "1", "3"), Arrow("d", "3", "4")),
    )
    return build_algebra(Q, quiver, [Relation(((1, ("a", "b")), (-1, ("c", "d"))))], name="square")


def test_quiver_validation():
    with pytest.raises(NabelianError):
        Quiver(("1", "1"))
    with pytest.raises(UnknownVertexError):
        Quiver(("1",), (Arrow("a", "1", "2"),))
    with pytest.raises(NabelianError):
        Quiver(("1", "2"), (Arrow("a", "1", "2"), Arrow("a", "2", "1")))


def test_path_basis_in_deglex_order(a2):
    assert a2.dimension == 3
    assert [a2.format_basis(k) for k in range(a2.dimension)] == ["e_1", "e_2", "a"]
    assert a2.cartan_matrix() == [[1, 1], [0, 1]]


def test_radical_square_zero(a3_radical_square_zero):
    A = a3_radical_square_zero
    assert A.dimension == 5
    assert A.element([(1, ("a", "b"))]) == {}
    assert A.arrow_ideal_powers() == [2]
    assert A.radical_layers() == [3, 2]
    assert A.loewy_length() == 2
    assert A.cartan_matrix() == [[1, 1, 0], [0, 1, 1], [0, 0, 1]]


def test_commutativity_relation_identifies_paths():
    A = commutative_square()
    assert A.dimension == 9
    # c*d is the leading word, so it rewrites to a*b
    assert A.element([(1, ("c", "d"))]) == A.element([(1, ("a", "b"))])
    assert A.format_element(A.element([(2, ("c", "d"))])) == "2*a*b"


def test_groebner_completion_of_a_loop():
    quiver = Quiver(("1",), (Arrow("x", "1", "1"),))
    gb = groebner_complete(Q, quiver, [Relation(((1, ("x", "x", "x")),))])
    assert gb.finite
    assert [len(w) for _, w in gb.irreducible] == [0, 1, 2]


def test_unbounded_loop_is_rejected():
    quiver = Quiver(("1",), (Arrow("x", "1", "1"),))
    with pytest.raises(NotFiniteDimensionalError):
        build_algebra(Q, quiver, [], degree_cap=6)


def test_inadmissible_relations():
    quiver = Quiver(("1", "2", "3"), (Arrow("a", "1", "2"), Arrow("b", "2", "3"), Arrow("c", "1", "3")))
    with pytest.raises(InadmissibleError):
        build_algebra(Q, quiver, [Relation(((1, ("c",)),))])
    with pytest.raises(InadmissibleError):
        build_algebra(Q, quiver, [Relation(((1, ("b", "a")),))])
    with pytest.raises(InadmissibleError):
        build_algebra(Q, quiver, [Relation(((1, ("a", "b")), (1, ("a",))))])


def test_trivial_paths_in_elements(a2):
    assert a2.element([(1, ("e_1",)), (3, ("a",))]) == {0: 1, 2: 3}
    assert a2.multiply(a2.trivial(0), a2.element([(1, ("a",))])) == {2: 1}
    assert a2.multiply(a2.trivial(1), a2.element([(1, ("a",))])) == {}


def test_opposite_is_cached_and_involutive(a2):
    op = a2.opposite()
    assert op.opposite() is a2
    assert op.dimension == a2.dimension
    assert op.quiver.arrow("a") == Arrow("a", "2", "1")
    assert op.cartan_matrix() == [[1, 0], [1, 1]]


def test_projmatrix_entries_must_be_paths(a2):
    a = a2.arrow_basis_index(0)
    f = ProjMatrix(a2, (1,), (0,), (({a: 1},),))
    assert f.shape == (1, 1)
    assert f.is_radical()
    with pytest.raises(ShapeError):
        ProjMatrix(a2, (0,), (1,), (({a: 1},),))


def test_projmatrix_composition(a3_radical_square_zero):
    A = a3_radical_square_zero
    b = ProjMatrix(A, (2,), (1,), ((A.element([(1, ("b",))]),),))
    a = ProjMatrix(A, (1,), (0,), ((A.element([(1, ("a",))]),),))
    assert b.compose(a).is_zero()
    assert ProjMatrix.identity(A, (2,)).compose(b) == b
    with pytest.raises(NotComposableError):
        a.compose(b)


def test_dual_projmatrix_lives_over_the_opposite(a2):
    f = ProjMatrix(a2, (1,), (0,), (({2: 1},),))
    g = dual_projmatrix(f)
    assert g.algebra is a2.opposite()
    assert (g.row_vertices, g.col_vertices) == ((0,), (1,))
    assert dual_projmatrix(g) == f


def test_projmatrix_hom_basis(a3_radical_square_zero):
    A = a3_radical_square_zero
    basis = projmatrix_hom_basis(A, (0, 1), (0, 1))
    # Hom(P1 + P2, P1 + P2): e1, e2 and the arrow a
    assert len(basis) == 3


def test_mixing_algebras_is_an_error(a2, a3_radical_square_zero):
    f = ProjMatrix.identity(a2, (0,))
    g = ProjMatrix.identity(a3_radical_square_zero, (0,))
    with pytest.raises(AlgebraMismatchError):
        f.compose(g)
