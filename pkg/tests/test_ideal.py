import pytest
from hypothesis import given, settings, strategies as st

from algebra.field import FieldSpec
from algebra.ideal import (
    IdealHandle,
    colon,
    colon_element,
    colon_maximal_power,
    graded_piece_basis,
    ideal_product,
    ideal_sum,
    intersect,
    krull_dimension,
    maximal_ideal,
    maximal_ideal_power,
    normal_form,
    standard_monomials,
)
from algebra.polynomial import PolynomialRing
from exceptions import ArgumentError, StructuralError
from utils.poly_parser import parse_polynomial_list

terms = st.lists(st.tuples(st.integers(0, 2), st.tuples(*(st.integers(0, 3),) * 3)), max_size=5)


def ideal(S, text):
    return IdealHandle(S, parse_polynomial_list(text, S)) if text else IdealHandle(S)


def test_generators_drop_zero_and_duplicates(ring3):
    S = ring3(2)
    x, y, _ = S.gens()
    I = IdealHandle(S, [x, S.zero(), x, y])
    assert I.generators == (x, y)


def test_membership(ring3):
    S = ring3(3)
    I = ideal(S, "x*y, x*z")
    x, y, z = S.gens()
    assert I.contains(x * y * z + x * z**2)
    assert not I.contains(y * z)
    assert I.contains_ideal(ideal(S, "x^2*y"))


def test_intersection_of_coordinate_ideals(ring3):
    S = ring3(2)
    meet = intersect(ideal(S, "x"), ideal(S, "y"))
    assert meet.same_ideal(ideal(S, "x*y"))


def test_intersection_with_zero(ring3):
    S = ring3(2)
    assert intersect(ideal(S, "x"), IdealHandle(S)).is_zero()


def test_colon_by_element(ring3):
    S = ring3(2)
    I = ideal(S, "x*y, x*z")
    x, y, _ = S.gens()
    assert colon_element(I, x).same_ideal(ideal(S, "y, z"))
    assert colon_element(I, x * y).is_unit()
    with pytest.raises(ArgumentError):
        colon_element(I, S.zero())


def test_colon_by_ideal(ring3):
    S = ring3(5)
    I = ideal(S, "x*y, x*z")
    assert colon(I, ideal(S, "y, z")).same_ideal(ideal(S, "x"))
    with pytest.raises(ArgumentError):
        colon(I, IdealHandle(S))


def test_saturation_by_maximal_ideal(ring3):
    S = ring3(2)
    # embedded point at the origin on the x-axis
    I = ideal(S, "y^2, x*y, y*z, z^2, x*z")
    sat = colon_maximal_power(I, 4)
    assert sat.same_ideal(ideal(S, "y, z"))


def test_maximal_ideal_powers(ring3):
    S = ring3(3)
    m2 = maximal_ideal_power(S, 2)
    assert len(m2.generators) == 6
    assert m2.same_ideal(ideal_product(maximal_ideal(S), maximal_ideal(S)))


def test_krull_dimension(two_planes, ring3):
    assert two_planes.dim == 2
    S = ring3(2)
    assert krull_dimension(IdealHandle(S)) == 3
    assert krull_dimension(ideal(S, "x*y, x*z")) == 2
    assert krull_dimension(ideal(S, "x, y, z")) == 0
    assert krull_dimension(ideal(S, "x + 1")) == -1


def test_standard_monomials_of_artinian_quotient(ring3):
    S = ring3(2)
    I = ideal(S, "x^2, y^2, z^2")
    assert len(standard_monomials(I)) == 8
    with pytest.raises(ArgumentError, match="infinite length"):
        standard_monomials(ideal(S, "x^2, y^2"))


def test_graded_piece_basis(ring3):
    S = ring3(2)
    I = ideal(S, "x*y, x*z")
    piece = graded_piece_basis(I, 2)
    assert set(piece) == {(2, 0, 0), (0, 2, 0), (0, 1, 1), (0, 0, 2)}


def test_sum_across_rings_raises(ring3):
    with pytest.raises(StructuralError):
        ideal_sum(ideal(ring3(2), "x"), ideal(ring3(3), "x"))


@settings(max_examples=40, derandomize=True, deadline=None)
@given(terms, terms)
def test_normal_form_is_linear(a, b):
    S = PolynomialRing(FieldSpec(3), ["x", "y", "z"])
    I = IdealHandle(S, parse_polynomial_list("x^2 - y*z, x*y + z^2", S))
    f, g = S.from_terms(a), S.from_terms(b)
    assert normal_form(f + g, I) == normal_form(normal_form(f, I) + normal_form(g, I), I)
    assert normal_form(normal_form(f, I), I) == normal_form(f, I)


def test_two_planes_as_intersection():
    S = PolynomialRing(FieldSpec(2), ["x", "y", "u", "v"])
    meet = intersect(ideal(S, "x, y"), ideal(S, "u, v"))
    assert meet.same_ideal(ideal(S, "x*u, x*v, y*u, y*v"))


small_exps = st.tuples(*(st.integers(0, 2),) * 3)
binomials = st.lists(st.tuples(st.sampled_from([1, -1]), small_exps), min_size=1, max_size=2)
generator_lists = st.lists(binomials, min_size=1, max_size=3)


def _from_terms(S, gens):
    return IdealHandle(S, [S.from_terms(t) for t in gens])


@settings(max_examples=40, derandomize=True, deadline=None)
@given(generator_lists, binomials)
def test_colon_laws(gens, g_terms):
    S = PolynomialRing(FieldSpec(3), ["x", "y", "z"])
    I = _from_terms(S, gens)
    g = S.from_terms(g_terms)
    assert colon_element(I, S.one()).same_ideal(I)
    assert colon(I, IdealHandle(S, [S.one()])).same_ideal(I)
    if g.is_zero():
        return
    quotient = colon_element(I, g)
    assert quotient.contains_ideal(I)
    assert all(I.contains(g * h) for h in quotient.generators)


@settings(max_examples=40, derandomize=True, deadline=None)
@given(generator_lists, generator_lists)
def test_intersection_laws(a_gens, b_gens):
    S = PolynomialRing(FieldSpec(3), ["x", "y", "z"])
    A, B = _from_terms(S, a_gens), _from_terms(S, b_gens)
    meet = intersect(A, B)
    assert A.contains_ideal(meet)
    assert B.contains_ideal(meet)
    assert intersect(A, A).same_ideal(A)
    product = IdealHandle(S, [f * g for f in A.generators for g in B.generators])
    assert meet.contains_ideal(product)
