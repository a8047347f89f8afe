import pytest
from hypothesis import given, settings, strategies as st

from algebra.field import FieldSpec
from algebra.polynomial import MonomialOrder, PolynomialRing, frobenius_power_poly, poly_arith
from constants import OrderKinds
from exceptions import ArgumentError, ParseError, RingValidationError, StructuralError
from utils.poly_parser import parse_polynomial, parse_polynomial_list


def test_field_rejects_composite():
    with pytest.raises(RingValidationError, match="p not prime: 6"):
        FieldSpec(6)


def test_field_frobenius_exponent():
    F = FieldSpec(3)
    assert F.frobenius_exponent(1) == 0
    assert F.frobenius_exponent(27) == 3
    assert F.frobenius_exponent(6) is None
    with pytest.raises(ArgumentError, match="q=4 is not a power of p=3"):
        F.require_power(4)


def test_inverse_of_zero():
    with pytest.raises(ArgumentError):
        FieldSpec(5).inverse(0)


def test_coefficients_reduce_mod_p(ring3):
    S = ring3(3)
    f = parse_polynomial("4*x + 3*y - z", S)
    assert str(f) == "x + 2*z"


def test_printing_and_ordering(ring3):
    S = ring3(5)
    f = parse_polynomial("y^2 + 2x*y + 3", S)
    assert str(f) == "2*x*y + y^2 + 3"
    assert str(S.zero()) == "0"


def test_characteristic_two_squares_additively(ring3):
    S = ring3(2)
    x, y, z = S.gens()
    assert (x + y) ** 2 == x**2 + y**2
    assert (x + y + z).frobenius_power(4) == x**4 + y**4 + z**4


def test_frobenius_power_rejects_non_power(ring3):
    S = ring3(3)
    with pytest.raises(ArgumentError):
        S.gen(0).frobenius_power(2)


def test_weighted_degrees(ring3):
    S = ring3(2, [2, 2, 3])
    f = parse_polynomial("z^2 + x^3 + y^3", S)
    assert f.degree() == 6
    assert f.is_quasi_homogeneous()
    g = parse_polynomial("z + x", S)
    assert not g.is_quasi_homogeneous()
    assert g.term_degrees() == [2, 3]


def test_mismatched_rings_raise(ring3):
    with pytest.raises(StructuralError):
        ring3(2).gen(0) + ring3(3).gen(0)


def test_parse_errors_carry_columns(ring3):
    S = ring3(2)
    with pytest.raises(ParseError, match="column 5: unknown variable 'w'"):
        parse_polynomial("x + w", S)
    with pytest.raises(ParseError, match="exponent must be a positive integer"):
        parse_polynomial("x^0", S)
    with pytest.raises(ParseError, match="empty polynomial"):
        parse_polynomial_list("x, , y", S)


def test_parse_list(ring3):
    S = ring3(2)
    gens = parse_polynomial_list("x*y, x*z", S)
    assert [str(g) for g in gens] == ["x*y", "x*z"]


def test_bad_weights():
    with pytest.raises(ArgumentError):
        PolynomialRing(FieldSpec(2), ["x", "y"], [1, 0])
    with pytest.raises(ArgumentError):
        PolynomialRing(FieldSpec(2), ["x", "x"])


def test_elimination_order_block_is_degree_then_lex():
    order = MonomialOrder(OrderKinds.ELIMINATION, (1, 1, 1), 2)
    # total degree of the block first, then lex inside it, then the tail
    assert order.key((0, 2, 0)) > order.key((1, 0, 5))
    assert order.key((1, 1, 0)) > order.key((0, 2, 0))
    assert order.key((1, 0, 1)) > order.key((1, 0, 0))


def test_monomials_of_degree_respects_weights(ring3):
    S = ring3(2, [2, 2, 3])
    assert set(S.monomials_of_degree(3)) == {(0, 0, 1)}
    assert set(S.monomials_of_degree(4)) == {(2, 0, 0), (1, 1, 0), (0, 2, 0)}
    assert S.monomials_of_degree(1) == []


exponents = st.tuples(*(st.integers(0, 3),) * 3)
terms = st.lists(st.tuples(st.integers(0, 4), exponents), max_size=5)


@settings(max_examples=60, derandomize=True, deadline=None)
@given(terms, terms, terms)
def test_ring_axioms(a, b, c):
    S = PolynomialRing(FieldSpec(5), ["x", "y", "z"])
    f, g, h = S.from_terms(a), S.from_terms(b), S.from_terms(c)
    assert (f + g) * h == f * h + g * h
    assert (f * g) * h == f * (g * h)
    assert f - f == S.zero()
    assert f.frobenius_power(5) == f**5


@settings(max_examples=60, derandomize=True, deadline=None)
@given(terms)
def test_printed_polynomials_parse_back(a):
    S = PolynomialRing(FieldSpec(5), ["x", "y", "z"])
    f = S.from_terms(a)
    assert parse_polynomial(str(f), S) == f


def test_poly_arith(ring3):
    S = ring3(5)
    x, y, _ = S.gens()
    assert poly_arith(x + y, x - y, "add") == 2 * x
    assert poly_arith(x + y, S.zero(), "mul").is_zero()
    S2 = ring3(2)
    u, v, _ = S2.gens()
    assert poly_arith(u + v, u + v, "mul") == u**2 + v**2
    with pytest.raises(ArgumentError):
        poly_arith(x, y, "div")
    with pytest.raises(StructuralError):
        poly_arith(x, u, "add")


def test_frobenius_power_poly_coefficients(ring3):
    S = ring3(5)
    x = S.gen(0)
    assert frobenius_power_poly(2 * x, 5) == 2 * x**5
    assert frobenius_power_poly(x + 1, 25) == (x + 1) ** 25
