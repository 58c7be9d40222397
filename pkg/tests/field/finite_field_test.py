"""
Tests for finite field arithmetic
"""

import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
import algext
from algext.finite_field import (additive_character, arith, batch_rank_mod_p,
                                 enumerate_field, field_token, galois_field,
                                 gf_array, make_field, matrix_rank,
                                 multiplicative_order, parse_field_token, trace)


def test_prime_field(f7):
    """Checks the basic operations of F_7
    """
    a, b = f7.element(5), f7.element(4)
    assert (a + b).value == 2
    assert (a - b).value == 1
    assert (a * b).value == 6
    assert (a / b) * b == a
    assert (-a).value == 2
    assert (a ** 0).value == 1
    assert f7.element(0) ** 0 == 1


def test_default_modulus(f4, f9):
    """Checks that the default modulus is the smallest irreducible one
    """
    assert f4.modulus == (1, 1, 1)
    assert f9.modulus == (1, 0, 1)
    assert make_field(2, 2) is f4


def test_binary_extension(f4):
    """Checks multiplication and trace in F_4, where X is encoded as 2
    """
    x = f4.element(2)
    assert (x * x).value == 3
    assert (x * x * x).value == 1
    assert [trace(v) for v in enumerate_field(f4)] == [0, 0, 1, 1]


def test_odd_extension(f9):
    """Checks that X^2 = -1 in F_9 = F_3[X] / (X^2 + 1)
    """
    x = f9.element(3)
    assert (x * x).value == 2
    assert x.coeffs == (0, 1)


def test_field_tokens(f4):
    """Checks field tokens in both directions
    """
    assert field_token(f4) == "2^2/1,1,1"
    assert field_token(make_field(101)) == "101"
    assert parse_field_token("2^2") == f4
    assert parse_field_token(" 2^2/1,1,1 ") == f4
    assert parse_field_token("7").q == 7


def test_additive_character(f7):
    """Checks chi_1(1) = exp(2 pi i / 7) and the trivial character
    """
    chi = additive_character(f7.element(1))
    assert cmath.isclose(chi(f7.element(1)), cmath.exp(2j * math.pi / 7))
    trivial = additive_character(f7.element(0))
    assert all(trivial(x) == 1 for x in enumerate_field(f7))


def test_multiplicative_order(f7, f4):
    """Checks orders in F_7 and F_4
    """
    assert multiplicative_order(f7.element(3)) == 6
    assert multiplicative_order(f7.element(2)) == 3
    assert multiplicative_order(f7.element(1)) == 1
    assert multiplicative_order(f4.element(2)) == 3


def test_matrix_rank(f7, f4):
    """Checks the rank of small matrices
    """
    assert matrix_rank([[1, 2], [2, 4]], f7) == 1
    assert matrix_rank([[1, 0], [0, 1]], f7) == 2
    assert matrix_rank([[2, 3], [3, 1]], f4) == 1
    assert matrix_rank([], f7) == 0


def test_arith_dispatch(f7):
    """Checks the named-operation entry point
    """
    a, b = f7.element(3), f7.element(5)
    assert arith(a, b, "add").value == 1
    assert arith(a, None, "pow", 6).value == 1
    assert arith(a, None, "inv").value == 5
    assert arith(a, None, "neg").value == 4


def test_non_prime():
    """Checks that a composite characteristic raises NonPrime
    """
    with pytest.raises(algext.errors.NonPrime) as excinfo:
        make_field(4)
    assert excinfo.value.args[1] == 101


def test_reducible_modulus():
    """Checks that X^2 + 1 is refused over F_2
    """
    with pytest.raises(algext.errors.ReducibleModulus) as excinfo:
        make_field(2, 2, [1, 0, 1])
    assert excinfo.value.args[1] == 102


def test_cardinality_overflow():
    """Checks that 2^65 is refused
    """
    with pytest.raises(algext.errors.CardinalityOverflow) as excinfo:
        make_field(2, 65)
    assert excinfo.value.args[1] == 103


def test_division_by_zero(f7):
    """Checks that inverting zero raises DivisionByZero
    """
    with pytest.raises(algext.errors.DivisionByZero) as excinfo:
        f7.element(1) / f7.element(0)
    assert excinfo.value.args[1] == 104


def test_ctx_mismatch(f7, f101):
    """Checks that mixing fields raises CtxMismatch
    """
    with pytest.raises(algext.errors.CtxMismatch) as excinfo:
        arith(f7.element(1), f101.element(1), "add")
    assert excinfo.value.args[1] == 105


def test_zero_has_no_order(f7):
    """Checks that the order of zero raises ZeroElement
    """
    with pytest.raises(algext.errors.ZeroElement) as excinfo:
        multiplicative_order(f7.element(0))
    assert excinfo.value.args[1] == 106


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 8), st.integers(0, 8), st.integers(0, 8))
def test_field_axioms(a, b, c):
    """Checks associativity and distributivity in F_9
    """
    ctx = make_field(3, 2)
    x, y, z = ctx.element(a), ctx.element(b), ctx.element(c)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert (x + y) - y == x


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 255))
def test_inverse(value):
    """Checks a * a^-1 = 1 in F_256
    """
    ctx = make_field(2, 8)
    x = ctx.element(value)
    assert x * (1 / x) == 1
    assert x ** (ctx.q - 1) == 1


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([(3, 2), (2, 4), (7, 3), (2, 8)]), st.data())
def test_arithmetic_matches_galois(shape, data):
    """Checks sums, products and inverses against galois arrays with the same modulus
    """
    ctx = make_field(*shape)
    GF = galois_field(ctx)
    a = data.draw(st.integers(0, ctx.q - 1))
    b = data.draw(st.integers(1, ctx.q - 1))
    assert ctx.add(a, b) == int(GF(a) + GF(b))
    assert ctx.mul(a, b) == int(GF(a) * GF(b))
    assert ctx.inv(b) == int(GF(b) ** -1)
    assert ctx.coeffs(a)[::-1] == tuple(int(c) for c in GF(a).vector())


def test_gf_array(f9):
    """Checks that encoded values and FieldElements keep their encoding
    """
    array = gf_array([[1, f9.element(3)], [8, -1]], f9)
    assert array.shape == (2, 2)
    assert [[int(v) for v in row] for row in array] == [[1, 3], [8, 2]]


def test_extension_matrix_rank(f9):
    """Checks [[1, X], [X, 2]] over F_9, whose determinant 2 - X^2 vanishes
    """
    assert matrix_rank([[1, 3], [3, 2]], f9) == 1
    assert matrix_rank([[1, 3], [3, 1]], f9) == 2


def test_batch_rank_matches_galois():
    """Checks the stacked elimination against galois matrix ranks over F_5
    """
    rng = np.random.default_rng(7)
    stack = rng.integers(0, 5, size=(40, 3, 4))
    stack[::4, 2] = (stack[::4, 0] + 2 * stack[::4, 1]) % 5
    GF5 = galois_field(make_field(5))
    expected = [int(np.linalg.matrix_rank(GF5(m))) for m in stack]
    assert batch_rank_mod_p(stack, 5).tolist() == expected
    assert min(expected) < 3
