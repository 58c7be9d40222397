"""
Tests for polynomials, varieties and algebraic sources
"""

import pytest
import algext
from algext.finite_field import make_field
from algext.variety_lab import (HEURISTIC, AlgebraicSourceSpec, FieldTower,
                                MultiPoly, PolynomialMap, VarietySpec,
                                build_source, character_sum_survey,
                                degree_budget, enumerate_points,
                                estimate_dimension, eval_poly, fiber_points,
                                point_count_bounds)


def no_roots_variety():
    """X1^2 + 1 in A^1, empty over F_7.
    """
    return VarietySpec(1, [MultiPoly(1, [(1, [2]), (1, [0])])], declared_dim=0,
                       name="no_roots")


def test_terms_merge():
    """Checks that equal exponents merge and zero terms vanish
    """
    poly = MultiPoly(2, [(1, [1, 0]), (2, [1, 0]), (0, [0, 3])])
    assert poly.terms == {(1, 0): 3}
    assert poly.degree == 1
    assert MultiPoly(2).is_zero()
    assert MultiPoly(2).degree == float("-inf")


def test_poly_arithmetic():
    """Checks sum and product of polynomials
    """
    x = MultiPoly.variable(2, 0)
    y = MultiPoly.variable(2, 1)
    square = (x + y) * (x + y)
    assert square.terms == {(0, 2): 1, (1, 1): 2, (2, 0): 1}
    assert square.degree == 2


def test_eval_poly(f101, parabola):
    """Checks that (3, 9) lies on the parabola
    """
    generator = parabola.variety.generators[0]
    assert eval_poly(generator, [3, 9], f101) == 0
    assert eval_poly(generator, [f101.element(3), f101.element(10)]).value == 1


def test_arity_mismatch():
    """Checks that a wrong exponent vector raises ArityMismatch
    """
    with pytest.raises(algext.errors.ArityMismatch) as excinfo:
        MultiPoly(2, [(1, [1])])
    assert excinfo.value.args[1] == 301


def test_parametrized_points(f7, parabola):
    """Checks that the parametrization yields the 7 points (t, t^2)
    """
    points = enumerate_points(parabola.variety, f7)
    assert points == sorted((t, t * t % 7) for t in range(7))


def test_scanned_points(f7, f101, circle):
    """Checks circle point counts: q + 1 for q = 3 mod 4, q - 1 for q = 1 mod 4
    """
    assert len(enumerate_points(circle.variety, f7)) == 8
    assert len(enumerate_points(circle.variety, f101)) == 100
    assert (0, 1) in enumerate_points(circle.variety, f7)


def test_sharded_scan(f101, circle):
    """Checks that a sharded scan returns the same points
    """
    assert enumerate_points(circle.variety, f101, shards=3) == \
        enumerate_points(circle.variety, f101)


def test_extension_field_points(circle):
    """Checks the circle over F_9, where -1 is a square
    """
    assert len(enumerate_points(circle.variety, make_field(3, 2))) == 8


def test_build_source(f7, parabola):
    """Checks the image of the parabola under X1 + X2 over F_7
    """
    source = build_source(parabola.source_spec(), f7)
    assert source.counts == {(0,): 2, (2,): 2, (6,): 2, (5,): 1}
    assert source.total == 7


def test_empty_variety(f7):
    """Checks that a variety without points raises EmptyVariety
    """
    variety = no_roots_variety()
    spec = AlgebraicSourceSpec(variety, PolynomialMap(1, [MultiPoly.variable(1, 0)]), 1, 1, 2)
    with pytest.raises(algext.errors.EmptyVariety) as excinfo:
        build_source(spec, f7)
    assert excinfo.value.args[1] == 302


def test_all_counts_zero():
    """Checks that a dimension estimate without points raises AllCountsZero
    """
    with pytest.raises(algext.errors.AllCountsZero) as excinfo:
        estimate_dimension(no_roots_variety(), 7, max_ext=1)
    assert excinfo.value.args[1] == 303


def test_enumeration_budget(f101, circle):
    """Checks that a scan above the budget raises BudgetExceeded
    """
    with pytest.raises(algext.errors.BudgetExceeded) as excinfo:
        enumerate_points(circle.variety, f101, budget=100)
    assert excinfo.value.args[1] == 203


def test_degree_budget(parabola):
    """Checks deg V * deg h against d
    """
    budget = degree_budget(parabola.source_spec())
    assert budget["bezout_deg_V"] == 2
    assert budget["product_of_top_k_h_degrees"] == 1
    assert budget["d_satisfied"]
    with pytest.raises(algext.errors.BoundViolation) as excinfo:
        AlgebraicSourceSpec(parabola.variety, parabola.map, 1, 1, 1)
    assert excinfo.value.args[1] == 502


def test_dimension_estimate(circle):
    """Checks that the circle is estimated as a curve
    """
    estimate = estimate_dimension(circle.variety, 7, max_ext=2)
    assert estimate["counts"] == [8, 48]
    assert estimate["dim_estimate"] == 1
    assert estimate["label"] == HEURISTIC


def test_field_tower(f4):
    """Checks that the embedding of F_4 into F_16 sends X to a root of the modulus
    """
    tower = FieldTower(f4, 2)
    root = tower.embed(2)
    ctx = tower.ctx
    assert ctx.q == 16
    assert ctx.add(ctx.add(ctx.mul(root, root), root), 1) == 0
    assert tower.embed(1) == 1


def test_fiber_points(f7, parabola):
    """Checks the fiber of X1 + X2 over 2 on the parabola
    """
    assert fiber_points(parabola.map, parabola.variety, [2], f7) == [(1, 1), (5, 4)]


def test_character_sums(f101, parabola):
    """Checks that X1 is equidistributed on the parabola
    """
    result = character_sum_survey(parabola.variety, MultiPoly.variable(2, 0), f101)
    assert result["points"] == 101
    assert result["violators"] == 0
    assert result["max_abs_sum"] == pytest.approx(0.0, abs=1e-6)
    assert result["pass"]


def test_point_count_bounds(parabola):
    """Checks the upper bound and, for large q, the lower bound
    """
    small = point_count_bounds(parabola.variety, make_field(101))
    assert small["count"] == 101
    assert small["upper"] == 202
    assert small["lower"] is None
    large = point_count_bounds(parabola.variety, make_field(1009))
    assert large["lower"] == pytest.approx(504.5)
    assert large["pass"]


def test_span_basis():
    """Checks that a span basis must reproduce the components
    """
    x = MultiPoly.variable(1, 0)
    square = MultiPoly.variable(1, 0, 2)
    poly_map = PolynomialMap(1, [square + x], [square, x], [[1, 1, 0]])
    assert poly_map.h_degrees() == [2, 1]
    with pytest.raises(algext.errors.BoundViolation):
        PolynomialMap(1, [square], [square, x], [[1, 1, 0]])


def test_map_to_json(parabola):
    """Checks that maps keep their components through JSON
    """
    data = parabola.map.to_json()
    assert PolynomialMap.from_json(data).components == parabola.map.components


def test_extension_field_merge(f9):
    """Checks that coefficients over F_9 merge with field addition
    """
    poly = MultiPoly(1, [(4, [1]), (2, [1])], f9)
    assert poly.terms == {(1,): f9.add(4, 2)}
    assert poly.terms == {(1,): 3}
    assert eval_poly(poly, [1]).value == 3
    assert eval_poly(poly, [f9.element(1)]).value == 3


def test_characteristic_two_merge(f4):
    """Checks that X + X vanishes over F_4
    """
    poly = MultiPoly(1, [(2, [1]), (2, [1])], f4)
    assert poly.is_zero()
    assert poly.degree == float("-inf")


def test_prime_field_merge():
    """Checks that 3x + 2x is zero over F_5 but not over the integers
    """
    f5 = make_field(5)
    assert MultiPoly(1, [(3, [1]), (2, [1])], f5).is_zero()
    unbound = MultiPoly(1, [(3, [1]), (2, [1])])
    assert unbound.terms == {(1,): 5}
    assert unbound.bind(f5).is_zero()


def test_extension_field_product(f9):
    """Checks (X x)^2 = -x^2 over F_9 = F_3[X] / (X^2 + 1)
    """
    x = MultiPoly.variable(1, 0, coeff=3, ctx=f9)
    square = x * x
    assert square.terms == {(2,): 2}
    assert square.ctx == f9
    assert x.scale(3).terms == {(1,): 2}


def test_bind_unbound_coefficients(f9):
    """Checks that unbound coefficients c stand for c·1
    """
    unbound = MultiPoly(1, [(4, [1]), (-1, [0])])
    bound = unbound.bind(f9)
    assert bound.terms == {(0,): 2, (1,): 1}
    assert bound.bind(f9) is bound
    assert eval_poly(unbound, [3], f9) == eval_poly(bound, [3])
    with pytest.raises(algext.errors.CtxMismatch) as excinfo:
        bound.bind(make_field(3, 2, [2, 2, 1]))
    assert excinfo.value.args[1] == 105


def test_mixed_arithmetic_binds(f9):
    """Checks that an unbound operand takes the field of the other one
    """
    total = MultiPoly.constant(1, 1) + MultiPoly.variable(1, 0, coeff=3, ctx=f9)
    assert total.ctx == f9
    assert total.terms == {(0,): 1, (1,): 3}


def test_extension_field_span(f9):
    """Checks that a span basis over F_9 is rebuilt with field products
    """
    basis = MultiPoly.variable(1, 0, 2, coeff=3, ctx=f9)
    component = MultiPoly(1, [(2, [2]), (1, [0])], f9)
    poly_map = PolynomialMap(1, [component], [basis], [[3, 1]])
    assert poly_map.h_degrees() == [2]
    with pytest.raises(algext.errors.BoundViolation):
        PolynomialMap(1, [component], [basis], [[1, 1]])


def test_tower_embeds_bound_polynomial(f4):
    """Checks that X x + 1 keeps its root X + 1 when moved into F_16
    """
    poly = MultiPoly(1, [(2, [1]), (1, [0])], f4)
    assert eval_poly(poly, [3]).value == 0
    tower = FieldTower(f4, 2)
    embedded = poly.embed(tower)
    assert embedded.ctx == tower.ctx
    assert eval_poly(embedded, [tower.embed(3)]).value == 0
    with pytest.raises(algext.errors.CtxMismatch):
        eval_poly(poly, [tower.embed(3)], tower.ctx)


def test_bound_poly_to_json(f9):
    """Checks that a bound polynomial keeps its field through JSON
    """
    poly = MultiPoly(2, [(3, [1, 0]), (5, [0, 2])], f9)
    data = poly.to_json()
    assert data["field"] == "3^2/1,0,1"
    assert MultiPoly.from_json(data) == poly
    assert "field" not in MultiPoly.variable(2, 0).to_json()
