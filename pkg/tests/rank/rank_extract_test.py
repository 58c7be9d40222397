"""
Tests for rank extractors and the seeded rank family
"""

from fractions import Fraction
from itertools import product

import pytest
import algext
from algext.corpus import load_entry
from algext.finite_field import make_field
from algext.rank_extract import (DklExtractor, build_regular_matrix,
                                 build_seeded_family, certify_regular,
                                 choose_degrees, dkl_map,
                                 enumerate_subspaces, fiber_finiteness_check,
                                 subspace_rank_survey, variety_rank_survey)


def test_distinct_primes():
    """Checks that the n smallest primes above d are chosen
    """
    assert choose_degrees(3, 2).degrees == (3, 5, 7)
    assert choose_degrees(2, 10).degrees == (11, 13)


def test_prime_powers():
    """Checks the least powers above d of the first n primes
    """
    degrees = choose_degrees(3, 2, "prime_powers")
    assert degrees.degrees == (4, 3, 5)
    assert degrees.strategy == "prime_powers"


def test_vandermonde(f7):
    """Checks that a 2 x 3 Vandermonde matrix over F_7 is 2-regular
    """
    matrix = build_regular_matrix(2, 3, 2, f7)
    assert matrix.rows == ((1, 1, 1), (1, 2, 3))
    assert matrix.certified_k == 2
    assert matrix.certificate == "exhaustive"
    assert matrix.shape == (2, 3)


def test_certify_regular(f7):
    """Checks that repeated columns break regularity
    """
    assert certify_regular([[1, 1], [2, 2]], f7, 2) == (False, "exhaustive")
    assert certify_regular([[1, 1], [2, 2]], f7, 1) == (True, "exhaustive")
    assert certify_regular([[1, 1], [2, 2]], f7, 0) == (True, "exhaustive")


def test_sampled_certificate(f101):
    """Checks that large column counts fall back to sampled subsets
    """
    rows = build_regular_matrix(2, 40, 2, f101).rows
    holds, mode = certify_regular(rows, f101, 2, rng_seed=1, exhaustive_limit=10,
                                  samples=50)
    assert holds
    assert mode == "sampled"


def test_drop_one(f7):
    """Checks the (n - 1) x n matrix with a -1 column
    """
    matrix = build_regular_matrix(2, 3, 2, f7, "drop_one")
    assert matrix.rows == ((1, 0, 6), (0, 1, 6))
    assert matrix.certified_k == 2


def test_field_too_small(f7):
    """Checks that 7 Vandermonde nodes do not fit in F_7
    """
    with pytest.raises(algext.errors.FieldTooSmall) as excinfo:
        build_regular_matrix(2, 7, 2, f7)
    assert excinfo.value.args[1] == 402


def test_shape_mismatch(f7):
    """Checks that a non-square identity raises ShapeMismatch
    """
    with pytest.raises(algext.errors.ShapeMismatch) as excinfo:
        build_regular_matrix(2, 3, 2, f7, "identity")
    assert excinfo.value.args[1] == 403


def test_degree_count_mismatch(f7):
    """Checks that the degree list must match the matrix width
    """
    matrix = build_regular_matrix(1, 3, 1, f7, "all_ones")
    with pytest.raises(algext.errors.DegreeCountMismatch) as excinfo:
        DklExtractor(choose_degrees(2, 2), matrix)
    assert excinfo.value.args[1] == 401


def test_dkl_evaluate(f7):
    """Checks phi(a, b) = a^3 + b^5 over F_7
    """
    ext = dkl_map(choose_degrees(2, 2), build_regular_matrix(1, 2, 1, f7, "all_ones"))
    assert ext.evaluate([2, 3]) == (6,)
    assert ext.row_degrees == (5,)
    assert ext.map.evaluate([2, 3], f7) == (6,)


def test_dkl_over_extension_field(f9):
    """Checks that the polynomial form of a DKL map over F_9 agrees with direct evaluation
    """
    ext = dkl_map(choose_degrees(3, 2), build_regular_matrix(2, 3, 2, f9))
    assert ext.matrix.rows == ((1, 1, 1), (1, 2, 3))
    assert all(c.ctx == f9 for c in ext.map.components)
    assert ext.map.components[1].terms == {(0, 0, 7): 3, (0, 5, 0): 2, (3, 0, 0): 1}
    for point in product(range(9), repeat=3):
        assert ext.map.evaluate(point, f9) == ext.evaluate(point)


def test_fiber_finiteness(f101, parabola):
    """Checks fibers of X1^3 + X2^5 on the parabola against deg V * 5
    """
    ext = dkl_map(choose_degrees(2, 2), build_regular_matrix(1, 2, 1, f101))
    result = fiber_finiteness_check(ext, parabola.variety, f101)
    assert result["bezout_cap"] == 10
    assert result["max_fiber_size"] <= 10
    assert result["mode"] == "exact"
    assert result["pass"]
    sampled = fiber_finiteness_check(ext, parabola.variety, f101, sample_targets=[[0], [1]])
    assert sampled["fibers"] == 2
    assert sampled["mode"] == "sampled"


def test_seeded_family(f7):
    """Checks omega and the seeds of the family
    """
    fam = build_seeded_family(3, 1, f7, 6)
    assert fam.omega == 2
    assert fam.seeds == (1, 2, 3, 4, 5, 6)
    assert fam.matrices[1] == ((1, 2, 4),)
    assert fam.apply(1, [1, 1, 1]) == (0,)


def test_subspace_survey(f7):
    """Checks that no seed loses the coordinate line
    """
    fam = build_seeded_family(3, 1, f7, 6)
    result = subspace_rank_survey(fam, [[1, 0, 0]])
    assert result["fail_fraction"] == 0
    assert result["bound"] == Fraction(1, 3)
    assert result["pass"]


def test_subspace_survey_failures(f7):
    """Checks that a coordinate plane stays within the failure bound
    """
    fam = build_seeded_family(3, 1, f7, 6)
    result = subspace_rank_survey(fam, [[0, 1, 0], [0, 0, 1]])
    assert result["fail_fraction"] <= result["bound"]


def test_rank_deficient_basis(f7):
    """Checks that a dependent basis raises RankDeficientInput
    """
    fam = build_seeded_family(3, 1, f7, 6)
    with pytest.raises(algext.errors.RankDeficientInput) as excinfo:
        subspace_rank_survey(fam, [[1, 0, 0], [2, 0, 0]])
    assert excinfo.value.args[1] == 404


def test_enumerate_subspaces(f7):
    """Checks the Gaussian binomial counts of subspaces
    """
    assert len(list(enumerate_subspaces(2, 1, make_field(3)))) == 4
    assert len(list(enumerate_subspaces(3, 2, make_field(2)))) == 7
    assert len(list(enumerate_subspaces(3, 1, f7))) == 57


def test_variety_survey_needs_irreducible(f7):
    """Checks that the union of the axes is refused
    """
    fam = build_seeded_family(2, 1, f7, 6)
    with pytest.raises(algext.errors.BoundViolation) as excinfo:
        variety_rank_survey(fam, load_entry("axes_union").variety, f7)
    assert excinfo.value.args[1] == 502


def test_variety_survey(f7, parabola):
    """Checks that a line-sized image is found for the parabola
    """
    fam = build_seeded_family(2, 1, f7, 6)
    result = variety_rank_survey(fam, parabola.variety, f7, max_ext=2)
    assert len(result["dims"]) == 6
    assert result["label"] == "HEURISTIC"
    assert result["pass"]
