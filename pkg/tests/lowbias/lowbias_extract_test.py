"""
Tests for rank-metric codes, the bilinear extractor and the mod-M extractor
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
import algext
from algext.lowbias_extract import (BilinearExtractor, GabidulinParams,
                                    ModMExtractor, bilinear_extract,
                                    build_constant_fraction_extractor,
                                    build_dense_affine_extractor,
                                    build_strongly_biased_extractor,
                                    constant_fraction_headroom,
                                    constant_fraction_shape,
                                    extraction_error_bound,
                                    fourier_norm_check, gabidulin_matrices,
                                    min_rank_survey, mod_m_error_bound,
                                    mod_m_extract, mod_m_uniform_distance)


def test_params_bounds():
    """Checks that r > s raises BoundViolation
    """
    with pytest.raises(algext.errors.BoundViolation) as excinfo:
        GabidulinParams(2, 2, 3, 2, 1)
    assert excinfo.value.args[1] == 502
    with pytest.raises(algext.errors.BoundViolation):
        GabidulinParams(2, 1, 2, 2, 3)


def test_dependent_basis():
    """Checks that a repeated evaluation point raises BasisDependent
    """
    with pytest.raises(algext.errors.BasisDependent) as excinfo:
        GabidulinParams(2, 1, 2, 3, 3, basis=[1, 1])
    assert excinfo.value.args[1] == 501


def test_matrix_shapes():
    """Checks that M_u lives in F_p^{s x r}
    """
    params = GabidulinParams(3, 2, 2, 3, 4)
    matrices = gabidulin_matrices(params)
    assert len(matrices) == 4
    assert all(m.shape == (3, 2) for m in matrices)
    assert params.rank_bound == 1


def test_min_rank():
    """Checks that every nonzero combination has rank at least r - k + 1
    """
    params = GabidulinParams(2, 1, 2, 2, 2)
    result = min_rank_survey(gabidulin_matrices(params), 2, params.rank_bound)
    assert result["min_rank"] == 2
    assert result["combinations"] == 3
    assert result["mode"] == "exhaustive"
    assert result["pass"]


def test_sampled_min_rank():
    """Checks the sampled survey above the exhaustive limit
    """
    params = GabidulinParams(2, 2, 3, 4, 8)
    result = min_rank_survey(gabidulin_matrices(params), 2, params.rank_bound,
                             rng_seed=5, exhaustive_limit=16, samples=200)
    assert result["mode"] == "sampled(200)"
    assert result["min_rank"] >= params.rank_bound


def test_fourier_norms():
    """Checks the L1 and L-infinity norms of a full-rank bilinear form
    """
    ext = BilinearExtractor(GabidulinParams(2, 1, 2, 2, 1))
    result = fourier_norm_check(ext)
    assert result["max_l1"] == pytest.approx(4.0)
    assert result["max_linf"] == pytest.approx(0.25)
    assert result["l1_bound"] == 4.0
    assert result["linf_bound"] == 0.25
    assert result["pass"]


def test_norm_budget():
    """Checks that the norm check honors its budget
    """
    ext = BilinearExtractor(GabidulinParams(2, 1, 2, 2, 1))
    with pytest.raises(algext.errors.BudgetExceeded):
        fourier_norm_check(ext, budget=16)


def test_bilinear_extract():
    """Checks f(x, y) = x^T M y on a known point
    """
    ext = BilinearExtractor(GabidulinParams(2, 1, 2, 2, 2))
    assert bilinear_extract(ext, [0, 0, 1, 1]) == (0, 0)
    assert bilinear_extract(ext, [1, 0, 1, 0]) == (1, 0)
    with pytest.raises(algext.errors.LengthMismatch) as excinfo:
        bilinear_extract(ext, [0, 1])
    assert excinfo.value.args[1] == 503


def test_stored_matrices_must_match():
    """Checks that tampered matrices are refused on reload
    """
    ext = BilinearExtractor(GabidulinParams(2, 1, 2, 2, 1))
    data = ext.to_json()
    data["matrices"][0][0][0] ^= 1
    with pytest.raises(algext.errors.BoundViolation):
        BilinearExtractor.from_json(data)


def test_mod_m():
    """Checks the mod-M extractor and its range checks
    """
    ext = ModMExtractor(10, 2, 3)
    assert mod_m_extract(ext, (4, 7)) == (4, 1)
    with pytest.raises(algext.errors.OutOfRange) as excinfo:
        mod_m_extract(ext, (10, 0))
    assert excinfo.value.args[1] == 504
    with pytest.raises(algext.errors.LengthMismatch):
        mod_m_extract(ext, (1,))
    with pytest.raises(algext.errors.BoundViolation):
        ModMExtractor(10, 1, 11)


def test_mod_m_distance():
    """Checks r0 (M - r0) / (N M)
    """
    assert mod_m_uniform_distance(7, 2) == Fraction(1, 14)
    assert mod_m_uniform_distance(10, 5) == 0
    assert mod_m_uniform_distance(7, 1) == 0
    assert mod_m_error_bound(0, 1024, 1, 4) == pytest.approx(4 / 1024)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 300), st.integers(1, 300))
def test_mod_m_distance_matches_counts(n, m):
    """Checks the closed form against the counted pushforward
    """
    if m > n:
        n, m = m, n
    counts = [0] * m
    for a in range(n):
        counts[a % m] += 1
    counted = sum(abs(Fraction(c, n) - Fraction(1, m)) for c in counts) / 2
    assert mod_m_uniform_distance(n, m) == counted


def test_dense_affine_parameters():
    """Checks r = n // 2 and t = floor(n - 3 - 2 log_p(e / eps))
    """
    ext = build_dense_affine_extractor(12, 2, 4, 0.5)
    assert ext.r == 6
    assert ext.s == 6
    assert ext.t == 3
    assert ext.choices["k"] == 2
    with pytest.raises(algext.errors.ParamsInfeasible) as excinfo:
        build_dense_affine_extractor(3, 2, 1, 0.5)
    assert excinfo.value.args[1] == 505


def test_error_bound():
    """Checks (p^r max_bias + p^-(r-k+1) e) p^(t/2) with zero bias
    """
    ext = build_dense_affine_extractor(12, 2, 4, 0.5)
    assert extraction_error_bound(ext, 0.0, 4) == pytest.approx(2 ** -5 * 4 * 2 ** 1.5)


def test_strongly_biased_strict():
    """Checks that infeasible parameters raise in strict mode
    """
    with pytest.raises(algext.errors.ParamsInfeasible):
        build_strongly_biased_extractor(8, 2, 0.5, 1, 0.5)


def test_strongly_biased():
    """Checks the projection and the inner extractor for a tiny bias
    """
    ext = build_strongly_biased_extractor(16, 2, 2 ** -16, 1, 0.5)
    assert ext.n_prime == 16
    assert ext.t == 9
    assert ext.extract([0] * 16) == (0,) * 9
    assert not ext.violations


def test_constant_fraction_floor():
    """Checks the length floor of the constant-fraction extractor
    """
    with pytest.raises(algext.errors.ParamsInfeasible):
        build_constant_fraction_extractor(6, 2, 1, 1, 0.5)


def test_constant_fraction_relaxed():
    """Checks that relaxed mode records t < 1
    """
    ext = build_constant_fraction_extractor(8, 2, 1, 1, 0.5, relax=True)
    assert ext.r == 2
    assert ext.params.k == 1
    assert ext.t == 1
    assert ext.violations


def test_constant_fraction_shape():
    """Checks r = n / 4, s = n - r and k = r / 2 for n = 16
    """
    assert constant_fraction_shape(16) == (4, 12, 2)
    assert constant_fraction_shape(8) == (2, 6, 1)


def test_constant_fraction_without_headroom():
    """Checks p = 2, n = 16, d = e = 1, eps' = 1/4: headroom 16/8 - 2 log2(4) = -2
    """
    assert constant_fraction_headroom(16, 2, 1, 1, 0.25) == -2
    with pytest.raises(algext.errors.ParamsInfeasible) as excinfo:
        build_constant_fraction_extractor(16, 2, 1, 1, 0.25)
    assert excinfo.value.args[1] == 505
    ext = build_constant_fraction_extractor(16, 2, 1, 1, 0.25, relax=True)
    assert (ext.r, ext.s, ext.params.k) == (4, 12, 2)
    assert ext.t == 1
    assert ext.choices["headroom"] == -2
    assert ext.violations == ["t = -2 with headroom -2, need 1 <= t <= headroom"]


def test_constant_fraction_strict():
    """Checks a feasible instance and an explicit t beyond the headroom
    """
    ext = build_constant_fraction_extractor(8, 2, 1, 1, 1)
    assert ext.t == 1
    assert ext.choices["headroom"] == 1
    assert not ext.violations
    assert ext.declared_error == pytest.approx(0.5 * 2 ** 0.5)
    with pytest.raises(algext.errors.ParamsInfeasible):
        build_constant_fraction_extractor(8, 2, 1, 1, 1, t=2)
    kept = build_constant_fraction_extractor(8, 2, 1, 1, 1, t=2, relax=True)
    assert kept.t == 2
    assert kept.violations
