"""
Tests for the extractor stack over F_q
"""

from fractions import Fraction

import pytest
import algext
from algext.finite_field import make_field, parse_field_token
from algext.group_fourier import Carrier, FiniteDistribution
from algext.pipeline import (BinarizationExtractor, EmptyExtractor,
                             Ext11Config, ExtN1Config, build_composition,
                             build_ext11, build_extN1, build_full_rank_ext,
                             build_seeded_extractor, element_bits, extract11,
                             leftover_hash_distance, measure_extractor,
                             seeded_extract, select_branch)


@pytest.fixture(scope='module')
def relaxed_ext11(f101):
    """Ext11 for d = 1, eps = 1 over F_101 with the relaxed mod-M rule.
    """
    return build_ext11(f101, 1, 1, relax=True)


def test_select_branch():
    """Checks the large characteristic threshold (d / eps)^4
    """
    assert select_branch(10007, 2, Fraction(1, 8)) == "small_char"
    assert select_branch(70001, 2, Fraction(1, 8)) == "large_char"
    assert select_branch(17, 1, 1) == "large_char"


def test_element_bits(f4):
    """Checks little-endian coefficient bits
    """
    assert element_bits(2, f4) == "01"
    assert element_bits(5, make_field(7)) == "101"
    assert element_bits(6, make_field(7)) == "011"


def test_relaxed_ext11(relaxed_ext11):
    """Checks the relaxed large characteristic branch over F_101
    """
    ext = relaxed_ext11
    assert ext.branch == "large_char"
    assert ext.payload.M == 8
    assert ext.m_out == 3
    assert ext.fold_loss == 0
    assert ext.violations
    assert extract11(ext, 13) == "101"
    assert extract11(ext, 3) == "011"
    assert ext.extract((3,)) == "011"


def test_ext11_strict_infeasible(f101):
    """Checks that the strict mod-M rule has no solution over F_101
    """
    with pytest.raises(algext.errors.ParamsInfeasible) as excinfo:
        build_ext11(f101, 1, 1)
    assert excinfo.value.args[1] == 505


def test_ext11_field_too_small(f101):
    """Checks the field-size floor c0 d^5 / eps^2
    """
    with pytest.raises(algext.errors.FieldTooSmall) as excinfo:
        build_ext11(f101, 2, Fraction(1, 8))
    assert excinfo.value.args[1] == 402


def test_ext11_json(relaxed_ext11):
    """Checks that the stored form rebuilds the same extractor
    """
    data = relaxed_ext11.to_json()
    assert data["kind"] == "ext11"
    assert data["params"]["epsilon"] == "1"
    rebuilt = Ext11Config.from_json(data)
    assert rebuilt.derived() == relaxed_ext11.derived()


def test_ext11_tampered_json(relaxed_ext11):
    """Checks that a stored form with other derived values is refused
    """
    data = relaxed_ext11.to_json()
    data["derived"]["m_out"] = 4
    with pytest.raises(algext.errors.BoundViolation):
        Ext11Config.from_json(data)


def test_measure_exact(f101, relaxed_ext11):
    """Checks that x mod 8 on U_101 is at distance 15/808
    """
    source = FiniteDistribution.uniform(Carrier.field_power(f101))
    result = measure_extractor(relaxed_ext11, source)
    assert result["distance"] == pytest.approx(15 / 808)
    assert result["mode"] == "exact"
    assert result["m_out"] == 3
    assert result["pass"]


def test_measure_monte_carlo(f101, relaxed_ext11):
    """Checks the sampled measurement and its noise floor
    """
    source = FiniteDistribution.uniform(Carrier.field_power(f101))
    result = measure_extractor(relaxed_ext11, source, "monte_carlo", samples=2000,
                               rng_seed=3)
    assert result["mode"] == "monte_carlo(2000)"
    assert result["floor"] > 0
    assert result["pass"]


def test_measure_budget(f101, relaxed_ext11):
    """Checks that exact measurement honors the budget
    """
    source = FiniteDistribution.uniform(Carrier.field_power(f101))
    with pytest.raises(algext.errors.BudgetExceeded):
        measure_extractor(relaxed_ext11, source, budget=50)


def test_ext11_fold_loss_charged():
    """Checks that folding 101 * 8 values onto 2^9 is charged to the declared error
    """
    ext = build_ext11(make_field(101, 2), 1, 1, relax=True)
    assert ext.branch == "large_char"
    assert ext.range_size == 808
    assert ext.m_out == 9
    assert ext.fold_loss == Fraction(999, 6464)
    assert ext.declared_error == pytest.approx(1 + 999 / 6464)
    assert ext.derived()["fold_loss"] == "999/6464"


def test_small_char_fold_loss():
    """Checks the folding loss of a base-7 output over F_7^5
    """
    ext = build_ext11(parse_field_token("7^5"), 2, Fraction(1, 2), relax=True)
    assert ext.branch == "small_char"
    assert ext.fold_loss == Fraction(3, 28)
    assert ext.declared_error == pytest.approx(0.5 + 3 / 28)


def test_extN1(f101):
    """Checks the rank-1 reduction in front of Ext11
    """
    ext = build_extN1(f101, 2, 1, 1, relax=True)
    assert isinstance(ext, ExtN1Config)
    assert ext.dkl.degrees.degrees == (2, 3)
    assert ext.d_prime == 6
    assert len(ext.extract([1, 2])) == ext.m_out
    assert ext.fold_loss == ext.inner.fold_loss
    assert ext.declared_error == pytest.approx(1 + float(ext.inner.fold_loss))
    with pytest.raises(algext.errors.LengthMismatch):
        ext.extract([1])


def test_seeded_extract():
    """Checks a x + b truncated to n_b - delta - 2 log2(1/eps) bits
    """
    cfg = build_seeded_extractor(10, 2, Fraction(1, 4))
    assert cfg.m_out == 4
    assert cfg.seed_length == 20
    assert seeded_extract(cfg, "0" * 10, "0" * 20) == "0000"
    assert seeded_extract(cfg, "1" + "0" * 9, "1" + "0" * 19) == "1000"
    assert seeded_extract(cfg, "0" * 10, "0" * 10 + "01" + "0" * 8) == "0100"


def test_seed_length_mismatch():
    """Checks that a short seed raises SeedLengthMismatch
    """
    cfg = build_seeded_extractor(10, 2, Fraction(1, 4))
    with pytest.raises(algext.errors.SeedLengthMismatch) as excinfo:
        seeded_extract(cfg, "0" * 10, "0" * 19)
    assert excinfo.value.args[1] == 601
    with pytest.raises(algext.errors.LengthMismatch):
        seeded_extract(cfg, "0" * 9, "0" * 20)


def test_leftover_hash():
    """Checks the exact leftover hash distance of a flat 8-bit source
    """
    cfg = build_seeded_extractor(10, 2, Fraction(1, 4))
    result = leftover_hash_distance(cfg, range(256))
    assert result["m_out"] == 4
    assert result["distance"] <= 0.25
    assert result["pass"]
    with pytest.raises(algext.errors.BudgetExceeded):
        leftover_hash_distance(cfg, range(256), budget=1000)


def test_full_rank_base_case(f101):
    """Checks that k = 1 is Ext11 itself
    """
    ext = build_full_rank_ext(f101, 1, 1, 1, relax=True)
    assert isinstance(ext, Ext11Config)


def test_full_rank_relaxed(f101):
    """Checks the recursive extractor on A^2 over F_101
    """
    ext = build_full_rank_ext(f101, 2, 1, 1, relax=True)
    assert ext.ell == 2 * ext.ext1.n_b
    assert ext.ell_used <= ext.ell
    assert ext.violations
    assert len(ext.extract([5, 7])) == ext.m_out
    assert ext.declared_error == pytest.approx(1 + float(ext.ext2.fold_loss))


def test_composition_small_k(f101):
    """Checks that k = 0 is empty and k = 1 is the (n, 1, d) extractor
    """
    empty = build_composition(f101, 2, 0, 1, 1)
    assert isinstance(empty, EmptyExtractor)
    assert empty.extract((1, 2)) == ""
    assert isinstance(build_composition(f101, 2, 1, 1, 1, relax=True), ExtN1Config)


def test_composition_field_too_small(f101):
    """Checks that 2^ell seeds must fit in F_q^*
    """
    with pytest.raises(algext.errors.FieldTooSmall):
        build_composition(f101, 3, 2, 1, Fraction(1, 8), relax=True)


def test_binarization(f7):
    """Checks x mod 4 on F_7 and its folding loss
    """
    ext = BinarizationExtractor(f7)
    assert ext.m_out == 2
    assert ext.extract(6) == "10"
    assert ext.fold_loss == Fraction(3, 28)
