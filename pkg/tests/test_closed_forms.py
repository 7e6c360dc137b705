import math

import numpy as np
import pytest

from trigsum import (
    ClosedFormId,
    DomainError,
    PoleError,
    SeriesKind,
    SeriesSpec,
    abel_sum,
    cos_closed,
    evaluate_closed,
    lambda_series_closed,
    partial_sum,
    quarter_turn_sum,
    reduced_neg_int,
    sin_closed,
    special_value_catalog,
)

GRID = [math.radians(d) for d in range(-179, 180)]
# negative exponents blow up at the half turn; stay one degree away
SAFE_GRID = [phi for phi in GRID if abs(abs(phi) - math.pi) > math.radians(0.9)]


def test_unit_exponent_is_one_plus_cosine():
    for phi in GRID:
        assert cos_closed(1, phi).value == pytest.approx(1.0 + math.cos(phi), abs=1e-14)


def test_zero_exponent_is_one():
    for phi in (0.0, 1.0, -2.7, 3.1):
        assert cos_closed(0, phi).value == 1.0
        assert sin_closed(0, phi).value == 0.0


def test_half_exponent_at_third_turn_matches_catalog():
    entry = next(e for e in special_value_catalog()
                 if e.spec.n == 0.5 and e.spec.phi == math.pi / 3.0)
    assert cos_closed(0.5, math.pi / 3.0).value == pytest.approx(entry.value, rel=1e-14)


def test_sine_closed_basics():
    for phi in (0.0, 1.0, -2.0):
        assert sin_closed(2.5, 0.0).value == 0.0
        assert sin_closed(1, phi).value == pytest.approx(math.sin(phi), abs=1e-14)
    assert sin_closed(3, 0.5 * math.pi).value == pytest.approx(2.0, abs=1e-13)


def test_integer_exponent_valid_on_all_angles():
    # finite rows are periodic; compare against direct summation off the
    # principal interval
    for n in (2, 5):
        for phi in (4.0, -7.5, 9.42):
            direct = partial_sum(SeriesSpec(SeriesKind.COSINE, n, phi), n + 1).value
            assert cos_closed(n, phi).value == pytest.approx(direct, abs=1e-12)


def test_fractional_exponent_domain_errors():
    with pytest.raises(DomainError):
        cos_closed(0.5, math.pi)
    with pytest.raises(DomainError):
        cos_closed(0.5, 3.5)
    with pytest.raises(DomainError):
        sin_closed(1.5, -4.0)
    with pytest.raises(PoleError):
        cos_closed(-0.5, math.pi)


def test_negative_integer_pole_errors():
    with pytest.raises(PoleError):
        cos_closed(-2, math.pi)
    with pytest.raises(PoleError):
        cos_closed(-1, -math.pi)
    with pytest.raises(PoleError):
        reduced_neg_int(3, math.pi)


def test_evaluate_closed_flags_domain_exits():
    bad = evaluate_closed(SeriesKind.COSINE, 0.5, math.pi)
    assert not bad.domain_ok
    assert math.isnan(bad.value)
    good = evaluate_closed(SeriesKind.COSINE, 0.5, 1.0)
    assert good.domain_ok


def test_reduced_forms_match_general_closed_form():
    for m in range(1, 8):
        for phi in SAFE_GRID:
            lhs = reduced_neg_int(m, phi).value
            rhs = cos_closed(-m, phi).value
            assert abs(lhs - rhs) <= 1e-12 * (1.0 + abs(rhs))


def test_reduced_form_special_points():
    assert reduced_neg_int(1, 0.123).value == 0.5
    assert reduced_neg_int(1, 2.9).value == 0.5
    assert reduced_neg_int(2, 0.5 * math.pi).value == pytest.approx(0.0, abs=1e-16)
    # the two published shapes of the m=3 reduction agree, and both vanish
    # at a third of a turn
    assert reduced_neg_int(3, math.pi / 3.0).value == pytest.approx(0.0, abs=1e-15)


def test_reduced_m3_alternate_algebraic_form():
    for phi in SAFE_GRID:
        lhs = reduced_neg_int(3, phi).value
        rhs = (-1.0 + 2.0 * math.cos(phi)) / (4.0 * (1.0 + math.cos(phi)))
        assert abs(lhs - rhs) <= 1e-12 * (1.0 + abs(rhs))


def test_reduced_rejects_out_of_range_m():
    with pytest.raises(ValueError):
        reduced_neg_int(0, 1.0)
    with pytest.raises(ValueError):
        reduced_neg_int(8, 1.0)


def test_quarter_turn_integer_values_are_exact():
    expected = {0: 1.0, 1: 1.0, 2: 0.0, 3: -2.0, 4: -4.0, 5: -4.0, 6: 0.0, 7: 8.0, 8: 16.0}
    for n, v in expected.items():
        assert quarter_turn_sum(n).value == v
    assert quarter_turn_sum(-1).value == 0.5
    assert quarter_turn_sum(-5).value == -0.125


def test_quarter_turn_matches_general_closed_form():
    for n in list(range(-6, 9)) + [0.5, -0.5]:
        qt = quarter_turn_sum(n).value
        general = cos_closed(n, 0.5 * math.pi).value
        assert abs(qt - general) <= 1e-12 * (1.0 + abs(general))
    assert quarter_turn_sum(0.5).form_id is ClosedFormId.QUARTER_TURN


def test_lambda_series_values():
    assert lambda_series_closed(1).value == 0.5
    assert lambda_series_closed(5).value == -0.125
    assert lambda_series_closed(0).value == 1.0


def test_lambda_mirrors_quarter_turn():
    for lam in range(0, 7):
        assert abs(lambda_series_closed(lam).value
                   - quarter_turn_sum(-lam).value) <= 1e-14
    for lam in (0.5, 1.25, 3.75):
        assert abs(lambda_series_closed(lam).value
                   - quarter_turn_sum(-lam).value) <= 1e-14


def test_pythagorean_closure_sample():
    rng = np.random.default_rng(42)
    for _ in range(500):
        n = rng.uniform(-3.0, 3.0)
        phi = rng.uniform(-3.0, 3.0)
        c = cos_closed(n, phi).value
        s = sin_closed(n, phi).value
        rhs = (2.0 * math.cos(0.5 * phi)) ** (2.0 * n)
        assert abs(c * c + s * s - rhs) <= 1e-12 * (1.0 + abs(rhs))


def test_catalog_structure():
    cat = special_value_catalog()
    assert len(cat) == 7
    assert all(e.spec.kind is SeriesKind.COSINE for e in cat)
    divergent = [e for e in cat if e.divergent]
    assert len(divergent) == 1
    assert divergent[0].spec.n == -0.5 and divergent[0].spec.phi == math.pi
    assert divergent[0].value is None
    # every finite entry carries a recipe and a derived decimal
    for e in cat:
        if not e.divergent:
            assert e.recipe is not None
            assert math.isfinite(e.value)


def test_catalog_values_match_radical_algebra():
    cat = {(e.spec.n, e.spec.phi): e.value for e in special_value_catalog()
           if not e.divergent}
    assert cat[(0.5, 0.0)] == pytest.approx(math.sqrt(2.0), rel=1e-15)
    assert cat[(0.5, math.pi)] == 0.0
    assert cat[(0.5, 0.5 * math.pi)] == pytest.approx(math.sqrt((1 + math.sqrt(2)) / 2), rel=1e-15)
    assert cat[(0.5, math.pi / 3.0)] == pytest.approx(0.5 * math.sqrt(3 + 2 * math.sqrt(3)), rel=1e-15)
    assert cat[(-0.5, 0.0)] == pytest.approx(1.0 / math.sqrt(2.0), rel=1e-15)
    assert cat[(-0.5, 0.5 * math.pi)] == pytest.approx(0.5 * math.sqrt(1 + math.sqrt(2)), rel=1e-15)


def test_catalog_in_domain_entries_match_closed_form():
    for e in special_value_catalog():
        if e.divergent or e.spec.phi >= math.pi:
            continue
        closed = cos_closed(e.spec.n, e.spec.phi).value
        assert closed == pytest.approx(e.value, rel=1e-13)


def test_reduced_m3_third_turn_abel_oracle():
    # independent summability check of the m=3 zero at a third of a turn
    res = abel_sum(SeriesSpec(SeriesKind.COSINE, -3, math.pi / 3.0))
    assert res.value == pytest.approx(0.0, abs=1e-8)
