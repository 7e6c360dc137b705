import math

import pytest

from trigsum import (
    ComplexValue,
    binom_prefix,
    binomial_phase_power,
    cos_closed,
    half_angle_point,
    make_phase_pair,
    pow_int,
    series_at_phase,
    sin_closed,
)

GRID = [math.radians(d) for d in range(-179, 180, 3)]


def test_phase_pair_axis_cases():
    pair = make_phase_pair(0.0)
    assert (pair.p.re, pair.p.im) == (1.0, 0.0)
    assert pair.q == pair.p.conj()
    pair = make_phase_pair(0.5 * math.pi)
    assert pair.p.im == 1.0
    assert abs(pair.p.re) < 1e-16


def test_phase_pair_product_is_unity():
    for phi in (math.pi / 3.0, 1.0, -2.4):
        pair = make_phase_pair(phi)
        prod = pair.p * pair.q
        assert abs(prod.re - 1.0) <= 1e-15
        assert prod.im == 0.0
        assert abs(pair.p.abs2() - 1.0) <= 1e-15


def test_conjugation_is_involutive():
    z = ComplexValue(0.3, -1.7)
    assert z.conj().conj() == z


def test_series_at_phase_constant():
    for phi in (0.0, 1.0, -2.0):
        assert series_at_phase([1.0], phi) == (1.0, 0.0)


def test_series_at_phase_row_two():
    cos_sum, sin_sum = series_at_phase([1.0, 2.0, 1.0], math.pi / 3.0)
    assert cos_sum == pytest.approx(1.5, abs=1e-15)
    expected_sin = 2.0 * math.sin(math.pi / 3.0) + math.sin(2.0 * math.pi / 3.0)
    assert sin_sum == pytest.approx(expected_sin, abs=1e-15)


def test_series_at_phase_row_three_quarter_turn():
    cos_sum, _ = series_at_phase([1.0, 3.0, 3.0, 1.0], 0.5 * math.pi)
    assert cos_sum == pytest.approx(-2.0, abs=1e-14)


def test_series_at_phase_input_validation():
    with pytest.raises(ValueError):
        series_at_phase([], 1.0)
    with pytest.raises(ValueError):
        series_at_phase([1.0, math.inf], 1.0)


def test_binomial_phase_power_low_rows():
    assert binomial_phase_power(0, 1.234) == (1.0, 0.0)
    for phi in (0.7, -1.9):
        c, s = binomial_phase_power(1, phi)
        assert c == pytest.approx(1.0 + math.cos(phi), abs=1e-15)
        assert s == pytest.approx(math.sin(phi), abs=1e-15)


def test_binomial_phase_power_fourth_row():
    # (1 + i)^4 = -4: the sine series of row four vanishes at a quarter turn
    c, s = binomial_phase_power(4, 0.5 * math.pi)
    assert c == pytest.approx(-4.0, abs=1e-14)
    assert s == pytest.approx(0.0, abs=1e-14)


def test_binomial_phase_power_preconditions():
    with pytest.raises(ValueError):
        binomial_phase_power(-1, 1.0)
    with pytest.raises(ValueError):
        binomial_phase_power(65, 1.0)
    with pytest.raises(ValueError):
        binomial_phase_power(1.5, 1.0)


def test_conjugate_reality_of_horner_path():
    # for real coefficients, evaluating at q mirrors evaluating at p
    def horner(coeffs, z):
        acc = ComplexValue(coeffs[-1], 0.0)
        for c in reversed(coeffs[:-1]):
            acc = acc * z + ComplexValue(c, 0.0)
        return acc

    coeffs = binom_prefix(9, 10)
    scale = sum(abs(c) for c in coeffs)
    for phi in GRID:
        pair = make_phase_pair(phi)
        dp = horner(coeffs, pair.p)
        dq = horner(coeffs, pair.q)
        diff = dq - dp.conj()
        assert math.hypot(diff.re, diff.im) <= 1e-13 * scale
        cos_sum, sin_sum = series_at_phase(coeffs, phi)
        assert math.isfinite(cos_sum) and math.isfinite(sin_sum)


def test_half_angle_factorisation():
    # 1 + p = (sqrt(p) + sqrt(q)) sqrt(p) on the principal branch
    for phi in GRID:
        pair = make_phase_pair(phi)
        root = half_angle_point(phi)
        lhs = ComplexValue(1.0 + pair.p.re, pair.p.im)
        rhs = (root + root.conj()) * root
        assert abs(lhs.re - rhs.re) <= 1e-13
        assert abs(lhs.im - rhs.im) <= 1e-13


def test_moment_identity_half_integer_powers():
    # p^alpha + q^alpha = 2 cos(alpha phi) for alpha in half-integer steps,
    # with p^alpha built from integer powers of the half-angle point
    for phi in [math.radians(d) for d in range(-175, 176, 25)]:
        root = half_angle_point(phi)
        for twice_alpha in range(1, 17):
            alpha = 0.5 * twice_alpha
            za = pow_int(root, twice_alpha)
            assert abs(2.0 * za.re - 2.0 * math.cos(alpha * phi)) <= 1e-12
            assert abs(2.0 * za.im - 2.0 * math.sin(alpha * phi)) <= 1e-12


def test_path_agreement_with_row_polynomial():
    for n in range(0, 21):
        coeffs = binom_prefix(n, n + 1)
        bound = 1e-12 * 2.0 ** n
        for phi in GRID:
            pc, ps = binomial_phase_power(n, phi)
            hc, hs = series_at_phase(coeffs, phi)
            assert abs(pc - hc) <= bound
            assert abs(ps - hs) <= bound


def test_path_agreement_with_closed_forms():
    for n in (0, 3, 10, 17):
        bound = 1e-12 * 2.0 ** n
        for phi in GRID:
            pc, ps = binomial_phase_power(n, phi)
            assert abs(pc - cos_closed(n, phi).value) <= bound
            assert abs(ps - sin_closed(n, phi).value) <= bound
