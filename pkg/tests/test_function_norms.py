"""Integral means, area integrals, and growth classification on the catalog."""

import math

import pytest

from hardynum import (
    HalfPlane,
    Sector,
    UnsupportedImage,
    ZeroOnDisk,
    bergman_growth_profile,
    bergman_integral,
    cayley,
    change_of_variable_check,
    default_grid,
    empirical_hb,
    estimate_hardy_number,
    exp_cayley,
    hardy_growth_profile,
    hardy_mean,
    identity_map,
    log_bergman_integral,
    log_hardy_mean,
    oracle_profile,
    sector_power,
    yamashita_integral,
)

TWO_PI = 2 * math.pi


# ---- catalog ---------------------------------------------------------------


def test_catalog_flags_and_values():
    f = cayley()
    assert f.univalent and f.zero_free
    assert f.value(0.0) == pytest.approx(1.0)
    assert f.derivative(0.0) == pytest.approx(2.0)

    g = identity_map()
    assert g.univalent and not g.zero_free
    assert g.value(0.25j) == 0.25j and g.derivative(0.7) == 1.0

    e = exp_cayley()
    assert e.zero_free and not e.univalent
    assert abs(e.value(0.0)) == pytest.approx(math.e)

    h = sector_power(0.5)
    assert h.univalent and h.zero_free
    assert h.value(0.0) == pytest.approx(1.0)


def test_image_domains():
    assert isinstance(cayley().image_domain(), HalfPlane)
    img = sector_power(0.5).image_domain()
    assert isinstance(img, Sector)
    assert img.opening == pytest.approx(math.pi / 2)


def test_catalog_parameter_validation():
    with pytest.raises(ValueError):
        sector_power(0.0)
    with pytest.raises(ValueError):
        sector_power(3.0)
    with pytest.raises(ValueError):
        exp_cayley(0.0)


# ---- circle means ------------------------------------------------------------


def test_cayley_second_mean_closed_form():
    # integral of |(1+z)/(1-z)|^2 over the circle of radius r is
    # 2*pi*(1 + 4 r^2 / (1 - r^2))
    for r in (0.1, 0.5, 0.9, 0.999):
        expected = TWO_PI * (1.0 + 4.0 * r * r / (1.0 - r * r))
        assert hardy_mean(cayley(), 2.0, r) == pytest.approx(expected, rel=1e-10)


def test_identity_means_exact():
    for p in (0.5, 1.0, 3.0):
        for r in (0.2, 0.8):
            assert hardy_mean(identity_map(), p, r) == pytest.approx(
                TWO_PI * r**p, rel=1e-10
            )


def test_mean_at_center_is_point_value():
    assert hardy_mean(cayley(), 2.0, 0.0) == pytest.approx(TWO_PI)
    assert hardy_mean(exp_cayley(), 1.0, 0.0) == pytest.approx(TWO_PI * math.e)


def test_log_and_linear_means_agree():
    for p in (0.5, 2.0):
        for r in (0.3, 0.95):
            log_val = log_hardy_mean(cayley(), p, r)
            assert log_val == pytest.approx(math.log(hardy_mean(cayley(), p, r)), abs=1e-10)


def test_sector_power_mean_is_cayley_power_mean():
    # |cayley^beta|^p = |cayley|^(beta*p) pointwise, so the means coincide
    for beta in (0.5, 2.0):
        for p in (1.0, 2.0):
            for r in (0.4, 0.9):
                lhs = hardy_mean(sector_power(beta), p, r)
                rhs = hardy_mean(cayley(), beta * p, r)
                assert lhs == pytest.approx(rhs, rel=1e-8)


def test_means_monotone_in_radius():
    radii = [0.1, 0.3, 0.5, 0.7, 0.9, 0.99]
    for f in (cayley(), sector_power(0.5), identity_map(), exp_cayley()):
        for p in (0.5, 2.0):
            vals = [log_hardy_mean(f, p, r) for r in radii]
            assert all(b >= a - 1e-10 for a, b in zip(vals, vals[1:])), (f, p)


def test_mean_parameter_validation():
    with pytest.raises(ValueError):
        hardy_mean(cayley(), -1.0, 0.5)
    with pytest.raises(ValueError):
        hardy_mean(cayley(), 1.0, 1.0)
    with pytest.raises(ValueError):
        hardy_mean(cayley(), 1.0, -0.1)


# ---- area integrals ------------------------------------------------------------


def test_cayley_bergman_closed_form():
    # integral of |(1+z)/(1-z)|^2 over |z| <= R is
    # 2*pi*(-3 R^2 / 2 - 2 log(1 - R^2))
    for delta in (0.5, 0.2, 0.05):
        radius = 1.0 - delta
        expected = TWO_PI * (-1.5 * radius**2 - 2.0 * math.log(1.0 - radius**2))
        got = bergman_integral(cayley(), 2.0, 0.0, delta)
        assert got == pytest.approx(expected, rel=1e-8)


def test_identity_weighted_area_integral():
    # integral of |z| (1 - |z|^2) over the unit disk is 4 pi / 15
    got = bergman_integral(identity_map(), 1.0, 1.0, 1e-8)
    assert got == pytest.approx(4.0 * math.pi / 15.0, rel=1e-5)


def test_log_and_linear_area_integrals_agree():
    for p, alpha in ((1.0, 0.0), (2.0, 1.0)):
        log_val = log_bergman_integral(cayley(), p, alpha, 0.1)
        assert log_val == pytest.approx(
            math.log(bergman_integral(cayley(), p, alpha, 0.1)), abs=1e-8
        )


def test_exp_cayley_truncations_blow_up():
    # the weighted area integral grows without bound as the rim is approached
    f = exp_cayley()
    levels = [log_bergman_integral(f, 1.0, 0.0, d) for d in (1e-1, 1e-2, 1e-3)]
    assert levels[1] - levels[0] > math.log(10.0)
    assert levels[2] - levels[1] > math.log(10.0)


def test_area_parameter_validation():
    with pytest.raises(ValueError):
        bergman_integral(cayley(), 1.0, -1.0, 0.1)
    with pytest.raises(ValueError):
        bergman_integral(cayley(), 1.0, 0.0, 0.0)
    with pytest.raises(ValueError):
        bergman_integral(cayley(), 1.0, 0.0, 1.0)


# ---- derivative-weighted area integrals ------------------------------------------


def test_yamashita_identity_map_closed_form():
    # |f|^0 |f'|^2 log(1/|z|) integrates to 2*pi/4 over the unit disk
    got = yamashita_integral(identity_map(), 2.0, 1e-4)
    assert got == pytest.approx(math.pi / 2.0, rel=1e-3)


def test_yamashita_rejects_vanishing_f_below_p2():
    with pytest.raises(ZeroOnDisk):
        yamashita_integral(identity_map(), 1.0, 1e-3)
    # zero-free functions are fine below p = 2
    assert yamashita_integral(cayley(), 1.0, 1e-3) > 0.0


def test_yamashita_weighted_variant_runs():
    unweighted = yamashita_integral(cayley(), 2.0, 1e-3)
    weighted = yamashita_integral(cayley(), 2.0, 1e-3, alpha=0.0)
    assert unweighted > 0.0 and weighted > 0.0
    assert weighted != unweighted


def test_change_of_variable_two_routes_agree():
    for f in (cayley(), sector_power(0.5)):
        for delta in (0.5, 1e-2, 1e-3):
            lhs, rhs = change_of_variable_check(f, 0.5, delta)
            assert rhs == pytest.approx(lhs, rel=1e-5), (f, delta)


def test_change_of_variable_needs_univalent_unbounded_image():
    with pytest.raises(UnsupportedImage):
        change_of_variable_check(exp_cayley(), 0.5, 0.1)
    with pytest.raises(UnsupportedImage):
        change_of_variable_check(identity_map(), 0.5, 0.1)


# ---- growth classification --------------------------------------------------------


def test_hardy_growth_classification_brackets_critical_exponent():
    assert hardy_growth_profile(cayley(), 0.9).classification == "bounded"
    assert hardy_growth_profile(cayley(), 1.1).classification == "unbounded"
    assert hardy_growth_profile(sector_power(0.5), 1.8).classification == "bounded"
    assert hardy_growth_profile(sector_power(0.5), 2.2).classification == "unbounded"


def test_bergman_growth_classification_brackets_critical_exponent():
    assert bergman_growth_profile(cayley(), 1.8, 0.0).classification == "bounded"
    assert bergman_growth_profile(cayley(), 2.2, 0.0).classification == "unbounded"
    # the weight shifts the critical exponent proportionally
    assert bergman_growth_profile(cayley(), 2.7, 1.0).classification == "bounded"
    assert bergman_growth_profile(cayley(), 3.3, 1.0).classification == "unbounded"


def test_growth_profile_shape():
    profile = hardy_growth_profile(cayley(), 0.9)
    assert len(profile.log_values) == len(profile.gaps)
    assert len(profile.slopes) == len(profile.gaps) - 1
    assert profile.classification in {"bounded", "unbounded", "inconclusive"}


def test_bounded_function_bounded_at_every_exponent():
    for p in (0.5, 4.0):
        assert hardy_growth_profile(identity_map(), p).classification == "bounded"
        assert bergman_growth_profile(identity_map(), p, 0.0).classification == "bounded"


def test_exp_cayley_unbounded_at_every_exponent():
    for p in (0.5, 2.0):
        assert hardy_growth_profile(exp_cayley(), p).classification == "unbounded"
        assert bergman_growth_profile(exp_cayley(), p, 0.0).classification == "unbounded"


# ---- empirical exponents -------------------------------------------------------------


def test_empirical_exponents_cayley():
    result = empirical_hb(cayley())
    assert result.h_hat == pytest.approx(1.0, abs=0.05)
    assert result.b_hat == pytest.approx(1.0, abs=0.05)
    assert result.h_hat <= result.b_hat + 0.05
    assert abs(result.h_hat - result.b_hat) <= 0.1
    lo, hi = result.h_bracket
    assert lo <= result.h_hat <= hi


def test_empirical_exponents_bounded_function_infinite():
    result = empirical_hb(identity_map())
    assert result.h_hat == math.inf
    assert result.b_hat == math.inf


def test_empirical_exponents_exp_cayley_zero():
    result = empirical_hb(exp_cayley())
    assert result.h_hat == 0.0
    assert result.b_hat == 0.0


def test_empirical_exponent_matches_image_domain_estimate():
    f = cayley()
    d = f.image_domain()
    domain_side = estimate_hardy_number(oracle_profile(d, default_grid(d))).value
    assert abs(empirical_hb(f).h_hat - domain_side) <= 0.15
