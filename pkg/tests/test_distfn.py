"""Distribution functions: examples, cross-validation, derivative checks."""

import math

import pytest
from mpmath import mp, mpf

from khintchine.interval import Interval, DomainError
from khintchine.distfn import (
    MeasureParams,
    brute_force_dist,
    derivatives,
    f_prime_lower_k0,
    f_star,
    g_star,
)

mp.dps = 40

MP2 = MeasureParams(Interval(2.0, 2.0))

# frozen oracle values (mpmath, dps 40, 2000-term reference sums)
F_STAR_05_P2 = 0.3562311920970008
F_STAR_097_P2 = 8.2722979713911712
G_STAR_097_P2 = 8.2076987763226489


def iv(x):
    return Interval(x, x)


def _ref_f_star(x: float, p: float, K: int = 4000) -> float:
    a = mp.acos(mpf(x))
    s = a**-p
    for k in range(1, K + 1):
        s -= (k * mp.pi - a) ** -p - (k * mp.pi + a) ** -p
    return float(s / p)


def test_measure_params_validation():
    with pytest.raises(DomainError):
        MeasureParams(Interval(1.5, 1.5))
    with pytest.raises(DomainError):
        MeasureParams(Interval(2.0, 3.0001))


def test_g_star_examples():
    x = math.exp(-0.5)
    assert g_star(iv(x), MP2).contains(0.5)
    g97 = g_star(iv(0.97), MP2)
    assert g97.contains(G_STAR_097_P2)
    assert g_star(iv(1e-9), MP2).hi <= 0.013


def test_f_star_values():
    f5 = f_star(iv(0.5), MP2, K=400)
    assert f5.contains(F_STAR_05_P2)
    f97 = f_star(iv(0.97), MP2, K=200)
    assert f97.contains(F_STAR_097_P2)
    assert f97.lo > g_star(iv(0.97), MP2).hi  # strictly above at sigma


def test_f_star_near_zero():
    tiny = f_star(iv(1e-9), MP2, K=400)
    assert tiny.hi <= 1e-6
    assert tiny.lo >= -1e-8  # rounding slack only; the true value is ~4e-10


def test_f_star_monotone():
    mp25 = MeasureParams(Interval(2.5, 2.5))
    vals = [f_star(iv(x), mp25, K=200) for x in (0.3, 0.6, 0.9)]
    assert vals[0].hi < vals[1].lo < vals[1].hi < vals[2].lo
    gs = [g_star(iv(x), mp25) for x in (0.3, 0.6, 0.9)]
    assert gs[0].hi < gs[1].lo < gs[1].hi < gs[2].lo


def test_f_star_matches_reference_grid():
    for p in (2.0, 2.5, 3.0):
        mpp = MeasureParams(iv(p))
        for x in (0.1, 0.4, 0.7, 0.95):
            enc = f_star(iv(x), mpp, K=400)
            assert enc.contains(_ref_f_star(x, p))


def test_cross_validation_overlap():
    for p in (2.0, 2.25, 2.5, 2.75, 3.0):
        mpp = MeasureParams(iv(p))
        for i in range(50):
            x = 0.02 + 0.96 * i / 49
            f = f_star(iv(x), mpp, K=400)
            b = brute_force_dist(x, mpp, "cos", K=1000)
            assert f.intersects(b), (p, x)
            hull = Interval.hull(f, b)
            assert hull.width <= 1e-6, (p, x, hull.width)


def test_brute_force_gauss_matches_g_star():
    for p in (2.0, 2.7):
        mpp = MeasureParams(iv(p))
        for x in (0.05, 0.5, 0.95):
            assert brute_force_dist(x, mpp, "gauss").intersects(g_star(iv(x), mpp))


def test_brute_force_sigma_value():
    enc = brute_force_dist(0.97, MP2, "cos", K=1000)
    assert 8.2 < enc.lo and enc.hi < 8.3


def test_derivatives():
    fp, gp = derivatives(iv(0.5), MP2, K=400)
    # G' closed form at x = e^{-1/2}: e^{1/2}
    fp2, gp2 = derivatives(iv(math.exp(-0.5)), MP2)
    assert gp2.contains(math.exp(0.5))
    assert fp.lo > 0 and gp.lo > 0
    # finite differences at 20 interior points
    h = 1e-4
    for i in range(20):
        x = 0.014 + 0.05 * i
        if not 1e-3 < x < 1 - 1e-3:
            continue
        fpv, gpv = derivatives(iv(x), MP2, K=400)
        fd_f = (
            f_star(iv(x + h), MP2, 400).mid - f_star(iv(x - h), MP2, 400).mid
        ) / (2 * h)
        fd_g = (g_star(iv(x + h), MP2).mid - g_star(iv(x - h), MP2).mid) / (2 * h)
        assert abs(fd_f - fpv.mid) <= 1e-2 * abs(fd_f)
        assert abs(fd_g - gpv.mid) <= 1e-2 * abs(fd_g)


def test_f_prime_lower_bound():
    full, _ = derivatives(iv(0.5), MP2, K=400)
    k0 = f_prime_lower_k0(iv(0.5), MP2)
    assert k0.lo <= full.hi
    assert k0.hi <= full.hi + 1e-12


def test_ratio_above_one_at_cos1():
    x = math.cos(1.0)
    fp, gp = derivatives(iv(x), MP2, K=400)
    assert (fp / gp).lo > 1.0


def test_domain_guards():
    with pytest.raises(DomainError):
        f_star(iv(0.0), MP2)
    with pytest.raises(DomainError):
        g_star(iv(1.0), MP2)
    with pytest.raises(DomainError):
        brute_force_dist(0.999, MP2, "cos")
    with pytest.raises(ValueError):
        brute_force_dist(0.5, MP2, "sinc")
