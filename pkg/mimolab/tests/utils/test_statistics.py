import math

import numpy as np
import pytest

from mimolab.exceptions import DomainError
from mimolab.utils.statistics import effective_value, estimate_exponent, estimate_scv, fit_power_decay, moment_report, scv_standard_error, standard_error


def test_scv_of_constant_samples():
    assert estimate_scv([2.0, 2.0, 2.0]) == 0.0


def test_scv_uses_unbiased_variance():
    assert estimate_scv([1.0, 3.0]) == pytest.approx(0.5)


def test_scv_domain_errors():
    with pytest.raises(DomainError):
        estimate_scv([1.0])
    with pytest.raises(DomainError):
        estimate_scv([-1.0, 1.0])


def test_scv_of_exponential_samples():
    samples = np.random.default_rng(3).exponential(2.0, size=20000)
    assert estimate_scv(samples) == pytest.approx(1.0, abs=0.08)
    assert 0 < scv_standard_error(samples) < 0.06


def test_scv_standard_error_needs_enough_samples():
    assert math.isnan(scv_standard_error([1.0, 2.0, 3.0]))


def test_standard_error():
    assert standard_error([1.0, 3.0]) == pytest.approx(1.0)
    assert math.isnan(standard_error([1.0]))


def test_moment_report():
    report = moment_report([1.0, 2.0, 3.0, 4.0])
    assert report.mean == pytest.approx(2.5)
    assert report.n_trials == 4
    assert report.scv == pytest.approx((5 / 3) / 6.25)


def test_effective_value():
    value, stderr = effective_value([1.0, 2.0, 4.0])
    assert value == pytest.approx(1 / ((1 + 0.5 + 0.25) / 3))
    assert stderr > 0


def test_estimate_exponent_of_power_law():
    points = [(M, 3.0 * M**0.5) for M in (100, 200, 300, 400)]
    assert estimate_exponent(points) == pytest.approx(0.5)


def test_estimate_exponent_of_constant():
    assert estimate_exponent([(100, 2.0), (200, 2.0), (400, 2.0)]) == pytest.approx(0.0, abs=1e-12)


def test_fit_power_decay():
    a, b = fit_power_decay([(M, 2.0 / M**0.8) for M in (100, 200, 300, 600)])
    assert a == pytest.approx(2.0)
    assert b == pytest.approx(0.8)


@pytest.mark.parametrize(
    'points',
    [
        [(100, 1.0), (200, 2.0)],
        [(100, 1.0), (200, -2.0), (300, 3.0)],
        [(100, 1.0), (200, 0.0), (300, 3.0)],
        [(200, 1.0), (100, 2.0), (300, 3.0)],
        [(100, 1.0), (200, math.nan), (300, 3.0)],
    ],
)
def test_fit_domain_errors(points):
    with pytest.raises(DomainError):
        estimate_exponent(points)
