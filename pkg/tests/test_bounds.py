import math
from fractions import Fraction

import numpy as np
import pytest

from dna_codes.errors import InvalidArgumentError
from dna_codes.bounds.bound_report import BoundReport, BoundMode
from dna_codes.bounds.counting import counting_bounds, insertion_count, bmax
from dna_codes.bounds.random_coding import (
    random_coding_size_bound, asymptotic_size_lower, analytic_tail_bounds)
from dna_codes.bounds.rates import (
    entropy, v_of_d, v_of_d_bisection, block_exponent, raw_rate, rate_lower,
    rate_domain, critical_fraction, rate_curve)

DELETION_CRITICAL = {2: 0.13340, 4: 0.27029, 6: 0.34902, 8: 0.40324}
BLOCK_CRITICAL = {2: 0.17888, 4: 0.35752, 6: 0.44523, 8: 0.5}


def test_entropy():
    assert entropy(2, 0.5) == pytest.approx(1.0)
    assert entropy(4, 0.1) == pytest.approx(0.2344977, abs=1e-6)
    assert entropy(4, 0) == entropy(4, 1) == 0
    with pytest.raises(InvalidArgumentError):
        entropy(2, 1.5)


@pytest.mark.parametrize('d', np.linspace(0.01, 0.49, 25))
def test_fixed_point_matches_bisection(d):
    assert v_of_d(d) == pytest.approx(v_of_d_bisection(d), abs=1e-9)
    assert 0 < v_of_d(d) < d


@pytest.mark.parametrize('d', [0, 0.5, -0.1, 0.7])
def test_v_of_d_domain(d):
    with pytest.raises(InvalidArgumentError):
        v_of_d(d)


def test_block_exponent_limit():
    assert block_exponent(4, 0.5) == pytest.approx(
        block_exponent(4, 0.5 - 1e-7), abs=1e-4)


def test_deletion_rate_value():
    report = rate_lower(4, 0.1, 'deletion')
    assert report.value == pytest.approx(0.4725, abs=1e-4)
    assert report.mode is BoundMode.ANALYTIC
    assert not report.vacuous


def test_rate_clamped_at_zero():
    report = rate_lower(2, 0.4, 'deletion')
    assert report.raw_value < 0
    assert report.value == 0
    assert report.vacuous
    assert rate_lower(2, 0.5, 'additive').vacuous


@pytest.mark.parametrize('q, d, kind', [
    (4, 0, 'deletion'), (4, 0.8, 'deletion'), (2, 0.6, 'block'),
    (2, 0.51, 'additive'), (3, 0.1, 'deletion')])
def test_rate_domain_errors(q, d, kind):
    with pytest.raises(InvalidArgumentError):
        raw_rate(q, d, kind)


def test_rate_domain():
    assert rate_domain(4, 'deletion') == 0.75
    assert rate_domain(4, 'block') == 0.5
    assert raw_rate(4, 0.75, 'additive') == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize('q', [2, 4, 6, 8])
def test_critical_fractions(q):
    deletion = critical_fraction(q, 'deletion')
    block = critical_fraction(q, 'block')
    assert deletion.d_star == pytest.approx(DELETION_CRITICAL[q], abs=1e-4)
    assert block.d_star == pytest.approx(BLOCK_CRITICAL[q], abs=1e-4)
    assert block.boundary == (q == 8)
    assert not deletion.boundary


@pytest.mark.parametrize('q', [2, 4, 6])
@pytest.mark.parametrize('kind', ['deletion', 'block'])
def test_rate_vanishes_at_critical_fraction(q, kind):
    d_star = critical_fraction(q, kind).d_star
    assert abs(raw_rate(q, d_star, kind)) < 1e-6
    for d in np.linspace(0.01, d_star - 1e-3, 20):
        assert rate_lower(q, d, kind).value > 0


def test_critical_fraction_of_additive_is_rejected():
    with pytest.raises(InvalidArgumentError):
        critical_fraction(4, 'additive')


@pytest.mark.parametrize('q', [2, 4])
def test_block_rate_dominates_deletion_rate(q):
    for d in np.linspace(0.005, 0.495, 99):
        assert rate_lower(q, d, 'block').value >= \
            rate_lower(q, d, 'deletion').value - 1e-12


def test_rate_curve():
    frame = rate_curve(4, 'deletion', np.linspace(0.05, 0.75, 15))
    assert list(frame.columns) == ['d', 'rate']
    assert len(frame) == 15
    assert (frame['rate'] >= 0).all()
    assert frame['rate'].iloc[-1] == 0


def test_counting_helpers():
    assert insertion_count(2, 4, 2) == 11
    assert insertion_count(4, 5, 5) == 1
    assert bmax(200, 198) == 19306
    with pytest.raises(InvalidArgumentError):
        counting_bounds(2, 4, 0, 'deletion')
    with pytest.raises(InvalidArgumentError):
        insertion_count(2, 4, 5)


def test_self_bounds_vanish_at_odd_similarity():
    for kind in ('deletion', 'block', 'additive'):
        for s in (1, 3, 5):
            assert counting_bounds(4, 6, s, kind)[1] == 0


def test_random_coding_bound_vacuous():
    report = random_coding_size_bound(2, 2, 1, 'block')
    assert report.vacuous
    assert report.value == 0
    assert report.mode is BoundMode.EXACT
    assert report.details['P1'] == Fraction(1, 2)
    assert report.details['P2'] == Fraction(7, 8)


@pytest.mark.parametrize('n', [4, 5, 6])
@pytest.mark.parametrize('kind', ['deletion', 'block', 'additive'])
def test_analytic_bound_never_exceeds_exact(n, kind):
    exact = random_coding_size_bound(2, n, 1, kind, mode='exact')
    analytic = random_coding_size_bound(2, n, 1, kind, mode='analytic')
    assert analytic.value <= exact.value
    assert analytic.mode is BoundMode.ANALYTIC
    p1, p2 = analytic_tail_bounds(2, n, 1, kind)
    assert p1 >= exact.details['P1'] and p2 >= exact.details['P2']


def test_random_coding_bound_arguments():
    with pytest.raises(InvalidArgumentError):
        random_coding_size_bound(2, 4, 4, 'deletion')
    with pytest.raises(InvalidArgumentError):
        random_coding_size_bound(2, 4, 1, 'deletion', mode='guess')


def test_asymptotic_size_bounds():
    assert asymptotic_size_lower(2, 10, 1, 'deletion').value == \
        pytest.approx(5.12)
    assert asymptotic_size_lower(2, 10, 1, 'block').value == \
        pytest.approx(12.8)
    with pytest.raises(InvalidArgumentError):
        asymptotic_size_lower(2, 10, 1, 'additive')


@pytest.mark.parametrize('distance', [1, 2, 3])
def test_asymptotic_growth_shape(distance):
    q, n = 4, 12
    deletion = [asymptotic_size_lower(q, m, distance, 'deletion').value
                for m in (n, 2 * n)]
    block = [asymptotic_size_lower(q, m, distance, 'block').value
             for m in (n, 2 * n)]
    assert deletion[1] / deletion[0] == pytest.approx(
        q ** n / 2 ** (2 * distance))
    assert block[1] / block[0] == pytest.approx(q ** n / 2 ** distance)


def test_bound_report_to_dict():
    report = BoundReport('example', {'q': 2}, Fraction(3, 2),
                         BoundMode.EXACT, raw_value=Fraction(3, 2))
    record = report.to_dict()
    assert record['value_float'] == 1.5
    assert record['raw_value'] == Fraction(3, 2)
    assert report.is_exact
    assert not BoundReport('x', {}, 0.5, BoundMode.ANALYTIC).is_exact
    assert math.isclose(record['value_float'], 1.5)
