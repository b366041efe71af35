"""Rate lower bounds and their critical distance fractions.

For a distance fraction d = D/n the bounds give the exponent R with
code size growing like q^(R n). The critical fraction d* is the root of
the bound, below which codes grow exponentially.
"""
import math
import logging

import numpy as np
import pandas as pd
from scipy import optimize

from dna_codes.errors import InvalidArgumentError, NumericalFailureError
from dna_codes.sequences.qary_sequence import check_alphabet
from dna_codes.similarity.similarity import SimilarityKind
from dna_codes.bounds.bound_report import BoundReport, BoundMode, \
    CriticalPoint

logger = logging.getLogger(__name__)

FIXED_POINT_TOLERANCE = 1e-12
FIXED_POINT_MAX_STEPS = 10 ** 4
RESIDUAL_TOLERANCE = 1e-9
ROOT_XTOL = 1e-12
# Lower ends of the root brackets
DELETION_BRACKET_LOW = 1e-9
BLOCK_BRACKET_LOW = 1e-4


def entropy(q, u):
    """q-ary entropy h_q(u) = -u log_q u - (1-u) log_q (1-u)."""
    check_alphabet(q)
    if not 0 <= u <= 1:
        raise InvalidArgumentError('u must lie in [0, 1], got {}'.format(u))
    if u == 0 or u == 1:
        return 0.0
    return -(u * math.log(u) + (1 - u) * math.log(1 - u)) / math.log(q)


def _defining_residual(d, v):
    return ((1 - d) / v - 1) * (d / v - 1) ** 2 - 1


def v_of_d(d):
    """Root v in (0, d) of ((1-d)/v - 1)(d/v - 1)^2 = 1.

    Computed with the fixed point w_{m+1} = 1 + 1/sqrt((1-d)/d w_m - 1),
    w_1 = 2, and v = d / w.
    """
    if not 0 < d < 0.5:
        raise InvalidArgumentError(
            'd must satisfy 0 < d < 1/2, got {}'.format(d))
    ratio = (1 - d) / d
    w = 2.0
    for step in range(1, FIXED_POINT_MAX_STEPS + 1):
        argument = ratio * w - 1
        if argument <= 0:
            raise NumericalFailureError(
                'fixed point left its domain at d = {}, step {}, w = {}'
                .format(d, step, w))
        w_next = 1 + 1 / math.sqrt(argument)
        if abs(w_next - w) < FIXED_POINT_TOLERANCE:
            w = w_next
            break
        w = w_next
    else:
        raise NumericalFailureError(
            'fixed point did not converge at d = {} after {} steps '
            '(last w = {})'.format(d, FIXED_POINT_MAX_STEPS, w))
    v = d / w
    residual = abs(_defining_residual(d, v))
    if residual >= RESIDUAL_TOLERANCE:
        raise NumericalFailureError(
            'v({}) = {} leaves residual {:.3e}'.format(d, v, residual))
    return v


def v_of_d_bisection(d):
    """Same root as v_of_d, by bisection on (0, d)."""
    if not 0 < d < 0.5:
        raise InvalidArgumentError(
            'd must satisfy 0 < d < 1/2, got {}'.format(d))
    return optimize.bisect(lambda v: _defining_residual(d, v),
                           d * 1e-9, d * (1 - 1e-12), xtol=1e-15,
                           maxiter=500)


def block_exponent(q, d):
    """E_q(d) = (1-d) h_q(v/(1-d)) + 2 d h_q(v/d), v = v(d).

    At d = 1/2 the root v(d) tends to 1/4, which is used as the limit.
    """
    v = d / 2 if d == 0.5 else v_of_d(d)
    return (1 - d) * entropy(q, v / (1 - d)) + 2 * d * entropy(q, v / d)


def _deletion_rate(q, d):
    return 1 + d - 2 * (d * math.log(q - 1) / math.log(q) + entropy(q, d))


def _additive_rate(q, d):
    return 1 - entropy(q, d) - d * math.log(q - 1) / math.log(q)


def _block_rate(q, d):
    return (1 - d) - block_exponent(q, d)


def rate_domain(q, kind):
    """Upper end of the admissible d range, inclusive."""
    kind = SimilarityKind.parse(kind)
    if kind is SimilarityKind.BLOCK:
        return 0.5
    return (q - 1) / q


def raw_rate(q, d, kind):
    """Unclamped rate lower bound; may be negative."""
    q = check_alphabet(q)
    kind = SimilarityKind.parse(kind)
    limit = rate_domain(q, kind)
    if not 0 < d <= limit:
        raise InvalidArgumentError(
            'd must satisfy 0 < d <= {} for {} similarity, got {}'.format(
                limit, kind.value, d))
    if kind is SimilarityKind.DELETION:
        return _deletion_rate(q, d)
    if kind is SimilarityKind.BLOCK:
        return _block_rate(q, d)
    return _additive_rate(q, d)


def rate_lower(q, d, kind):
    """Lower bound on the rate of DNA codes with distance fraction d.

    deletion: 1 + d - 2[d log_q(q-1) + h_q(d)]
    block: (1 - d) - E_q(d)
    additive: 1 - h_q(d) - d log_q(q-1), the Gilbert-Varshamov bound

    Returns:
        report: BoundReport whose value is clamped at 0; raw_value keeps
            the formula value and vacuous is set when it is not positive.
    """
    kind = SimilarityKind.parse(kind)
    raw = raw_rate(q, d, kind)
    return BoundReport(
        name='rate_lower',
        params={'q': q, 'd': d, 'kind': kind.value},
        value=max(raw, 0.0), mode=BoundMode.ANALYTIC,
        vacuous=raw <= 0, raw_value=raw)


def critical_fraction(q, kind):
    """Root d* of the rate bound, found by bisection.

    For block similarity the search stops at d = 1/2; when the bound is
    still non-negative there, d* = 1/2 is reported as a boundary point.
    """
    q = check_alphabet(q)
    kind = SimilarityKind.parse(kind)
    if kind is SimilarityKind.DELETION:
        low, high = DELETION_BRACKET_LOW, (q - 1) / q
        func = lambda d: _deletion_rate(q, d)
    elif kind is SimilarityKind.BLOCK:
        low, high = BLOCK_BRACKET_LOW, 0.5
        func = lambda d: _block_rate(q, d)
        at_boundary = func(high)
        if at_boundary >= -RESIDUAL_TOLERANCE:
            logger.debug('[*] Block rate bound non-negative up to 1/2 '
                         'for q = %d', q)
            return CriticalPoint(q=q, kind=kind, d_star=0.5,
                                 residual=abs(at_boundary), boundary=True)
    else:
        raise InvalidArgumentError(
            'critical fraction defined for deletion and block kinds')

    f_low, f_high = func(low), func(high)
    if f_low <= 0 or f_high >= 0:
        raise NumericalFailureError(
            'root not bracketed on [{}, {}]: f = {:.3e}, {:.3e}'.format(
                low, high, f_low, f_high))
    d_star = optimize.bisect(func, low, high, xtol=ROOT_XTOL, maxiter=200)
    residual = abs(func(d_star))
    logger.debug('[*] Critical fraction q=%d %s: %.6f', q, kind.value, d_star)
    return CriticalPoint(q=q, kind=kind, d_star=d_star, residual=residual)


def rate_curve(q, kind, grid):
    """Tabulate rate_lower over a grid of d values.

    Returns:
        frame: pandas DataFrame with columns d and rate.
    """
    grid = np.asarray(grid, dtype=float)
    rates = [rate_lower(q, float(d), kind).value for d in grid]
    return pd.DataFrame({'d': grid, 'rate': rates})
