import math
import logging
from fractions import Fraction

from dna_codes.errors import InvalidArgumentError
from dna_codes.sequences.qary_sequence import check_alphabet
from dna_codes.similarity.similarity import SimilarityKind
from dna_codes.search.distribution import p1_p2_exact
from dna_codes.bounds.bound_report import BoundReport, BoundMode
from dna_codes.bounds.counting import counting_bounds

logger = logging.getLogger(__name__)


def analytic_tail_bounds(q, n, distance, kind):
    """Upper bounds on (P1, P2) from the counting bounds, capped at 1."""
    p1 = Fraction(0)
    p2 = Fraction(0)
    for t in range(distance + 1):
        pair_bound, selfrc_bound = counting_bounds(q, n, n - t, kind)
        p1 += Fraction(selfrc_bound, q ** n)
        p2 += Fraction(pair_bound, q ** (2 * n))
    return min(p1, Fraction(1)), min(p2, Fraction(1))


def random_coding_size_bound(q, n, distance, kind, mode='exact',
                             enumeration_cap=None):
    """Random coding lower bound floor((1/2 - P1) / (2 P2)) - 1.

    P1 is the probability that a random sequence has similarity at least
    n-D with its reverse complement, P2 the same for two independent
    random sequences. Exact mode enumerates the distribution, analytic
    mode replaces both by upper bounds, which can only lower the result.

    Inputs:
        q, n: Alphabet size and length.
        distance: Distance D, 1 <= D <= n-1.
        kind: SimilarityKind or its name.
        mode: 'exact' or 'analytic'.
        enumeration_cap: Passed to the exact enumeration.

    Returns:
        report: BoundReport; values below 1 are clamped to 0 and flagged
            vacuous.
    """
    q = check_alphabet(q)
    kind = SimilarityKind.parse(kind)
    if not 1 <= distance <= n - 1:
        raise InvalidArgumentError(
            'distance D must satisfy 1 <= D <= n-1, got {}'.format(distance))
    if mode == 'exact':
        p1, p2 = p1_p2_exact(q, n, distance, kind, enumeration_cap)
        bound_mode = BoundMode.EXACT
    elif mode == 'analytic':
        p1, p2 = analytic_tail_bounds(q, n, distance, kind)
        bound_mode = BoundMode.ANALYTIC
    else:
        raise InvalidArgumentError(
            'mode must be exact or analytic, got {!r}'.format(mode))

    raw = math.floor((Fraction(1, 2) - p1) / (2 * p2)) - 1
    value = max(raw, 0)
    vacuous = p1 >= Fraction(1, 2) or value == 0
    if vacuous:
        logger.debug('[!] Random coding bound vacuous (P1 = %s)', p1)
    return BoundReport(
        name='random_coding_size_bound',
        params={'q': q, 'n': n, 'D': distance, 'kind': kind.value},
        value=value, mode=bound_mode, vacuous=vacuous, raw_value=raw,
        details={'P1': p1, 'P2': p2})


def asymptotic_size_lower(q, n, distance, kind):
    """Leading term of the asymptotic random coding bound on code size."""
    q = check_alphabet(q)
    kind = SimilarityKind.parse(kind)
    if distance < 1:
        raise InvalidArgumentError('distance D must be >= 1')
    factorial = math.factorial(distance)
    if kind is SimilarityKind.DELETION:
        value = (0.25 * factorial ** 2 * (q / (q - 1) ** 2) ** distance
                 * q ** n / n ** (2 * distance))
    elif kind is SimilarityKind.BLOCK:
        value = 0.25 * factorial / q ** distance * q ** n / n ** distance
    else:
        raise InvalidArgumentError(
            'asymptotic size bound defined for deletion and block kinds')
    return BoundReport(
        name='asymptotic_size_lower',
        params={'q': q, 'n': n, 'D': distance, 'kind': kind.value},
        value=value, mode=BoundMode.ASYMPTOTIC,
        note='asymptotic, no o(1) term')
