"""Tenengolts classes T(beta, gamma), each correcting a single deletion."""
import logging
from collections import defaultdict

from dna_codes.config import check_enumeration
from dna_codes.errors import InvalidArgumentError
from dna_codes.sequences.qary_sequence import (
    check_alphabet, enumerate_sequences, tenengolts_class)

logger = logging.getLogger(__name__)


def _check_parameters(q, n, enumeration_cap):
    q = check_alphabet(q)
    if n < 1:
        raise InvalidArgumentError('n must be >= 1, got {}'.format(n))
    check_enumeration('Tenengolts partition of A^{} (q = {})'.format(n, q),
                      q ** n, enumeration_cap)
    return q


def tenengolts_partition(q, n, enumeration_cap=None):
    """Split A^n into the classes T(beta, gamma) in one pass.

    Returns:
        classes: Dict (beta, gamma) -> sorted list of sequences. Empty
            classes are absent.
    """
    q = _check_parameters(q, n, enumeration_cap)
    classes = defaultdict(list)
    for x in enumerate_sequences(q, n):
        classes[tenengolts_class(x)].append(x)
    return dict(classes)


def tenengolts_code(q, n, beta, gamma, enumeration_cap=None):
    """The class T(beta, gamma) = {x : tenengolts_class(x) = (beta, gamma)}."""
    q = check_alphabet(q)
    if not 0 <= beta < q:
        raise InvalidArgumentError(
            'beta must satisfy 0 <= beta < q, got {}'.format(beta))
    if not 0 <= gamma < n:
        raise InvalidArgumentError(
            'gamma must satisfy 0 <= gamma < n, got {}'.format(gamma))
    _check_parameters(q, n, enumeration_cap)
    return [x for x in enumerate_sequences(q, n)
            if tenengolts_class(x) == (beta, gamma)]


def best_tenengolts_class(q, n, enumeration_cap=None):
    """Largest class T(0, gamma), ties broken by the smallest gamma.

    Returns:
        gamma: The chosen class index.
        code: Sorted list of its sequences.
    """
    classes = tenengolts_partition(q, n, enumeration_cap)
    sizes = [len(classes.get((0, gamma), ())) for gamma in range(n)]
    best = max(range(n), key=lambda gamma: (sizes[gamma], -gamma))
    logger.info('[*] Best Tenengolts class T(0, %d) of size %d', best,
                sizes[best])
    return best, classes.get((0, best), [])
