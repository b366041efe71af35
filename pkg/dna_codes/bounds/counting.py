"""Exact counting bounds on similarity distributions.

For a similarity kind and 1 <= s <= n, the pair bound caps the number of
ordered pairs (x, y) with S(x, y) = s and the self bound caps the number
of sequences u with S(u, reverse complement of u) = s. Self counts
vanish for odd s. For additive similarity both values are exact counts.
"""
from math import comb

from dna_codes.errors import InvalidArgumentError
from dna_codes.sequences.qary_sequence import check_alphabet
from dna_codes.similarity.similarity import SimilarityKind


def _check_range(n, s, low=1):
    if not low <= s <= n:
        raise InvalidArgumentError(
            's must satisfy {} <= s <= n = {}, got {}'.format(low, n, s))


def insertion_count(q, n, s):
    """Number B_q(n, s) of length-n supersequences of any length-s sequence."""
    q = check_alphabet(q)
    _check_range(n, s, low=0)
    return sum(comb(n, k) * (q - 1) ** k for k in range(n - s + 1))


def _marbles_nonempty(marbles, boxes):
    # ways to put identical marbles into boxes, no box empty
    return comb(marbles - 1, boxes - 1)


def _marbles_any(marbles, boxes):
    # ways to put identical marbles into boxes, empty boxes allowed
    return comb(marbles + boxes - 1, boxes - 1)


def _block_partitions(n, s):
    return range(1, min(s, n - s + 1) + 1)


def _block_pair_bound(q, n, s):
    total = 0
    for j in _block_partitions(n, s):
        fillings = q ** (n - s) * _marbles_any(n - s - (j - 1), j + 1)
        total += _marbles_nonempty(s, j) * fillings ** 2
    return q ** s * total


def _block_selfrc_bound(q, n, s):
    if s % 2:
        return 0
    half = s // 2
    total = 0
    for j in _block_partitions(n, s):
        fillings = q ** (n - s) * _marbles_any(n - s - (j - 1), j + 1)
        total += comb(half - 1, (j + 1) // 2 - 1) * fillings
    return q ** half * total


def _additive_pair_count(q, n, s):
    return q ** n * comb(n, s) * (q - 1) ** (n - s)


def _additive_selfrc_count(q, n, s):
    # Mirror positions agree in pairs; an odd-length center never agrees.
    if s % 2:
        return 0
    half = n // 2
    if s // 2 > half:
        return 0
    return q ** (n % 2) * q ** half * comb(half, s // 2) \
        * (q - 1) ** (half - s // 2)


def counting_bounds(q, n, s, kind):
    """Upper bounds on the pair and self counts at similarity s.

    Returns:
        pair_bound: Bound on |{(x, y) : S(x, y) = s}|.
        selfrc_bound: Bound on |{u : S(u, u~) = s}|, 0 for odd s.
    """
    q = check_alphabet(q)
    kind = SimilarityKind.parse(kind)
    _check_range(n, s)
    if kind is SimilarityKind.BLOCK:
        return _block_pair_bound(q, n, s), _block_selfrc_bound(q, n, s)
    if kind is SimilarityKind.DELETION:
        supersequences = insertion_count(q, n, s)
        selfrc = 0 if s % 2 else q ** (s // 2) * supersequences
        return q ** s * supersequences ** 2, selfrc
    return _additive_pair_count(q, n, s), _additive_selfrc_count(q, n, s)


def bmax(n, s):
    """Largest term of the block pair bound: max over j of
    C(s-1, j-1) * C(n-s+1, j)^2."""
    _check_range(n, s)
    return max(comb(s - 1, j - 1) * comb(n - s + 1, j) ** 2
               for j in _block_partitions(n, s))
