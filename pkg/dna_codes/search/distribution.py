"""Exact similarity distributions over A^n by full enumeration."""
import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import pandas as pd

from dna_codes.config import check_enumeration
from dna_codes.errors import InvalidArgumentError
from dna_codes.sequences.qary_sequence import (
    check_alphabet, all_sequences_array, reverse_complement_array,
    enumerate_sequences)
from dna_codes.similarity.similarity import SimilarityKind
from dna_codes.similarity.batch import similarity_histogram, \
    pair_similarities

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DistributionTable:
    """Counts of ordered pairs (x, y) with S(x, y) = s, and of sequences
    u with S(u, reverse complement of u) = s, for s = 0..n."""
    q: int
    n: int
    kind: SimilarityKind
    pair_counts: tuple
    selfrc_counts: tuple

    def to_frame(self):
        return pd.DataFrame({
            's': np.arange(self.n + 1),
            'pair_count': list(self.pair_counts),
            'selfrc_count': list(self.selfrc_counts),
        })

    def to_dict(self):
        return {
            'q': self.q,
            'n': self.n,
            'kind': self.kind,
            'pair_counts': list(self.pair_counts),
            'selfrc_counts': list(self.selfrc_counts),
        }


def enumerate_distribution(q, n, kind, enumeration_cap=None):
    """Exact DistributionTable for one similarity kind.

    Refused with EnumerationLimitError when q^(2n) exceeds the cap.
    """
    q = check_alphabet(q)
    kind = SimilarityKind.parse(kind)
    if n < 1:
        raise InvalidArgumentError('n must be >= 1, got {}'.format(n))
    check_enumeration('pair distribution over (A^{})^2 (q = {})'.format(
        n, q), q ** (2 * n), enumeration_cap)

    sequences = all_sequences_array(q, n)
    pair_counts = similarity_histogram(sequences, sequences, kind)
    selfrc = pair_similarities(sequences,
                               reverse_complement_array(sequences, q), kind)
    selfrc_counts = np.bincount(selfrc, minlength=n + 1)
    logger.debug('[*] Enumerated %s distribution q=%d n=%d', kind.value, q, n)
    return DistributionTable(
        q=q, n=n, kind=kind,
        pair_counts=tuple(int(c) for c in pair_counts),
        selfrc_counts=tuple(int(c) for c in selfrc_counts))


def tail_probabilities(table, distance):
    """P1 = Pr{S(u, u~) >= n-D} and P2 = Pr{S(u, v) >= n-D} from a table."""
    n = table.n
    if not 0 <= distance <= n:
        raise InvalidArgumentError(
            'distance D must satisfy 0 <= D <= n, got {}'.format(distance))
    tail = range(n - distance, n + 1)
    p1 = Fraction(sum(table.selfrc_counts[s] for s in tail),
                  table.q ** n)
    p2 = Fraction(sum(table.pair_counts[s] for s in tail),
                  table.q ** (2 * n))
    return p1, p2


def p1_p2_exact(q, n, distance, kind, enumeration_cap=None):
    """Exact tail probabilities (P1, P2) as Fractions."""
    table = enumerate_distribution(q, n, kind, enumeration_cap)
    return tail_probabilities(table, distance)


def _is_subsequence(y, x):
    remaining = iter(x)
    return all(letter in remaining for letter in y)


def count_supersequences(y, n):
    """Number of x in A^n containing y as a subsequence, by enumeration."""
    if n < y.n:
        raise InvalidArgumentError(
            'supersequence length {} shorter than {}'.format(n, y.n))
    return sum(1 for x in enumerate_sequences(y.q, n)
               if _is_subsequence(y.symbols, x.symbols))
