"""DNA codes: validation and elementary upper bounds.

A DNA (n, D)-code is an even-size set of sequences closed under reverse
complement, with no self reverse complementary member, and with
similarity at most n-D-1 between any two distinct codewords.
"""
import math
import logging
from collections import Counter
from dataclasses import dataclass

import numpy as np

from dna_codes.errors import InvalidArgumentError
from dna_codes.sequences.qary_sequence import (
    check_alphabet, reverse_complement, is_self_reverse_complementary,
    sequences_to_array)
from dna_codes.similarity.similarity import SimilarityKind
from dna_codes.similarity.batch import upper_pair_similarities
from dna_codes.bounds.bound_report import BoundReport, BoundMode

logger = logging.getLogger(__name__)

# Canonical order of violation records
_VIOLATION_RANK = {'duplicate': 0, 'pairing': 1, 'distance': 2}


@dataclass(frozen=True)
class Violation:
    """One broken code condition.

    kind is 'duplicate', 'pairing' (self reverse complementary codeword
    or missing partner) or 'distance' (a pair above the similarity
    threshold, with the observed similarity).
    """
    kind: str
    codewords: tuple
    similarity: int = None
    reason: str = None

    def sort_key(self):
        return (_VIOLATION_RANK[self.kind], self.codewords)

    def to_dict(self):
        record = {'kind': self.kind, 'codewords': list(self.codewords)}
        if self.similarity is not None:
            record['similarity'] = self.similarity
        if self.reason:
            record['reason'] = self.reason
        return record


@dataclass(frozen=True)
class ValidationReport:
    q: int
    n: int
    kind: SimilarityKind
    distance: int
    mode: str
    size: int
    violations: tuple
    max_observed_similarity: int

    @property
    def valid(self):
        return not self.violations

    @property
    def threshold(self):
        return self.n - self.distance - 1

    def count(self, kind):
        return sum(1 for v in self.violations if v.kind == kind)

    def to_dict(self):
        return {
            'valid': self.valid,
            'mode': self.mode,
            'q': self.q,
            'n': self.n,
            'kind': self.kind,
            'distance': self.distance,
            'size': self.size,
            'threshold': self.threshold,
            'max_observed_similarity': self.max_observed_similarity,
            'violations': [v.to_dict() for v in self.violations],
        }


@dataclass(frozen=True)
class DnaCode:
    """An immutable code with its similarity kind and distance.

    Codewords are kept sorted. Use from_codewords to build a code that is
    checked against both DNA code conditions.
    """
    q: int
    n: int
    codewords: tuple
    kind: SimilarityKind
    distance: int

    def __post_init__(self):
        object.__setattr__(self, 'codewords', tuple(sorted(self.codewords)))
        object.__setattr__(self, 'kind', SimilarityKind.parse(self.kind))

    def __len__(self):
        return len(self.codewords)

    def __iter__(self):
        return iter(self.codewords)

    def __contains__(self, x):
        return x in self.codewords

    @property
    def size(self):
        return len(self.codewords)

    @classmethod
    def from_codewords(cls, codewords, kind, distance):
        codewords = list(codewords)
        report = validate_dna_code(codewords, kind, distance)
        if not report.valid:
            raise InvalidArgumentError(
                'not a DNA ({}, {})-code: {} violation(s), first {}'.format(
                    report.n, distance, len(report.violations),
                    report.violations[0].to_dict()))
        return cls(report.q, report.n, tuple(codewords), kind, distance)


def _check_code_shape(codewords, distance):
    if not codewords:
        raise InvalidArgumentError('code must contain at least one codeword')
    q, n = codewords[0].q, codewords[0].n
    for x in codewords:
        if x.q != q:
            raise InvalidArgumentError(
                'heterogeneous alphabets: q = {} and q = {}'.format(q, x.q))
        if x.n != n:
            raise InvalidArgumentError(
                'heterogeneous lengths: n = {} and n = {}'.format(n, x.n))
    if not 1 <= distance <= n - 1:
        raise InvalidArgumentError(
            'distance D must satisfy 1 <= D <= n-1 = {}, got {}'.format(
                n - 1, distance))
    return q, n


def _validate(codewords, kind, distance, dna, fail_fast):
    kind = SimilarityKind.parse(kind)
    codewords = list(codewords)
    q, n = _check_code_shape(codewords, distance)
    threshold = n - distance - 1
    violations = []
    max_observed = 0

    counts = Counter(codewords)
    for x, count in sorted(counts.items()):
        if count > 1:
            violations.append(Violation(
                'duplicate', (x,), n, 'appears {} times'.format(count)))
            max_observed = n
    unique = sorted(counts)
    members = set(unique)

    if dna and not (fail_fast and violations):
        for x in unique:
            if is_self_reverse_complementary(x):
                violations.append(Violation(
                    'pairing', (x,), reason='self reverse complementary'))
            elif reverse_complement(x) not in members:
                violations.append(Violation(
                    'pairing', (x,), reason='reverse complement missing'))
            if fail_fast and violations:
                break

    if len(unique) > 1 and not (fail_fast and violations):
        array = sequences_to_array(unique)
        first, second, values = upper_pair_similarities(array, kind)
        max_observed = max(max_observed, int(values.max()))
        for k in np.flatnonzero(values > threshold):
            violations.append(Violation(
                'distance', (unique[first[k]], unique[second[k]]),
                int(values[k])))
            if fail_fast:
                break

    violations.sort(key=Violation.sort_key)
    report = ValidationReport(
        q=q, n=n, kind=kind, distance=distance,
        mode='dna' if dna else 'distance-only', size=len(codewords),
        violations=tuple(violations), max_observed_similarity=max_observed)
    if report.valid:
        logger.debug('[*] Valid %s code: q=%d n=%d size=%d', report.mode, q,
                     n, report.size)
    else:
        logger.debug('[!] %d violation(s) in %s code', len(violations),
                     report.mode)
    return report


def validate_dna_code(codewords, kind, distance, fail_fast=False):
    """Check both DNA code conditions, reporting every violation.

    Inputs:
        codewords: Sequences of one length and alphabet.
        kind: SimilarityKind or its name.
        distance: Claimed distance D, 1 <= D <= n-1.
        fail_fast: Stop at the first violation found.

    Returns:
        report: ValidationReport with violations in canonical order.
    """
    return _validate(codewords, kind, distance, True, fail_fast)


def validate_distance_only(codewords, kind, distance, fail_fast=False):
    """Check only the pairwise similarity condition."""
    return _validate(codewords, kind, distance, False, fail_fast)


def theorem21_upper_bound(q, n):
    """Upper bound (q^(n-1) + q) / 2 on block-distance-1 DNA code size."""
    q = check_alphabet(q)
    if n < 2:
        raise InvalidArgumentError('n must be >= 2, got {}'.format(n))
    return (q ** (n - 1) + q) // 2


def hamming_upper_bound(q, n, distance):
    """Hamming sphere-packing bound, exact."""
    q = check_alphabet(q)
    if not 1 <= distance <= n - 1:
        raise InvalidArgumentError(
            'distance D must satisfy 1 <= D <= n-1, got {}'.format(distance))
    if distance == 1:
        return q ** (n - 1)
    sphere = sum(math.comb(n, i) * (q - 1) ** i
                 for i in range(distance // 2 + 1))
    return q ** n // sphere


def asymptotic_deletion_upper(q, n, distance):
    """Leading term D! / (q-1)^D * q^n / n^D of the deletion upper bound."""
    q = check_alphabet(q)
    if distance < 1:
        raise InvalidArgumentError('distance D must be >= 1')
    value = (math.factorial(distance) / (q - 1) ** distance
             * q ** n / n ** distance)
    return BoundReport(
        name='asymptotic_deletion_upper',
        params={'q': q, 'n': n, 'D': distance},
        value=value, mode=BoundMode.ASYMPTOTIC,
        note='asymptotic, no o(1) term')
