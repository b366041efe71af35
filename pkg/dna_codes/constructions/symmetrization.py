import logging
from collections import defaultdict
from fractions import Fraction

from dna_codes.errors import (
    InvalidArgumentError, UnsupportedParametersError, ConstructionError)
from dna_codes.code_model import (
    DnaCode, validate_dna_code, validate_distance_only)
from dna_codes.constructions.orbit_construction import (
    ConstructionReport, CASE_SYMMETRIZATION)
from dna_codes.sequences.qary_sequence import (
    check_alphabet, composition, parity_class, reverse_complement)
from dna_codes.similarity.similarity import SimilarityKind

logger = logging.getLogger(__name__)


def _odd_multiple(q, n):
    return n % q == 0 and (n // q) % 2 == 1


def symmetrize_theorem32(code):
    """Turn a single-deletion code inside M_q(n) into a DNA code.

    Codewords are grouped by composition. A composition c and its
    reversal (the composition of reverse complements) never coincide when
    n = qk with k odd, so for every pair (c, reversed c) the larger group
    is kept, ties going to the lexicographically smaller composition, and
    the reverse complements of the kept group replace the other one.

    Inputs:
        code: Sequences of M_q(n) with pairwise deletion similarity
            at most n-2.

    Returns:
        report: ConstructionReport, case 'T32', claimed size |code|.
    """
    code = sorted(set(code))
    if not code:
        raise InvalidArgumentError('precondition failed: input code is empty')
    q, n = check_alphabet(code[0].q), code[0].n
    if not _odd_multiple(q, n):
        raise InvalidArgumentError(
            'precondition failed: n = qk with k odd (q = {}, n = {})'.format(
                q, n))
    for x in code:
        if x.q != q or x.n != n:
            raise InvalidArgumentError(
                'precondition failed: uniform q and n ({} differs)'.format(x))
        if parity_class(x) != 0:
            raise InvalidArgumentError(
                'precondition failed: membership in M_q(n) ({} has letter '
                'sum {} mod {})'.format(x, sum(x.symbols) % q, q))
    check = validate_distance_only(code, SimilarityKind.DELETION, 1,
                                   fail_fast=True)
    if not check.valid:
        raise InvalidArgumentError(
            'precondition failed: deletion distance 1 ({})'.format(
                check.violations[0].to_dict()))

    groups = defaultdict(list)
    for x in code:
        groups[composition(x).counts].append(x)

    kept = []
    seen = set()
    for counts in sorted(groups):
        if counts in seen:
            continue
        mirrored = counts[::-1]
        seen.update((counts, mirrored))
        own, other = groups[counts], groups.get(mirrored, [])
        if len(own) > len(other) or (len(own) == len(other)
                                     and counts < mirrored):
            kept.extend(own)
        else:
            kept.extend(other)

    result = kept + [reverse_complement(x) for x in kept]
    report = validate_dna_code(result, SimilarityKind.DELETION, 1)
    if not report.valid:
        raise ConstructionError(
            'symmetrized code failed validation: {}'.format(
                report.violations[0].to_dict()))
    logger.info('[*] Symmetrized %d codewords into a DNA code of size %d',
                len(code), len(result))
    return ConstructionReport(
        code=DnaCode(q, n, tuple(result), SimilarityKind.DELETION, 1),
        claimed_size=len(code),
        achieved_size=len(result),
        case_used=CASE_SYMMETRIZATION,
        validated=True,
        claim_is_lower_bound=True)


def corollary_lower_bound(q, n):
    """Guaranteed DNA deletion code size q^(n-1) / n for n = qk, k odd."""
    q = check_alphabet(q)
    if not _odd_multiple(q, n):
        raise UnsupportedParametersError(
            'lower bound needs n = qk with k odd, got q = {}, n = {}'.format(
                q, n))
    return Fraction(q ** (n - 1), n)
