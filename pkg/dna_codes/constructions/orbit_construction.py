"""DNA codes of block distance 1 built from cyclic-shift orbits of M_q(n).

Orbits of the parity-check code fall into four classes:
    G1  constant sequences, kept whole;
    G2  self reverse complementary orbits of size 2, dropped;
    G3  self reverse complementary orbits of size 4k, the odd shifts of
        a self reverse complementary member are kept;
    G4  pairs of mutually reverse complementary orbits, every second
        shift of one orbit is kept together with its reverse complements.
Within M_q(n) two distinct codewords have block similarity n-1 only when
they are neighbouring shifts, so none of the selections above contains
such a pair.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from dna_codes.config import check_enumeration
from dna_codes.errors import UnsupportedParametersError, ConstructionError
from dna_codes.code_model import DnaCode, validate_dna_code, \
    theorem21_upper_bound
from dna_codes.sequences.qary_sequence import check_alphabet, \
    reverse_complement
from dna_codes.sequences.orbit import OrbitClass, iterate_orbits
from dna_codes.similarity.similarity import SimilarityKind

logger = logging.getLogger(__name__)

CASE_ODD_K = 'T31-odd-k'
CASE_POWER_OF_TWO = 'T31-power-of-two'
CASE_EVEN_K = 'T31-even-k'
CASE_SYMMETRIZATION = 'T32'


@dataclass(frozen=True)
class ConstructionReport:
    """Outcome of a construction.

    claimed_size is exact for the odd-k and power-of-two cases and a lower
    bound (claim_is_lower_bound) for the even-k case and symmetrization.
    """
    code: DnaCode
    claimed_size: object
    achieved_size: int
    case_used: str
    validated: bool
    claim_is_lower_bound: bool = False
    notes: tuple = ()
    orbit_counts: dict = field(default_factory=dict)

    @property
    def shortfall(self):
        return max(Fraction(self.claimed_size) - self.achieved_size, 0)

    def to_dict(self):
        return {
            'case_used': self.case_used,
            'claimed_size': self.claimed_size,
            'claim_is_lower_bound': self.claim_is_lower_bound,
            'achieved_size': self.achieved_size,
            'validated': self.validated,
            'q': self.code.q,
            'n': self.code.n,
            'kind': self.code.kind,
            'distance': self.code.distance,
            'notes': list(self.notes),
            'orbit_counts': dict(self.orbit_counts),
        }


def _is_power_of_two(value):
    return value > 0 and value & (value - 1) == 0


def theorem31_case(q, n):
    """Pick the construction case for (q, n); n must be a multiple of q.

    Odd n/q wins over the power-of-two pattern when both could apply.
    """
    q = check_alphabet(q)
    if n < q or n % q:
        raise UnsupportedParametersError(
            'orbit construction needs n divisible by q, got q = {}, n = {}'
            .format(q, n))
    k = n // q
    if k % 2:
        return CASE_ODD_K
    if _is_power_of_two(q) and _is_power_of_two(k):
        return CASE_POWER_OF_TWO
    return CASE_EVEN_K


def theorem31_claimed_size(q, n):
    """Return (case, claimed size) of the orbit construction.

    The even-k value is a lower bound given as an exact Fraction.
    """
    case = theorem31_case(q, n)
    if case == CASE_ODD_K:
        return case, (q ** (n - 1) + q) // 2
    if case == CASE_POWER_OF_TWO:
        return case, q ** (n - 1) // 2
    short_orbits = Fraction(q ** (n // 2 + 1) - 1, q - 1)
    return case, (q ** (n - 1) - short_orbits) / 2


def optimality_ratio(q, n):
    """Claimed construction size over the (q^(n-1) + q) / 2 upper bound."""
    _, claimed = theorem31_claimed_size(q, n)
    return Fraction(claimed) / theorem21_upper_bound(q, n)


def alternate_shift_selection(orbit):
    """Every second shift of a G4 orbit plus the reverse complements.

    An orbit of size l is an l-cycle under T_1. Shifts 0, 2, ..., l-2
    (even l) or 0, 2, ..., l-3 (odd l) are pairwise non-neighbouring.
    """
    size = orbit.size
    stop = size - 1 if size % 2 == 0 else size - 2
    selected = [orbit.shift(k) for k in range(0, stop, 2)]
    return selected + [reverse_complement(x) for x in selected]


def odd_shift_selection(orbit):
    """Shifts T_m(x), m odd, around a self reverse complementary member x."""
    base = orbit.self_rc_shifts[0]
    return [orbit.shift(base + m) for m in range(1, orbit.size, 2)]


def construct_theorem31(q, n, enumeration_cap=None):
    """Build a DNA code of block distance 1 by orbit classification.

    Inputs:
        q: Even alphabet size.
        n: Length, a multiple of q.
        enumeration_cap: Largest q^n scanned, the configured cap when
            omitted.

    Returns:
        report: ConstructionReport with the validated code.
    """
    case, claimed = theorem31_claimed_size(q, n)
    check_enumeration('orbit scan of A^{} (q = {})'.format(n, q), q ** n,
                      enumeration_cap)
    logger.info('[*] Orbit construction q=%d n=%d, case %s', q, n, case)

    codewords = []
    notes = []
    orbit_counts = Counter()
    odd_orbits = 0
    for orbit in iterate_orbits(q, n, parity=0):
        orbit_counts[orbit.orbit_class.value] += 1
        if case == CASE_EVEN_K and orbit.size != n:
            orbit_counts['skipped-short'] += 1
            continue
        orbit_class = orbit.orbit_class
        if orbit_class is OrbitClass.G1:
            codewords.append(orbit.representative)
        elif orbit_class is OrbitClass.G2:
            continue
        elif orbit_class is OrbitClass.G3:
            if orbit.size % 4:
                notes.append('self reverse complementary orbit of {} has '
                             'size {}, not a multiple of 4; excluded'.format(
                                 orbit.representative, orbit.size))
                logger.warning('[!] %s', notes[-1])
                continue
            codewords.extend(odd_shift_selection(orbit))
        elif orbit.representative < orbit.partner.representative:
            if orbit.size % 2:
                odd_orbits += 1
            codewords.extend(alternate_shift_selection(orbit))

    report = validate_dna_code(codewords, SimilarityKind.BLOCK, 1)
    if not report.valid:
        raise ConstructionError(
            'orbit construction q={} n={} failed validation: {}'.format(
                q, n, report.violations[0].to_dict()))

    achieved = len(codewords)
    if odd_orbits:
        notes.append('{} orbit pair(s) of odd size keep (l-1)/2 shifts '
                     'per orbit'.format(odd_orbits))
    lower_bound = case == CASE_EVEN_K
    if not lower_bound and claimed % 2:
        notes.append('claimed size {} is odd while DNA code sizes are '
                     'even'.format(claimed))
    if achieved < claimed:
        notes.append('achieved size {} falls short of claimed {}'.format(
            achieved, claimed))
        logger.warning('[!] %s', notes[-1])
    logger.info('[*] Built code of size %d (claimed %s)', achieved, claimed)

    return ConstructionReport(
        code=DnaCode(q, n, tuple(codewords), SimilarityKind.BLOCK, 1),
        claimed_size=claimed,
        achieved_size=achieved,
        case_used=case,
        validated=True,
        claim_is_lower_bound=lower_bound,
        notes=tuple(notes),
        orbit_counts=dict(sorted(orbit_counts.items())))
