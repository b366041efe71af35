import enum

from dna_codes.sequences.qary_sequence import (
    cyclic_shift, reverse_complement, is_self_reverse_complementary,
    enumerate_sequences, parity_class)


class OrbitClass(enum.Enum):
    G1 = 'G1'  # constant sequences, size 1
    G2 = 'G2'  # self reverse complementary, size 2
    # self reverse complementary, size > 2; besides sizes 4k this also
    # holds sizes 4k+2 > 2 such as the orbit of 000111
    G3 = 'G3'
    G4 = 'G4'  # paired with a disjoint reverse complementary orbit


def canonical_rotation(x):
    """Lexicographically smallest cyclic shift of x."""
    symbols = x.symbols
    best = min(symbols[k:] + symbols[:k] for k in range(x.n))
    return x if best == symbols else type(x)(x.q, best)


def is_canonical(x):
    symbols = x.symbols
    return all(symbols <= symbols[k:] + symbols[:k] for k in range(1, x.n))


class Orbit(object):
    """The set of cyclic shifts of a sequence.

    Members are listed as consecutive left shifts T_0, T_1, ... of the
    canonical (lexicographically smallest) representative, so member k
    is T_k(representative).
    """
    def __init__(self, representative):
        """Constructor.

        Args:
            representative: Canonical member of the orbit.
        """
        members = [representative]
        shifted = cyclic_shift(representative, 1)
        while shifted != representative:
            members.append(shifted)
            shifted = cyclic_shift(shifted, 1)
        self._members = tuple(members)
        self._self_rc_shifts = tuple(
            k for k, member in enumerate(self._members)
            if is_self_reverse_complementary(member))
        self._partner = None

        size = len(self._members)
        if size == 1:
            self._orbit_class = OrbitClass.G1
        elif self._self_rc_shifts and size == 2:
            self._orbit_class = OrbitClass.G2
        elif self._self_rc_shifts:
            self._orbit_class = OrbitClass.G3
        else:
            self._orbit_class = OrbitClass.G4

    def __repr__(self):
        return 'Orbit({}, size={}, class={})'.format(
            self.representative, self.size, self._orbit_class.value)

    def __eq__(self, other):
        return isinstance(other, Orbit) and self._members == other._members

    def __hash__(self):
        return hash(self._members)

    def __contains__(self, x):
        return x in self._members

    @property
    def representative(self):
        return self._members[0]

    @property
    def members(self):
        return self._members

    @property
    def size(self):
        return len(self._members)

    @property
    def orbit_class(self):
        return self._orbit_class

    @property
    def partner(self):
        return self._partner

    @property
    def self_rc_shifts(self):
        """Shifts k with T_k(representative) self reverse complementary."""
        return self._self_rc_shifts

    def shift(self, k):
        return self._members[k % self.size]


def orbit_of(x):
    """Build the orbit of x with its class and, for G4, its partner."""
    orbit = Orbit(canonical_rotation(x))
    if orbit.orbit_class is OrbitClass.G4:
        partner = Orbit(canonical_rotation(
            reverse_complement(orbit.representative)))
        orbit._partner = partner
        partner._partner = orbit
    return orbit


def iterate_orbits(q, n, parity=None):
    """Stream orbits of A^n (or of one parity class) once each.

    Orbits come in the order of their canonical representatives.
    """
    for x in enumerate_sequences(q, n):
        if parity is not None and parity_class(x) != parity:
            continue
        if is_canonical(x):
            yield orbit_of(x)
