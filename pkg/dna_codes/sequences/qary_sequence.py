"""Alphabet and sequence algebra over even q-ary alphabets.

Letters are the integers 0..q-1. The complement of a letter a is
(q-1)-a, so for q = 4 the text aliases A=0, C=1, G=2, T=3 realize the
Watson-Crick pairs A-T and C-G.
"""
import itertools
from dataclasses import dataclass

import numpy as np

from dna_codes.errors import InvalidArgumentError


ACGT = 'ACGT'
_ACGT_INDEX = {letter: index for index, letter in enumerate(ACGT)}


def check_alphabet(q):
    """Raise InvalidArgumentError unless q is an even integer >= 2."""
    if isinstance(q, bool) or not isinstance(q, (int, np.integer)):
        raise InvalidArgumentError('q must be an integer, got {!r}'.format(q))
    if q < 2 or q % 2:
        raise InvalidArgumentError(
            'q must be an even integer >= 2, got {}'.format(q))
    return int(q)


@dataclass(frozen=True, order=True)
class QarySequence:
    """A fixed-length word over the alphabet {0, ..., q-1}.

    Ordering is lexicographic on the symbols, which is the order used
    for canonical orbit representatives and for every sorted output.
    """
    q: int
    symbols: tuple

    def __post_init__(self):
        q = check_alphabet(self.q)
        symbols = tuple(int(s) for s in self.symbols)
        if not symbols:
            raise InvalidArgumentError('sequence length must be >= 1')
        for s in symbols:
            if not 0 <= s < q:
                raise InvalidArgumentError(
                    'letter {} outside alphabet of size {}'.format(s, q))
        object.__setattr__(self, 'q', q)
        object.__setattr__(self, 'symbols', symbols)

    @property
    def n(self):
        return len(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, index):
        return self.symbols[index]

    def __str__(self):
        return self.to_text()

    @classmethod
    def from_text(cls, text, q=None):
        """Parse a sequence from digits, or from ACGT letters when q = 4.

        Inputs:
            text: Sequence text, e.g. '0013' or 'ACAT'.
            q: Alphabet size. Inferred when omitted: 4 for ACGT text,
                otherwise the smallest even number above the largest digit.

        Returns:
            sequence: The parsed QarySequence.
        """
        text = text.strip()
        if not text:
            raise InvalidArgumentError('empty sequence text')
        upper = text.upper()
        if all(c in _ACGT_INDEX for c in upper):
            if q is not None and q != 4:
                raise InvalidArgumentError(
                    'ACGT letters require q = 4, got q = {}'.format(q))
            return cls(4, tuple(_ACGT_INDEX[c] for c in upper))
        if not text.isdigit():
            bad = next(c for c in text if not c.isdigit())
            raise InvalidArgumentError(
                'unexpected character {!r} in sequence {!r}'.format(bad, text))
        symbols = tuple(int(c) for c in text)
        if q is None:
            q = max(2, max(symbols) + 1 + (max(symbols) + 1) % 2)
        return cls(q, symbols)

    def to_text(self, acgt=False):
        """Render as ACGT letters (q = 4 only) or as digits."""
        if acgt and self.q == 4:
            return ''.join(ACGT[s] for s in self.symbols)
        if self.q > 10:
            raise InvalidArgumentError(
                'digit text supports q <= 10, got q = {}'.format(self.q))
        return ''.join(str(s) for s in self.symbols)


@dataclass(frozen=True)
class Composition:
    """Symbol-count vector (n_0, ..., n_{q-1}) of a sequence."""
    counts: tuple

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        if any(c < 0 for c in counts):
            raise InvalidArgumentError('composition counts must be >= 0')
        object.__setattr__(self, 'counts', counts)

    @property
    def n(self):
        return sum(self.counts)

    @property
    def q(self):
        return len(self.counts)

    def reversed(self):
        """Composition of the reverse complement."""
        return Composition(self.counts[::-1])


def complement_letter(q, a):
    q = check_alphabet(q)
    if not 0 <= a < q:
        raise InvalidArgumentError(
            'letter {} outside alphabet of size {}'.format(a, q))
    return (q - 1) - a


def reverse_complement(x):
    """Reverse the sequence and complement every letter."""
    top = x.q - 1
    return QarySequence(x.q, tuple(top - s for s in reversed(x.symbols)))


def is_self_reverse_complementary(x):
    # An odd-length sequence would need a center letter equal to its
    # own complement.
    if x.n % 2:
        return False
    top = x.q - 1
    symbols = x.symbols
    return all(symbols[i] + symbols[-1 - i] == top
               for i in range(x.n // 2))


def composition(x):
    return Composition(tuple(x.symbols.count(a) for a in range(x.q)))


def composition_admissible(c, q):
    """True iff sum of a * n_a over the alphabet is divisible by q."""
    q = check_alphabet(q)
    if c.q != q:
        raise InvalidArgumentError(
            'composition has {} entries, expected {}'.format(c.q, q))
    return sum(a * n_a for a, n_a in enumerate(c.counts)) % q == 0


def parity_class(x):
    return sum(x.symbols) % x.q


def tenengolts_class(x):
    """Return the pair (beta, gamma) indexing the Tenengolts partition.

    beta is the letter sum mod q. gamma is the weighted count of weak
    ascents: position i (0-based, i >= 1) contributes i when
    x[i] >= x[i-1]. gamma is taken mod n.
    """
    symbols = x.symbols
    gamma = sum(i for i in range(1, x.n) if symbols[i] >= symbols[i - 1])
    return parity_class(x), gamma % x.n


def cyclic_shift(x, k):
    """Left cyclic shift T_k. Element i of the result is x[(i + k) mod n]."""
    k %= x.n
    if k == 0:
        return x
    return QarySequence(x.q, x.symbols[k:] + x.symbols[:k])


def enumerate_sequences(q, n):
    """Stream every sequence of A^n in lexicographic order."""
    q = check_alphabet(q)
    if n < 1:
        raise InvalidArgumentError('n must be >= 1, got {}'.format(n))
    for symbols in itertools.product(range(q), repeat=n):
        yield QarySequence(q, symbols)


def parity_check_code(q, n):
    """Stream the maximal parity-check code M_q(n)."""
    return (x for x in enumerate_sequences(q, n) if parity_class(x) == 0)


def letter_dtype(q):
    """Smallest signed integer dtype holding the letters 0..q-1."""
    for dtype in (np.int8, np.int16, np.int32):
        if q - 1 <= np.iinfo(dtype).max:
            return dtype
    return np.int64


def sequences_to_array(sequences, n=None):
    """Pack sequences into an (N, n) matrix of letter_dtype(q)."""
    sequences = list(sequences)
    rows = [x.symbols for x in sequences]
    if not rows:
        return np.zeros((0, n or 0), dtype=np.int8)
    q = max(x.q for x in sequences)
    return np.array(rows, dtype=letter_dtype(q))


def all_sequences_array(q, n):
    """Every sequence of A^n as matrix rows, lexicographic."""
    q = check_alphabet(q)
    index = np.arange(q ** n, dtype=np.int64)
    powers = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return ((index[:, None] // powers[None, :]) % q).astype(letter_dtype(q))


def reverse_complement_array(array, q):
    """Row-wise reverse complement of an (N, n) matrix."""
    return ((q - 1) - array[:, ::-1].astype(np.int64)).astype(
        letter_dtype(q))


def array_to_sequences(array, q):
    return [QarySequence(q, tuple(int(s) for s in row)) for row in array]
