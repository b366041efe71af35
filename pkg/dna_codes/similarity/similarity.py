"""Similarity functions between equal-length sequences.

additive: number of agreeing positions (n minus Hamming distance).
deletion: length of a longest common subsequence.
block: length of a longest common block subsequence, i.e. a common
    subsequence whose consecutive letters are adjacent in x exactly when
    they are adjacent in y.
"""
import enum

from dna_codes.errors import InvalidArgumentError


class SimilarityKind(enum.Enum):
    ADDITIVE = 'additive'
    DELETION = 'deletion'
    BLOCK = 'block'

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise InvalidArgumentError(
                'unknown similarity kind {!r}, expected one of {}'.format(
                    value, ', '.join(k.value for k in cls)))


def check_pair(x, y):
    if x.q != y.q:
        raise InvalidArgumentError(
            'alphabet mismatch: q = {} vs q = {}'.format(x.q, y.q))
    if x.n != y.n:
        raise InvalidArgumentError(
            'length mismatch: n = {} vs n = {}'.format(x.n, y.n))


def additive_similarity(x, y):
    check_pair(x, y)
    return sum(a == b for a, b in zip(x.symbols, y.symbols))


def deletion_similarity(x, y):
    """Longest common subsequence length, by the quadratic LCS table."""
    check_pair(x, y)
    xs, ys = x.symbols, y.symbols
    n, m = len(xs), len(ys)
    table = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            if xs[i - 1] == ys[j - 1]:
                table[i][j] = table[i - 1][j - 1] + 1
            else:
                table[i][j] = max(table[i - 1][j], table[i][j - 1])
    return table[n][m]


def block_similarity(x, y):
    """Longest common block subsequence length.

    ending[i][j] is the longest block subsequence whose last matched pair
    is (x_i, y_j) (1-based), zero when x_i != y_j. A match either starts a
    new subsequence, extends the one ending at (i-1, j-1) adjacently in
    both sequences, or follows anything ending at (i', j') with
    i' <= i-2 and j' <= j-2 (a gap in both). best[i][j] is the prefix
    maximum of ending over i' <= i, j' <= j.
    """
    check_pair(x, y)
    xs, ys = x.symbols, y.symbols
    n, m = len(xs), len(ys)
    ending = [[0] * (m + 1) for _ in range(n + 1)]
    best = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            if xs[i - 1] == ys[j - 1]:
                value = 1
                if ending[i - 1][j - 1] > 0:
                    value = ending[i - 1][j - 1] + 1
                if i >= 2 and j >= 2:
                    value = max(value, best[i - 2][j - 2] + 1)
                ending[i][j] = value
            best[i][j] = max(best[i - 1][j], best[i][j - 1], ending[i][j])
    return best[n][m]


_SIMILARITIES = {
    SimilarityKind.ADDITIVE: additive_similarity,
    SimilarityKind.DELETION: deletion_similarity,
    SimilarityKind.BLOCK: block_similarity,
}


def similarity(kind, x, y):
    return _SIMILARITIES[SimilarityKind.parse(kind)](x, y)
