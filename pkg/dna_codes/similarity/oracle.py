"""Exhaustive similarity oracle used to cross-check the fast kernels."""
import itertools

from dna_codes.config import resolve_oracle_limit
from dna_codes.errors import OracleLimitError
from dna_codes.similarity.similarity import SimilarityKind, check_pair


def _embeds(x_positions, xs, ys, block):
    """Whether the letters of xs at x_positions embed into ys.

    With block=True, consecutive positions must be adjacent in ys exactly
    when they are adjacent in xs.
    """
    k = len(x_positions)
    m = len(ys)

    def extend(index, previous):
        if index == k:
            return True
        letter = xs[x_positions[index]]
        if index == 0:
            candidates = range(m)
        elif not block:
            candidates = range(previous + 1, m)
        elif x_positions[index] == x_positions[index - 1] + 1:
            candidates = range(previous + 1, min(previous + 2, m))
        else:
            candidates = range(previous + 2, m)
        for j in candidates:
            if ys[j] == letter and extend(index + 1, j):
                return True
        return False

    return extend(0, -1)


def brute_force_similarity(kind, x, y, limit=None):
    """Similarity by enumerating index embeddings.

    Subsets of positions of x are tried from the largest size down; the
    first size with an admissible embedding into y is the similarity.

    Inputs:
        kind: SimilarityKind or its name.
        x, y: Sequences of equal length and alphabet.
        limit: Longest accepted length, the configured oracle limit
            when omitted.

    Returns:
        value: The similarity S(x, y).
    """
    kind = SimilarityKind.parse(kind)
    check_pair(x, y)
    limit = resolve_oracle_limit(limit)
    if x.n > limit:
        raise OracleLimitError(x.n, limit)

    xs, ys = x.symbols, y.symbols
    if kind is SimilarityKind.ADDITIVE:
        return sum(1 for i in range(x.n) if xs[i] == ys[i])

    block = kind is SimilarityKind.BLOCK
    for size in range(x.n, 0, -1):
        for positions in itertools.combinations(range(x.n), size):
            if _embeds(positions, xs, ys, block):
                return size
    return 0
