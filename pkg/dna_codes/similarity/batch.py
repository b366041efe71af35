"""Vectorised similarity kernels over arrays of sequence pairs.

Sequences are rows of integer matrices. Every kernel evaluates the same
dynamic programs as dna_codes.similarity.similarity, one table cell at a
time for all pairs at once.
"""
import numpy as np

from dna_codes.errors import InvalidArgumentError
from dna_codes.similarity.similarity import SimilarityKind

# Pairs evaluated per kernel call
CHUNK_SIZE = 2 ** 16


def _letters(array):
    array = np.asarray(array)
    if array.dtype.kind not in 'iu':
        raise InvalidArgumentError(
            'sequence arrays must hold integer letters, got {}'.format(
                array.dtype))
    return array


def _deletion_kernel(xs, ys):
    pairs, n = xs.shape
    m = ys.shape[1]
    eq = xs[:, :, None] == ys[:, None, :]
    prev = np.zeros((pairs, m + 1), dtype=np.int16)
    for i in range(n):
        cur = np.zeros((pairs, m + 1), dtype=np.int16)
        for j in range(m):
            cur[:, j + 1] = np.where(eq[:, i, j], prev[:, j] + 1,
                                     np.maximum(prev[:, j + 1], cur[:, j]))
        prev = cur
    return prev[:, m]


def _block_kernel(xs, ys):
    pairs, n = xs.shape
    m = ys.shape[1]
    eq = xs[:, :, None] == ys[:, None, :]
    # Rows i-1 and i-2 of the prefix maxima, row i-1 of the match table
    ending_prev = np.zeros((pairs, m + 1), dtype=np.int16)
    best_prev = np.zeros((pairs, m + 1), dtype=np.int16)
    best_prev2 = np.zeros((pairs, m + 1), dtype=np.int16)
    for i in range(n):
        ending_cur = np.zeros((pairs, m + 1), dtype=np.int16)
        best_cur = np.zeros((pairs, m + 1), dtype=np.int16)
        for j in range(m):
            candidate = np.where(ending_prev[:, j] > 0,
                                 ending_prev[:, j] + 1, 1)
            if i >= 1 and j >= 1:
                candidate = np.maximum(candidate, best_prev2[:, j - 1] + 1)
            ending_cur[:, j + 1] = np.where(eq[:, i, j], candidate, 0)
            best_cur[:, j + 1] = np.maximum(
                np.maximum(best_prev[:, j + 1], best_cur[:, j]),
                ending_cur[:, j + 1])
        best_prev2, best_prev = best_prev, best_cur
        ending_prev = ending_cur
    return best_prev[:, m]


def _additive_kernel(xs, ys):
    return (xs == ys).sum(axis=1)


_KERNELS = {
    SimilarityKind.ADDITIVE: _additive_kernel,
    SimilarityKind.DELETION: _deletion_kernel,
    SimilarityKind.BLOCK: _block_kernel,
}


def pair_similarities(xs, ys, kind, chunk_size=CHUNK_SIZE):
    """Similarity of each aligned row pair (xs[k], ys[k]).

    Inputs:
        xs, ys: Integer matrices of equal shape (P, n).
        kind: SimilarityKind or its name.
        chunk_size: Pairs evaluated per kernel call.

    Returns:
        values: int64 array of length P.
    """
    kind = SimilarityKind.parse(kind)
    xs = _letters(xs)
    ys = _letters(ys)
    if xs.shape != ys.shape or xs.ndim != 2:
        raise InvalidArgumentError(
            'pair arrays must share a 2-d shape, got {} and {}'.format(
                xs.shape, ys.shape))
    kernel = _KERNELS[kind]
    values = np.empty(xs.shape[0], dtype=np.int64)
    for start in range(0, xs.shape[0], chunk_size):
        stop = start + chunk_size
        values[start:stop] = kernel(xs[start:stop], ys[start:stop])
    return values


def similarity_matrix(a, b, kind, chunk_size=CHUNK_SIZE):
    """All-pairs similarity matrix M[i, j] = S(a[i], b[j])."""
    a = _letters(a)
    b = _letters(b)
    rows, cols = a.shape[0], b.shape[0]
    flat = np.empty(rows * cols, dtype=np.int64)
    for start in range(0, rows * cols, chunk_size):
        index = np.arange(start, min(start + chunk_size, rows * cols))
        flat[index] = pair_similarities(a[index // cols], b[index % cols],
                                        kind, chunk_size)
    return flat.reshape(rows, cols)


def upper_pair_similarities(array, kind, chunk_size=CHUNK_SIZE):
    """Similarities of every unordered pair i < j of rows.

    Returns:
        first, second, values: Row indices and similarity per pair, in
        row-major (i, j) order.
    """
    array = _letters(array)
    first, second = np.triu_indices(array.shape[0], k=1)
    values = pair_similarities(array[first], array[second], kind, chunk_size)
    return first, second, values


def similarity_histogram(a, b, kind, chunk_size=CHUNK_SIZE):
    """Counts of S(a[i], b[j]) = s over all ordered pairs, s = 0..n."""
    a = _letters(a)
    b = _letters(b)
    n = a.shape[1]
    rows, cols = a.shape[0], b.shape[0]
    counts = np.zeros(n + 1, dtype=np.int64)
    for start in range(0, rows * cols, chunk_size):
        index = np.arange(start, min(start + chunk_size, rows * cols))
        values = pair_similarities(a[index // cols], b[index % cols], kind,
                                   chunk_size)
        counts += np.bincount(values, minlength=n + 1)
    return counts
