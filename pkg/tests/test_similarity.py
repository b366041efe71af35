import itertools

import numpy as np
import pytest
from hypothesis import given, settings

from dna_codes.errors import InvalidArgumentError, OracleLimitError
from dna_codes.sequences.qary_sequence import (
    QarySequence, enumerate_sequences, all_sequences_array, cyclic_shift,
    composition, parity_check_code, array_to_sequences, reverse_complement,
    sequences_to_array)
from dna_codes.similarity.similarity import (
    SimilarityKind, similarity, additive_similarity, deletion_similarity,
    block_similarity)
from dna_codes.similarity.batch import (
    pair_similarities, similarity_matrix, upper_pair_similarities,
    similarity_histogram)
from dna_codes.similarity.oracle import brute_force_similarity

from conftest import sequence_pairs

KINDS = list(SimilarityKind)


def seq(text, q=None):
    return QarySequence.from_text(text, q)


def test_parse_kind():
    assert SimilarityKind.parse('Block') is SimilarityKind.BLOCK
    assert SimilarityKind.parse(SimilarityKind.DELETION) is \
        SimilarityKind.DELETION
    with pytest.raises(InvalidArgumentError):
        SimilarityKind.parse('hamming')


def test_known_values():
    x, y = seq('0110'), seq('1001')
    assert additive_similarity(x, y) == 0
    assert deletion_similarity(x, y) == 2
    assert block_similarity(x, y) == 2
    # 0011 and 0110 share the block 011
    assert block_similarity(seq('0011'), seq('0110')) == 3
    # 101 is a block of both
    assert deletion_similarity(seq('0101'), seq('1010')) == 3
    assert block_similarity(seq('0101'), seq('1010')) == 3
    # 00 is spread in 010 but adjacent in 001; 01 is adjacent in both
    assert block_similarity(seq('010'), seq('001')) == 2


def test_block_requires_matching_gaps():
    x, y = seq('0102', q=4), seq('0012', q=4)
    assert deletion_similarity(x, y) == 3
    assert block_similarity(x, y) == 2


def test_mismatched_pair_is_rejected():
    with pytest.raises(InvalidArgumentError):
        similarity('deletion', seq('01'), seq('011'))
    with pytest.raises(InvalidArgumentError):
        similarity('deletion', seq('01'), seq('01', q=4))


@given(pair=sequence_pairs())
def test_similarity_ordering(pair):
    x, y = pair
    additive = additive_similarity(x, y)
    block = block_similarity(x, y)
    deletion = deletion_similarity(x, y)
    assert additive <= block <= deletion <= x.n
    assert block_similarity(x, y) == block_similarity(y, x)
    assert deletion_similarity(x, y) == deletion_similarity(y, x)
    assert similarity('block', x, x) == x.n


@given(pair=sequence_pairs())
@settings(max_examples=200)
def test_batch_kernels_match_scalar(pair):
    x, y = pair
    xs = np.array([x.symbols])
    ys = np.array([y.symbols])
    for kind in KINDS:
        assert pair_similarities(xs, ys, kind)[0] == similarity(kind, x, y)


@given(pair=sequence_pairs(max_length=6))
def test_oracle_matches_dynamic_programs(pair):
    x, y = pair
    for kind in KINDS:
        assert brute_force_similarity(kind, x, y) == similarity(kind, x, y)


@pytest.mark.parametrize('n', range(1, 7))
def test_oracle_exhaustive_binary(n):
    words = list(enumerate_sequences(2, n))
    array = all_sequences_array(2, n)
    for kind in (SimilarityKind.DELETION, SimilarityKind.BLOCK):
        matrix = similarity_matrix(array, array, kind)
        for i, x in enumerate(words):
            for j, y in enumerate(words):
                expected = brute_force_similarity(kind, x, y)
                assert similarity(kind, x, y) == expected
                assert matrix[i, j] == expected


@pytest.mark.slow
def test_oracle_random_quaternary():
    rng = np.random.default_rng(2024)
    for _ in range(10 ** 4):
        n = int(rng.integers(1, 11))
        x = QarySequence(4, tuple(rng.integers(0, 4, n)))
        y = QarySequence(4, tuple(rng.integers(0, 4, n)))
        for kind in (SimilarityKind.DELETION, SimilarityKind.BLOCK):
            assert similarity(kind, x, y) == \
                brute_force_similarity(kind, x, y)


def test_oracle_refuses_long_sequences():
    x = QarySequence(2, (0,) * 13)
    with pytest.raises(OracleLimitError):
        brute_force_similarity('deletion', x, x)
    assert brute_force_similarity('deletion', x, x, limit=13) == 13


def test_matrix_and_histogram():
    array = all_sequences_array(2, 2)
    matrix = similarity_matrix(array, array, 'block')
    assert matrix.shape == (4, 4)
    np.testing.assert_array_equal(np.diag(matrix), [2, 2, 2, 2])
    histogram = similarity_histogram(array, array, 'block')
    np.testing.assert_array_equal(histogram, [2, 10, 4])
    assert histogram.sum() == 16


def test_chunked_evaluation_matches():
    array = all_sequences_array(2, 5)
    full = similarity_matrix(array, array, 'deletion')
    chunked = similarity_matrix(array, array, 'deletion', chunk_size=7)
    np.testing.assert_array_equal(full, chunked)


def test_upper_pairs():
    array = all_sequences_array(2, 3)
    first, second, values = upper_pair_similarities(array, 'additive')
    assert len(values) == 8 * 7 // 2
    assert np.all(first < second)
    words = array_to_sequences(array, 2)
    for i, j, value in zip(first, second, values):
        assert value == additive_similarity(words[i], words[j])


def test_pair_shape_mismatch():
    with pytest.raises(InvalidArgumentError):
        pair_similarities(np.zeros((2, 3)), np.zeros((3, 3)), 'block')


@pytest.mark.parametrize('q, n', [(2, 4), (2, 6), (4, 4)])
def test_neighbouring_shifts_are_the_only_close_pairs(q, n):
    words = list(parity_check_code(q, n))
    array = np.array([x.symbols for x in words])
    first, second, values = upper_pair_similarities(array, 'block')
    for i, j, value in zip(first, second, values):
        x, y = words[i], words[j]
        neighbours = y in (cyclic_shift(x, 1), cyclic_shift(x, -1))
        assert (value == n - 1) == neighbours


@pytest.mark.parametrize('q, n', [(2, 4), (2, 6), (4, 4)])
def test_different_compositions_are_deletion_separated(q, n):
    words = list(parity_check_code(q, n))
    for x, y in itertools.combinations(words, 2):
        if composition(x) != composition(y):
            assert deletion_similarity(x, y) <= n - 2


@pytest.mark.parametrize('x, y, expected', [
    ((0, 1, 0, 1, 1, 0, 1, 1), (0, 0, 1, 0, 0, 1, 1, 0), (2, 6, 5)),
    ((0, 1, 1, 0, 0, 0, 1, 1, 1, 1), (0, 0, 0, 0, 1, 1, 1, 0, 0, 1),
     (4, 8, 6)),
])
def test_similarities_of_known_pairs(x, y, expected):
    x, y = QarySequence(2, x), QarySequence(2, y)
    assert (additive_similarity(x, y), deletion_similarity(x, y),
            block_similarity(x, y)) == expected
    for kind, value in zip(KINDS, expected):
        assert brute_force_similarity(kind, x, y, limit=10) == value


def test_reverse_complementary_pair_is_known():
    x = QarySequence(2, (0, 1, 1, 0, 0, 0, 1, 1, 1, 1))
    assert reverse_complement(x).symbols == (0, 0, 0, 0, 1, 1, 1, 0, 0, 1)


@pytest.mark.parametrize('n', range(1, 7))
def test_reverse_complement_preserves_similarity(n):
    words = list(enumerate_sequences(2, n))
    complements = [reverse_complement(x) for x in words]
    for kind in (SimilarityKind.DELETION, SimilarityKind.BLOCK):
        for (x, rx), (y, ry) in itertools.product(
                zip(words, complements), repeat=2):
            assert similarity(kind, x, y) == similarity(kind, rx, ry)


def test_wide_alphabet_letters_do_not_wrap():
    x = QarySequence(512, (300, 2))
    y = QarySequence(512, (44, 1))
    xs, ys = sequences_to_array([x]), sequences_to_array([y])
    assert xs.dtype == np.int16
    for kind in KINDS:
        assert pair_similarities(xs, ys, kind)[0] == similarity(kind, x, y)
        assert similarity(kind, x, y) == 0
