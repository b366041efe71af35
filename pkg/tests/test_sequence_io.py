import pytest

from dna_codes.errors import SequenceFormatError, InvalidArgumentError
from dna_codes.sequences.qary_sequence import QarySequence
from dna_codes.sequences.sequence_io import (
    parse_sequences, infer_alphabet, format_sequences, read_sequence_file,
    write_sequence_file)


def test_parse_skips_comments_and_blank_lines():
    lines = ['# header', '', '0110', '  1001  ', '# trailing']
    sequences = parse_sequences(lines)
    assert [x.symbols for x in sequences] == [(0, 1, 1, 0), (1, 0, 0, 1)]
    assert all(x.q == 2 for x in sequences)


def test_alphabet_is_inferred_for_the_whole_file():
    sequences = parse_sequences(['0101', '0303'])
    assert {x.q for x in sequences} == {4}
    assert infer_alphabet(['ACGT']) == 4
    assert infer_alphabet(['01'], q=6) == 6
    with pytest.raises(InvalidArgumentError):
        infer_alphabet(['ACGT'], q=2)


def test_length_mismatch_reports_line():
    with pytest.raises(SequenceFormatError) as excinfo:
        parse_sequences(['0110', '# comment', '011'], source='code.txt')
    assert excinfo.value.line_number == 3
    assert str(excinfo.value).startswith('code.txt:3:')


def test_bad_character_reports_line():
    with pytest.raises(SequenceFormatError, match='line 2'):
        parse_sequences(['0110', '01x0'])


def test_letter_outside_explicit_alphabet():
    with pytest.raises(SequenceFormatError):
        parse_sequences(['0120'], q=2)


def test_empty_input():
    with pytest.raises(SequenceFormatError, match='no sequences'):
        parse_sequences(['# nothing', ''])


def test_format_defaults_to_acgt_for_four_letters():
    words = [QarySequence(4, (0, 1, 0, 3)), QarySequence(4, (0, 3, 2, 3))]
    assert format_sequences(words) == 'ACAT\nATGT\n'
    assert format_sequences(words, acgt=False, header=['size: 2']) == \
        '# size: 2\n0103\n0323\n'


def test_file_round_trip(tmp_path, reference_code):
    original = reference_code('quaternary_deletion_optimal_22')
    path = tmp_path / 'code.txt'
    write_sequence_file(path, original, header=['round trip'])
    assert read_sequence_file(path) == original
    write_sequence_file(path, original, acgt=False)
    assert read_sequence_file(path, q=4) == original


def test_missing_file(tmp_path):
    with pytest.raises(OSError):
        read_sequence_file(tmp_path / 'absent.txt')
