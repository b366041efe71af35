"""Sequence text files.

One sequence per line, written with the digits 0-9 (q <= 10) or, for
q = 4, with the letters ACGT. Blank lines and lines starting with '#'
are ignored.
"""
import logging

from dna_codes.errors import InvalidArgumentError, SequenceFormatError
from dna_codes.sequences.qary_sequence import QarySequence, ACGT

logger = logging.getLogger(__name__)


def _content_lines(lines):
    for line_number, line in enumerate(lines, start=1):
        token = line.strip()
        if not token or token.startswith('#'):
            continue
        yield line_number, token


def infer_alphabet(tokens, q=None):
    """Pick q for a whole file.

    ACGT letters force q = 4. Otherwise an explicit q wins, otherwise the
    smallest even q above the largest digit.
    """
    letters = any(c in ACGT for token in tokens for c in token.upper()
                  if not c.isdigit())
    if letters:
        if q is not None and q != 4:
            raise InvalidArgumentError(
                'ACGT letters require q = 4, got q = {}'.format(q))
        return 4
    if q is not None:
        return q
    digits = [int(c) for token in tokens for c in token if c.isdigit()]
    top = max(digits) if digits else 0
    return max(2, top + 1 + (top + 1) % 2)


def parse_sequences(lines, q=None, source=None):
    """Parse sequence text into QarySequences.

    Inputs:
        lines: Iterable of text lines.
        q: Alphabet size, inferred from the text when omitted.
        source: File name used in diagnostics.

    Returns:
        sequences: List of QarySequence in file order, all of one length.
    """
    numbered = list(_content_lines(lines))
    if not numbered:
        raise SequenceFormatError('no sequences found', source=source,
                                  line_number=None)
    try:
        q = infer_alphabet([token for _, token in numbered], q)
    except InvalidArgumentError as e:
        raise SequenceFormatError(str(e), source=source)

    sequences = []
    length = None
    for line_number, token in numbered:
        try:
            x = QarySequence.from_text(token, q)
        except InvalidArgumentError as e:
            raise SequenceFormatError(str(e), line_number, source)
        if length is None:
            length = x.n
        elif x.n != length:
            raise SequenceFormatError(
                'length {} differs from length {} of the first sequence'
                .format(x.n, length), line_number, source)
        sequences.append(x)
    logger.debug('[*] Parsed %d sequences (q=%d, n=%d)', len(sequences), q,
                 length)
    return sequences


def read_sequence_file(path, q=None):
    with open(path, 'r') as read_file:
        return parse_sequences(read_file, q=q, source=str(path))


def format_sequences(sequences, acgt=None, header=None):
    """Render sequences one per line.

    Inputs:
        sequences: Iterable of QarySequence.
        acgt: Emit ACGT letters for q = 4. Defaults to on for q = 4.
        header: Optional list of comment lines written first.

    Returns:
        text: The file contents, newline terminated.
    """
    lines = ['# ' + line for line in (header or [])]
    for x in sequences:
        use_letters = (x.q == 4) if acgt is None else acgt
        lines.append(x.to_text(acgt=use_letters))
    return '\n'.join(lines) + '\n' if lines else ''


def write_sequence_file(path, sequences, acgt=None, header=None):
    with open(path, 'w') as write_file:
        write_file.write(format_sequences(sequences, acgt, header))
    logger.info('[*] Wrote sequences to %s', path)
