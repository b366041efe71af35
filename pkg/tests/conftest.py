import os

import pytest
from hypothesis import strategies as st

from dna_codes.sequences.qary_sequence import QarySequence
from dna_codes.sequences.sequence_io import read_sequence_file

EXAMPLES_DIR = os.path.join(os.path.dirname(os.path.dirname(
    os.path.abspath(__file__))), 'datasets', 'reference_codes')


def example_path(name):
    return os.path.join(EXAMPLES_DIR, name + '.txt')


@pytest.fixture
def reference_code():
    """Load a shipped example code by file stem."""
    def load(name):
        return read_sequence_file(example_path(name))
    return load


@st.composite
def sequence_pairs(draw, alphabets=(2, 4, 6), max_length=7):
    q = draw(st.sampled_from(alphabets))
    n = draw(st.integers(min_value=1, max_value=max_length))
    letters = st.lists(st.integers(min_value=0, max_value=q - 1),
                       min_size=n, max_size=n)
    return (QarySequence(q, tuple(draw(letters))),
            QarySequence(q, tuple(draw(letters))))


@st.composite
def sequences(draw, alphabets=(2, 4, 6), max_length=8):
    q = draw(st.sampled_from(alphabets))
    n = draw(st.integers(min_value=1, max_value=max_length))
    return QarySequence(q, tuple(draw(st.lists(
        st.integers(min_value=0, max_value=q - 1), min_size=n,
        max_size=n))))
