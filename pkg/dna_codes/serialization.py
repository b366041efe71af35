import enum
import json
from fractions import Fraction

import numpy as np

from dna_codes.config import Config
from dna_codes.sequences.qary_sequence import QarySequence


def fraction_text(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '{}/{}'.format(value.numerator, value.denominator)


def to_jsonable(value, acgt=None, digits=Config.FLOAT_DIGITS):
    """Convert report values into plain JSON types.

    Fractions become 'p/q' strings, floats are rounded to a fixed number
    of digits and sequences are rendered in the sequence text format.
    """
    if isinstance(value, dict):
        return {str(k): to_jsonable(v, acgt, digits) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v, acgt, digits) for v in value]
    if isinstance(value, QarySequence):
        return value.to_text(acgt=(value.q == 4) if acgt is None else acgt)
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return fraction_text(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return round(float(value), digits)
    return value


def dumps(payload, acgt=None, digits=Config.FLOAT_DIGITS):
    """Render a report dictionary as deterministic JSON."""
    document = dict(to_jsonable(payload, acgt, digits))
    document['schema_version'] = Config.SCHEMA_VERSION
    return json.dumps(document, sort_keys=True, indent=2)
