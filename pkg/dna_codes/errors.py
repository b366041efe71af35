"""Exceptions raised by the dna_codes package.

The command-line tool maps each family onto an exit code:
invalid arguments and unsupported parameters exit with 2, refusals
(enumeration cap, oracle limit) exit with 3.
"""


class DnaCodesError(Exception):
    """Base class of all package errors."""


class InvalidArgumentError(DnaCodesError, ValueError):
    """Argument outside the domain of an operation."""


class SequenceFormatError(InvalidArgumentError):
    """Malformed line in a sequence text file."""
    def __init__(self, message, line_number=None, source=None):
        self.line_number = line_number
        self.source = source
        if line_number is not None:
            prefix = '{}:{}'.format(source, line_number) if source \
                else 'line {}'.format(line_number)
            message = '{}: {}'.format(prefix, message)
        super().__init__(message)


class UnsupportedParametersError(DnaCodesError, ValueError):
    """Parameters valid in general but not handled by a construction."""


class EnumerationLimitError(DnaCodesError, RuntimeError):
    """Full enumeration refused because it exceeds the configured cap."""
    def __init__(self, what, required, cap):
        self.what = what
        self.required = required
        self.cap = cap
        super().__init__(
            'refused: {} requires enumerating {} items, cap is {} '
            '(raise it with --cap or DNA_CODES_ENUMERATION_CAP)'.format(
                what, required, cap))


class OracleLimitError(EnumerationLimitError):
    """Brute-force similarity refused for sequences over the oracle limit."""
    def __init__(self, length, limit):
        self.length = length
        self.limit = limit
        DnaCodesError.__init__(
            self,
            'refused: brute-force oracle limited to n <= {}, got n = {}'
            .format(limit, length))
        self.what = 'brute-force oracle'
        self.required = length
        self.cap = limit


class NumericalFailureError(DnaCodesError, ArithmeticError):
    """Root finding or fixed-point iteration did not converge."""


class ConstructionError(DnaCodesError, RuntimeError):
    """A constructed code failed its own post-validation."""
