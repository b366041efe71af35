import os
import json
import logging

from dna_codes.errors import InvalidArgumentError, EnumerationLimitError

logger = logging.getLogger(__name__)


class Config(object):
    """Desk-scale limits shared by the library and the command-line tool.

    Values are class attributes so a sub-class, a JSON file or the
    environment can override them.
    """
    NAME = 'desk-scale'

    # Largest number of sequences (or sequence pairs) any operation may
    # enumerate exhaustively.
    ENUMERATION_CAP = 2 ** 26

    # Longest sequence the brute-force similarity oracle accepts.
    ORACLE_LIMIT = 12

    # Wall-clock budget of a maximum code search, in seconds.
    SEARCH_BUDGET = 600.0

    # JSON output
    SCHEMA_VERSION = 1
    FLOAT_DIGITS = 10

    ENV_ENUMERATION_CAP = 'DNA_CODES_ENUMERATION_CAP'

    def __init__(self, config_path=None):
        """Load configuration overrides.

        Inputs:
            config_path: Optional path to a JSON file with any of the keys
                name, enumeration_cap, oracle_limit, search_budget.
        """
        if config_path is not None:
            try:
                with open(config_path, 'r') as read_file:
                    overrides = json.load(read_file)
            except (OSError, ValueError) as e:
                raise InvalidArgumentError(
                    'cannot load config {}: {}'.format(config_path, e))
            self.NAME = overrides.get('name', self.NAME)
            self.ENUMERATION_CAP = overrides.get('enumeration_cap',
                                                 self.ENUMERATION_CAP)
            self.ORACLE_LIMIT = overrides.get('oracle_limit',
                                              self.ORACLE_LIMIT)
            self.SEARCH_BUDGET = overrides.get('search_budget',
                                               self.SEARCH_BUDGET)
            logger.debug('[*] Loaded config overrides from %s', config_path)

        env_cap = os.environ.get(self.ENV_ENUMERATION_CAP)
        if env_cap:
            self.ENUMERATION_CAP = _parse_positive_int(
                env_cap, self.ENV_ENUMERATION_CAP)

        self.ENUMERATION_CAP = _positive(int(self.ENUMERATION_CAP),
                                         'enumeration_cap')
        self.ORACLE_LIMIT = _positive(int(self.ORACLE_LIMIT), 'oracle_limit')
        self.SEARCH_BUDGET = _positive(float(self.SEARCH_BUDGET),
                                       'search_budget')

    def display(self):
        """Log configuration values."""
        logger.info('[*] Configuration:')
        for a in dir(self):
            if a.isupper() and not callable(getattr(self, a)):
                logger.info('%-30s %s', a, getattr(self, a))


def _positive(value, name):
    if value <= 0:
        raise InvalidArgumentError('{} must be positive, got {}'.format(
            name, value))
    return value


def _parse_positive_int(text, name):
    try:
        value = int(text)
    except ValueError:
        raise InvalidArgumentError('{} must be an integer, got {!r}'.format(
            name, text))
    return _positive(value, name)


def resolve_enumeration_cap(cap=None):
    """Return the effective enumeration cap.

    An explicit cap wins, then the environment variable, then the default.
    """
    if cap is not None:
        return _positive(int(cap), 'enumeration cap')
    env_cap = os.environ.get(Config.ENV_ENUMERATION_CAP)
    if env_cap:
        return _parse_positive_int(env_cap, Config.ENV_ENUMERATION_CAP)
    return Config.ENUMERATION_CAP


def resolve_oracle_limit(limit=None):
    if limit is not None:
        return _positive(int(limit), 'oracle limit')
    return Config.ORACLE_LIMIT


def check_enumeration(what, required, cap=None):
    """Raise EnumerationLimitError when required exceeds the cap.

    Returns:
        cap: The effective cap.
    """
    cap = resolve_enumeration_cap(cap)
    if required > cap:
        raise EnumerationLimitError(what, required, cap)
    return cap
