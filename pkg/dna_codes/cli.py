"""Command-line tool for DNA codes.

Exit codes: 0 success, 1 validation failure (or numerical failure),
2 usage or input error, 3 refused (enumeration cap, oracle limit or an
exhausted search budget).
"""
import sys
import logging
import argparse

import numpy as np
import pandas as pd

from dna_codes import serialization
from dna_codes.config import Config
from dna_codes.errors import (
    InvalidArgumentError, UnsupportedParametersError, EnumerationLimitError,
    NumericalFailureError, ConstructionError)
from dna_codes.sequences.qary_sequence import reverse_complement, \
    sequences_to_array
from dna_codes.sequences.sequence_io import (
    read_sequence_file, format_sequences, write_sequence_file)
from dna_codes.similarity.similarity import SimilarityKind
from dna_codes.similarity.batch import similarity_matrix
from dna_codes.similarity.oracle import brute_force_similarity
from dna_codes.code_model import (
    validate_dna_code, validate_distance_only, theorem21_upper_bound,
    hamming_upper_bound, asymptotic_deletion_upper)
from dna_codes.constructions.orbit_construction import construct_theorem31
from dna_codes.constructions.tenengolts import (
    tenengolts_code, best_tenengolts_class)
from dna_codes.constructions.symmetrization import (
    symmetrize_theorem32, corollary_lower_bound)
from dna_codes.search.code_search import max_code
from dna_codes.search.distribution import enumerate_distribution
from dna_codes.bounds.bound_report import BoundReport, BoundMode
from dna_codes.bounds.random_coding import (
    random_coding_size_bound, asymptotic_size_lower)
from dna_codes.bounds.rates import (
    rate_lower, critical_fraction, rate_curve, rate_domain)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_REFUSED = 3

KINDS = [kind.value for kind in SimilarityKind]


class DnaCodesTool():
    """Dispatches the dna-codes subcommands."""
    def __init__(self, stdout=None):
        """Inputs:
            stdout: Stream results are written to, sys.stdout by default.
        """
        self._stdout = stdout

    def run(self, argv=None):
        """Parse arguments, run one subcommand and return its exit code."""
        try:
            self.args = self.__parse_args(argv)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else EXIT_USAGE

        logging.basicConfig(
            level=logging.DEBUG if self.args.verbose else logging.WARNING,
            format='%(message)s', stream=sys.stderr, force=True)
        try:
            self.config = Config(self.args.config)
            if self.args.cap is not None:
                self.config.ENUMERATION_CAP = self.args.cap
            if self.args.oracle_limit is not None:
                self.config.ORACLE_LIMIT = self.args.oracle_limit
            if self.args.seed is not None:
                logger.debug('[*] --seed %d ignored, all algorithms are '
                             'deterministic', self.args.seed)
            if self.args.verbose:
                self.config.display()
            return self.args.handler()
        except (InvalidArgumentError, UnsupportedParametersError,
                OSError) as e:
            logger.error('[!] error: %s', e)
            return EXIT_USAGE
        except EnumerationLimitError as e:
            logger.error('[!] %s', e)
            return EXIT_REFUSED
        except (NumericalFailureError, ConstructionError) as e:
            logger.error('[!] failure: %s', e)
            return EXIT_INVALID

    def __parse_args(self, argv):
        """Parse command-line input arguments.

        Returns:
            args: The arguments object.
        """
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument('--format', type=str, default=None,
                            choices=['text', 'json', 'csv'],
                            help='Output format.')
        common.add_argument('--config', type=str, default=None,
                            help='JSON file with limit overrides.',
                            metavar='/path/to/config.json')
        common.add_argument('--cap', type=int, default=None,
                            help='Enumeration cap (number of items).',
                            metavar='<cap>')
        common.add_argument('--oracle-limit', type=int, default=None,
                            help='Longest sequence for the brute-force '
                                 'oracle.',
                            metavar='<n>')
        common.add_argument('--seed', type=int, default=None,
                            help='Reserved, all algorithms are '
                                 'deterministic.',
                            metavar='<seed>')
        common.add_argument('--digits', action='store_true', default=False,
                            help='Write q = 4 sequences as digits instead '
                                 'of ACGT.')
        common.add_argument('--verbose', action='store_true', default=False,
                            help='Log progress to stderr.')

        parser = argparse.ArgumentParser(
            prog='dna-codes',
            description='Construct, validate, search and bound DNA codes.')
        commands = parser.add_subparsers(dest='command', metavar='command')
        commands.required = True

        similarity = commands.add_parser(
            'similarity', parents=[common],
            help='Pairwise similarity matrix of a sequence file.')
        similarity.add_argument('--kind', choices=KINDS, required=True)
        similarity.add_argument('--oracle', action='store_true',
                                help='Use the brute-force oracle.')
        similarity.add_argument('--q', type=int, default=None)
        similarity.add_argument('seqfile', type=str)
        similarity.set_defaults(handler=self._similarity)

        revcomp = commands.add_parser(
            'revcomp', parents=[common],
            help='Reverse complement every sequence of a file.')
        revcomp.add_argument('--q', type=int, default=None)
        revcomp.add_argument('seqfile', type=str)
        revcomp.set_defaults(handler=self._revcomp)

        validate = commands.add_parser(
            'validate', parents=[common],
            help='Check a code against the DNA code conditions.')
        validate.add_argument('--kind', choices=KINDS, required=True)
        validate.add_argument('--distance', type=int, required=True)
        mode = validate.add_mutually_exclusive_group()
        mode.add_argument('--dna', dest='dna', action='store_true',
                          default=True)
        mode.add_argument('--distance-only', dest='dna',
                          action='store_false')
        validate.add_argument('--fail-fast', action='store_true')
        validate.add_argument('--q', type=int, default=None)
        validate.add_argument('seqfile', type=str)
        validate.set_defaults(handler=self._validate)

        construct = commands.add_parser(
            'construct', parents=[common],
            help='Orbit construction (31) or symmetrization (32).')
        construct.add_argument('--theorem', choices=['31', '32'],
                               required=True)
        construct.add_argument('--q', type=int, required=True)
        construct.add_argument('--n', type=int, required=True)
        construct.add_argument('--input', type=str, default=None,
                               help='Code to symmetrize (theorem 32); the '
                                    'best Tenengolts class by default.')
        construct.add_argument('--output', type=str, default=None)
        construct.set_defaults(handler=self._construct)

        tenengolts = commands.add_parser(
            'tenengolts', parents=[common],
            help='Tenengolts single-deletion codes.')
        tenengolts.add_argument('--q', type=int, required=True)
        tenengolts.add_argument('--n', type=int, required=True)
        choice = tenengolts.add_mutually_exclusive_group(required=True)
        choice.add_argument('--best', action='store_true')
        choice.add_argument('--beta', type=int, default=None)
        tenengolts.add_argument('--gamma', type=int, default=None)
        tenengolts.add_argument('--output', type=str, default=None)
        tenengolts.set_defaults(handler=self._tenengolts)

        search = commands.add_parser(
            'search', parents=[common],
            help='Largest code by maximum clique search.')
        search.add_argument('--q', type=int, required=True)
        search.add_argument('--n', type=int, required=True)
        search.add_argument('--distance', type=int, required=True)
        search.add_argument('--kind', choices=KINDS, required=True)
        search.add_argument('--mode', choices=['dna', 'distance-only'],
                            default='dna')
        search.add_argument('--budget', type=float, default=None,
                            metavar='SECONDS')
        search.add_argument('--output', type=str, default=None)
        search.set_defaults(handler=self._search)

        enumerate_ = commands.add_parser(
            'enumerate', parents=[common],
            help='Exact similarity distribution table.')
        enumerate_.add_argument('--q', type=int, required=True)
        enumerate_.add_argument('--n', type=int, required=True)
        enumerate_.add_argument('--kind', choices=KINDS, required=True)
        enumerate_.set_defaults(handler=self._enumerate)

        bounds = commands.add_parser('bounds', help='Analytic bounds.')
        which = bounds.add_subparsers(dest='bound', metavar='bound')
        which.required = True
        critical = which.add_parser('critical', parents=[common])
        critical.add_argument('--q', type=int, required=True)
        critical.add_argument('--kind', choices=['deletion', 'block'],
                              required=True)
        critical.set_defaults(handler=self._bounds_critical)
        rate = which.add_parser('rate', parents=[common])
        rate.add_argument('--q', type=int, required=True)
        rate.add_argument('--d', type=float, required=True)
        rate.add_argument('--kind', choices=KINDS, required=True)
        rate.set_defaults(handler=self._bounds_rate)
        size = which.add_parser('size', parents=[common])
        size.add_argument('--q', type=int, required=True)
        size.add_argument('--n', type=int, required=True)
        size.add_argument('--distance', type=int, required=True)
        size.add_argument('--kind', choices=KINDS, required=True)
        size.add_argument('--mode', default='exact',
                          choices=['exact', 'analytic', 'asymptotic'])
        size.set_defaults(handler=self._bounds_size)
        curve = which.add_parser('curve', parents=[common])
        curve.add_argument('--q', type=int, required=True)
        curve.add_argument('--kind', choices=KINDS, required=True)
        curve.add_argument('--start', type=float, default=0.01)
        curve.add_argument('--stop', type=float, default=None,
                           help='Last d, the end of the domain by default.')
        curve.add_argument('--points', type=int, default=50)
        curve.set_defaults(handler=self._bounds_curve)
        upper = which.add_parser('upper', parents=[common])
        upper.add_argument('--q', type=int, required=True)
        upper.add_argument('--n', type=int, required=True)
        upper.add_argument('--distance', type=int, required=True)
        upper.set_defaults(handler=self._bounds_upper)

        return parser.parse_args(argv)

    # Output helpers

    def _write(self, text):
        stream = self._stdout or sys.stdout
        stream.write(text if text.endswith('\n') else text + '\n')

    def _format(self, default):
        return self.args.format or default

    def _acgt(self):
        return False if self.args.digits else None

    def _emit_json(self, payload):
        self._write(serialization.dumps(payload, acgt=self._acgt()))

    def _emit_code(self, code, report):
        """Write a code and its report in the selected format."""
        if getattr(self.args, 'output', None):
            write_sequence_file(self.args.output, code, acgt=self._acgt())
        if self._format('json') == 'json':
            payload = dict(report)
            payload['code'] = list(code)
            self._emit_json(payload)
            return
        plain = serialization.to_jsonable(report, acgt=self._acgt())
        header = ['{}: {}'.format(key, plain[key]) for key in sorted(plain)]
        self._write(format_sequences(code, acgt=self._acgt(), header=header))

    def _emit_frame(self, frame, default='csv'):
        selected = self._format(default)
        if selected == 'csv':
            self._write(frame.to_csv(index=False))
        elif selected == 'json':
            self._emit_json({'rows': frame.to_dict(orient='records')})
        else:
            self._write(frame.to_string(index=False))

    def _emit_report(self, report):
        selected = self._format('json')
        if selected == 'json':
            self._emit_json(report.to_dict())
        else:
            frame = pd.DataFrame([serialization.to_jsonable(
                {k: v for k, v in report.to_dict().items()
                 if not isinstance(v, dict)})])
            self._emit_frame(frame, default=selected)

    # Subcommands

    def _read(self):
        return read_sequence_file(self.args.seqfile, q=self.args.q)

    def _similarity(self):
        sequences = self._read()
        kind = SimilarityKind.parse(self.args.kind)
        if self.args.oracle:
            matrix = np.array(
                [[brute_force_similarity(kind, x, y,
                                         self.config.ORACLE_LIMIT)
                  for y in sequences] for x in sequences], dtype=np.int64)
        else:
            array = sequences_to_array(sequences)
            matrix = similarity_matrix(array, array, kind)
        labels = [x.to_text(acgt=x.q == 4 and not self.args.digits)
                  for x in sequences]
        if self._format('text') == 'json':
            self._emit_json({'kind': kind, 'sequences': sequences,
                             'matrix': matrix.tolist()})
            return EXIT_OK
        frame = pd.DataFrame(matrix, index=labels, columns=labels)
        if self._format('text') == 'csv':
            self._write(frame.to_csv(index_label='sequence'))
        else:
            self._write(frame.to_string())
        return EXIT_OK

    def _revcomp(self):
        sequences = self._read()
        complements = [reverse_complement(x) for x in sequences]
        if self._format('text') == 'json':
            self._emit_json({'pairs': [[x, y] for x, y
                                       in zip(sequences, complements)]})
        else:
            self._write(format_sequences(complements, acgt=self._acgt()))
        return EXIT_OK

    def _validate(self):
        sequences = self._read()
        validator = validate_dna_code if self.args.dna \
            else validate_distance_only
        report = validator(sequences, self.args.kind, self.args.distance,
                           fail_fast=self.args.fail_fast)
        if self._format('text') == 'json':
            self._emit_json(report.to_dict())
        else:
            lines = ['# mode: {}'.format(report.mode),
                     '# valid: {}'.format(str(report.valid).lower()),
                     '# size: {}'.format(report.size),
                     '# max_observed_similarity: {}'.format(
                         report.max_observed_similarity),
                     '# violations: {}'.format(len(report.violations))]
            for record in serialization.to_jsonable(
                    [v.to_dict() for v in report.violations],
                    acgt=self._acgt()):
                parts = [record['kind']] + record['codewords']
                if 'similarity' in record:
                    parts.append('similarity={}'.format(record['similarity']))
                if 'reason' in record:
                    parts.append(record['reason'])
                lines.append(' '.join(str(p) for p in parts))
            self._write('\n'.join(lines))
        return EXIT_OK if report.valid else EXIT_INVALID

    def _construct(self):
        cap = self.config.ENUMERATION_CAP
        if self.args.theorem == '31':
            report = construct_theorem31(self.args.q, self.args.n, cap)
        else:
            if self.args.input:
                code = read_sequence_file(self.args.input, q=self.args.q)
            else:
                _, code = best_tenengolts_class(self.args.q, self.args.n, cap)
            report = symmetrize_theorem32(code)
        self._emit_code(report.code.codewords, report.to_dict())
        return EXIT_OK

    def _tenengolts(self):
        q, n = self.args.q, self.args.n
        cap = self.config.ENUMERATION_CAP
        if self.args.best:
            beta = 0
            gamma, code = best_tenengolts_class(q, n, cap)
        else:
            if self.args.gamma is None:
                raise InvalidArgumentError('--beta requires --gamma')
            beta, gamma = self.args.beta, self.args.gamma
            code = tenengolts_code(q, n, beta, gamma, cap)
        report = {'q': q, 'n': n, 'beta': beta, 'gamma': gamma,
                  'size': len(code)}
        try:
            report['corollary_lower_bound'] = corollary_lower_bound(q, n)
        except UnsupportedParametersError:
            pass
        self._emit_code(code, report)
        return EXIT_OK

    def _search(self):
        budget = self.args.budget
        if budget is None:
            budget = self.config.SEARCH_BUDGET
        result = max_code(self.args.q, self.args.n, self.args.distance,
                          self.args.kind, self.args.mode, budget,
                          self.config.ENUMERATION_CAP)
        report = result.to_dict()
        code = report.pop('code')
        self._emit_code(code, report)
        return EXIT_OK if result.optimal else EXIT_REFUSED

    def _enumerate(self):
        table = enumerate_distribution(self.args.q, self.args.n,
                                       self.args.kind,
                                       self.config.ENUMERATION_CAP)
        if self._format('csv') == 'json':
            self._emit_json(table.to_dict())
        else:
            self._emit_frame(table.to_frame())
        return EXIT_OK

    def _bounds_critical(self):
        point = critical_fraction(self.args.q, self.args.kind)
        self._emit_report(point)
        return EXIT_OK

    def _bounds_rate(self):
        self._emit_report(rate_lower(self.args.q, self.args.d,
                                     self.args.kind))
        return EXIT_OK

    def _bounds_size(self):
        args = self.args
        if args.mode == 'asymptotic':
            report = asymptotic_size_lower(args.q, args.n, args.distance,
                                           args.kind)
        else:
            report = random_coding_size_bound(
                args.q, args.n, args.distance, args.kind, args.mode,
                self.config.ENUMERATION_CAP)
        self._emit_report(report)
        return EXIT_OK

    def _bounds_curve(self):
        stop = self.args.stop
        if stop is None:
            stop = rate_domain(self.args.q, self.args.kind)
        if self.args.points < 1:
            raise InvalidArgumentError('--points must be positive')
        grid = np.linspace(self.args.start, stop, self.args.points)
        self._emit_frame(rate_curve(self.args.q, self.args.kind, grid))
        return EXIT_OK

    def _bounds_upper(self):
        q, n, distance = self.args.q, self.args.n, self.args.distance
        params = {'q': q, 'n': n, 'D': distance}
        reports = [BoundReport('hamming_upper_bound', params,
                               hamming_upper_bound(q, n, distance),
                               BoundMode.EXACT)]
        if distance == 1:
            reports.append(BoundReport(
                'theorem21_upper_bound', {'q': q, 'n': n},
                theorem21_upper_bound(q, n), BoundMode.EXACT,
                note='block similarity, distance 1'))
        reports.append(asymptotic_deletion_upper(q, n, distance))
        if self._format('json') == 'json':
            self._emit_json({'bounds': [r.to_dict() for r in reports]})
        else:
            frame = pd.DataFrame([{
                'name': r.name, 'value': serialization.to_jsonable(r.value),
                'mode': r.mode.value} for r in reports])
            self._emit_frame(frame, default=self._format('json'))
        return EXIT_OK


def run(argv=None, stdout=None):
    """Run the tool on argv and return the exit code."""
    return DnaCodesTool(stdout).run(argv)


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
