#!/usr/bin/env python
# Copyright 2026 The pellkit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License"); you may
# not use this file except in compliance with the License. You may obtain
# a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
# WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
# License for the specific language governing permissions and limitations
# under the License.

import argparse
import logging
import os
import signal
import sys
import time

import voluptuous as v
import yaml

import pellkit.cmd
from pellkit import cf
from pellkit import configvalidator
from pellkit import exceptions
from pellkit import family
from pellkit import formatter
from pellkit import model
from pellkit import oracle
from pellkit import pell

EXIT_OK = 0
EXIT_DISCREPANCY = 1
EXIT_DOMAIN_ERROR = 2
EXIT_UNDETERMINED = 3

BOUND_ENVIRONMENT = 'PELLKIT_BOUND'


class Client(pellkit.cmd.PellApp):
    log = logging.getLogger("pellkit.Client")

    def parse_arguments(self, args=None):
        parser = argparse.ArgumentParser(
            description='Exact solver for x^2 - d*y^2 = N, N in '
                        '{1, -1, 4, -4}.')
        parser.add_argument('-c', dest='config',
                            help='specify the config file')
        parser.add_argument('-v', dest='verbose', action='store_true',
                            help='verbose output')
        parser.add_argument('--version', dest='version', action='version',
                            version=self._get_version(),
                            help='show pellkit version')

        output = argparse.ArgumentParser(add_help=False)
        output.add_argument('--format', choices=['text', 'json'],
                            default='text', help='output format')
        output.add_argument('--timing', action='store_true',
                            help='report the elapsed time')

        subparsers = parser.add_subparsers(title='commands',
                                           description='valid commands',
                                           help='additional help',
                                           dest='command')
        subparsers.required = True

        cmd_cf = subparsers.add_parser(
            'cf', parents=[output],
            help='continued fraction expansion of sqrt(d)')
        cmd_cf.add_argument('d', type=int, nargs='?', help='radicand')
        self._add_family_arguments(cmd_cf)
        cmd_cf.set_defaults(func=self.expand)

        cmd_solve = subparsers.add_parser(
            'solve', parents=[output],
            help='solve x^2 - d*y^2 = N')
        cmd_solve.add_argument('d', type=int, help='radicand')
        cmd_solve.add_argument('N', type=int, choices=model.RHS_VALUES,
                               help='right-hand side')
        cmd_solve.add_argument('--n', type=int, default=1,
                               help='solution index (default 1)')
        cmd_solve.add_argument('--bound', type=int,
                               help='search bound on y for N = -4 '
                                    '(default $%s or 10^6)'
                                    % BOUND_ENVIRONMENT)
        cmd_solve.set_defaults(func=self.solve)

        cmd_family = subparsers.add_parser(
            'family', parents=[output],
            help='closed-form solutions for d = a^2*b^2 - b and '
                 'd = a^2*b^2 - 2b')
        self._add_family_arguments(cmd_family)
        cmd_family.add_argument('--corollary',
                                choices=sorted(set(
                                    c for c, _ in model.COROLLARY_CLI_MAP)),
                                help='d = 9k^2 - 3 or d = 9k^2 - 6')
        cmd_family.add_argument('--k', type=int, help='corollary parameter')
        cmd_family.add_argument('N', type=int, choices=model.RHS_VALUES,
                                help='right-hand side')
        cmd_family.add_argument('--n', type=int, default=1,
                                help='solution index (default 1)')
        cmd_family.add_argument('--bound', type=int,
                                help='search bound on y for N = -4')
        cmd_family.set_defaults(func=self.family_solutions)

        cmd_verify = subparsers.add_parser(
            'verify', parents=[output],
            help='cross-check closed forms, generic solver and '
                 'brute force on a grid')
        cmd_verify.add_argument('--a-max', dest='a_max', type=int)
        cmd_verify.add_argument('--b-max', dest='b_max', type=int)
        cmd_verify.add_argument('--n-max', dest='n_max', type=int)
        cmd_verify.add_argument('--k-max', dest='k_max', type=int)
        cmd_verify.add_argument('--y-bound', dest='y_bound', type=int,
                                help='brute-force bound on y')
        cmd_verify.add_argument('--jobs', type=int,
                                help='number of worker processes')
        cmd_verify.add_argument('--grid',
                                help='YAML file describing the grid')
        cmd_verify.set_defaults(func=self.verify)

        self.args = parser.parse_args(args)
        if self.args.func == self.expand:
            if (self.args.d is None) == (self.args.family is None):
                parser.error("Give either d or --family with --a and --b.")
        if self.args.func == self.family_solutions:
            if (self.args.family is None) == (self.args.corollary is None):
                parser.error("Give either --family or --corollary.")
            if self.args.corollary and self.args.k is None:
                parser.error("--corollary requires --k.")
        if (self.args.func in (self.expand, self.family_solutions) and
                self.args.family):
            if self.args.a is None or self.args.b is None:
                parser.error("--family requires --a and --b.")
        if self.args.func == self.verify:
            for name in ('a_max', 'b_max', 'n_max', 'k_max', 'y_bound',
                         'jobs'):
                value = getattr(self.args, name)
                if value is not None and value < 1:
                    parser.error("--%s must be positive."
                                 % name.replace('_', '-'))

    def _add_family_arguments(self, parser):
        parser.add_argument('--family', choices=sorted(model.FAMILY_MAP),
                            help='1: d = a^2*b^2 - b, 2: d = a^2*b^2 - 2b')
        parser.add_argument('--a', type=int)
        parser.add_argument('--b', type=int)
        parser.add_argument('--force', action='store_true',
                            help='accept a below the family hypothesis and '
                                 'use the generic solver')

    def setup_logging(self):
        super(Client, self).setup_logging('pellkit', 'log_config')

    def main(self, args=None):
        self.parse_arguments(args)
        try:
            self.read_config()
        except v.Invalid as e:
            sys.stderr.write("Invalid configuration: %s\n" % e)
            return EXIT_DOMAIN_ERROR
        except Exception as e:
            sys.stderr.write("%s\n" % e)
            return EXIT_DOMAIN_ERROR
        self.setup_logging()

        start = time.time()
        try:
            record, code = self.args.func()
        except exceptions.DomainError as e:
            self.log.debug("Domain error in %s: %s", self.args.command, e)
            sys.stderr.write("Error: %s\n" % e)
            return EXIT_DOMAIN_ERROR
        except v.Invalid as e:
            sys.stderr.write("Invalid grid: %s\n" % e)
            return EXIT_DOMAIN_ERROR
        if self.args.timing:
            record.timing_ms = int((time.time() - start) * 1000)
        if self.args.format == 'json':
            print(record.toJSON())
        else:
            print(record.toText())
        return code

    def searchBound(self):
        if self.args.bound is not None:
            bound = self.args.bound
        elif os.environ.get(BOUND_ENVIRONMENT):
            try:
                bound = int(os.environ[BOUND_ENVIRONMENT])
            except ValueError:
                raise exceptions.DomainError(
                    "%s must be an integer, got %s"
                    % (BOUND_ENVIRONMENT, os.environ[BOUND_ENVIRONMENT]))
        else:
            bound = self.settings['pellkit']['search_bound']
        if bound < 1:
            raise exceptions.DomainError("Search bound must be positive, "
                                         "got %s" % bound)
        return bound

    def _familyParams(self):
        return family.family_params(model.FAMILY_MAP[self.args.family],
                                    self.args.a, self.args.b,
                                    strict=not self.args.force)

    def expand(self):
        if self.args.d is not None:
            inputs = {'d': self.args.d}
            expansion = cf.cf_expand(self.args.d)
            method = model.METHOD_GENERIC_CF
            members = family.family_for_d(self.args.d)
            if members:
                self.log.debug("d=%s belongs to %s", self.args.d,
                               ', '.join('%s(a=%s, b=%s)' % m
                                         for m in members))
        else:
            inputs = {'family': self.args.family, 'a': self.args.a,
                      'b': self.args.b}
            params = self._familyParams()
            if params.hypothesisHolds:
                expansion = family.family_expansion(params)
                method = model.METHOD_CLOSED_FORM
            else:
                expansion = cf.cf_expand(params.d)
                method = model.METHOD_GENERIC_CF
        return (formatter.OutputRecord('cf', inputs, method, expansion),
                EXIT_OK)

    def _solveGeneric(self, d, rhs, n):
        """Return (result, method) from the generic continued fraction
        route."""
        if rhs == 1:
            unit = pell.fundamental_unit(d)
            return (pell.nth_solution(d, unit, n), model.METHOD_GENERIC_CF)
        if rhs == 4:
            fund = pell.solve_four(d)
            return (pell.nth_solution_four(d, fund, n),
                    model.METHOD_GENERIC_CF)
        if n < 1:
            raise exceptions.DomainError("Solution index must be >= 1, "
                                         "got %s" % (n,))
        if rhs == -1:
            outcome = pell.solve_negative_one(d)
        else:
            outcome = pell.solve_negative_four(d, self.searchBound())
        if outcome.kind == model.Solvable.kind:
            return (pell.nth_negative_solution(d, outcome.fundamental, n),
                    outcome.method)
        return (outcome, outcome.method)

    def _exitCode(self, result):
        if getattr(result, 'kind', None) == model.Undetermined.kind:
            return EXIT_UNDETERMINED
        return EXIT_OK

    def solve(self):
        inputs = {'d': self.args.d, 'N': self.args.N, 'n': self.args.n}
        cf.check_radicand(self.args.d)
        result, method = self._solveGeneric(self.args.d, self.args.N,
                                            self.args.n)
        return (formatter.OutputRecord('solve', inputs, method, result),
                self._exitCode(result))

    def family_solutions(self):
        rhs = self.args.N
        inputs = {'N': rhs, 'n': self.args.n}
        if self.args.corollary:
            inputs.update({'corollary': self.args.corollary,
                           'k': self.args.k})
            which = model.COROLLARY_CLI_MAP.get((self.args.corollary, rhs))
            if which is None:
                raise exceptions.DomainError(
                    "Corollary %s covers N = 1 and N = 4 only, got N = %s"
                    % (self.args.corollary, rhs))
            result = family.corollary_solve(which, self.args.k, self.args.n)
            return (formatter.OutputRecord('family', inputs,
                                           model.METHOD_CLOSED_FORM, result),
                    EXIT_OK)

        inputs.update({'family': self.args.family, 'a': self.args.a,
                       'b': self.args.b})
        params = self._familyParams()
        if not params.hypothesisHolds:
            self.log.debug("%r is outside the family hypothesis; using the "
                           "generic solver", params)
            result, method = self._solveGeneric(params.d, rhs, self.args.n)
            method = model.METHOD_GENERIC_CF
        else:
            kwargs = {}
            if rhs == -4:
                kwargs['search_bound'] = self.searchBound()
            result = family.family_solve(params, rhs, self.args.n, **kwargs)
            if isinstance(result, model.PellSolution):
                if rhs in (1, 4):
                    method = model.METHOD_CLOSED_FORM
                else:
                    # A -4 solution found by the generic solver.
                    method = model.METHOD_GENERIC_CF
            else:
                method = result.method
        return (formatter.OutputRecord('family', inputs, method, result),
                self._exitCode(result))

    def _grid(self):
        settings = self.settings['verify']
        data = {}
        if self.args.grid:
            with open(os.path.expanduser(self.args.grid)) as f:
                data = configvalidator.GridValidator().validate(
                    yaml.safe_load(f))
        grid = oracle.Grid.fromDict(data)
        for name in ('a_max', 'b_max', 'n_max', 'k_max'):
            value = getattr(self.args, name)
            if value is None and name.replace('_', '-') not in data:
                value = settings[name]
            if value is not None:
                setattr(grid, name, value)
        if self.args.y_bound is not None:
            grid.y_bound = self.args.y_bound
        elif 'y-bound' not in data:
            grid.y_bound = self.settings['pellkit']['y_bound']
        return grid

    def verify(self):
        grid = self._grid()
        jobs = self.args.jobs or self.settings['pellkit']['jobs']
        inputs = {'a_max': grid.a_max, 'b_max': grid.b_max,
                  'n_max': grid.n_max, 'k_max': grid.k_max,
                  'y_bound': grid.y_bound, 'grid': self.args.grid}
        signal.signal(signal.SIGUSR2, pellkit.cmd.stack_dump_handler)
        report = oracle.cross_check(grid, jobs=jobs)
        if report.ok:
            code = EXIT_OK
        else:
            code = EXIT_DISCREPANCY
        return (formatter.OutputRecord('verify', inputs,
                                       model.METHOD_BRUTE_FORCE, report),
                code)


def main():
    client = Client()
    sys.exit(client.main())


if __name__ == "__main__":
    sys.path.insert(0, '.')
    main()
