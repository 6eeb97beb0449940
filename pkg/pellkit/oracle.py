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

"""Brute-force ground truth and grid cross-checking.

brute_force() scans y = 1..y_max and tests d*y^2 + N for being a perfect
square with exact integer roots.  cross_check() recomputes every value
on a parameter grid in up to three independent ways (family closed
form, continued fraction and unit powers, brute force) and collects
every disagreement as a Discrepancy.  Grid points are independent and
may be evaluated by a process pool; the report does not depend on the
evaluation order.
"""

import collections
import concurrent.futures
import functools
import logging
import time

import extras

from pellkit import cf
from pellkit import exceptions
from pellkit import family
from pellkit.lib import arith
from pellkit import model
from pellkit import pell

statsd = extras.try_import('statsd.statsd')

DEFAULT_Y_BOUND = 10 ** 4

CHECK_COUNTERS = (
    'cf-points',
    'family-points',
    'corollary-points',
    'solutions-compared',
    'oracle-certified',
    'unsolvable-sweeps',
    'undetermined',
    'four-stream-shifts',
)


def brute_force(d, rhs, y_max, limit=None):
    cf.check_radicand(d)
    if y_max < 1:
        raise exceptions.DomainError("y_max must be positive, got %s"
                                     % (y_max,))
    found = []
    exhausted = True
    for x, y in arith.iter_square_hits(d, rhs, y_max):
        found.append(model.PellSolution(d, x, y, n=len(found) + 1, rhs=rhs))
        if limit is not None and len(found) >= limit:
            exhausted = y >= y_max
            break
    return model.SearchReport(d, rhs, y_max, found, exhausted)


def least_solution(d, rhs, y_max):
    return brute_force(d, rhs, y_max, limit=1).least


class Grid(object):
    """Parameter ranges for cross_check (all bounds inclusive)."""

    BOUND_KEYS = ('a-min', 'a-max', 'b-min', 'b-max', 'n-max', 'k-max',
                  'y-bound')

    def __init__(self, a_max=12, b_max=12, n_max=8, k_max=8,
                 y_bound=DEFAULT_Y_BOUND, a_min=1, b_min=1,
                 families=(model.FAMILY_1, model.FAMILY_2),
                 rhs=model.RHS_VALUES,
                 corollaries=tuple(sorted(model.COROLLARY_MAP)),
                 check_cf=True):
        self.a_min = a_min
        self.a_max = a_max
        self.b_min = b_min
        self.b_max = b_max
        self.n_max = n_max
        self.k_max = k_max
        self.y_bound = y_bound
        self.families = tuple(families)
        self.rhs = tuple(rhs)
        self.corollaries = tuple(corollaries)
        self.check_cf = check_cf

    def __repr__(self):
        return ('<Grid a=%s..%s b=%s..%s n<=%s k<=%s y<=%s>'
                % (self.a_min, self.a_max, self.b_min, self.b_max,
                   self.n_max, self.k_max, self.y_bound))

    @classmethod
    def fromDict(cls, data):
        """Build a grid from a validated grid file (see GridSchema)."""
        kwargs = dict((key.replace('-', '_'), data[key])
                      for key in cls.BOUND_KEYS if key in data)
        if 'families' in data:
            kwargs['families'] = [model.FAMILY_MAP[str(f)]
                                  for f in data['families']]
        if 'rhs' in data:
            kwargs['rhs'] = data['rhs']
        if 'corollaries' in data:
            kwargs['corollaries'] = data['corollaries']
        if 'check-cf' in data:
            kwargs['check_cf'] = data['check-cf']
        return cls(**kwargs)

    def toDict(self):
        data = dict((key, str(getattr(self, key.replace('-', '_'))))
                    for key in self.BOUND_KEYS)
        data['families'] = list(self.families)
        data['rhs'] = [str(r) for r in self.rhs]
        data['corollaries'] = list(self.corollaries)
        data['check-cf'] = self.check_cf
        return data

    @classmethod
    def fromRecord(cls, data):
        """Inverse of toDict."""
        kwargs = dict((key.replace('-', '_'), int(data[key]))
                      for key in cls.BOUND_KEYS)
        return cls(families=data['families'],
                   rhs=[int(r) for r in data['rhs']],
                   corollaries=data['corollaries'],
                   check_cf=data['check-cf'], **kwargs)

    def familyPoints(self):
        for fam in self.families:
            a_low = max(self.a_min, model.FAMILY_MIN_A[fam])
            for a in range(a_low, self.a_max + 1):
                for b in range(self.b_min, self.b_max + 1):
                    yield (fam, a, b)

    def tasks(self):
        tasks = []
        for point in self.familyPoints():
            if self.check_cf:
                tasks.append(('cf',) + point)
            tasks.append(('family',) + point)
        for which in self.corollaries:
            for k in range(1, self.k_max + 1):
                tasks.append(('corollary', which, k))
        return tasks


class CrossCheckReport(object):
    def __init__(self, grid, counters, discrepancies):
        self.grid = grid
        self.counters = counters
        self.discrepancies = sorted(discrepancies,
                                    key=lambda x: x.sortKey())

    @property
    def ok(self):
        return not self.discrepancies

    def __repr__(self):
        return '<CrossCheckReport %s discrepancies>' % len(self.discrepancies)

    def toDict(self):
        return {'type': 'report',
                'grid': self.grid.toDict(),
                'counters': collections.OrderedDict(
                    (name, str(self.counters.get(name, 0)))
                    for name in CHECK_COUNTERS),
                'discrepancies': [x.toDict() for x in self.discrepancies]}

    @classmethod
    def fromDict(cls, data):
        counters = collections.Counter(
            dict((name, int(value))
                 for name, value in data['counters'].items()))
        return cls(Grid.fromRecord(data['grid']), counters,
                   [model.Discrepancy.fromDict(x)
                    for x in data['discrepancies']])


class _PointChecker(object):
    """Checks for one grid point; collects counters and discrepancies."""

    log = logging.getLogger("pellkit.Oracle")

    def __init__(self, task, grid):
        self.task = task
        self.grid = grid
        self.counters = collections.Counter()
        self.discrepancies = []

    def expect(self, coords, check, expected, actual):
        if expected != actual:
            self.discrepancies.append(
                model.Discrepancy(coords, check, expected, actual))

    def run(self):
        kind = self.task[0]
        try:
            if kind == 'cf':
                self.checkExpansion(*self.task[1:])
            elif kind == 'family':
                self.checkFamily(*self.task[1:])
            else:
                self.checkCorollary(*self.task[1:])
        except (exceptions.DomainError,
                exceptions.ContractViolation) as e:
            self.log.exception("Exception checking %s:" % (self.task,))
            self.discrepancies.append(
                model.Discrepancy(self.task, 'exception', '', e))
        return (self.counters, self.discrepancies)

    def checkExpansion(self, fam, a, b):
        params = model.FamilyParams(fam, a, b)
        self.counters['cf-points'] += 1
        closed = family.family_expansion(params)
        generic = cf.cf_expand(params.d)
        self.expect(self.task, 'cf-closed-form', generic, closed)

    def checkFamily(self, fam, a, b):
        params = model.FamilyParams(fam, a, b)
        self.counters['family-points'] += 1
        for rhs in self.grid.rhs:
            coords = (fam, a, b, rhs)
            if rhs == 1:
                self._checkUnitStream(params, coords)
            elif rhs == 4:
                self._checkFourStream(params, coords)
            else:
                self._checkNegative(params, rhs, coords)

    def _certify(self, coords, d, rhs, fundamental):
        if fundamental.y > self.grid.y_bound:
            return
        least = least_solution(d, rhs, fundamental.y)
        self.expect(coords, 'oracle-least', fundamental.pair,
                    least.pair if least else None)
        self.counters['oracle-certified'] += 1

    def _checkUnitStream(self, params, coords):
        d = params.d
        unit = pell.fundamental_unit(d)
        self.expect(coords, 'fundamental', unit.pair,
                    family.family_fundamental(params, 1).pair)
        self._certify(coords, d, 1, unit)
        for n in range(1, self.grid.n_max + 1):
            closed = family.family_solve(params, 1, n)
            generic = pell.nth_solution(d, unit, n)
            self.expect(coords + (n,), 'closed-vs-generic', generic.pair,
                        closed.pair)
            value = cf.evaluate(family.nth_quotient_form(params, n))
            self.expect(coords + (n,), 'quotient-form', closed.pair, value)
            self.counters['solutions-compared'] += 1

    def _checkFourStream(self, params, coords):
        d = params.d
        generic = pell.solve_four(d)
        first = family.family_fundamental(params, 4)
        self.expect(coords, 'fundamental-four', generic.pair, first.pair)
        self._certify(coords, d, 4, first)
        lucas_first = family.family_solve(params, 4, 1)
        if lucas_first.pair != first.pair:
            # The Lucas form starts at the second solution; only d = 0
            # (mod 4) allows that.
            self.counters['four-stream-shifts'] += 1
            self.expect(coords, 'four-stream-shift', 0, d % 4)
            self.expect(coords, 'four-stream-shift', 2, lucas_first.n)
        for n in range(1, self.grid.n_max + 1):
            closed = family.family_solve(params, 4, n)
            # The closed form carries its own index in the stream.
            expected = pell.nth_solution_four(d, generic, closed.n)
            self.expect(coords + (n,), 'closed-vs-generic', expected.pair,
                        closed.pair)
            if d % 4:
                unit_form = family.family_solve(params, 1, n)
                self.expect(coords + (n,), 'doubling',
                            (2 * unit_form.x, 2 * unit_form.y), closed.pair)
            self.counters['solutions-compared'] += 1

    def _checkNegative(self, params, rhs, coords):
        d = params.d
        verdict = family.family_solve(params, rhs, 1,
                                      search_bound=self.grid.y_bound)
        if rhs == -1:
            self.expect(coords, 'period-parity', 0, cf.cf_expand(d).m % 2)
            self.expect(coords, 'generic-verdict', model.NoSolution.kind,
                        pell.solve_negative_one(d).kind)
        if isinstance(verdict, model.PellSolution):
            self._certify(coords, d, rhs, verdict)
            return
        if verdict.kind == model.Undetermined.kind:
            self.counters['undetermined'] += 1
        elif params.family == model.FAMILY_2 or rhs == -1:
            self.expect(coords, 'family-verdict', model.NoSolution.kind,
                        verdict.kind)
        sweep = brute_force(d, rhs, self.grid.y_bound, limit=1)
        self.expect(coords, 'unsolvable-sweep', None,
                    sweep.least.pair if sweep.least else None)
        self.counters['unsolvable-sweeps'] += 1

    def checkCorollary(self, which, k):
        params, rhs = family.corollary_params(which, k)
        d = params.d
        self.counters['corollary-points'] += 1
        coords = (which, k)
        if rhs == 1:
            fundamental = pell.fundamental_unit(d)
        else:
            fundamental = pell.solve_four(d)
        self._certify(coords, d, rhs, fundamental)
        for n in range(1, self.grid.n_max + 1):
            closed = family.corollary_solve(which, k, n)
            if rhs == 1:
                generic = pell.nth_solution(d, fundamental, n)
            else:
                generic = pell.nth_solution_four(d, fundamental, n)
            self.expect(coords + (n,), 'closed-vs-generic', generic.pair,
                        closed.pair)
            if params.hypothesisHolds:
                strict = model.FamilyParams(params.family, params.a,
                                            params.b)
                self.expect(coords + (n,), 'corollary-vs-family',
                            family.family_solve(strict, rhs, n).pair,
                            closed.pair)
            self.counters['solutions-compared'] += 1


def check_task(task, grid):
    return _PointChecker(task, grid).run()


class Oracle(object):
    log = logging.getLogger("pellkit.Oracle")

    def __init__(self, grid, jobs=1):
        self.grid = grid
        self.jobs = jobs

    def _map(self, tasks):
        worker = functools.partial(check_task, grid=self.grid)
        if self.jobs <= 1 or len(tasks) < 2:
            return [worker(task) for task in tasks]
        chunksize = max(1, len(tasks) // (self.jobs * 4))
        with concurrent.futures.ProcessPoolExecutor(
                max_workers=self.jobs) as executor:
            return list(executor.map(worker, tasks, chunksize=chunksize))

    def run(self):
        tasks = self.grid.tasks()
        self.log.info("Cross-checking %s grid points of %r with %s jobs",
                      len(tasks), self.grid, self.jobs)
        start = time.time()
        counters = collections.Counter()
        discrepancies = []
        for point_counters, point_discrepancies in self._map(tasks):
            counters.update(point_counters)
            discrepancies.extend(point_discrepancies)
        report = CrossCheckReport(self.grid, counters, discrepancies)
        for discrepancy in report.discrepancies:
            self.log.error("Discrepancy: %r", discrepancy)
        elapsed = int((time.time() - start) * 1000)
        self.log.info("Cross-check finished in %s ms with %s "
                      "discrepancies", elapsed, len(report.discrepancies))
        try:
            if statsd:
                statsd.incr('pellkit.verify.points', len(tasks))
                statsd.gauge('pellkit.verify.discrepancies',
                             len(report.discrepancies))
                statsd.timing('pellkit.verify.elapsed', elapsed)
        except Exception:
            self.log.exception("Exception reporting verification stats")
        return report


def cross_check(grid, jobs=1):
    return Oracle(grid, jobs=jobs).run()
