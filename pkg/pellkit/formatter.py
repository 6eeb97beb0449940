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

"""Rendering of command results as JSON records or text tables.

A record is a JSON object with the keys command, inputs, method, result
and timing_ms.  Every integer is written as a decimal string so that
consumers limited to 64-bit or floating point numbers never truncate a
solution; timing_ms is null unless timing was requested.
"""

import json

import prettytable

from pellkit import model
from pellkit import oracle

RESULT_TYPES = {
    'expansion': model.SurdExpansion,
    'solution': model.PellSolution,
    'solvability': model.Solvability,
    'search': model.SearchReport,
    'report': oracle.CrossCheckReport,
}


def result_from_dict(data):
    try:
        cls = RESULT_TYPES[data['type']]
    except KeyError:
        raise ValueError("Unknown result type %s" % data.get('type'))
    return cls.fromDict(data)


class OutputRecord(object):
    def __init__(self, command, inputs, method, result, timing_ms=None):
        self.command = command
        # Inputs are echoed as given on the command line.
        self.inputs = dict((k, None if v is None else str(v))
                           for k, v in inputs.items())
        self.method = method
        self.result = result
        self.timing_ms = timing_ms

    def __repr__(self):
        return '<OutputRecord %s %s>' % (self.command, self.method)

    def __eq__(self, other):
        return (isinstance(other, OutputRecord) and
                self.toDict() == other.toDict())

    def __ne__(self, other):
        return not self == other

    def toDict(self):
        return {'command': self.command,
                'inputs': self.inputs,
                'method': self.method,
                'result': self.result.toDict(),
                'timing_ms': (None if self.timing_ms is None
                              else str(self.timing_ms))}

    def toJSON(self):
        return json.dumps(self.toDict(), sort_keys=True, indent=2)

    @classmethod
    def fromJSON(cls, text):
        data = json.loads(text)
        timing = data.get('timing_ms')
        return cls(data['command'], data['inputs'], data['method'],
                   result_from_dict(data['result']),
                   timing_ms=None if timing is None else int(timing))

    def toText(self):
        lines = [formatResult(self.result),
                 'method: %s' % self.method]
        if self.timing_ms is not None:
            lines.append('time: %s ms' % self.timing_ms)
        return '\n'.join(lines)


def _table(field_names, rows):
    table = prettytable.PrettyTable(field_names=field_names)
    table.align = 'l'
    for row in rows:
        table.add_row(row)
    return table.get_string()


def formatExpansion(expansion):
    period = ', '.join(str(x) for x in expansion.period)
    return _table(['d', 'a0', 'period', 'm'],
                  [[expansion.d, expansion.a0, '[%s]' % period,
                    expansion.m]])


def formatSolution(solution):
    return _table(['d', 'N', 'n', 'x', 'y'],
                  [[solution.d, solution.rhs,
                    '' if solution.n is None else solution.n,
                    solution.x, solution.y]])


def formatSolvability(outcome):
    if outcome.kind == model.Solvable.kind:
        return 'solvable, fundamental solution:\n%s' % formatSolution(
            outcome.fundamental)
    if outcome.kind == model.NoSolution.kind:
        return 'no solution (%s)' % outcome.reason
    return 'undetermined: no solution with y <= %s' % outcome.searched_bound


def formatSearch(report):
    if not report.found:
        return 'no solution with y <= %s' % report.y_max
    return _table(['n', 'x', 'y'],
                  [[s.n, s.x, s.y] for s in report.found])


def formatReport(report):
    lines = [_table(['check', 'count'],
                    [[name, report.counters.get(name, 0)]
                     for name in oracle.CHECK_COUNTERS])]
    if report.discrepancies:
        lines.append(_table(
            ['coordinates', 'check', 'expected', 'actual'],
            [[' '.join(x.coords), x.check, x.expected, x.actual]
             for x in report.discrepancies]))
    lines.append('%s discrepancies' % len(report.discrepancies))
    return '\n'.join(lines)


def formatResult(result):
    if isinstance(result, model.SurdExpansion):
        return formatExpansion(result)
    if isinstance(result, model.PellSolution):
        return formatSolution(result)
    if isinstance(result, model.Solvability):
        return formatSolvability(result)
    if isinstance(result, model.SearchReport):
        return formatSearch(result)
    return formatReport(result)
