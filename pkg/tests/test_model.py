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

import json

from pellkit import exceptions
from pellkit import model

from tests.base import BaseTestCase


class TestSurdExpansion(BaseTestCase):

    def test_quotients_cycle(self):
        expansion = model.SurdExpansion(14, 3, [1, 2, 1, 6])
        self.assertEqual(4, expansion.m)
        self.assertEqual([3, 1, 2, 1, 6, 1, 2],
                         [expansion.getQuotient(k) for k in range(7)])
        self.assertRaises(exceptions.DomainError, expansion.getQuotient, -1)

    def test_dict_uses_strings(self):
        data = model.SurdExpansion(14, 3, [1, 2, 1, 6]).toDict()
        self.assertEqual({'type': 'expansion', 'd': '14', 'a0': '3',
                          'period': ['1', '2', '1', '6'], 'm': '4'}, data)
        self.assertEqual(model.SurdExpansion(14, 3, [1, 2, 1, 6]),
                         model.SurdExpansion.fromDict(data))


class TestPellSolution(BaseTestCase):

    def test_big_integers_survive_json(self):
        x = 10 ** 60 + 7
        solution = model.PellSolution(3, x, 12345678901234567890123, n=40)
        text = json.dumps(solution.toDict())
        self.assertNotIn('e+', text)
        self.assertEqual(solution,
                         model.PellSolution.fromDict(json.loads(text)))

    def test_unindexed(self):
        solution = model.PellSolution(3, 14, 8, n=None, rhs=4)
        self.assertIsNone(solution.toDict()['n'])
        self.assertEqual(solution,
                         model.PellSolution.fromDict(solution.toDict()))
        self.assertTrue(solution.isValid())

    def test_identity(self):
        self.assertNotEqual(model.PellSolution(3, 7, 4, n=2),
                            model.PellSolution(3, 7, 4, n=None))
        self.assertEqual((7, 4), model.PellSolution(3, 7, 4, n=2).pair)


class TestSolvability(BaseTestCase):

    def test_kinds(self):
        outcomes = [
            model.Solvable(model.PellSolution(2, 1, 1, rhs=-1)),
            model.NoSolution(model.REASON_THEOREM_14,
                             method=model.theorem_tag(14)),
            model.Undetermined(1000),
        ]
        for outcome in outcomes:
            self.assertEqual('solvability', outcome.toDict()['type'])
            self.assertEqual(outcome,
                             model.Solvability.fromDict(outcome.toDict()))
        self.assertEqual([True, True, False],
                         [o.determinate for o in outcomes])

    def test_unknown_reason(self):
        self.assertRaises(ValueError, model.NoSolution, 'no-idea')

    def test_unknown_kind(self):
        self.assertRaises(ValueError, model.Solvability.fromDict,
                          {'kind': 'maybe', 'method': 'x'})

    def test_bound_is_a_string(self):
        data = model.Undetermined(10 ** 6).toDict()
        self.assertEqual('1000000', data['searched_bound'])


class TestSearchReport(BaseTestCase):

    def test_least(self):
        found = [model.PellSolution(5, 1, 1, rhs=-4),
                 model.PellSolution(5, 4, 2, n=2, rhs=-4)]
        report = model.SearchReport(5, -4, 10, found, True)
        self.assertEqual(found[0], report.least)
        self.assertEqual(report.toDict(),
                         model.SearchReport.fromDict(report.toDict()).toDict())
        self.assertIsNone(model.SearchReport(7, -1, 10, [], True).least)


class TestDiscrepancy(BaseTestCase):

    def test_numeric_sort(self):
        items = [model.Discrepancy(('F1', 10, 1), 'x', 1, 2),
                 model.Discrepancy(('F1', 9, 1), 'x', 1, 2),
                 model.Discrepancy(('F1', 9, 1), 'a', 1, 2),
                 model.Discrepancy(('C93_1', -1), 'x', 1, 2)]
        ordered = sorted(items, key=lambda x: x.sortKey())
        self.assertEqual([('C93_1', '-1'), ('F1', '9', '1'),
                          ('F1', '9', '1'), ('F1', '10', '1')],
                         [x.coords for x in ordered])
        self.assertEqual('a', ordered[1].check)

    def test_round_trip(self):
        item = model.Discrepancy(('F2', 3, 1, 4), 'doubling', (2, 2), (3, 3))
        self.assertEqual(item, model.Discrepancy.fromDict(item.toDict()))
