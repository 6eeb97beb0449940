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

from pellkit import cf
from pellkit import exceptions
from pellkit import family
from pellkit import model
from pellkit import oracle
from pellkit import pell
from tests.base import BaseTestCase

A_MAX = 12
B_MAX = 12
N_MAX = 8


def family_grid():
    for fam in (model.FAMILY_1, model.FAMILY_2):
        for a in range(model.FAMILY_MIN_A[fam], A_MAX + 1):
            for b in range(1, B_MAX + 1):
                yield family.family_params(fam, a, b)


class TestFamilyParams(BaseTestCase):
    def test_d(self):
        self.assertEqual(14, family.family_params(model.FAMILY_1, 2, 2).d)
        self.assertEqual(7, family.family_params(model.FAMILY_2, 3, 1).d)

    def test_hypothesis(self):
        e = self.assertRaises(exceptions.HypothesisError,
                              family.family_params, model.FAMILY_2, 2, 1)
        self.assertIn("a >= 3", str(e))
        self.assertRaises(exceptions.HypothesisError,
                          family.family_params, model.FAMILY_1, 1, 3)
        params = family.family_params(model.FAMILY_2, 2, 1, strict=False)
        self.assertEqual(2, params.d)
        self.assertFalse(params.hypothesisHolds)

    def test_domain(self):
        self.assertRaises(exceptions.DomainError, family.family_params,
                          model.FAMILY_1, 1, 1, strict=False)
        self.assertRaises(exceptions.DomainError, family.family_params,
                          model.FAMILY_1, 2, 0)
        self.assertRaises(exceptions.DomainError, family.family_params,
                          'F3', 2, 2)

    def test_family_for_d(self):
        self.assertEqual([(model.FAMILY_1, 2, 2), (model.FAMILY_2, 4, 1)],
                         family.family_for_d(14))
        self.assertEqual([(model.FAMILY_1, 2, 1), (model.FAMILY_2, 1, 3)],
                         family.family_for_d(3))
        self.assertEqual([], family.family_for_d(5))


class TestFamilySolve(BaseTestCase):
    def test_examples(self):
        params = family.family_params(model.FAMILY_1, 2, 2)
        self.assertEqual(model.PellSolution(14, 15, 4),
                         family.family_solve(params, 1))
        self.assertEqual(model.PellSolution(14, 449, 120, n=2),
                         family.family_solve(params, 1, 2))
        params = family.family_params(model.FAMILY_2, 3, 1)
        self.assertEqual(model.PellSolution(7, 16, 6, rhs=4),
                         family.family_solve(params, 4))
        self.assertEqual(model.NoSolution(model.REASON_EVEN_PERIOD,
                                          method='theorem-11'),
                         family.family_solve(params, -1))
        self.assertEqual(model.NoSolution(model.REASON_THEOREM_14,
                                          method='theorem-14'),
                         family.family_solve(params, -4))
        params = family.family_params(model.FAMILY_1, 2, 1)
        self.assertEqual(model.PellSolution(3, 26, 15, n=3),
                         family.family_solve(params, 1, 3))

    def test_family1_negative_one(self):
        params = family.family_params(model.FAMILY_1, 5, 1)
        self.assertEqual(model.NoSolution(model.REASON_EVEN_PERIOD,
                                          method='theorem-6'),
                         family.family_solve(params, -1))

    def test_family1_negative_four(self):
        # d = 14 = 2 (mod 4): decided through N = -1.
        params = family.family_params(model.FAMILY_1, 2, 2)
        self.assertEqual(model.NoSolution(model.REASON_THEOREM_1,
                                          method='theorem-1'),
                         family.family_solve(params, -4))
        # d = 33 = 1 (mod 4) is only searched.
        params = family.family_params(model.FAMILY_1, 2, 3)
        self.assertEqual(model.Undetermined(500),
                         family.family_solve(params, -4, search_bound=500))

    def test_bad_arguments(self):
        params = family.family_params(model.FAMILY_1, 2, 2)
        self.assertRaises(exceptions.DomainError, family.family_solve,
                          params, 2)
        self.assertRaises(exceptions.DomainError, family.family_solve,
                          params, 1, 0)
        loose = family.family_params(model.FAMILY_2, 2, 3, strict=False)
        self.assertRaises(exceptions.HypothesisError, family.family_solve,
                          loose, 1)

    def test_matches_generic_solver(self):
        for params in family_grid():
            unit = pell.fundamental_unit(params.d)
            for n in range(1, N_MAX + 1):
                self.assertEqual(pell.nth_solution(params.d, unit, n),
                                 family.family_solve(params, 1, n),
                                 "%r n=%s" % (params, n))

    def test_four_doubles_one(self):
        for params in family_grid():
            for n in range(1, N_MAX + 1):
                four = family.family_solve(params, 4, n)
                self.assertTrue(four.isValid())
                if params.d % 4:
                    one = family.family_solve(params, 1, n)
                    self.assertEqual((2 * one.x, 2 * one.y), four.pair)

    def test_unsolvable_sweep(self):
        for params in family_grid():
            self.assertEqual(0, cf.cf_expand(params.d).m % 2)
            report = oracle.brute_force(params.d, -1, 10 ** 4, limit=1)
            self.assertEqual([], report.found, "%r" % (params,))
            if params.family == model.FAMILY_2:
                report = oracle.brute_force(params.d, -4, 10 ** 4, limit=1)
                self.assertEqual([], report.found, "%r" % (params,))

    def test_family1_negative_four_solvable(self):
        # d = 8 = 0 (mod 4): 2^2 - 8*1^2 = -4 through the unit of d/4 = 2.
        params = family.family_params(model.FAMILY_1, 3, 1)
        self.assertEqual(model.PellSolution(8, 2, 1, rhs=-4),
                         family.family_solve(params, -4))
        self.assertEqual(model.PellSolution(8, 14, 5, n=2, rhs=-4),
                         family.family_solve(params, -4, 2))
        self.assertEqual((2, 1), oracle.least_solution(8, -4, 10).pair)


class TestFamilyFundamental(BaseTestCase):
    def test_examples(self):
        self.assertEqual(
            model.PellSolution(24, 5, 1),
            family.family_fundamental(
                family.family_params(model.FAMILY_1, 5, 1), 1))
        self.assertEqual(
            model.PellSolution(14, 30, 8, rhs=4),
            family.family_fundamental(
                family.family_params(model.FAMILY_1, 2, 2), 4))
        self.assertEqual(
            model.PellSolution(32, 17, 3),
            family.family_fundamental(
                family.family_params(model.FAMILY_2, 3, 2), 1))

    def test_rhs(self):
        params = family.family_params(model.FAMILY_2, 3, 2)
        self.assertRaises(exceptions.DomainError,
                          family.family_fundamental, params, -1)

    def test_matches_lucas_form(self):
        for params in family_grid():
            self.assertEqual(family.family_solve(params, 1, 1),
                             family.family_fundamental(params, 1))
            first = family.family_fundamental(params, 4)
            step = family.four_stream_step(params)
            self.assertEqual(
                pell.nth_solution_four(params.d, first, step),
                family.family_solve(params, 4, 1), "%r" % (params,))

    def test_least_four_for_square_units(self):
        # d = 60: the Lucas form gives (62, 8), the second solution.
        params = family.family_params(model.FAMILY_1, 2, 4)
        self.assertEqual(model.PellSolution(60, 8, 1, rhs=4),
                         family.family_fundamental(params, 4))
        self.assertEqual(model.PellSolution(60, 62, 8, n=2, rhs=4),
                         family.family_solve(params, 4, 1))
        self.assertEqual(model.PellSolution(60, 31, 4),
                         family.family_fundamental(params, 1))
        params = family.family_params(model.FAMILY_2, 26, 2)
        self.assertEqual(model.PellSolution(2700, 52, 1, rhs=4),
                         family.family_fundamental(params, 4))
        self.assertEqual(model.PellSolution(2700, 2702, 52, n=2, rhs=4),
                         family.family_solve(params, 4, 1))
        params = family.family_params(model.FAMILY_2, 3, 2)
        self.assertEqual(model.PellSolution(32, 6, 1, rhs=4),
                         family.family_fundamental(params, 4))
        self.assertEqual(pell.solve_four(32),
                         family.family_fundamental(params, 4))

    def test_four_stream_step(self):
        steps = {(model.FAMILY_1, 2, 4): 2,
                 (model.FAMILY_1, 5, 4): 2,
                 (model.FAMILY_1, 2, 8): 1,
                 (model.FAMILY_1, 3, 1): 1,
                 (model.FAMILY_1, 2, 2): 1,
                 (model.FAMILY_2, 3, 2): 2,
                 (model.FAMILY_2, 3, 4): 1,
                 (model.FAMILY_2, 4, 1): 1}
        for (fam, a, b), step in steps.items():
            params = family.family_params(fam, a, b)
            self.assertEqual(step, family.four_stream_step(params),
                             "%r" % (params,))
            self.assertEqual(step * 3,
                             family.family_solve(params, 4, 3).n)

    def test_certified_by_brute_force(self):
        certified = 0
        for fam in (model.FAMILY_1, model.FAMILY_2):
            for a in range(model.FAMILY_MIN_A[fam], 51):
                for b in range(1, 51):
                    params = family.family_params(fam, a, b)
                    if params.d > 10 ** 6:
                        continue
                    for rhs in (1, 4):
                        fundamental = family.family_fundamental(params, rhs)
                        least = oracle.least_solution(params.d, rhs,
                                                      fundamental.y)
                        self.assertEqual(least.pair, fundamental.pair,
                                         "%r N=%s" % (params, rhs))
                        certified += 1
        self.assertTrue(certified >= 200)


class TestQuotientForm(BaseTestCase):
    def test_examples(self):
        params = family.family_params(model.FAMILY_1, 2, 1)
        self.assertEqual([1, 1], family.nth_quotient_form(params, 1))
        self.assertEqual((2, 1), cf.evaluate([1, 1]))
        self.assertEqual([1, 1, 2, 1], family.nth_quotient_form(params, 2))
        self.assertEqual((7, 4), cf.evaluate([1, 1, 2, 1]))
        params = family.family_params(model.FAMILY_2, 3, 1)
        self.assertEqual([2, 1, 1, 1], family.nth_quotient_form(params, 1))
        self.assertEqual((8, 3), cf.evaluate([2, 1, 1, 1]))

    def test_index(self):
        params = family.family_params(model.FAMILY_1, 2, 1)
        self.assertRaises(exceptions.DomainError,
                          family.nth_quotient_form, params, 0)

    def test_evaluates_to_solutions(self):
        for params in family_grid():
            for n in range(1, N_MAX + 1):
                self.assertEqual(
                    family.family_solve(params, 1, n).pair,
                    cf.evaluate(family.nth_quotient_form(params, n)))


class TestCorollaries(BaseTestCase):
    def test_examples(self):
        self.assertEqual(model.PellSolution(6, 5, 2),
                         family.corollary_solve(model.COROLLARY_93_1, 1))
        self.assertEqual(model.PellSolution(30, 11, 2),
                         family.corollary_solve(model.COROLLARY_96_1, 2))
        self.assertEqual(model.PellSolution(3, 4, 2, rhs=4),
                         family.corollary_solve(model.COROLLARY_96_4, 1))
        self.assertEqual(model.PellSolution(6, 49, 20, n=2),
                         family.corollary_solve(model.COROLLARY_93_1, 1, 2))

    def test_bad_arguments(self):
        self.assertRaises(exceptions.DomainError,
                          family.corollary_solve, 'C93_2', 1)
        self.assertRaises(exceptions.DomainError,
                          family.corollary_solve, model.COROLLARY_93_1, 0)

    def test_params(self):
        params, rhs = family.corollary_params(model.COROLLARY_96_4, 4)
        self.assertEqual(4, rhs)
        self.assertEqual(9 * 16 - 6, params.d)

    def test_consistent_with_families(self):
        for which in sorted(model.COROLLARY_MAP):
            fam, rhs = model.COROLLARY_MAP[which]
            for k in range(1, 9):
                params, _ = family.corollary_params(which, k)
                for n in range(1, 5):
                    solution = family.corollary_solve(which, k, n)
                    self.assertTrue(solution.isValid())
                    if k >= model.FAMILY_MIN_A[fam]:
                        strict = family.family_params(fam, k, 3)
                        self.assertEqual(
                            family.family_solve(strict, rhs, n), solution)
