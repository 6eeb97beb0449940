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

from pellkit import exceptions
from pellkit import lucas
from pellkit import model
from tests.base import BaseTestCase


def valid_params():
    for k in range(-20, 21):
        for s in (-1, 1):
            try:
                yield model.SequenceParams(k, s)
            except exceptions.DomainError:
                continue


class TestSequenceParams(BaseTestCase):
    def test_invalid(self):
        self.assertRaises(exceptions.DomainError, model.SequenceParams, 0, 1)
        self.assertRaises(exceptions.DomainError, model.SequenceParams, 4, 0)
        self.assertRaises(exceptions.DomainError,
                          model.SequenceParams, 2, -1)
        self.assertRaises(exceptions.DomainError,
                          model.SequenceParams, 1, -1)

    def test_discriminant(self):
        self.assertEqual(12, model.SequenceParams(4, -1).D)
        self.assertEqual(5, model.SequenceParams(1, 1).D)


class TestLucas(BaseTestCase):
    def test_u_examples(self):
        self.assertEqual(0, lucas.u_n(model.SequenceParams(4, -1), 0))
        self.assertEqual(1, lucas.u_n(model.SequenceParams(4, -1), 1))
        self.assertEqual(4, lucas.u_n(model.SequenceParams(4, -1), 2))
        self.assertEqual(30, lucas.u_n(model.SequenceParams(30, -1), 2))

    def test_v_examples(self):
        self.assertEqual(2, lucas.v_n(model.SequenceParams(4, -1), 0))
        self.assertEqual(14, lucas.v_n(model.SequenceParams(4, -1), 2))
        self.assertEqual(254, lucas.v_n(model.SequenceParams(16, -1), 2))

    def test_fibonacci(self):
        params = model.SequenceParams(1, 1)
        self.assertEqual([0, 1, 1, 2, 3, 5, 8, 13],
                         [lucas.u_n(params, n) for n in range(8)])
        self.assertEqual([2, 1, 3, 4, 7, 11, 18, 29],
                         [lucas.v_n(params, n) for n in range(8)])

    def test_binet_examples(self):
        self.assertEqual((4, 1),
                         lucas.binet_pair(model.SequenceParams(4, -1), 1))
        self.assertEqual((52, 15),
                         lucas.binet_pair(model.SequenceParams(4, -1), 3))
        self.assertEqual((98, 10),
                         lucas.binet_pair(model.SequenceParams(10, -1), 2))

    def test_negative_index(self):
        params = model.SequenceParams(4, -1)
        self.assertRaises(exceptions.DomainError, lucas.u_n, params, -1)
        self.assertRaises(exceptions.DomainError, lucas.binet_pair,
                          params, -1)

    def test_binet_matches_recurrence(self):
        for params in valid_params():
            for n in range(0, 51):
                u, v = lucas.lucas_pair(params, n)
                self.assertEqual((v, u), lucas.binet_pair(params, n),
                                 "%r n=%s" % (params, n))

    def test_norm_identity(self):
        for params in valid_params():
            for n in range(0, 51):
                u, v = lucas.lucas_pair(params, n)
                self.assertEqual(4 * (-params.s) ** n,
                                 v * v - params.D * u * u)

    def test_even_v(self):
        for k in range(4, 41, 2):
            params = model.SequenceParams(k, -1)
            for n in range(0, 51):
                self.assertEqual(lucas.v_n(params, n) // 2,
                                 lucas.half_v(params, n))

    def test_odd_v(self):
        params = model.SequenceParams(3, -1)
        self.assertRaises(exceptions.ContractViolation,
                          lucas.half_v, params, 1)
