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

"""Continued fractions of sqrt(d).

The expansion of sqrt(d) for non-square d is [a0; a1, ..., am] with the
last partial quotient of the period equal to 2*a0.  It is computed with
the PQa iteration, which only ever touches integers:

  P_0 = 0, Q_0 = 1
  a_k = floor((P_k + a0) / Q_k)
  P_{k+1} = a_k*Q_k - P_k
  Q_{k+1} = (d - P_{k+1}^2) / Q_k

and the period ends at the first k >= 1 with Q_k = 1.
"""

import itertools
import logging

from pellkit import exceptions
from pellkit.lib import arith
from pellkit import model

log = logging.getLogger("pellkit.cf")


def is_perfect_square(d):
    if d < 0:
        return False
    r = arith.isqrt(d)
    return r * r == d


def check_radicand(d):
    if d < 2:
        raise exceptions.DomainError("Radicand must be at least 2, got %s"
                                     % (d,))
    if is_perfect_square(d):
        raise exceptions.PerfectSquareError(d)


def pqa(d):
    """Yield the PQa states (k, P_k, Q_k, a_k) for k = 0..m."""
    check_radicand(d)
    a0 = arith.isqrt(d)
    P, Q, a = 0, 1, a0
    k = 0
    yield (k, P, Q, a)
    while True:
        P = a * Q - P
        Q = (d - P * P) // Q
        a = (P + a0) // Q
        k += 1
        yield (k, P, Q, a)
        if Q == 1:
            return


def cf_expand(d):
    states = list(pqa(d))
    expansion = model.SurdExpansion(d, states[0][3],
                                    [state[3] for state in states[1:]])
    log.debug("Expanded %r (period length %s)", expansion, expansion.m)
    return expansion


def replay_states(expansion):
    """Rebuild the PQa states from the quotients of an expansion.

    Unlike pqa() the partial quotients are taken from the expansion, not
    recomputed; every division has to come out exact, every floor has
    to agree with the stored quotient, and Q must return to 1 exactly at
    the end of the period.
    """
    expansion.verify()
    d = expansion.d
    a0 = expansion.a0
    P, Q, a = 0, 1, a0
    states = [(0, P, Q, a)]
    for k, quotient in enumerate(expansion.period, 1):
        P = a * Q - P
        Q, rem = divmod(d - P * P, Q)
        if rem or Q <= 0:
            raise exceptions.ContractViolation(
                "Inexact PQa step %s for %r" % (k, expansion))
        if (P + a0) // Q != quotient:
            raise exceptions.ContractViolation(
                "Partial quotient %s of %r should be %s"
                % (k, expansion, (P + a0) // Q))
        if Q == 1 and k != expansion.m:
            raise exceptions.ContractViolation(
                "Period of %r closes early at %s" % (expansion, k))
        a = quotient
        states.append((k, P, Q, a))
    if Q != 1:
        raise exceptions.ContractViolation(
            "Period of %r does not close" % (expansion,))
    return states


def iter_convergents(expansion):
    # Seeds p_{-2} = 0, p_{-1} = 1, q_{-2} = 1, q_{-1} = 0.
    p_prev, p = 0, 1
    q_prev, q = 1, 0
    for k in itertools.count():
        a = expansion.getQuotient(k)
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        yield model.Convergent(k, p, q)


def convergents(expansion, count):
    if count < 1:
        raise exceptions.DomainError("Need at least one convergent, got %s"
                                     % (count,))
    return list(itertools.islice(iter_convergents(expansion), count))


def evaluate(quotients):
    """Evaluate the finite continued fraction [q0; q1, ..., qn] to (p, q).

    With positive q1..qn the result is already in lowest terms.
    """
    if not quotients:
        raise exceptions.DomainError("Cannot evaluate an empty continued "
                                     "fraction")
    p_prev, p = 0, 1
    q_prev, q = 1, 0
    for a in quotients:
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
    return (p, q)


def family1_cf(a, b):
    """Closed-form expansion of sqrt(a^2*b^2 - b)."""
    if a < model.FAMILY_MIN_A[model.FAMILY_1]:
        raise exceptions.HypothesisError(model.FAMILY_1, a,
                                         model.FAMILY_MIN_A[model.FAMILY_1])
    if b < 1:
        raise exceptions.DomainError("b must be positive, got %s" % (b,))
    d = model.family_d(model.FAMILY_1, a, b)
    check_radicand(d)
    if b == 1:
        return model.SurdExpansion(d, a - 1, [1, 2 * a - 2])
    return model.SurdExpansion(d, a * b - 1,
                               [1, 2 * a - 2, 1, 2 * a * b - 2])


def family2_cf(a, b):
    """Closed-form expansion of sqrt(a^2*b^2 - 2b)."""
    if a < model.FAMILY_MIN_A[model.FAMILY_2]:
        raise exceptions.HypothesisError(model.FAMILY_2, a,
                                         model.FAMILY_MIN_A[model.FAMILY_2])
    if b < 1:
        raise exceptions.DomainError("b must be positive, got %s" % (b,))
    d = model.family_d(model.FAMILY_2, a, b)
    check_radicand(d)
    return model.SurdExpansion(d, a * b - 1,
                               [1, a - 2, 1, 2 * a * b - 2])
