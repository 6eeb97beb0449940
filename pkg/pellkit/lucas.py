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

"""Generalized Fibonacci U_n(k, s) and Lucas V_n(k, s) sequences.

  U_0 = 0, U_1 = 1, V_0 = 2, V_1 = k
  W_{n+1} = k*W_n + s*W_{n-1}

binet_pair() computes the same numbers a second way: with
alpha = (k + sqrt(D))/2, D = k^2 + 4s, one has
alpha^n = (V_n + U_n*sqrt(D))/2, and alpha^n is evaluated exactly in
HalfQuadraticInteger by binary powering.
"""

from pellkit import exceptions
from pellkit.lib import arith


def _check_index(n):
    if n < 0:
        raise exceptions.DomainError("Sequence index must be >= 0, got %s"
                                     % (n,))


def lucas_pair(params, n):
    """Return (U_n, V_n) by running both recurrences together."""
    _check_index(n)
    k, s = params.k, params.s
    u_prev, u = 0, 1
    v_prev, v = 2, k
    if n == 0:
        return (u_prev, v_prev)
    for _ in range(n - 1):
        u_prev, u = u, k * u + s * u_prev
        v_prev, v = v, k * v + s * v_prev
    return (u, v)


def u_n(params, n):
    return lucas_pair(params, n)[0]


def v_n(params, n):
    return lucas_pair(params, n)[1]


def binet_pair(params, n):
    """Return (V_n, U_n) read off alpha^n = (V_n + U_n*sqrt(D))/2."""
    _check_index(n)
    alpha = arith.HalfQuadraticInteger(params.k, 1, params.D)
    power = alpha ** n
    return (power.u, power.v)


def half_v(params, n):
    """V_n/2, which the Pell closed forms need to be an integer."""
    v = v_n(params, n)
    if v % 2:
        raise exceptions.ContractViolation(
            "V_%s(%s, %s) = %s is odd" % (n, params.k, params.s, v))
    return v // 2
