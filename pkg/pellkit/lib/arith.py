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

"""Exact integer kernels shared by the solvers.

Everything here works on Python integers of arbitrary size.  gmpy2 is
used for the root extractions when it is installed; the results are
always converted back to plain ints.
"""

import math

import extras

from pellkit import exceptions

gmpy2 = extras.try_import('gmpy2')


def isqrt(n):
    if n < 0:
        raise exceptions.DomainError("Square root of negative number %s" % n)
    if gmpy2:
        return int(gmpy2.isqrt(n))
    return math.isqrt(n)


def iroot(n, k):
    """Return floor(n ** (1/k)) for n >= 0 and k >= 1."""
    if n < 0 or k < 1:
        raise exceptions.DomainError("Integer root needs n >= 0 and k >= 1, "
                                     "got n=%s k=%s" % (n, k))
    if k == 1 or n < 2:
        return n
    if gmpy2:
        return int(gmpy2.iroot(n, k)[0])
    # Newton from above; the first estimate exceeds the true root.
    r = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        s = ((k - 1) * r + n // r ** (k - 1)) // k
        if s >= r:
            return r
        r = s


class QuadraticInteger(object):
    """The element x + y*sqrt(d) of Z[sqrt(d)]."""

    def __init__(self, x, y, d):
        self.x = x
        self.y = y
        self.d = d

    def __repr__(self):
        return '<QuadraticInteger %s%+d*sqrt(%s)>' % (self.x, self.y, self.d)

    def __eq__(self, other):
        if not isinstance(other, QuadraticInteger):
            return False
        return (self.x, self.y, self.d) == (other.x, other.y, other.d)

    def __hash__(self):
        return hash((self.x, self.y, self.d))

    def __mul__(self, other):
        if self.d != other.d:
            raise exceptions.DomainError("Cannot multiply elements of "
                                         "Z[sqrt(%s)] and Z[sqrt(%s)]"
                                         % (self.d, other.d))
        return QuadraticInteger(self.x * other.x + self.d * self.y * other.y,
                                self.x * other.y + self.y * other.x,
                                self.d)

    def __pow__(self, n):
        if n < 0:
            raise exceptions.DomainError("Negative exponent %s" % n)
        result = QuadraticInteger(1, 0, self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def norm(self):
        return self.x * self.x - self.d * self.y * self.y


class HalfQuadraticInteger(object):
    """The element (u + v*sqrt(D))/2, with u and v of matching parity.

    Powers of (k + sqrt(k^2 + 4s))/2 live here: the n-th power is
    (V_n + U_n*sqrt(D))/2, which is how Binet's formulas are evaluated
    without leaving the integers.
    """

    def __init__(self, u, v, D):
        self.u = u
        self.v = v
        self.D = D

    def __repr__(self):
        return '<HalfQuadraticInteger (%s%+d*sqrt(%s))/2>' % (
            self.u, self.v, self.D)

    def __eq__(self, other):
        if not isinstance(other, HalfQuadraticInteger):
            return False
        return (self.u, self.v, self.D) == (other.u, other.v, other.D)

    def __hash__(self):
        return hash((self.u, self.v, self.D))

    def __mul__(self, other):
        if self.D != other.D:
            raise exceptions.DomainError("Cannot multiply elements with "
                                         "radicands %s and %s"
                                         % (self.D, other.D))
        u, ru = divmod(self.u * other.u + self.D * self.v * other.v, 2)
        v, rv = divmod(self.u * other.v + self.v * other.u, 2)
        if ru or rv:
            raise exceptions.ContractViolation(
                "Half-integer product left the ring: %r * %r" % (self, other))
        return HalfQuadraticInteger(u, v, self.D)

    def __pow__(self, n):
        if n < 0:
            raise exceptions.DomainError("Negative exponent %s" % n)
        result = HalfQuadraticInteger(2, 0, self.D)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result


def iter_square_hits(d, rhs, y_max):
    """Yield (x, y) with x^2 = d*y^2 + rhs, x >= 0, for 1 <= y <= y_max.

    d*y^2 is advanced by differences so each step costs one addition
    and one integer square root.
    """
    y = 1
    t = d + rhs
    while y <= y_max:
        if t >= 0:
            x = isqrt(t)
            if x * x == t:
                yield (x, y)
        t += d * (2 * y + 1)
        y += 1
