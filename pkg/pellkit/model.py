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
from pellkit.lib import arith

RHS_VALUES = (1, -1, 4, -4)

FAMILY_1 = 'F1'           # d = a^2*b^2 - b
FAMILY_2 = 'F2'           # d = a^2*b^2 - 2b

FAMILY_MAP = {
    '1': FAMILY_1,
    '2': FAMILY_2,
}

# Least a for which the closed forms are proven.
FAMILY_MIN_A = {
    FAMILY_1: 2,
    FAMILY_2: 3,
}

COROLLARY_93_1 = 'C93_1'  # x^2 - (9k^2 - 3)y^2 = 1
COROLLARY_93_4 = 'C93_4'
COROLLARY_96_1 = 'C96_1'  # x^2 - (9k^2 - 6)y^2 = 1
COROLLARY_96_4 = 'C96_4'

# (family, rhs) for each corollary; the corollaries are the families at
# b = 3, a = k.
COROLLARY_MAP = {
    COROLLARY_93_1: (FAMILY_1, 1),
    COROLLARY_93_4: (FAMILY_1, 4),
    COROLLARY_96_1: (FAMILY_2, 1),
    COROLLARY_96_4: (FAMILY_2, 4),
}

COROLLARY_CLI_MAP = {
    ('9k2-3', 1): COROLLARY_93_1,
    ('9k2-3', 4): COROLLARY_93_4,
    ('9k2-6', 1): COROLLARY_96_1,
    ('9k2-6', 4): COROLLARY_96_4,
}

REASON_EVEN_PERIOD = 'even-period'
REASON_THEOREM_1 = 'theorem-1-equivalence'
REASON_THEOREM_14 = 'theorem-14-parity'
REASON_REDUCTION = 'reduction-to-known-unsolvable'

REASONS = (
    REASON_EVEN_PERIOD,
    REASON_THEOREM_1,
    REASON_THEOREM_14,
    REASON_REDUCTION,
)

METHOD_CLOSED_FORM = 'closed-form'
METHOD_GENERIC_CF = 'generic-cf'
METHOD_BRUTE_FORCE = 'brute-force'


def theorem_tag(number):
    return 'theorem-%s' % number


def _int(value):
    # JSON payloads carry integers as decimal strings.
    return int(value)


class SurdExpansion(object):
    """The periodic continued fraction [a0; a1, ..., am] of sqrt(d)."""

    def __init__(self, d, a0, period):
        self.d = d
        self.a0 = a0
        self.period = tuple(period)

    @property
    def m(self):
        return len(self.period)

    def __repr__(self):
        return '<SurdExpansion sqrt(%s) = [%s; %s]>' % (
            self.d, self.a0, ', '.join(str(a) for a in self.period))

    def __eq__(self, other):
        if not isinstance(other, SurdExpansion):
            return False
        return (self.d, self.a0, self.period) == (other.d, other.a0,
                                                   other.period)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.d, self.a0, self.period))

    def getQuotient(self, k):
        """Partial quotient a_k, cycling the period for k > m."""
        if k < 0:
            raise exceptions.DomainError("No partial quotient at index %s" % k)
        if k == 0:
            return self.a0
        return self.period[(k - 1) % self.m]

    def verify(self):
        """Raise ContractViolation unless the shape invariants hold.

        The purely periodic part is checked separately by
        pellkit.cf.replay_states, which needs the PQa recurrences.
        """
        if not (self.a0 * self.a0 <= self.d < (self.a0 + 1) ** 2):
            raise exceptions.ContractViolation(
                "a0=%s is not floor(sqrt(%s))" % (self.a0, self.d))
        if not self.period:
            raise exceptions.ContractViolation(
                "Empty period for sqrt(%s)" % self.d)
        if self.period[-1] != 2 * self.a0:
            raise exceptions.ContractViolation(
                "Period of sqrt(%s) ends in %s, expected %s"
                % (self.d, self.period[-1], 2 * self.a0))
        if min(self.period) < 1:
            raise exceptions.ContractViolation(
                "Non-positive partial quotient in %r" % self)

    def toDict(self):
        return {'type': 'expansion',
                'd': str(self.d),
                'a0': str(self.a0),
                'period': [str(a) for a in self.period],
                'm': str(self.m)}

    @classmethod
    def fromDict(cls, data):
        return cls(_int(data['d']), _int(data['a0']),
                   [_int(a) for a in data['period']])


class Convergent(object):
    """The k-th convergent p/q of a continued fraction."""

    def __init__(self, k, p, q):
        self.k = k
        self.p = p
        self.q = q

    def __repr__(self):
        return '<Convergent %s: %s/%s>' % (self.k, self.p, self.q)

    def __eq__(self, other):
        if not isinstance(other, Convergent):
            return False
        return (self.k, self.p, self.q) == (other.k, other.p, other.q)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.k, self.p, self.q))


class PellSolution(object):
    """A positive solution (x, y) of x^2 - d*y^2 = rhs.

    n is the index of the solution in its stream (1 for the fundamental
    one); it is None when the solution was obtained in a way that does
    not place it in a stream.
    """

    def __init__(self, d, x, y, n=1, rhs=1):
        self.d = d
        self.x = x
        self.y = y
        self.n = n
        self.rhs = rhs

    def __repr__(self):
        return '<PellSolution d=%s N=%s n=%s (%s, %s)>' % (
            self.d, self.rhs, self.n, self.x, self.y)

    def __eq__(self, other):
        if not isinstance(other, PellSolution):
            return False
        return ((self.d, self.x, self.y, self.n, self.rhs) ==
                (other.d, other.x, other.y, other.n, other.rhs))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.d, self.x, self.y, self.n, self.rhs))

    @property
    def pair(self):
        return (self.x, self.y)

    def isValid(self):
        return self.x * self.x - self.d * self.y * self.y == self.rhs

    def toDict(self):
        return {'type': 'solution',
                'd': str(self.d),
                'rhs': str(self.rhs),
                'n': None if self.n is None else str(self.n),
                'x': str(self.x),
                'y': str(self.y)}

    @classmethod
    def fromDict(cls, data):
        n = data.get('n')
        return cls(_int(data['d']), _int(data['x']), _int(data['y']),
                   n=None if n is None else _int(n),
                   rhs=_int(data['rhs']))


class Solvability(object):
    """Outcome of deciding whether x^2 - d*y^2 = N has positive solutions."""

    kind = None
    determinate = True

    def __init__(self, method):
        self.method = method

    def __ne__(self, other):
        return not self == other

    @classmethod
    def fromDict(cls, data):
        kind = data['kind']
        if kind == Solvable.kind:
            return Solvable(PellSolution.fromDict(data['fundamental']),
                            method=data['method'])
        if kind == NoSolution.kind:
            return NoSolution(data['reason'], method=data['method'])
        if kind == Undetermined.kind:
            return Undetermined(_int(data['searched_bound']),
                                method=data['method'])
        raise ValueError("Unknown solvability kind %s" % kind)


class Solvable(Solvability):
    kind = 'solvable'

    def __init__(self, fundamental, method=METHOD_GENERIC_CF):
        super(Solvable, self).__init__(method)
        self.fundamental = fundamental

    def __repr__(self):
        return '<Solvable %r via %s>' % (self.fundamental, self.method)

    def __eq__(self, other):
        return (isinstance(other, Solvable) and
                self.fundamental == other.fundamental and
                self.method == other.method)

    def __hash__(self):
        return hash((self.kind, self.fundamental, self.method))

    def toDict(self):
        return {'type': 'solvability',
                'kind': self.kind,
                'method': self.method,
                'fundamental': self.fundamental.toDict()}


class NoSolution(Solvability):
    kind = 'no-solution'

    def __init__(self, reason, method=METHOD_GENERIC_CF):
        if reason not in REASONS:
            raise ValueError("Unknown unsolvability reason %s" % reason)
        super(NoSolution, self).__init__(method)
        self.reason = reason

    def __repr__(self):
        return '<NoSolution %s via %s>' % (self.reason, self.method)

    def __eq__(self, other):
        return (isinstance(other, NoSolution) and
                self.reason == other.reason and
                self.method == other.method)

    def __hash__(self):
        return hash((self.kind, self.reason, self.method))

    def toDict(self):
        return {'type': 'solvability',
                'kind': self.kind,
                'method': self.method,
                'reason': self.reason}


class Undetermined(Solvability):
    kind = 'undetermined'
    determinate = False

    def __init__(self, searched_bound, method=METHOD_BRUTE_FORCE):
        super(Undetermined, self).__init__(method)
        self.searched_bound = searched_bound

    def __repr__(self):
        return '<Undetermined up to y=%s>' % self.searched_bound

    def __eq__(self, other):
        return (isinstance(other, Undetermined) and
                self.searched_bound == other.searched_bound and
                self.method == other.method)

    def __hash__(self):
        return hash((self.kind, self.searched_bound, self.method))

    def toDict(self):
        return {'type': 'solvability',
                'kind': self.kind,
                'method': self.method,
                'searched_bound': str(self.searched_bound)}


class SequenceParams(object):
    """Parameters (k, s) of U_n(k, s) and V_n(k, s)."""

    def __init__(self, k, s):
        if k == 0 or s == 0:
            raise exceptions.DomainError(
                "Sequence parameters must be non-zero, got k=%s s=%s"
                % (k, s))
        if k * k + 4 * s <= 0:
            raise exceptions.DomainError(
                "Sequence parameters need k^2 + 4s > 0, got k=%s s=%s"
                % (k, s))
        self.k = k
        self.s = s

    @property
    def D(self):
        return self.k * self.k + 4 * self.s

    def __repr__(self):
        return '<SequenceParams k=%s s=%s>' % (self.k, self.s)

    def __eq__(self, other):
        return (isinstance(other, SequenceParams) and
                (self.k, self.s) == (other.k, other.s))

    def __hash__(self):
        return hash((self.k, self.s))


def family_d(family, a, b):
    if family == FAMILY_1:
        return a * a * b * b - b
    if family == FAMILY_2:
        return a * a * b * b - 2 * b
    raise exceptions.DomainError("Unknown family %s" % family)


class FamilyParams(object):
    """A member (a, b) of one of the two Pell families.

    With strict=False the family hypothesis on a is not enforced; such
    parameters are only good for the generic solver.
    """

    def __init__(self, family, a, b, strict=True):
        if family not in FAMILY_MIN_A:
            raise exceptions.DomainError("Unknown family %s" % family)
        if a < 1 or b < 1:
            raise exceptions.DomainError(
                "Family parameters must be positive, got a=%s b=%s" % (a, b))
        self.family = family
        self.a = a
        self.b = b
        self.strict = strict
        self.d = family_d(family, a, b)
        if strict and a < FAMILY_MIN_A[family]:
            raise exceptions.HypothesisError(family, a, FAMILY_MIN_A[family])
        if self.d < 2:
            raise exceptions.DomainError(
                "Family %s with a=%s b=%s gives d=%s < 2"
                % (family, a, b, self.d))
        r = arith.isqrt(self.d)
        if r * r == self.d:
            raise exceptions.PerfectSquareError(self.d)

    @property
    def hypothesisHolds(self):
        return self.a >= FAMILY_MIN_A[self.family]

    def __repr__(self):
        return '<FamilyParams %s a=%s b=%s d=%s>' % (
            self.family, self.a, self.b, self.d)

    def __eq__(self, other):
        return (isinstance(other, FamilyParams) and
                (self.family, self.a, self.b) ==
                (other.family, other.a, other.b))

    def __hash__(self):
        return hash((self.family, self.a, self.b))

    def toDict(self):
        return {'family': self.family, 'a': str(self.a), 'b': str(self.b),
                'd': str(self.d)}


class SearchReport(object):
    """Result of an exhaustive scan y = 1..y_max of x^2 - d*y^2 = rhs."""

    def __init__(self, d, rhs, y_max, found, exhausted):
        self.d = d
        self.rhs = rhs
        self.y_max = y_max
        self.found = list(found)
        self.exhausted = exhausted

    def __repr__(self):
        return '<SearchReport d=%s N=%s y<=%s found=%s>' % (
            self.d, self.rhs, self.y_max, len(self.found))

    @property
    def least(self):
        if self.found:
            return self.found[0]
        return None

    def toDict(self):
        return {'type': 'search',
                'd': str(self.d),
                'rhs': str(self.rhs),
                'y_max': str(self.y_max),
                'exhausted': self.exhausted,
                'found': [s.toDict() for s in self.found]}

    @classmethod
    def fromDict(cls, data):
        return cls(_int(data['d']), _int(data['rhs']), _int(data['y_max']),
                   [PellSolution.fromDict(s) for s in data['found']],
                   data['exhausted'])


class Discrepancy(object):
    """A grid point where two computations of the same value disagree."""

    def __init__(self, coords, check, expected, actual):
        self.coords = tuple(str(c) for c in coords)
        self.check = check
        self.expected = str(expected)
        self.actual = str(actual)

    def sortKey(self):
        key = []
        for c in self.coords:
            if c.lstrip('-').isdigit():
                key.append((0, int(c), ''))
            else:
                key.append((1, 0, c))
        return (tuple(key), self.check)

    def __repr__(self):
        return '<Discrepancy %s at %s: expected %s, got %s>' % (
            self.check, self.coords, self.expected, self.actual)

    def __eq__(self, other):
        return (isinstance(other, Discrepancy) and
                (self.coords, self.check, self.expected, self.actual) ==
                (other.coords, other.check, other.expected, other.actual))

    def __hash__(self):
        return hash((self.coords, self.check))

    def toDict(self):
        return {'coords': list(self.coords),
                'check': self.check,
                'expected': self.expected,
                'actual': self.actual}

    @classmethod
    def fromDict(cls, data):
        return cls(data['coords'], data['check'], data['expected'],
                   data['actual'])
