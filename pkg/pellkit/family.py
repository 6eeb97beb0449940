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

"""Closed-form solutions for the families d = a^2*b^2 - b (F1) and
d = a^2*b^2 - 2b (F2).

Every solution of N = 1, and every solution of N = 4 the closed forms
reach, is read off the Lucas sequences with s = -1:

  F1, b = 1:  K = 2a,          N=1: (V_n/2, U_n)       N=4: (V_n, 2U_n)
  F1, b > 1:  K = 4a^2*b - 2,  N=1: (V_n/2, 2a*U_n)    N=4: (V_n, 4a*U_n)
  F2:         K = 2a^2*b - 2,  N=1: (V_n/2, a*U_n)     N=4: (V_n, 2a*U_n)

with U_n = U_n(K, -1), V_n = V_n(K, -1).  For F1 with b = 4 and F2 with
b = 2 the N = 4 forms land on every other solution only, and the least
solution is (2X, Y) from a unit X + Y*sqrt(d/4) with odd Y.  N = -1 has
no solutions in either family (even period) and N = -4 has none for F2;
N = -4 for F1 is left to the generic solver.
"""

import logging

from pellkit import cf
from pellkit import exceptions
from pellkit.lib import arith
from pellkit import lucas
from pellkit import model
from pellkit import pell

log = logging.getLogger("pellkit.family")

UNSOLVABLE_THEOREMS = {
    (model.FAMILY_1, -1): (model.REASON_EVEN_PERIOD, 6),
    (model.FAMILY_2, -1): (model.REASON_EVEN_PERIOD, 11),
    (model.FAMILY_2, -4): (model.REASON_THEOREM_14, 14),
}


def family_params(family, a, b, strict=True):
    return model.FamilyParams(family, a, b, strict=strict)


def corollary_params(which, k):
    """Return (FamilyParams, rhs) for a corollary; b = 3 and a = k."""
    if which not in model.COROLLARY_MAP:
        raise exceptions.DomainError("Unknown corollary %s" % which)
    if k < 1:
        raise exceptions.DomainError("Corollary parameter k must be "
                                     "positive, got %s" % (k,))
    family, rhs = model.COROLLARY_MAP[which]
    return (model.FamilyParams(family, k, 3, strict=False), rhs)


def family_for_d(d):
    """All (family, a, b) with a >= 1, b >= 1 producing d."""
    members = []
    for family, linear in ((model.FAMILY_1, 1), (model.FAMILY_2, 2)):
        b = 1
        # a^2*b^2 = d + linear*b needs b^2 <= d + linear*b.
        while b * b <= d + linear * b:
            total = d + linear * b
            if total % (b * b) == 0:
                a = arith.isqrt(total // (b * b))
                if a * a * b * b == total:
                    members.append((family, a, b))
            b += 1
    return members


def _require_hypothesis(params):
    if not params.hypothesisHolds:
        raise exceptions.HypothesisError(params.family, params.a,
                                         model.FAMILY_MIN_A[params.family])


def _lucas_form(params):
    """Return (K, y scale for N = 1) of the family's Lucas closed form."""
    a, b = params.a, params.b
    if params.family == model.FAMILY_1:
        if b == 1:
            return (2 * a, 1)
        return (4 * a * a * b - 2, 2 * a)
    return (2 * a * a * b - 2, a)


def _closed_form(params, rhs, n, index=None):
    if n < 1:
        raise exceptions.DomainError("Solution index must be >= 1, got %s"
                                     % (n,))
    if index is None:
        index = n
    K, scale = _lucas_form(params)
    u, v = lucas.lucas_pair(model.SequenceParams(K, -1), n)
    if rhs == 1:
        if v % 2:
            raise exceptions.ContractViolation(
                "V_%s(%s, -1) = %s is odd" % (n, K, v))
        x, y = v // 2, scale * u
    else:
        x, y = v, 2 * scale * u
    if not pell.is_solution(params.d, rhs, x, y):
        raise exceptions.ContractViolation(
            "Closed form for %r fails" % (params,),
            d=params.d, rhs=rhs, values=(x, y))
    return model.PellSolution(params.d, x, y, n=index, rhs=rhs)


def family_solve(params, rhs, n=1, search_bound=pell.DEFAULT_SEARCH_BOUND):
    """n-th solution (PellSolution) or a Solvability verdict."""
    if rhs not in model.RHS_VALUES:
        raise exceptions.DomainError("N must be one of %s, got %s"
                                     % (model.RHS_VALUES, rhs))
    _require_hypothesis(params)
    if rhs == 1:
        return _closed_form(params, rhs, n)
    if rhs == 4:
        return _closed_form(params, rhs, n,
                            index=four_stream_step(params) * n)
    if (params.family, rhs) in UNSOLVABLE_THEOREMS:
        reason, theorem = UNSOLVABLE_THEOREMS[(params.family, rhs)]
        return model.NoSolution(reason, method=model.theorem_tag(theorem))
    # F1 with N = -4 has no theorem of its own.
    log.debug("Delegating x^2 - %s*y^2 = -4 for %r to the generic solver",
              params.d, params)
    outcome = pell.solve_negative_four(params.d, search_bound)
    if outcome.kind == model.Solvable.kind:
        return pell.nth_negative_solution(params.d, outcome.fundamental, n)
    return outcome


def family_fundamental(params, rhs):
    if rhs not in (1, 4):
        raise exceptions.DomainError("Fundamental solutions are given for "
                                     "N = 1 and N = 4, got %s" % (rhs,))
    _require_hypothesis(params)
    x, y = _fundamental_unit(params)
    if rhs == 4:
        root = _quarter_root(params.d, x, y)
        if root:
            x, y = 2 * root[0], root[1]
        else:
            x, y = 2 * x, 2 * y
    return pell.checked_solution(params.d, x, y, rhs=rhs)


def _fundamental_unit(params):
    a, b = params.a, params.b
    if params.family == model.FAMILY_1:
        if b == 1:
            return (a, 1)
        return (2 * a * a * b - 1, 2 * a)
    return (a * a * b - 1, a)


def _quarter_root(d, x, y):
    """Find (X, Y), Y odd, with (X + Y*sqrt(d/4))^2 = x + y*sqrt(d).

    For d = 0 (mod 4) the solutions of N = 4 are (2X, Y) with
    X + Y*sqrt(d/4) a unit of Z[sqrt(d/4)].  The unit
    x + y*sqrt(d) = x + 2y*sqrt(d/4) is either the least such unit or its
    square, the latter exactly when the least one has odd Y.  Squaring
    gives X^2 = (x + 1)/2 and X*Y = y.  Returns None when the square root
    does not exist.
    """
    if d % 4 or x % 2 == 0:
        return None
    X = arith.isqrt((x + 1) // 2)
    if X * X != (x + 1) // 2 or y % X:
        return None
    Y = y // X
    if Y % 2 == 0:
        return None
    return (X, Y)


def four_stream_step(params):
    """Index step of the closed-form N = 4 solutions in the N = 4 stream.

    The closed form (V_n, 2*scale*U_n) is twice the n-th power of the
    fundamental unit.  That is the n-th solution of N = 4 except for
    d = 0 (mod 4) when the unit is a square in Z[sqrt(d/4)]; there it is
    the 2n-th (F1 with b = 4, F2 with b = 2).
    """
    _require_hypothesis(params)
    x, y = _fundamental_unit(params)
    if _quarter_root(params.d, x, y):
        return 2
    return 1


def family_expansion(params):
    _require_hypothesis(params)
    if params.family == model.FAMILY_1:
        return cf.family1_cf(params.a, params.b)
    return cf.family2_cf(params.a, params.b)


def nth_quotient_form(params, n):
    """Finite continued fraction [a0; (period)^(n-1), period[:-1]].

    Its value is x_n/y_n; the period is the family's closed form.
    """
    if n < 1:
        raise exceptions.DomainError("Solution index must be >= 1, got %s"
                                     % (n,))
    expansion = family_expansion(params)
    period = list(expansion.period)
    return [expansion.a0] + period * (n - 1) + period[:-1]


def corollary_solve(which, k, n=1):
    params, rhs = corollary_params(which, k)
    if not params.hypothesisHolds:
        log.debug("Corollary %s at k=%s is outside the family hypothesis; "
                  "relying on substitution", which, k)
    return _closed_form(params, rhs, n)
