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

"""Generic solving of x^2 - d*y^2 = N for N in {1, -1, 4, -4}.

Fundamental solutions come from the continued fraction of sqrt(d): with
period length m the least solution of N = 1 is (p_{m-1}, q_{m-1}) when m
is even and (p_{2m-1}, q_{2m-1}) when m is odd; N = -1 is solvable
exactly when m is odd, with least solution (p_{m-1}, q_{m-1}).  N = 4
and N = -4 are reduced to those two cases.
"""

import logging

from pellkit import cf
from pellkit import exceptions
from pellkit.lib import arith
from pellkit import model

log = logging.getLogger("pellkit.pell")

DEFAULT_SEARCH_BOUND = 10 ** 6


def is_solution(d, N, x, y):
    return arith.QuadraticInteger(x, y, d).norm() == N


def checked_solution(d, x, y, n=1, rhs=1):
    """Build a PellSolution after substituting it into its equation."""
    if not is_solution(d, rhs, x, y):
        raise exceptions.ContractViolation(
            "Not a solution of x^2 - d*y^2 = N", d=d, rhs=rhs, values=(x, y))
    if y <= 0 or x < 0:
        raise exceptions.ContractViolation(
            "Solution is not positive", d=d, rhs=rhs, values=(x, y))
    return model.PellSolution(d, x, y, n=n, rhs=rhs)


def fundamental_unit(d):
    expansion = cf.cf_expand(d)
    m = expansion.m
    if m % 2 == 0:
        index = m - 1
    else:
        index = 2 * m - 1
    convergent = cf.convergents(expansion, index + 1)[index]
    return checked_solution(d, convergent.p, convergent.q)


def solve_negative_one(d):
    expansion = cf.cf_expand(d)
    m = expansion.m
    if m % 2 == 0:
        log.debug("x^2 - %s*y^2 = -1: period length %s is even", d, m)
        return model.NoSolution(model.REASON_EVEN_PERIOD)
    convergent = cf.convergents(expansion, m)[m - 1]
    return model.Solvable(checked_solution(d, convergent.p, convergent.q,
                                           rhs=-1))


def _check_index(n):
    if n < 1:
        raise exceptions.DomainError("Solution index must be >= 1, got %s"
                                     % (n,))


def nth_solution(d, fund, n):
    """(x_n, y_n) with x_n + y_n*sqrt(d) = (x_1 + y_1*sqrt(d))^n."""
    _check_index(n)
    if fund.rhs != 1:
        raise exceptions.DomainError("Unit powers need an N = 1 solution, "
                                     "got N = %s" % fund.rhs)
    power = arith.QuadraticInteger(fund.x, fund.y, d) ** n
    return checked_solution(d, power.x, power.y, n=n, rhs=1)


def nth_solution_four(d, fund, n):
    """n-th solution of x^2 - d*y^2 = 4: 2*((X + Y*sqrt(d))/2)^n."""
    _check_index(n)
    if fund.rhs != 4:
        raise exceptions.DomainError("Expected an N = 4 solution, got N = %s"
                                     % fund.rhs)
    power = arith.HalfQuadraticInteger(fund.x, fund.y, d) ** n
    return checked_solution(d, power.u, power.v, n=n, rhs=4)


def nth_negative_solution(d, fund, n):
    """n-th solution of N = -1 or N = -4: the odd power 2n - 1."""
    _check_index(n)
    if fund.rhs == -1:
        power = arith.QuadraticInteger(fund.x, fund.y, d) ** (2 * n - 1)
        x, y = power.x, power.y
    elif fund.rhs == -4:
        power = arith.HalfQuadraticInteger(fund.x, fund.y, d) ** (2 * n - 1)
        x, y = power.u, power.v
    else:
        raise exceptions.DomainError("Expected an N = -1 or N = -4 "
                                     "solution, got N = %s" % fund.rhs)
    return checked_solution(d, x, y, n=n, rhs=fund.rhs)


def odd_half_root(d, x, y, sign):
    """Find odd (X, Y) with ((X + Y*sqrt(d))/2)^3 = x + y*sqrt(d).

    Here X^2 - d*Y^2 = 4*sign and x^2 - d*y^2 = sign.  Expanding the cube
    gives x = X*(d*Y^2 + sign)/2 and y = Y*(d*Y^2 + 3*sign)/2, so Y is
    pinned down by an integer cube root.  Returns None when no such pair
    exists, which is always the case unless d = 5 (mod 8).
    """
    if d % 8 != 5:
        return None
    guess = arith.iroot(2 * y // d, 3)
    for Y in range(max(1, guess - 1), guess + 3):
        if Y * (d * Y * Y + 3 * sign) != 2 * y:
            continue
        square = d * Y * Y + 4 * sign
        if square < 0:
            continue
        X = arith.isqrt(square)
        if X * X == square and X * (d * Y * Y + sign) == 2 * x:
            return (X, Y)
    return None


def solve_four(d):
    """Fundamental solution of x^2 - d*y^2 = 4."""
    cf.check_radicand(d)
    if d % 4 == 0:
        # d/4 is not a square since d is not.
        quarter = d // 4
        unit = fundamental_unit(quarter)
        log.debug("x^2 - %s*y^2 = 4 from the unit %r of d/4", d, unit)
        return checked_solution(d, 2 * unit.x, unit.y, rhs=4)
    unit = fundamental_unit(d)
    root = odd_half_root(d, unit.x, unit.y, 1)
    if root:
        log.debug("x^2 - %s*y^2 = 4 has the odd solution %s", d, root)
        return checked_solution(d, root[0], root[1], rhs=4)
    return checked_solution(d, 2 * unit.x, 2 * unit.y, rhs=4)


def solve_negative_four(d, search_bound=DEFAULT_SEARCH_BOUND):
    cf.check_radicand(d)
    if search_bound < 1:
        raise exceptions.DomainError("Search bound must be positive, got %s"
                                     % (search_bound,))
    residue = d % 4
    if residue in (2, 3):
        # For d = 2, 3 (mod 4) any solution has x and y even.
        outcome = solve_negative_one(d)
        if outcome.kind != model.Solvable.kind:
            return model.NoSolution(model.REASON_THEOREM_1,
                                    method=model.theorem_tag(1))
        fund = outcome.fundamental
        return model.Solvable(
            checked_solution(d, 2 * fund.x, 2 * fund.y, rhs=-4),
            method=model.theorem_tag(1))
    if residue == 0:
        # x must be even: (x/2)^2 - (d/4)*y^2 = -1.
        quarter = d // 4
        outcome = solve_negative_one(quarter)
        if outcome.kind != model.Solvable.kind:
            return model.NoSolution(model.REASON_REDUCTION)
        fund = outcome.fundamental
        return model.Solvable(
            checked_solution(d, 2 * fund.x, fund.y, rhs=-4))
    outcome = solve_negative_one(d)
    if outcome.kind == model.Solvable.kind:
        fund = outcome.fundamental
        root = odd_half_root(d, fund.x, fund.y, -1)
        if root:
            return model.Solvable(
                checked_solution(d, root[0], root[1], rhs=-4))
        return model.Solvable(
            checked_solution(d, 2 * fund.x, 2 * fund.y, rhs=-4))
    log.debug("x^2 - %s*y^2 = -4: searching y <= %s", d, search_bound)
    for x, y in arith.iter_square_hits(d, -4, search_bound):
        return model.Solvable(checked_solution(d, x, y, rhs=-4),
                              method=model.METHOD_BRUTE_FORCE)
    return model.Undetermined(search_bound)


def compose(seed, unit, d, sign=1):
    """Combine a solution of N with a unit: (gr + sign*dhs, gs + sign*hr)."""
    if sign not in (1, -1):
        raise exceptions.DomainError("Composition sign must be +1 or -1, "
                                     "got %s" % (sign,))
    g, h = seed.x, seed.y
    r, s = unit.x, unit.y
    if not is_solution(d, seed.rhs, g, h):
        raise exceptions.ContractViolation(
            "Seed is not a solution", d=d, rhs=seed.rhs, values=(g, h))
    if unit.rhs != 1 or not is_solution(d, 1, r, s):
        raise exceptions.ContractViolation(
            "Unit is not a solution of N = 1", d=d, rhs=1, values=(r, s))
    if s == 0:
        raise exceptions.DomainError("The trivial unit (1, 0) is not "
                                     "accepted for composition")
    x = abs(g * r + sign * d * h * s)
    y = abs(g * s + sign * h * r)
    if y == 0:
        raise exceptions.DomainError("Composition of %r and %r gives the "
                                     "trivial solution" % (seed, unit))
    n = None
    if seed.n is not None and unit.n is not None:
        if sign == 1:
            n = seed.n + unit.n
        elif seed.rhs == 1:
            n = abs(seed.n - unit.n)
    return checked_solution(d, x, y, n=n, rhs=seed.rhs)


def iter_solutions(d, seed, unit):
    """Yield seed, seed*unit, seed*unit^2, ... by repeated composition."""
    solution = seed
    while True:
        yield solution
        solution = compose(solution, unit, d)
