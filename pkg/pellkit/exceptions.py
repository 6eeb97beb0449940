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


class DomainError(Exception):
    """An input lies outside the domain an operation is defined on."""
    pass


class PerfectSquareError(DomainError):
    def __init__(self, d):
        self.d = d
        message = "%s is a perfect square" % (d,)
        super(PerfectSquareError, self).__init__(message)


class HypothesisError(DomainError):
    def __init__(self, family, a, minimum):
        self.family = family
        self.a = a
        self.minimum = minimum
        message = ("Family %s requires a >= %s, got a = %s"
                   % (family, minimum, a))
        super(HypothesisError, self).__init__(message)


class ContractViolation(Exception):
    def __init__(self, what, d=None, rhs=None, values=None):
        self.what = what
        self.d = d
        self.rhs = rhs
        self.values = values
        message = what
        if d is not None:
            message = "%s (d=%s, N=%s, values=%s)" % (what, d, rhs, values)
        super(ContractViolation, self).__init__(message)
