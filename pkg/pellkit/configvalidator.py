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

import voluptuous as v

from pellkit import model


# Several grid keys accept either a single item or a list.
def toList(x):
    return v.Any([x], x)


def asList(value):
    if isinstance(value, list):
        return value
    return [value]


positive = v.All(v.Coerce(int), v.Range(min=1))


class ConfigSchema(object):
    """Schema for the sections of pellkit.conf.

    ConfigParser hands every value over as a string, so integers are
    coerced.
    """

    pellkit = {'search_bound': positive,
               'y_bound': positive,
               'jobs': positive,
               'log_config': str,
               }

    verify = {'a_max': positive,
              'b_max': positive,
              'n_max': positive,
              'k_max': positive,
              }

    def getSchema(self):
        return v.Schema({'pellkit': self.pellkit,
                         'verify': self.verify})


class GridSchema(object):
    family = v.Any(1, 2, '1', '2')
    rhs = v.Any(*model.RHS_VALUES)
    corollary = v.Any(*sorted(model.COROLLARY_MAP))
    bound = v.All(int, v.Range(min=1))

    grid = {'families': toList(family),
            'rhs': toList(rhs),
            'corollaries': toList(corollary),
            'a-min': bound,
            'a-max': bound,
            'b-min': bound,
            'b-max': bound,
            'n-max': bound,
            'k-max': v.All(int, v.Range(min=0)),
            'y-bound': bound,
            'check-cf': bool,
            }

    def getSchema(self):
        return v.Schema(self.grid)


class ConfigValidator(object):
    def validate(self, data):
        """Return the validated, coerced configuration sections."""
        return ConfigSchema().getSchema()(data)


class GridValidator(object):
    def checkRange(self, data, low, high):
        if low in data and high in data and data[low] > data[high]:
            raise v.Invalid("%s (%s) exceeds %s (%s)"
                            % (low, data[low], high, data[high]), [low])

    def validate(self, data):
        if data is None:
            data = {}
        if not isinstance(data, dict):
            raise v.Invalid("A grid file must contain a mapping")
        data = GridSchema().getSchema()(data)
        self.checkRange(data, 'a-min', 'a-max')
        self.checkRange(data, 'b-min', 'b-max')
        for key in ('families', 'rhs', 'corollaries'):
            if key in data:
                data[key] = asList(data[key])
        return data
