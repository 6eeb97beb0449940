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

import extras
import logging
import logging.config
import os
import signal
import sys
import traceback

import six
from six.moves import configparser as ConfigParser

yappi = extras.try_import('yappi')

from pellkit import configvalidator

CONFIG_LOCATIONS = ['/etc/pellkit/pellkit.conf', '~/pellkit.conf']

DEFAULTS = {
    'pellkit': {'search_bound': 10 ** 6,
                'y_bound': 10 ** 4,
                'jobs': 1},
    'verify': {'a_max': 12,
               'b_max': 12,
               'n_max': 8,
               'k_max': 8},
}


def stack_dump_handler(signum, frame):
    signal.signal(signal.SIGUSR2, signal.SIG_IGN)
    log_str = ""
    for thread_id, stack_frame in sys._current_frames().items():
        log_str += "Thread: %s\n" % thread_id
        log_str += "".join(traceback.format_stack(stack_frame))
    log = logging.getLogger("pellkit.stack_dump")
    log.debug(log_str)
    if yappi:
        if not yappi.is_running():
            yappi.start()
        else:
            yappi.stop()
            yappi_out = six.StringIO()
            yappi.get_func_stats().print_all(out=yappi_out)
            yappi.get_thread_stats().print_all(out=yappi_out)
            log.debug(yappi_out.getvalue())
            yappi_out.close()
            yappi.clear_stats()
    signal.signal(signal.SIGUSR2, stack_dump_handler)


class PellApp(object):

    def __init__(self):
        self.args = None
        self.config = None
        self.settings = None

    def _get_version(self):
        from pellkit.version import version
        return "pellkit version: %s" % version

    def read_config(self):
        """Read and validate the config file.

        Unlike a server, the tool runs without one; built-in defaults
        fill in whatever the file leaves out.
        """
        self.config = ConfigParser.ConfigParser()
        if self.args.config:
            locations = [self.args.config]
            if not os.path.exists(os.path.expanduser(self.args.config)):
                raise Exception("Unable to locate config file %s" %
                                self.args.config)
        else:
            locations = CONFIG_LOCATIONS
        for fp in locations:
            if os.path.exists(os.path.expanduser(fp)):
                self.config.read(os.path.expanduser(fp))
                break
        data = {}
        for section in DEFAULTS:
            data[section] = {}
            if self.config.has_section(section):
                data[section] = dict(self.config.items(section))
        data = configvalidator.ConfigValidator().validate(data)
        self.settings = {}
        for section, values in DEFAULTS.items():
            self.settings[section] = dict(values)
            self.settings[section].update(data.get(section, {}))

    def setup_logging(self, section, parameter):
        if self.config.has_option(section, parameter):
            fp = os.path.expanduser(self.config.get(section, parameter))
            if not os.path.exists(fp):
                raise Exception("Unable to read logging config file at %s" %
                                fp)
            logging.config.fileConfig(fp)
        elif getattr(self.args, 'verbose', False):
            logging.basicConfig(level=logging.DEBUG)
        else:
            logging.basicConfig(level=logging.WARNING)
