'''
Module:
    zeckendorf.config

Description:
    Input ceilings and the dotted-key runtime configuration.

    Defaults can be overridden from a YAML file, either nested:

        sweep:
          workers: 4

    or flat (`sweep.workers: 4`). Keyword arguments handed to a check, and
    flags given on the command line, take precedence over the configuration.
'''

import logging

import yaml

from .exceptions import ZeckendorfError

logger = logging.getLogger(__name__)

# largest integer that may be decomposed, classified or swept
MAX_VALUE = 2 ** 64 - 1

# largest intermediate a closed-form evaluation may produce
MAX_INTERMEDIATE = 2 ** 128 - 1

DEFAULTS = {
    'sweep.workers': 1,
    'sweep.audit': False,
    'sweep.audit_interval': 2 ** 16,
    'report.mismatch_cap': 100,
    'density.tolerance': None,
    'density.digits': 30,
    'kernel.samples': 10000,
    'kernel.seed': 0,
    'kernel.dps': 50,
    'uniqueness.max_index': None,
    'zk.k_max': 15,
    'zpair.k_max': 12,
}


class Configuration(object):
    '''Dotted-key configuration seeded from DEFAULTS.

    Examples:
        cfg = Configuration()
        cfg.get('sweep.workers')
        cfg.update({'sweep': {'workers': 4}})
    '''

    def __init__(self, values=None):
        self._values = dict(DEFAULTS)
        if values:
            self.update(values)

    def get(self, key, default=None):
        return self._values.get(key, default)

    def __getitem__(self, key):
        return self._values[key]

    def update(self, values):
        ''' Merges nested or dotted mappings into the configuration.

        Args:
            values ('dict'): the overrides.

        Raises:
            ZeckendorfError: if a key is not a known configuration key.

        '''
        flat = _flatten(values)
        unknown = sorted(set(flat) - set(DEFAULTS))
        if unknown:
            raise ZeckendorfError('Unknown configuration key(s): {keys}'
                                  .format(keys=', '.join(unknown)))
        self._values.update(flat)

    def reset(self):
        self._values = dict(DEFAULTS)

    def load(self, path):
        ''' Reads overrides from a YAML file.

        Args:
            path ('str'): path of the YAML file.

        '''
        with open(path) as f:
            try:
                data = yaml.safe_load(f) or {}
            except yaml.YAMLError as e:
                raise ZeckendorfError('Cannot parse configuration {p}: {e}'
                                      .format(p=path, e=e))
        if not isinstance(data, dict):
            raise ZeckendorfError('Configuration {p} must hold a mapping'
                                  .format(p=path))
        logger.debug('Loading configuration from {p}'.format(p=path))
        self.update(data)

    def as_dict(self):
        return dict(self._values)


def _flatten(values, prefix=''):
    flat = {}
    for key, value in values.items():
        name = prefix + str(key)
        if isinstance(value, dict):
            flat.update(_flatten(value, name + '.'))
        else:
            flat[name] = value
    return flat


cfg = Configuration()
