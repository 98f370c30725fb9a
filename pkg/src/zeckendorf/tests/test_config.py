import os
import shutil
import tempfile
from unittest import TestCase, main

from zeckendorf.config import Configuration, DEFAULTS, cfg
from zeckendorf.exceptions import ZeckendorfError
from zeckendorf.verify.zk import Zk
from zeckendorf.verify.zpair import Zpair


class TestConfiguration(TestCase):

    def setUp(self):
        self.folder = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.folder)
        cfg.reset()

    def _write(self, content):
        path = os.path.join(self.folder, 'zeckendorf.yaml')
        with open(path, 'w') as f:
            f.write(content)
        return path

    def test_defaults(self):
        config = Configuration()
        self.assertEqual(config.as_dict(), DEFAULTS)
        self.assertEqual(config['sweep.workers'], 1)
        self.assertIsNone(config.get('density.tolerance'))
        self.assertEqual(config.get('missing', 7), 7)

    def test_update(self):
        config = Configuration()
        config.update({'sweep': {'workers': 4}, 'kernel.samples': 10})
        self.assertEqual(config['sweep.workers'], 4)
        self.assertEqual(config['kernel.samples'], 10)
        config.reset()
        self.assertEqual(config['sweep.workers'], 1)

    def test_unknown_key(self):
        config = Configuration()
        with self.assertRaises(ZeckendorfError):
            config.update({'sweep': {'threads': 4}})
        # nothing was applied
        self.assertEqual(config.as_dict(), DEFAULTS)

    def test_load(self):
        path = self._write('report:\n  mismatch_cap: 5\nzk.k_max: 6\n')
        config = Configuration()
        config.load(path)
        self.assertEqual(config['report.mismatch_cap'], 5)
        self.assertEqual(config['zk.k_max'], 6)

    def test_load_empty(self):
        config = Configuration()
        config.load(self._write(''))
        self.assertEqual(config.as_dict(), DEFAULTS)

    def test_load_invalid(self):
        config = Configuration()
        with self.assertRaises(ZeckendorfError):
            config.load(self._write('- a\n- b\n'))
        with self.assertRaises(ZeckendorfError):
            config.load(self._write('sweep: [unclosed\n'))
        with self.assertRaises(OSError):
            config.load(os.path.join(self.folder, 'missing.yaml'))

    def test_check_defaults_follow_config(self):
        cfg.update({'zk': {'k_max': 5}, 'zpair': {'k_max': 4}})
        self.assertEqual(Zk(n=10)._k_max, 5)
        self.assertEqual(Zpair(n=10)._k_max, 4)
        # explicit arguments win
        self.assertEqual(Zk(n=10, k_max=9)._k_max, 9)


if __name__ == '__main__':
    main()
