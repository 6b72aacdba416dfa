import os
import time
from unittest import TestCase, mock
from convgeom import config


class TestWorkerCount(TestCase):
    def test_environment(self):
        with mock.patch.dict(os.environ, {config.THREADS_ENV: "3"}):
            self.assertEqual(config.worker_count(), 3)
        with mock.patch.dict(os.environ, {config.THREADS_ENV: "0"}):
            self.assertEqual(config.worker_count(), 1)

    def test_invalid_value(self):
        with mock.patch.dict(os.environ, {config.THREADS_ENV: "many"}):
            with self.assertLogs("convgeom.config", level="WARNING"):
                self.assertGreaterEqual(config.worker_count(), 1)


class TestParallelMap(TestCase):
    def test_keeps_order(self):
        def slow_square(x):
            time.sleep(0.001 * (5 - x))
            return x * x

        with mock.patch.dict(os.environ, {config.THREADS_ENV: "4"}):
            self.assertEqual(config.parallel_map(slow_square, list(range(6))), [0, 1, 4, 9, 16, 25])
        with mock.patch.dict(os.environ, {config.THREADS_ENV: "1"}):
            self.assertEqual(config.parallel_map(slow_square, list(range(6))), [0, 1, 4, 9, 16, 25])

    def test_empty(self):
        self.assertEqual(config.parallel_map(str, []), [])
