import os
import math
from unittest import TestCase, mock
from convgeom.bodies import Ellipsoid, HalfspaceBody
from convgeom.volume import (
    TranslateProblem,
    intersection_volume,
    region_volume,
    body_volume,
)
from convgeom.volumes import construct_registry
from convgeom.volumes.montecarlo import agresti_coull, sampling_box
from convgeom.config import MC_BATCH, MC_RTOL, THREADS_ENV
from convgeom.errors import BudgetExceededError, InvalidParameterError

LENS = 2 * math.pi / 3 - math.sqrt(3) / 2


class TestMonteCarloVolume(TestCase):
    def test_fixed_samples(self):
        registry = construct_registry(samples=20000)
        problem = TranslateProblem(Ellipsoid.ball(3), 1.0, [1, 0, 0])
        estimate = intersection_volume(problem, registry=registry)
        self.assertEqual(estimate.method, "mc")
        self.assertEqual(estimate.samples, 20000)
        # |B ∩ (e1 + B)| = 5π/12
        self.assertLessEqual(abs(estimate.value - 5 * math.pi / 12), 3 * estimate.abs_error)

    def test_seed_determinism(self):
        registry = construct_registry(samples=3 * MC_BATCH)
        problem = TranslateProblem(Ellipsoid.ball(2), 1.0, [1, 0])
        first = intersection_volume(problem, method="mc", seed=7, registry=registry)
        second = intersection_volume(problem, method="mc", seed=7, registry=registry)
        other = intersection_volume(problem, method="mc", seed=8, registry=registry)
        self.assertEqual(first, second)
        self.assertNotEqual(first.value, other.value)

    def test_worker_count_does_not_change_result(self):
        registry = construct_registry(samples=5 * MC_BATCH)
        problem = TranslateProblem(Ellipsoid.ball(2), 1.0, [0.5, 0.5])
        with mock.patch.dict(os.environ, {THREADS_ENV: "1"}):
            serial = intersection_volume(problem, method="mc", seed=3, registry=registry)
        with mock.patch.dict(os.environ, {THREADS_ENV: "4"}):
            threaded = intersection_volume(problem, method="mc", seed=3, registry=registry)
        self.assertEqual(serial, threaded)

    def test_interval_coverage(self):
        registry = construct_registry(samples=20000)
        problem = TranslateProblem(Ellipsoid.ball(2), 1.0, [1, 0])
        hits = 0
        for seed in range(40):
            estimate = intersection_volume(problem, method="mc", seed=seed, registry=registry)
            if abs(estimate.value - LENS) <= estimate.abs_error:
                hits += 1
        self.assertGreaterEqual(hits, 34)

    def test_spatial_interval_coverage(self):
        registry = construct_registry(samples=20000)
        problem = TranslateProblem(Ellipsoid.ball(3), 1.0, [1, 0, 0])
        hits = 0
        for seed in range(40):
            estimate = intersection_volume(problem, method="mc", seed=seed, registry=registry)
            if abs(estimate.value - 5 * math.pi / 12) <= estimate.abs_error:
                hits += 1
        self.assertGreaterEqual(hits, 34)

    def test_empty_box(self):
        problem = TranslateProblem(Ellipsoid.ball(2), 1.0, [2.5, 0])
        estimate = region_volume(problem.region(), method="mc")
        self.assertEqual(estimate.value, 0)
        self.assertEqual(estimate.samples, 0)

    def test_sampling_box_contains_region(self):
        problem = TranslateProblem(Ellipsoid.ball(2), 1.0, [1, 0])
        frame, lo, hi = sampling_box(problem.region())
        self.assertLessEqual(lo[0], 1e-6)
        self.assertGreaterEqual(hi[0], 1 - 1e-6)
        self.assertLessEqual(lo[1], -math.sqrt(3) / 2)
        self.assertGreaterEqual(hi[1], math.sqrt(3) / 2)
        self.assertLess(hi[0] - lo[0], 1.01)

    def test_agresti_coull_positive(self):
        self.assertGreater(agresti_coull(0, 1000), 0)
        self.assertGreater(agresti_coull(1000, 1000), 0)
        self.assertLess(agresti_coull(500, 100000), agresti_coull(500, 1000))

    def test_budget_exceeded(self):
        registry = construct_registry(max_samples=4 * MC_BATCH)
        with self.assertRaises(BudgetExceededError) as cm:
            body_volume(Ellipsoid.ball(3), method="mc", tol=1e-9, registry=registry)
        self.assertEqual(cm.exception.estimate.samples, 4 * MC_BATCH)

    def test_auto_prefers_polytope_engine(self):
        cube = HalfspaceBody.cube(3)
        estimate = intersection_volume(TranslateProblem(cube, 1.0, [1, 1, 1]))
        self.assertEqual(estimate.method, "exact_poly_3d")
        self.assertAlmostEqual(estimate.value, 1.0, places=10)

    def test_default_tolerance_is_relative(self):
        problem = TranslateProblem(Ellipsoid.ball(3), 1.0, [1, 0, 0])
        estimate = intersection_volume(problem)
        self.assertEqual(estimate.method, "mc")
        self.assertLessEqual(estimate.abs_error, MC_RTOL * estimate.value)
        self.assertLessEqual(abs(estimate.value - 5 * math.pi / 12), 3 * estimate.abs_error)

        estimate = body_volume(Ellipsoid.ball(3), method="mc")
        self.assertLessEqual(estimate.abs_error, MC_RTOL * estimate.value)

    def test_default_tolerance_leaves_registry_alone(self):
        registry = construct_registry(max_samples=16 * MC_BATCH)
        body_volume(Ellipsoid.ball(3), method="mc", registry=registry)
        self.assertIsNone(registry.rtol)
        self.assertIsNone(construct_registry().rtol)

    def test_invalid_registry(self):
        self.assertRaises(InvalidParameterError, construct_registry, samples=0)
        self.assertRaises(InvalidParameterError, construct_registry, samples=-5)
        self.assertRaises(InvalidParameterError, construct_registry, rtol=0)
