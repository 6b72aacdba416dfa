from unittest import TestCase
import numpy as np
from tests.base import load_body
from convgeom.bodies import Polygon, HalfspaceBody, BodyRegistry
from convgeom.errors import InvalidBodyError, NonSymmetricBodyError


class TestPolygon(TestCase):
    def test_square(self):
        square = load_body("square.json")
        self.assertAlmostEqual(float(square.gauge([0.5, -0.25])), 0.5)
        self.assertAlmostEqual(float(square.support([1, 1])), 2.0)
        self.assertAlmostEqual(square.exact_volume(), 4.0)

    def test_vertex_normal(self):
        square = load_body("square.json")
        normal = square.outer_normal([1, 1])
        self.assertFalse(normal.unique)
        np.testing.assert_allclose(normal.vector, [1, 0])
        normal = square.outer_normal([0.3, 1])
        self.assertTrue(normal.unique)
        np.testing.assert_allclose(normal.vector, [0, 1])

    def test_not_symmetric(self):
        self.assertRaises(NonSymmetricBodyError, load_body, "lopsided.json")
        self.assertRaises(NonSymmetricBodyError, Polygon, [[1, 0], [0, 1], [-1, 0]])

    def test_clockwise(self):
        self.assertRaises(InvalidBodyError, Polygon, [[1, 1], [1, -1], [-1, -1], [-1, 1]])

    def test_chord(self):
        hexagon = load_body("hexagon.json")
        lower, upper = hexagon.chord([[0, 0]], [1, 0])
        self.assertAlmostEqual(float(lower[0]), -2.0)
        self.assertAlmostEqual(float(upper[0]), 2.0)
        lower, upper = hexagon.chord([[0, 5]], [1, 0])
        self.assertTrue(np.isnan(lower[0]))


class TestHalfspaces(TestCase):
    def test_cube(self):
        cube = load_body("cube.json")
        self.assertEqual(cube.dim, 3)
        self.assertAlmostEqual(cube.exact_volume(), 8.0)
        self.assertAlmostEqual(float(cube.gauge([0.5, -0.75, 0.1])), 0.75)
        self.assertAlmostEqual(float(cube.support([1, 1, 1])), 3.0)
        self.assertEqual(len(cube.vertices()), 8)

    def test_planar_halfspaces_are_ordered(self):
        body = HalfspaceBody([[1, 0], [0, 1], [-1, 0], [0, -1]], [1, 2, 1, 2])
        self.assertAlmostEqual(body.exact_volume(), 8.0)
        vertices = body.vertices()
        edges = np.roll(vertices, -1, axis=0) - vertices
        turns = edges[:, 0] * np.roll(edges, -1, axis=0)[:, 1] - edges[:, 1] * np.roll(edges, -1, axis=0)[:, 0]
        self.assertTrue(np.all(turns > 0))

    def test_unbounded(self):
        self.assertRaises(InvalidBodyError, HalfspaceBody, [[1, 0], [-1, 0]], [1, 1])

    def test_not_symmetric(self):
        self.assertRaises(NonSymmetricBodyError, HalfspaceBody, [[1, 0], [-1, 0], [0, 1], [0, -1]], [1, 2, 1, 1])

    def test_spec_errors(self):
        data = {"kind": "halfspaces", "a": [[1, 0], [-1, 0]], "b": [1, 0]}
        self.assertRaises(InvalidBodyError, BodyRegistry.import_body, data)
