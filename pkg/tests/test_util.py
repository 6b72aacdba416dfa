import math
from unittest import TestCase
import numpy as np
from convgeom import util
from convgeom.errors import InvalidParameterError


class TestUtil(TestCase):
    def test_to_builtin(self):
        data = {"a": np.array([1.5, 2.0]), "b": (np.int64(3), np.bool_(True)), "c": np.float32(0.5)}
        self.assertEqual(util.to_builtin(data), {"a": [1.5, 2.0], "b": [3, True], "c": 0.5})

    def test_json_dumps(self):
        self.assertEqual(util.json_dumps({"b": np.arange(2), "a": 1}), '{"a":1,"b":[0,1]}')
        self.assertEqual(util.json_dumps({"κ": 1.0}, indent=2), '{\n  "κ": 1.0\n}')

    def test_parse_vector(self):
        np.testing.assert_array_equal(util.parse_vector("1, 0"), [1, 0])
        np.testing.assert_array_equal(util.parse_vector([0.5, 2], 2), [0.5, 2])
        self.assertRaises(InvalidParameterError, util.parse_vector, "1,a")
        self.assertRaises(InvalidParameterError, util.parse_vector, "")
        self.assertRaises(InvalidParameterError, util.parse_vector, "1,nan")
        self.assertRaises(InvalidParameterError, util.parse_vector, "1,0", 3)

    def test_parse_floats(self):
        self.assertEqual(util.parse_floats("0.5,1,2"), [0.5, 1.0, 2.0])
        self.assertRaises(InvalidParameterError, util.parse_floats, "0.5,x")

    def test_normalize(self):
        np.testing.assert_allclose(util.normalize([3, 4]), [0.6, 0.8])
        self.assertRaises(InvalidParameterError, util.normalize, [0, 0])

    def test_orthonormal_complement(self):
        basis = util.orthonormal_complement(np.array([0.0, 0.0, 1.0]))
        self.assertEqual(basis.shape, (3, 2))
        np.testing.assert_allclose(basis.T @ basis, np.eye(2), atol=1e-12)
        np.testing.assert_allclose(basis[2], [0, 0], atol=1e-12)

    def test_cross2(self):
        a = np.array([[1.0, 0.0], [0.0, 2.0]])
        b = np.array([[0.0, 1.0], [1.0, 0.0]])
        np.testing.assert_array_equal(util.cross2(a, b), [1, -2])

    def test_ball_volume(self):
        self.assertAlmostEqual(util.ball_volume(1), 2)
        self.assertAlmostEqual(util.ball_volume(2), math.pi)
        self.assertAlmostEqual(util.ball_volume(3), 4 * math.pi / 3)

    def test_gauss_legendre(self):
        nodes, weights = util.gauss_legendre(5)
        self.assertAlmostEqual(float(np.sum(weights)), 2)
        self.assertAlmostEqual(float(np.sum(weights * nodes ** 2)), 2 / 3)
