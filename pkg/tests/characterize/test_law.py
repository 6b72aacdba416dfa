from unittest import TestCase
from tests.base import load_body
from convgeom.bodies import Ellipsoid, Polygon
from convgeom.characterize import curvature_law, VIOLATED
from convgeom.errors import CurvatureUnavailableError, UnsupportedMethodError


class TestCurvatureLaw(TestCase):
    def test_ellipse(self):
        report = curvature_law(load_body("ellipse21.json"))
        self.assertEqual(report.status, "ok")
        self.assertEqual(set(report.sources), {"analytic"})
        # h(u)³/κ(u) equals (ab)² for the ellipse with semi-axes a, b
        self.assertAlmostEqual(report.mean, 4.0, places=9)
        self.assertLess(report.max_rel_dev, 1e-9)

    def test_ellipsoid(self):
        report = curvature_law(Ellipsoid.from_semiaxes([1, 2, 3]))
        self.assertAlmostEqual(report.mean, 36.0, places=8)
        self.assertLess(report.max_rel_dev, 1e-9)

    def test_pball(self):
        report = curvature_law(load_body("pball4.json"))
        self.assertEqual(report.status, VIOLATED)
        self.assertIsNone(report.mean)
        self.assertIsNone(report.as_dict()["values"][0])

    def test_linear_image(self):
        report = curvature_law(load_body("linear_ellipse.json"), grid=8)
        self.assertLess(report.max_rel_dev, 1e-9)

    def test_volumic(self):
        report = curvature_law(Ellipsoid.ball(2), grid=4, mode="volumic")
        self.assertEqual(report.sources, ["volumic", "volumic"])
        self.assertAlmostEqual(report.mean, 1.0, delta=0.02)

    def test_volumic_ellipse(self):
        report = curvature_law(load_body("ellipse21.json"), grid=4, mode="volumic")
        self.assertEqual(set(report.sources), {"volumic"})
        self.assertAlmostEqual(report.mean, 4.0, delta=0.08)

    def test_modes(self):
        self.assertRaises(CurvatureUnavailableError, curvature_law, Polygon.square(), grid=4, mode="analytic")
        self.assertRaises(UnsupportedMethodError, curvature_law, Ellipsoid.ball(2), mode="exact")
