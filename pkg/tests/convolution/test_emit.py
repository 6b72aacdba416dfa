import tempfile
from pathlib import Path
from unittest import TestCase
from convgeom.bodies import Ellipsoid, HalfspaceBody
from convgeom.convolution import body_profile, write_svg, write_obj
from convgeom.profiles.emit import render_svg, render_obj
from convgeom.errors import InvalidParameterError


class TestEmit(TestCase):
    def test_svg(self):
        profile = body_profile(Ellipsoid.ball(2), 16)
        text = render_svg(profile)
        self.assertTrue(text.startswith("<svg"))
        self.assertIn('viewBox="-1.1 -1.1 2.2 2.2"', text)
        points = text.split('points="')[1].split('"')[0].split()
        self.assertEqual(len(points), 16)
        self.assertEqual(points[0], "1,-0")

    def test_obj(self):
        profile = body_profile(HalfspaceBody.cube(3), 1)
        lines = render_obj(profile).splitlines()
        self.assertEqual(sum(1 for line in lines if line.startswith("v ")), 42)
        self.assertEqual(sum(1 for line in lines if line.startswith("f ")), 80)

    def test_dimension(self):
        self.assertRaises(InvalidParameterError, render_svg, body_profile(Ellipsoid.ball(3), 0))
        self.assertRaises(InvalidParameterError, render_obj, body_profile(Ellipsoid.ball(2), 8))

    def test_write(self):
        with tempfile.TemporaryDirectory() as folder:
            svg = Path(folder) / "disk.svg"
            obj = Path(folder) / "ball.obj"
            write_svg(body_profile(Ellipsoid.ball(2), 8), svg)
            write_obj(body_profile(Ellipsoid.ball(3), 0), obj)
            self.assertIn("<polygon", svg.read_text())
            self.assertTrue(obj.read_text().startswith("v "))
