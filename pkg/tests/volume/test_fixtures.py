from tests.base import BodyFixture
from convgeom.volume import TranslateProblem, intersection_volume


class TestVolumeFixtures(BodyFixture):
    defaults = {"tau": 1.0, "method": "auto", "tol": None}

    def run_test(self, data):
        problem = TranslateProblem(data["body"], data["tau"], data["x"])
        estimate = intersection_volume(problem, method=data["method"], tol=data["tol"])

        if data.get("exact_zero"):
            self.assertEqual(estimate.value, 0)
            self.assertEqual(estimate.abs_error, 0)
            return

        expected = data["value"]
        if estimate.method == "mc":
            self.assertLessEqual(abs(estimate.value - expected), 3 * estimate.abs_error)
        else:
            self.assertLessEqual(abs(estimate.value - expected), estimate.abs_error + 1e-9)
            self.assertLessEqual(estimate.abs_error, data["tol"] or 1e-5)


TestVolumeFixtures.load_fixture("volumes.json")
