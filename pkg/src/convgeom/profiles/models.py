import typing as t
from dataclasses import dataclass
import numpy as np
from scipy.spatial import ConvexHull
from ..shapes.grid import DirectionGrid
from ..util import cross2


@dataclass(frozen=True, eq=False)
class RadialProfile:
    """A star body given by its radius in every grid direction, here a
    convolution body ``K(δ,τ)``."""
    grid: DirectionGrid
    radii: np.ndarray
    delta: float
    tau: float
    #: largest ``|F(r(u)·u) - δ|`` over the grid
    achieved_tol: float

    def __len__(self) -> int:
        return len(self.radii)

    @property
    def dim(self) -> int:
        return self.grid.dim

    def points(self) -> np.ndarray:
        return self.grid.units * self.radii[:, None]

    def is_even(self, tol: float = 1e-10) -> bool:
        gap = np.abs(self.radii - self.radii[self.grid.antipodes])
        return bool(np.all(gap <= tol * np.max(self.radii)))

    def is_convex(self, tol: float = 1e-9) -> bool:
        """Whether every profile point is a boundary point of the convex
        hull of the profile, up to ``tol`` relative to the size."""
        points = self.points()
        scale = float(np.max(self.radii))
        if self.dim == 2:
            before = points - np.roll(points, 1, axis=0)
            after = np.roll(points, -1, axis=0) - points
            turns = cross2(before, after) / (np.linalg.norm(before, axis=1) * np.linalg.norm(after, axis=1))
            return bool(np.all(turns >= -tol))
        hull = ConvexHull(points)
        heights = points @ hull.equations[:, :-1].T + hull.equations[:, -1]
        return bool(np.all(heights.max(axis=1) >= -tol * scale))

    def as_dict(self) -> t.Dict[str, t.Any]:
        return {
            "grid": self.grid.as_dict(),
            "delta": self.delta,
            "tau": self.tau,
            "achieved_tol": self.achieved_tol,
            "radii": self.radii,
        }


@dataclass(frozen=True)
class FlatnessReport:
    #: signed turning angle at every boundary sample
    turning_angles: np.ndarray
    #: longest run of consecutive collinear samples, 0 when there is none
    max_collinear_run: int
    #: largest jump of the edge normal between adjacent samples
    max_normal_jump: float
    #: samples where the normal jumps far above the mean turning angle
    corners: int

    @property
    def verdict(self) -> str:
        return "flat_segment_found" if self.max_collinear_run >= 3 else "strictly_convex"

    def as_dict(self) -> t.Dict[str, t.Any]:
        return {
            "verdict": self.verdict,
            "max_collinear_run": self.max_collinear_run,
            "max_normal_jump": self.max_normal_jump,
            "min_turning_angle": float(np.min(self.turning_angles)),
            "corners": self.corners,
        }


@dataclass(frozen=True)
class HomothetyReport:
    is_homothet: bool
    scale: float
    max_rel_dev: float

    def as_dict(self) -> t.Dict[str, t.Any]:
        return {
            "is_homothet": self.is_homothet,
            "scale": self.scale,
            "max_rel_dev": self.max_rel_dev,
        }
