import typing as t
import logging
from dataclasses import dataclass
import numpy as np
from scipy.optimize import brentq
from ..volumes.model import Placement
from ..errors import IllConditionedCrossingError
from ..util import orthonormal_complement

logger = logging.getLogger(__name__)

#: angular sweep size used to bracket boundary crossings
SWEEP = 4096
TWO_PI = 2 * np.pi


@dataclass(frozen=True)
class Crossing:
    #: polar angle on the swept boundary
    theta: float
    point: np.ndarray


def _planar_units(theta: t.Any) -> np.ndarray:
    theta = np.asarray(theta, dtype=float)
    return np.stack([np.cos(theta), np.sin(theta)], axis=-1)


def planar_crossings(fixed: Placement, moving: Placement, samples: int = SWEEP) -> t.List[Crossing]:
    """Points of ``∂fixed ∩ ∂moving`` in the plane. The boundary of
    ``moving`` is swept by the polar angle around its center; sign changes
    of ``gauge_fixed - 1`` are refined by Brent's method."""
    def excess(theta: t.Any) -> t.Any:
        return fixed.gauge(moving.radial(_planar_units(theta))) - 1

    theta = TWO_PI * np.arange(samples) / samples
    values = excess(theta)
    following = np.roll(values, -1)
    rv = [Crossing(float(theta[k]), moving.radial(_planar_units(theta[k]))) for k in np.flatnonzero(values == 0)]
    for k in np.flatnonzero(values * following < 0):
        root = brentq(lambda s: float(excess(s)), theta[k], theta[k] + TWO_PI / samples, xtol=1e-14)
        root = float(np.mod(root, TWO_PI))
        rv.append(Crossing(root, moving.radial(_planar_units(root))))
    rv.sort(key=lambda c: c.theta)
    return rv


def inside_arcs(fixed: Placement, moving: Placement, crossings: t.List[Crossing]) -> t.List[t.Tuple[float, float]]:
    """Angular intervals of ``∂moving`` that lie inside ``fixed``."""
    if not crossings:
        probe = moving.radial(_planar_units(0.0))
        return [(0.0, TWO_PI)] if fixed.gauge(probe) <= 1 else []

    angles = [c.theta for c in crossings]
    arcs = []
    for i, start in enumerate(angles):
        stop = angles[i + 1] if i + 1 < len(angles) else angles[0] + TWO_PI
        middle = moving.radial(_planar_units((start + stop) / 2))
        if fixed.gauge(middle) < 1:
            arcs.append((start, stop))
    return arcs


def _project(fixed: Placement, moving: Placement, y: np.ndarray) -> t.Tuple[np.ndarray, float]:
    """Newton projection onto both unit level sets, returns the point and
    the size of the correction."""
    start = y
    for _ in range(30):
        residual = np.array([fixed.gauge(y) - 1, moving.gauge(y) - 1])
        if np.max(np.abs(residual)) < 1e-14:
            break
        jac = np.vstack([fixed.gauge_gradient(y), moving.gauge_gradient(y)])
        y = y - jac.T @ np.linalg.solve(jac @ jac.T, residual)
    else:
        return y, np.inf
    return y, float(np.linalg.norm(y - start))


def spatial_start(fixed: Placement, moving: Placement, samples: int = SWEEP) -> np.ndarray:
    """A point of ``∂fixed ∩ ∂moving`` found by a planar sweep of
    ``∂moving`` in a plane through both centers."""
    axis = moving.center - fixed.center
    if np.linalg.norm(axis) == 0:
        axis = np.eye(len(axis))[0]
    axis = axis / np.linalg.norm(axis)
    other = orthonormal_complement(axis)[:, 0]

    def directions(theta: t.Any) -> np.ndarray:
        theta = np.asarray(theta, dtype=float)
        return np.cos(theta)[..., None] * axis + np.sin(theta)[..., None] * other

    def excess(theta: t.Any) -> t.Any:
        return fixed.gauge(moving.radial(directions(theta))) - 1

    theta = TWO_PI * np.arange(samples) / samples
    values = excess(theta)
    following = np.roll(values, -1)
    changes = np.flatnonzero(values * following < 0)
    if not len(changes):
        raise IllConditionedCrossingError("Boundaries do not cross")
    k = changes[0]
    root = brentq(lambda s: float(excess(s)), theta[k], theta[k] + TWO_PI / samples, xtol=1e-14)
    return moving.radial(directions(root))


def march_crossing_curve(
        fixed: Placement,
        moving: Placement,
        resolution: int = 400,
        max_steps: int = 200000) -> np.ndarray:
    """March along the closed curve ``∂fixed ∩ ∂moving`` in space with a
    predictor step along ``∇g₁ × ∇g₂`` and a Newton corrector. Returns
    the ordered points of the curve, without repeating the start."""
    start = spatial_start(fixed, moving)
    axis = moving.center - fixed.center
    norm = np.linalg.norm(axis)
    if norm > 0:
        offset = start - fixed.center
        radius = np.linalg.norm(offset - (offset @ axis) / norm ** 2 * axis)
    else:
        radius = np.linalg.norm(start - fixed.center)
    base_step = TWO_PI * max(radius, 1e-6) / resolution
    step = base_step

    points = [start]
    y = start
    tangent = np.cross(fixed.gauge_gradient(y), moving.gauge_gradient(y))
    tangent /= np.linalg.norm(tangent)
    for _ in range(max_steps):
        nxt, correction = _project(fixed, moving, y + step * tangent)
        if correction > 0.1 * step:
            step /= 2
            if step < 1e-9 * base_step:
                raise IllConditionedCrossingError("Curve marching stalled")
            continue
        if correction < 0.01 * step:
            step = min(step * 1.25, 4 * base_step)

        direction = np.cross(fixed.gauge_gradient(nxt), moving.gauge_gradient(nxt))
        length = np.linalg.norm(direction)
        if length == 0:
            raise IllConditionedCrossingError()
        direction /= length
        if direction @ tangent < 0:
            direction = -direction
        y, tangent = nxt, direction
        if len(points) > 8 and np.linalg.norm(y - start) < step:
            return np.array(points)
        points.append(y)
    raise IllConditionedCrossingError("Curve marching did not close")


def normals_at(fixed: Placement, moving: Placement, points: np.ndarray) -> t.Tuple[np.ndarray, np.ndarray]:
    """Unit normals ``N`` of ``∂fixed`` and ``M`` of ``∂moving`` at points."""
    n = fixed.gauge_gradient(points)
    m = moving.gauge_gradient(points)
    n = n / np.linalg.norm(n, axis=-1, keepdims=True)
    m = m / np.linalg.norm(m, axis=-1, keepdims=True)
    return n, m
