import typing as t
import numpy as np
from .models import RadialProfile, FlatnessReport, HomothetyReport
from .radial import convolution_body
from ..shapes import BaseBody, DirectionGrid
from ..errors import InvalidParameterError
from ..util import cross2

#: planar resolutions needed by the probes
FLATNESS_RESOLUTION = 512
CURVATURE_RESOLUTION = 2048
#: |sin| of turning angles treated as collinear
COLLINEAR_TOL = 1e-9
#: a normal jump this many times the mean turning angle is a corner
CORNER_RATIO = 8.0
HOMOTHETY_TOL = 1e-6


def _planar(profile: RadialProfile, resolution: int) -> np.ndarray:
    if profile.dim != 2:
        raise InvalidParameterError("The probe needs a planar profile")
    if len(profile) < resolution:
        raise InvalidParameterError(f"The probe needs a profile resolution of at least {resolution}")
    return profile.points()


def _longest_run(flags: np.ndarray) -> int:
    """Longest cyclic run of True values."""
    if np.all(flags):
        return len(flags)
    start = int(np.argmin(flags))
    rolled = np.roll(flags, -start)
    best = current = 0
    for flag in rolled:
        current = current + 1 if flag else 0
        best = max(best, current)
    return best


def flatness_probe(profile: RadialProfile, tol: float = COLLINEAR_TOL) -> FlatnessReport:
    """Turning angles of the reconstructed boundary polygon, with flat runs
    and corner-like normal jumps."""
    points = _planar(profile, FLATNESS_RESOLUTION)
    before = points - np.roll(points, 1, axis=0)
    after = np.roll(points, -1, axis=0) - points
    sines = cross2(before, after) / (np.linalg.norm(before, axis=1) * np.linalg.norm(after, axis=1))
    angles = np.arctan2(cross2(before, after), np.einsum("ij,ij->i", before, after))

    collinear = np.abs(sines) <= tol
    run = _longest_run(collinear)
    jumps = np.abs(angles)
    # a closed convex curve turns by 2π in total
    corners = int(np.count_nonzero(jumps > CORNER_RATIO * 2 * np.pi / len(points)))
    return FlatnessReport(
        turning_angles=angles,
        # a collinear sample and its two neighbours lie on one segment
        max_collinear_run=run + 2 if run else 0,
        max_normal_jump=float(jumps.max()),
        corners=corners,
    )


def homothety_check(profile: RadialProfile, body: BaseBody, tol: float = HOMOTHETY_TOL) -> HomothetyReport:
    """Compare ``r(u)·‖u‖_K`` with its mean over the grid."""
    values = profile.radii * body.gauge(profile.grid.units)
    scale = float(np.mean(values))
    deviation = float(np.max(np.abs(values - scale)) / scale)
    return HomothetyReport(deviation <= tol, scale, deviation)


def curvature_positivity_probe(profile: RadialProfile) -> float:
    """Smallest three point curvature ``2·sin(angle)/|chord|`` along the
    boundary of a planar profile."""
    points = _planar(profile, CURVATURE_RESOLUTION)
    prev = np.roll(points, 1, axis=0)
    nxt = np.roll(points, -1, axis=0)
    a = points - prev
    b = nxt - points
    c = nxt - prev
    lengths = np.linalg.norm(a, axis=1) * np.linalg.norm(b, axis=1) * np.linalg.norm(c, axis=1)
    return float(np.min(2 * cross2(a, b) / lengths))


def body_profile(body: BaseBody, grid: t.Union[DirectionGrid, int]) -> RadialProfile:
    """The radial profile of the body itself, ``r(u) = 1/‖u‖_K``."""
    if not isinstance(grid, DirectionGrid):
        grid = DirectionGrid(body.dim, grid)
    radii = 1 / np.asarray(body.gauge(grid.units), dtype=float)
    return RadialProfile(grid, radii, 0.0, 0.0, 0.0)


def flatness_sweep(
        body: BaseBody,
        tau: float,
        deltas: t.Sequence[float],
        grid: t.Union[DirectionGrid, int] = FLATNESS_RESOLUTION,
        **kwargs: t.Any) -> t.List[t.Tuple[float, FlatnessReport]]:
    """Flatness verdicts of ``K(δ,τ)`` over a sweep of levels."""
    rv = []
    for delta in deltas:
        profile = convolution_body(body, delta, tau, grid, **kwargs)
        rv.append((float(delta), flatness_probe(profile)))
    return rv
