import typing as t
import logging
import numpy as np
from .crossings import (
    planar_crossings,
    inside_arcs,
    march_crossing_curve,
    normals_at,
)
from .models import BoundaryIntersectionCurve, Gradient
from ..volumes.model import Placement, TranslateProblem
from ..shapes.grid import icosphere
from ..config import EPS_TANGENT
from ..errors import (
    IllConditionedCrossingError,
    InvalidParameterError,
    QuadratureMismatchError,
)
from ..util import gauss_legendre

logger = logging.getLogger(__name__)

#: Gauss–Legendre nodes per panel of planar arc quadrature
PANEL_ORDER = 8
#: panels per full turn of a planar boundary
DEFAULT_PANELS = 512
#: icosphere level of the surface mesh in space
DEFAULT_MESH_LEVEL = 5
#: agreement required between the two flux forms
PLANAR_TOL = 1e-7
SPATIAL_TOL = 1e-2


def _planar_units(theta: np.ndarray) -> np.ndarray:
    return np.stack([np.cos(theta), np.sin(theta)], axis=-1)


def arc_flux(placement: Placement, arcs: t.List[t.Tuple[float, float]], panels: int = DEFAULT_PANELS) -> np.ndarray:
    """``∫ n dμ`` over arcs of the boundary of a planar placement, the arcs
    given by polar angles around its center. With the boundary written as
    ``ρ(θ)·u(θ)``, ``dμ = ρ/<n,u> dθ``."""
    nodes, weights = gauss_legendre(PANEL_ORDER)
    total = np.zeros(2)
    for start, stop in arcs:
        count = max(1, int(np.ceil(panels * (stop - start) / (2 * np.pi))))
        edges = np.linspace(start, stop, count + 1)
        half = (edges[1:] - edges[:-1]) / 2
        theta = ((edges[:-1] + edges[1:]) / 2)[:, None] + half[:, None] * nodes[None, :]
        units = _planar_units(theta.ravel())
        points = placement.radial(units)
        normal = placement.gauge_gradient(points)
        normal = normal / np.linalg.norm(normal, axis=-1, keepdims=True)
        rho = np.linalg.norm(points - placement.center, axis=-1)
        density = rho / np.einsum("ij,ij->i", normal, units)
        w = (half[:, None] * weights[None, :]).ravel()
        total += (w * density) @ normal
    return total


def planar_gradient(problem: TranslateProblem, panels: int = DEFAULT_PANELS) -> Gradient:
    """Gradient of ``F`` in the plane: the flux of ``M`` over the arcs of
    ``∂(x+τK)`` inside ``K``, checked against minus the flux of ``N`` over
    the arcs of ``∂K`` inside ``x+τK``.

    :raise: QuadratureMismatchError
    """
    fixed, moving = problem.fixed, problem.translate
    moving_arcs = inside_arcs(fixed, moving, planar_crossings(fixed, moving))
    fixed_arcs = inside_arcs(moving, fixed, planar_crossings(moving, fixed))
    if not moving_arcs and not fixed_arcs:
        return Gradient(np.zeros(2), np.zeros(2), True)

    value = arc_flux(moving, moving_arcs, panels)
    reverse = -arc_flux(fixed, fixed_arcs, panels)
    gap = float(np.linalg.norm(value - reverse))
    if gap > PLANAR_TOL * max(1.0, float(np.linalg.norm(value))):
        raise QuadratureMismatchError(f"flux forms differ by {gap:.3g}")
    return Gradient(value, reverse, False)


def _cross_sum(*points: np.ndarray) -> np.ndarray:
    total = np.zeros_like(points[0])
    for a, b in zip(points, points[1:] + points[:1]):
        total += np.cross(a, b)
    return total / 2


def clipped_vector_area(vertices: np.ndarray, faces: np.ndarray, values: np.ndarray) -> np.ndarray:
    """Vector area of the part ``values <= 0`` of an outward oriented
    triangle mesh, clipping every triangle along the linear interpolant of
    ``values``."""
    inside = values[faces] <= 0
    count = inside.sum(axis=1)
    total = np.zeros(3)

    full = faces[count == 3]
    if len(full):
        a, b, c = (vertices[full[:, k]] for k in range(3))
        total += _cross_sum(a, b, c).sum(axis=0)

    for kept in (1, 2):
        rows = np.flatnonzero(count == kept)
        if not len(rows):
            continue
        if kept == 1:
            shift = np.argmax(inside[rows], axis=1)
        else:
            shift = (np.argmax(~inside[rows], axis=1) + 1) % 3
        order = (shift[:, None] + np.arange(3)[None, :]) % 3
        rolled = np.take_along_axis(faces[rows], order, axis=1)
        a, b, c = (vertices[rolled[:, k]] for k in range(3))
        ga, gb, gc = (values[rolled[:, k]][:, None] for k in range(3))
        if kept == 1:
            p = a + ga / (ga - gb) * (b - a)
            q = a + ga / (ga - gc) * (c - a)
            total += _cross_sum(a, p, q).sum(axis=0)
        else:
            p = b + gb / (gb - gc) * (c - b)
            q = c + gc / (gc - ga) * (a - c)
            total += _cross_sum(a, b, p, q).sum(axis=0)
    return total


def mesh_flux(outer: Placement, clip: Placement, level: int = DEFAULT_MESH_LEVEL) -> np.ndarray:
    """``∫ n dμ`` over the part of ``∂outer`` inside ``clip``, on the radial
    icosphere mesh of ``∂outer``."""
    units, faces, _ = icosphere(level)
    vertices = outer.radial(units)
    return clipped_vector_area(vertices, faces, clip.gauge(vertices) - 1)


def spatial_gradient(problem: TranslateProblem, level: int = DEFAULT_MESH_LEVEL) -> Gradient:
    """Gradient of ``F`` in space by triangulated surface quadrature of both
    flux forms.

    :raise: QuadratureMismatchError
    """
    fixed, moving = problem.fixed, problem.translate
    units = icosphere(level)[0]
    if not np.any(fixed.gauge(moving.radial(units)) <= 1) and not np.any(moving.gauge(fixed.radial(units)) <= 1):
        return Gradient(np.zeros(3), np.zeros(3), True)

    value = mesh_flux(moving, fixed, level)
    reverse = -mesh_flux(fixed, moving, level)
    gap = float(np.linalg.norm(value - reverse))
    scale = max(float(np.linalg.norm(value)), float(np.linalg.norm(reverse)))
    if gap > SPATIAL_TOL * scale + 1e-9:
        raise QuadratureMismatchError(f"flux forms differ by {gap:.3g}")
    return Gradient(value, reverse, False)


def intersection_curve(problem: TranslateProblem, resolution: int = 400) -> BoundaryIntersectionCurve:
    """Sample ``S = ∂K ∩ ∂(x+τK)``: the crossing points with unit weights in
    the plane, a marched closed curve with trapezoid arclength weights in
    space.

    :raise: IllConditionedCrossingError
    """
    fixed, moving = problem.fixed, problem.translate
    if problem.dim == 2:
        crossings = planar_crossings(fixed, moving)
        points = np.array([c.point for c in crossings]).reshape(-1, 2)
        weights = np.ones(len(points))
    elif problem.dim == 3:
        points = march_crossing_curve(fixed, moving, resolution)
        gaps = np.linalg.norm(np.roll(points, -1, axis=0) - points, axis=-1)
        weights = (gaps + np.roll(gaps, 1)) / 2
    else:
        raise InvalidParameterError("Boundary intersections are computed in dimension 2 and 3")

    n, m = normals_at(fixed, moving, points)
    return BoundaryIntersectionCurve(points, n, m, weights)


def curve_hessian(curve: BoundaryIntersectionCurve) -> np.ndarray:
    """``-½ ∫_S (N Mᵀ + M Nᵀ) / sqrt(1 - <M,N>²) dσ`` on a sampled curve.

    :raise: IllConditionedCrossingError
    """
    cosines = curve.cosines
    if np.any(np.abs(cosines) > 1 - EPS_TANGENT):
        raise IllConditionedCrossingError(f"|<M,N>| = {float(np.max(np.abs(cosines))):.12f}")
    scale = curve.weights / np.sqrt(1 - cosines ** 2)
    outer = np.einsum("k,ki,kj->ij", scale, curve.normals_fixed, curve.normals_moving)
    return -(outer + outer.T) / 2
