import typing as t
import logging
import numpy as np
from scipy.optimize import minimize
from .model import Region
from .planar import clip_region
from ..shapes.polytope import enumerate_vertices
from ..config import DEFAULT_RESOLUTION
from ..errors import EmptyIntersectionError, BudgetExceededError
from ..util import normalize

logger = logging.getLogger(__name__)

#: slack on gauge values accepted for candidate extreme points
FEASIBLE_TOL = 1e-10


def region_extent(region: Region, direction: t.Any) -> t.Tuple[float, float]:
    """``(inf, sup)`` of ``<y, direction>`` over the region.

    :raise: EmptyIntersectionError
    """
    d = normalize(direction)
    if region.polygonal:
        shape = clip_region(region, DEFAULT_RESOLUTION)
        if shape.is_empty or shape.area == 0:
            raise EmptyIntersectionError()
        values = np.asarray(shape.exterior.coords) @ d
        return float(values.min()), float(values.max())

    facets = region.halfspaces()
    if facets is not None:
        vertices = enumerate_vertices(*facets)
        if vertices is None:
            raise EmptyIntersectionError()
        values = vertices @ d
        return float(values.min()), float(values.max())

    if region.dim == 2 and len(region.placements) == 2 and not region.cuts and region.smooth:
        return _planar_candidates(region, d)
    return _optimized_extent(region, d)


def _planar_candidates(region: Region, d: np.ndarray) -> t.Tuple[float, float]:
    # extremes of a linear function over two strictly convex planar bodies
    # sit at an extreme point of one body or at a boundary crossing
    from ..derivatives.crossings import planar_crossings

    first, second = region.placements
    candidates = [first.argmax(d), first.argmax(-d), second.argmax(d), second.argmax(-d)]
    candidates.extend(c.point for c in planar_crossings(first, second))
    points = np.array(candidates)
    feasible = np.ones(len(points), dtype=bool)
    for p in region.placements:
        feasible &= p.gauge(points) <= 1 + FEASIBLE_TOL
    if not np.any(feasible):
        raise EmptyIntersectionError()
    values = points[feasible] @ d
    return float(values.min()), float(values.max())


def _constraints(region: Region) -> t.List[t.Dict[str, t.Any]]:
    rv: t.List[t.Dict[str, t.Any]] = []
    for p in region.placements:
        def fun(y: np.ndarray, p: t.Any = p) -> float:
            return float(1 - p.gauge(y))

        def jac(y: np.ndarray, p: t.Any = p) -> np.ndarray:
            with np.errstate(divide="ignore", invalid="ignore"):
                return np.nan_to_num(-p.gauge_gradient(y))

        rv.append({"type": "ineq", "fun": fun, "jac": jac})
    for cut in region.cuts:
        rv.append({
            "type": "ineq",
            "fun": lambda y, c=cut: float(y @ c.normal - c.offset),
            "jac": lambda y, c=cut: c.normal,
        })
    return rv


def _optimized_extent(region: Region, d: np.ndarray) -> t.Tuple[float, float]:
    start = region.interior_point()
    if start is None:
        raise EmptyIntersectionError()
    constraints = _constraints(region)
    options = {"ftol": 1e-15, "maxiter": 500}
    ends = []
    for sign in (-1.0, 1.0):
        result = minimize(
            lambda y: float(-sign * (y @ d)),
            start,
            jac=lambda y: -sign * d,
            constraints=constraints,
            method="SLSQP",
            options=options,
        )
        if not result.success:
            logger.debug("extent optimization failed: %s", result.message)
            raise BudgetExceededError(f"extent optimization failed: {result.message}")
        ends.append(float(result.x @ d))
    return ends[0], ends[1]
