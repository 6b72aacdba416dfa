import typing as t
import logging
import numpy as np
from scipy.optimize import linprog
from scipy.spatial import ConvexHull, HalfspaceIntersection, QhullError
from .models import BaseBody, OuterNormal
from ..errors import InvalidBodyError, NonSymmetricBodyError

logger = logging.getLogger(__name__)

#: relative slack deciding which facets are active at a point
ACTIVE_TOL = 1e-9


def chebyshev_center(a: np.ndarray, b: np.ndarray) -> t.Tuple[np.ndarray, float]:
    """Center and radius of the largest ball inside ``{x; a·x <= b}``."""
    norms = np.linalg.norm(a, axis=1)
    dim = a.shape[1]
    c = np.zeros(dim + 1)
    c[-1] = -1
    result = linprog(
        c,
        A_ub=np.hstack([a, norms[:, None]]),
        b_ub=b,
        bounds=[(None, None)] * dim + [(0, None)],
        method="highs",
    )
    if result.status != 0:
        return np.zeros(dim), 0.0
    return result.x[:dim], float(result.x[-1])


def enumerate_vertices(
        a: np.ndarray,
        b: np.ndarray,
        interior: t.Optional[np.ndarray] = None) -> t.Optional[np.ndarray]:
    """Vertices of the bounded polytope ``{x; a·x <= b}``, or None when it
    has empty interior."""
    if interior is None:
        interior, radius = chebyshev_center(a, b)
        if radius <= 1e-12 * max(1.0, float(np.max(np.abs(b)))):
            return None
    try:
        hs = HalfspaceIntersection(np.hstack([a, -b[:, None]]), interior)
    except QhullError as error:
        logger.warning("qhull could not intersect halfspaces: %s", error)
        return None
    points = hs.intersections
    _, index = np.unique(np.round(points, 12), axis=0, return_index=True)
    return points[np.sort(index)]


def order_ccw(points: np.ndarray) -> np.ndarray:
    center = points.mean(axis=0)
    angles = np.arctan2(points[:, 1] - center[1], points[:, 0] - center[0])
    return points[np.argsort(angles, kind="stable")]


def check_symmetric_pairs(a: np.ndarray, b: np.ndarray) -> None:
    """Every facet ``(a_i, b_i)`` must be matched by ``(-a_i, b_i)`` exactly."""
    facets = {(tuple(row), offset) for row, offset in zip(a.tolist(), b.tolist())}
    for row, offset in zip(a.tolist(), b.tolist()):
        if (tuple(-v for v in row), offset) not in facets:
            raise NonSymmetricBodyError(f"Facet {row} <= {offset} has no opposite facet")


def polytope_chord(
        a: np.ndarray,
        b: np.ndarray,
        y: np.ndarray,
        u: np.ndarray) -> t.Tuple[np.ndarray, np.ndarray]:
    """Exact chord of ``{x; a·x <= b}`` along ``y + t·u``."""
    slack = b[None, :] - y @ a.T
    rate = a @ u
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = slack / rate[None, :]
    upper = np.min(np.where(rate[None, :] > 0, ratio, np.inf), axis=1)
    lower = np.max(np.where(rate[None, :] < 0, ratio, -np.inf), axis=1)
    parallel_out = np.any((rate[None, :] == 0) & (slack < 0), axis=1)
    miss = (lower >= upper) | parallel_out
    return np.where(miss, np.nan, lower), np.where(miss, np.nan, upper)


class PolytopeBody(BaseBody):
    """Shared oracles of bodies given by facets ``<a_i,x> <= b_i`` and
    their vertices."""

    def __init__(self, a: np.ndarray, b: np.ndarray, vertices: np.ndarray):
        super(PolytopeBody, self).__init__(a.shape[1])
        self.a = a
        self.b = b
        self._rows = a / b[:, None]
        self._vertices = vertices

    def gauge(self, x: t.Any) -> t.Any:
        x = self.points(x)
        return np.maximum(np.max(x @ self._rows.T, axis=-1), 0.0)

    def support(self, u: t.Any) -> t.Any:
        u = self.points(u)
        return np.max(u @ self._vertices.T, axis=-1)

    def boundary_point(self, u: t.Any) -> np.ndarray:
        u = self.points(u)
        return self._vertices[np.argmax(u @ self._vertices.T, axis=-1)]

    def gauge_gradient(self, y: t.Any) -> np.ndarray:
        y = self.points(y)
        return self._rows[np.argmax(y @ self._rows.T, axis=-1)]

    def outer_normal(self, y: t.Any) -> OuterNormal:
        y = self.check_boundary(y)
        values = self._rows @ y
        active = np.flatnonzero(values >= values.max() - ACTIVE_TOL)
        row = self.a[active[0]]
        return OuterNormal(row / np.linalg.norm(row), len(active) == 1)

    def halfspaces(self) -> t.Optional[t.Tuple[np.ndarray, np.ndarray]]:
        return self.a, self.b

    def vertices(self) -> t.Optional[np.ndarray]:
        return self._vertices

    def exact_volume(self) -> t.Optional[float]:
        return float(ConvexHull(self._vertices).volume)

    def halfwidths(self) -> np.ndarray:
        return np.max(np.abs(self._vertices), axis=0)

    def chord(self, y: t.Any, u: t.Any) -> t.Tuple[np.ndarray, np.ndarray]:
        y = np.atleast_2d(self.points(y))
        return polytope_chord(self.a, self.b, y, self.points(u))


def check_bounded(a: np.ndarray, b: np.ndarray) -> None:
    for axis in range(a.shape[1]):
        c = np.zeros(a.shape[1])
        c[axis] = -1
        result = linprog(c, A_ub=a, b_ub=b, bounds=[(None, None)] * a.shape[1], method="highs")
        if result.status == 3:
            raise InvalidBodyError("Halfspaces must describe a bounded body")
