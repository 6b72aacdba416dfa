import typing as t
import logging
import numpy as np
from scipy.optimize import brentq
from .models import RadialProfile
from ..shapes import BaseBody, DirectionGrid
from ..volumes import TranslateProblem, VolumeRegistry
from ..volume import intersection_volume, body_volume
from ..config import DEFAULT_SEED, parallel_map
from ..errors import DeltaOutOfRangeError, InvalidParameterError

logger = logging.getLogger(__name__)

#: default grid resolution per dimension (angles in the plane, icosphere level in space)
DEFAULT_GRID = {2: 512, 3: 4}
#: iteration cap of the radius root finding
MAX_ITERATIONS = 60


def make_grid(dim: int, grid: t.Union[DirectionGrid, int, None] = None) -> DirectionGrid:
    if isinstance(grid, DirectionGrid):
        if grid.dim != dim:
            raise InvalidParameterError("Grid and body dimensions differ")
        return grid
    if grid is None:
        grid = DEFAULT_GRID.get(dim)
        if grid is None:
            raise InvalidParameterError(f"No direction grid in dimension {dim}")
    return DirectionGrid(dim, grid)


def delta_limit(body: BaseBody, tau: float, method: str = "auto") -> float:
    """``min(1,τⁿ)·|K|``, the value of ``F(0)``."""
    volume = body.exact_volume()
    if volume is None:
        volume = body_volume(body, method).value
    return min(1.0, tau ** body.dim) * volume


class RadiusSolver:
    """Finds ``r`` with ``F(r·u) = δ`` along a ray. ``F`` is even with a
    concave ``n``-th root, so it does not increase along rays and the root
    is bracketed by ``[0, (1+τ)/‖u‖_K]``.
    """
    def __init__(
            self,
            body: BaseBody,
            delta: float,
            tau: float,
            tol: float,
            method: str,
            volume_tol: t.Optional[float],
            seed: int,
            registry: t.Optional[VolumeRegistry]):
        self.problem = TranslateProblem(body, tau, np.zeros(body.dim))
        self.delta = delta
        self.tol = tol
        self.method = method
        self.volume_tol = volume_tol
        self.seed = seed
        self.registry = registry

    def excess(self, x: np.ndarray) -> float:
        estimate = intersection_volume(
            self.problem.moved(x), self.method, self.volume_tol, self.seed, self.registry
        )
        return estimate.value - self.delta

    def __call__(self, u: np.ndarray) -> t.Tuple[float, float]:
        body = self.problem.body
        top = (1 + self.problem.tau) / float(body.gauge(u))
        radius = brentq(
            lambda r: self.excess(r * u),
            0.0,
            top,
            xtol=self.tol,
            maxiter=MAX_ITERATIONS,
        )
        return float(radius), abs(self.excess(radius * u))


def convolution_body(
        body: BaseBody,
        delta: float,
        tau: float = 1.0,
        grid: t.Union[DirectionGrid, int, None] = None,
        tol: float = 1e-9,
        method: str = "auto",
        volume_tol: t.Optional[float] = None,
        seed: int = DEFAULT_SEED,
        registry: t.Optional[VolumeRegistry] = None) -> RadialProfile:
    """Radial profile of ``K(δ,τ) = {x; |K ∩ (x+τK)| >= δ}``.

    :param body: the body ``K``
    :param delta: the level, in ``(0, min(1,τⁿ)|K|)``
    :param tau: the scale of the translate
    :param grid: a DirectionGrid, or its resolution
    :param tol: radius tolerance
    :param method: volume method
    :param volume_tol: tolerance of every volume evaluation, the engine
        default when None
    :raise: DeltaOutOfRangeError
    """
    if not tau > 0:
        raise InvalidParameterError("tau must be positive")
    if not tol > 0:
        raise InvalidParameterError("tol must be positive")
    grid = make_grid(body.dim, grid)
    limit = delta_limit(body, tau, method)
    if not 0 < delta < limit:
        raise DeltaOutOfRangeError(f"delta outside (0, min(1,τⁿ)|K|) = (0, {limit:.12g})")

    solver = RadiusSolver(body, delta, tau, tol, method, volume_tol, seed, registry)
    indices = grid.representatives()
    logger.debug("solving %d radii of K(%g, %g)", len(indices), delta, tau)
    results = parallel_map(solver, [grid.units[k] for k in indices])

    radii = np.zeros(len(grid))
    residual = 0.0
    for k, (radius, error) in zip(indices, results):
        radii[k] = radius
        radii[grid.antipodes[k]] = radius
        residual = max(residual, error)
    return RadialProfile(grid, radii, float(delta), float(tau), residual)
