import typing as t
import logging
import numpy as np
from .volumes import (
    VolumeEstimate,
    VolumeMethodModel,
    VolumeRegistry,
    TranslateProblem,
    Placement,
    Region,
    Cut,
    construct_registry,
)
from .volumes.planar import PlanarPolygonVolume
from .volumes.polytope import PolytopeVolume
from .volumes.montecarlo import MonteCarloVolume
from .volumes.width import region_extent
from .shapes import BaseBody
from .config import DEFAULT_VOLUME_TOL, DEFAULT_SEED
from .errors import EmptyIntersectionError, InvalidParameterError, UnsupportedMethodError
from .util import normalize, orthonormal_complement

__all__ = [
    "VolumeEstimate",
    "VolumeMethodModel",
    "VolumeRegistry",
    "TranslateProblem",
    "Region",
    "Placement",
    "Cut",
    "intersection_volume",
    "body_volume",
    "cap_volume",
    "region_volume",
    "width_of_intersection",
]

logger = logging.getLogger(__name__)


def register_methods() -> None:
    VolumeRegistry.register(PlanarPolygonVolume())
    VolumeRegistry.register(PolytopeVolume())
    VolumeRegistry.register(MonteCarloVolume())


register_methods()


def region_volume(
        region: Region,
        method: str = "auto",
        tol: t.Optional[float] = None,
        seed: int = DEFAULT_SEED,
        registry: t.Optional[VolumeRegistry] = None) -> VolumeEstimate:
    """Volume of an intersection of placed bodies.

    :param region: the region to measure
    :param method: ``auto``, ``exact`` or a registered method name
    :param tol: absolute tolerance of the error bound. When None the
        default of the engine applies, 1e-5 absolute for exact engines and
        also 0.5% relative for Monte Carlo
    :param seed: seed of the Monte Carlo engine
    :param registry: a VolumeRegistry to use
    :raise: BudgetExceededError, UnsupportedMethodError
    """
    if tol is not None and not tol > 0:
        raise InvalidParameterError("tol must be positive")
    if registry is None:
        registry = construct_registry()

    if method == "auto":
        engine = registry.choose(region)
    elif method == "exact":
        engine = registry.choose(region, exact_only=True)
    else:
        engine = registry.get_method(method)
        if not engine.supports(region):
            raise UnsupportedMethodError(f'Volume method "{method}" does not support this region')
    if tol is None:
        tol = DEFAULT_VOLUME_TOL
        if registry.rtol is None and engine.default_rtol is not None:
            registry = registry.with_rtol(engine.default_rtol)
    logger.debug("volume of region with %d bodies by %s", len(region.placements), engine.name)
    return engine.estimate(region, tol, registry, seed)


def intersection_volume(
        problem: TranslateProblem,
        method: str = "auto",
        tol: t.Optional[float] = None,
        seed: int = DEFAULT_SEED,
        registry: t.Optional[VolumeRegistry] = None) -> VolumeEstimate:
    """Compute ``F(x) = |K ∩ (x + τK)|``. Translates with
    ``‖x‖_K >= 1 + τ`` give exactly 0.

    .. code-block:: python

        from convgeom.bodies import Ellipsoid
        from convgeom.volume import TranslateProblem, intersection_volume

        disk = Ellipsoid.ball(2)
        estimate = intersection_volume(TranslateProblem(disk, 1.0, [1, 0]))
    """
    if problem.outside_support():
        return VolumeEstimate(0.0, 0.0, _method_name(problem.region(), method, registry), 0)
    if problem.other is None and problem.tau == 1 and not np.any(problem.x):
        return body_volume(problem.body, method, tol, seed, registry)
    return region_volume(problem.region(), method, tol, seed, registry)


def _method_name(region: Region, method: str, registry: t.Optional[VolumeRegistry]) -> str:
    if registry is None:
        registry = construct_registry()
    if method in ("auto", "exact"):
        return registry.choose(region, exact_only=method == "exact").name
    return registry.get_method(method).name


def body_volume(
        body: BaseBody,
        method: str = "auto",
        tol: t.Optional[float] = None,
        seed: int = DEFAULT_SEED,
        registry: t.Optional[VolumeRegistry] = None) -> VolumeEstimate:
    """Volume ``|K|``, the translate problem with ``x = 0`` and ``τ = 1``."""
    region = Region((Placement(body, np.zeros(body.dim), 1.0),))
    return region_volume(region, method, tol, seed, registry)


def cap_volume(
        body: BaseBody,
        normal: t.Any,
        depth: float,
        method: str = "auto",
        tol: t.Optional[float] = None,
        seed: int = DEFAULT_SEED,
        registry: t.Optional[VolumeRegistry] = None) -> VolumeEstimate:
    """Volume of the cap ``K ∩ {<y,N> >= h_K(N) - depth}``.

    :param body: the convex body
    :param normal: direction ``N`` of the cutting hyperplane
    :param depth: distance of the hyperplane from the supporting one
    """
    n = normalize(np.asarray(normal, dtype=float))
    if not depth > 0:
        raise InvalidParameterError("Cap depth must be positive")
    offset = float(body.support(n)) - depth
    frame = _frame_along(n)
    region = Region((Placement(body, np.zeros(body.dim), 1.0),), (Cut(n, offset),), frame)
    return region_volume(region, method, tol, seed, registry)


def _frame_along(n: np.ndarray) -> np.ndarray:
    return np.column_stack([n, orthonormal_complement(n)])


def width_of_intersection(problem: TranslateProblem, direction: t.Any) -> float:
    """Width ``sup<y,d> - inf<y,d>`` of ``K ∩ (x + τK)`` in a direction.

    :raise: EmptyIntersectionError
    """
    if problem.outside_support():
        raise EmptyIntersectionError()
    lo, hi = region_extent(problem.region(), direction)
    return hi - lo
