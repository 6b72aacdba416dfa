import typing as t
import logging
import numpy as np
from .derivatives.models import (
    OneSidedDerivatives,
    SetMeasures,
    BoundaryIntersectionCurve,
    Gradient,
)
from .derivatives.chords import one_sided_derivative
from .derivatives.surface import (
    planar_gradient,
    spatial_gradient,
    intersection_curve,
    curve_hessian,
    DEFAULT_PANELS,
    DEFAULT_MESH_LEVEL,
)
from .volumes.model import TranslateProblem
from .shapes.grid import planar_units, icosphere
from .volume import intersection_volume
from .errors import EmptyIntersectionError, InvalidParameterError, NotSmoothError

__all__ = [
    "OneSidedDerivatives",
    "SetMeasures",
    "BoundaryIntersectionCurve",
    "Gradient",
    "one_sided_derivative",
    "grad_F",
    "hessian_F",
    "normal_flux",
    "locate_intersection_curve",
    "finite_difference_gradient",
    "finite_difference_hessian",
]

logger = logging.getLogger(__name__)

#: points of the curve marched in space per full turn
DEFAULT_CURVE_RESOLUTION = 400


def _check_smooth(problem: TranslateProblem) -> None:
    if not problem.body.smooth or not problem.moving.smooth:
        raise NotSmoothError(
            f"{problem.body!r} is not smooth and strictly convex, "
            "use one sided derivatives instead"
        )


def _check_dim(problem: TranslateProblem) -> None:
    if problem.dim not in (2, 3):
        raise InvalidParameterError("Surface integrals are computed in dimension 2 and 3")


def grad_F(problem: TranslateProblem, resolution: t.Optional[int] = None) -> Gradient:
    """Gradient of ``F(x) = |K ∩ (x+τK)|`` as the flux of the outer normal
    ``M`` of the translate over ``K ∩ ∂(x+τK)``.

    :param problem: the translate problem
    :param resolution: panels per turn in the plane, icosphere level in space
    :raise: NotSmoothError, QuadratureMismatchError
    """
    _check_smooth(problem)
    _check_dim(problem)
    zero = np.zeros(problem.dim)
    if not np.any(problem.x):
        return Gradient(zero, zero.copy(), False)
    if problem.outside_support():
        return Gradient(zero, zero.copy(), True)
    if problem.dim == 2:
        return planar_gradient(problem, resolution or DEFAULT_PANELS)
    return spatial_gradient(problem, resolution or DEFAULT_MESH_LEVEL)


def normal_flux(problem: TranslateProblem, resolution: t.Optional[int] = None) -> np.ndarray:
    """``∫ N dν`` over ``∂K ∩ (x+τK)``, the outer normal direction of the
    convolution body through ``x``."""
    return -grad_F(problem, resolution).reverse_form


def _nesting(problem: TranslateProblem) -> str:
    """``crossing``, ``nested`` or ``disjoint`` from sampled boundaries."""
    units = planar_units(256) if problem.dim == 2 else icosphere(2)[0]
    fixed, moving = problem.fixed, problem.translate
    moving_inside = fixed.gauge(moving.radial(units)) <= 1
    fixed_inside = moving.gauge(fixed.radial(units)) <= 1
    if np.all(moving_inside) or np.all(fixed_inside):
        return "nested"
    if not np.any(moving_inside) and not np.any(fixed_inside):
        return "disjoint"
    return "crossing"


def locate_intersection_curve(
        problem: TranslateProblem,
        resolution: int = DEFAULT_CURVE_RESOLUTION) -> BoundaryIntersectionCurve:
    """Sample of ``S = ∂K ∩ ∂(x+τK)`` with both unit normals and the
    weights of the surface measure on ``S``.

    :raise: EmptyIntersectionError, IllConditionedCrossingError
    """
    _check_dim(problem)
    if problem.outside_support() or _nesting(problem) == "disjoint":
        raise EmptyIntersectionError()
    return intersection_curve(problem, resolution)


def hessian_F(problem: TranslateProblem, resolution: t.Optional[int] = None) -> np.ndarray:
    """Second derivatives of ``F`` by the integral over ``S`` of
    ``-½(N Mᵀ + M Nᵀ) / sqrt(1 - <M,N>²)``, a point sum in the plane.

    :param problem: the translate problem, with ``x ≠ 0``
    :param resolution: points per turn of the marched curve in space
    :raise: NotSmoothError, EmptyIntersectionError, IllConditionedCrossingError
    """
    _check_smooth(problem)
    _check_dim(problem)
    if not np.any(problem.x):
        raise InvalidParameterError("Hessian needs x ≠ 0")
    if problem.outside_support():
        raise EmptyIntersectionError()
    nesting = _nesting(problem)
    if nesting == "disjoint":
        raise EmptyIntersectionError()
    if nesting == "nested":
        logger.debug("nested bodies, F is locally constant")
        return np.zeros((problem.dim, problem.dim))
    curve = intersection_curve(problem, resolution or DEFAULT_CURVE_RESOLUTION)
    return curve_hessian(curve)


def finite_difference_gradient(
        problem: TranslateProblem,
        step: float = 1e-3,
        tol: t.Optional[float] = None,
        method: str = "auto") -> np.ndarray:
    """Five point central differences of ``F``."""
    rv = np.zeros(problem.dim)
    for axis in range(problem.dim):
        e = np.zeros(problem.dim)
        e[axis] = step
        f = [intersection_volume(problem.moved(problem.x + k * e), method, tol).value for k in (-2, -1, 1, 2)]
        rv[axis] = (f[0] - 8 * f[1] + 8 * f[2] - f[3]) / (12 * step)
    return rv


def finite_difference_hessian(problem: TranslateProblem, step: float = 1e-4) -> np.ndarray:
    """Central differences of ``grad_F``, symmetrized."""
    rv = np.zeros((problem.dim, problem.dim))
    for axis in range(problem.dim):
        e = np.zeros(problem.dim)
        e[axis] = step
        forward = grad_F(problem.moved(problem.x + e)).value
        backward = grad_F(problem.moved(problem.x - e)).value
        rv[:, axis] = (forward - backward) / (2 * step)
    return (rv + rv.T) / 2
