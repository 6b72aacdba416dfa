import typing as t
import logging
import numpy as np
from scipy.optimize import brentq
from ..shapes import BaseBody
from ..volumes import TranslateProblem
from ..volume import width_of_intersection
from ..errors import InvalidParameterError, NotSmoothError

logger = logging.getLogger(__name__)

#: accepted deviation of the realized width
WIDTH_TOL = 1e-9
#: the same, when widths come from constrained optimization
OPTIMIZED_WIDTH_TOL = 1e-7


def unique_normal(body: BaseBody, x: t.Any) -> t.Tuple[np.ndarray, np.ndarray]:
    """The boundary point and its outer normal.

    :raise: InvalidParameterError, NotSmoothError
    """
    x = body.check_boundary(x)
    normal = body.outer_normal(x)
    if not normal.unique:
        raise NotSmoothError("The outer normal is not unique at this point")
    return x, normal.vector


def width_cap(body: BaseBody, x: np.ndarray, normal: np.ndarray, tau: float) -> float:
    """Largest width ``2·min(1,τ)·<x,N>`` reached by the lenses along the ray."""
    return 2 * min(1.0, tau) * float(x @ normal)


def _width_tol(body: BaseBody) -> float:
    if body.dim == 2 or body.halfspaces() is not None:
        return WIDTH_TOL
    return OPTIMIZED_WIDTH_TOL


def locate_xh(body: BaseBody, x: t.Any, tau: float, h: float) -> np.ndarray:
    """The point ``λx`` such that ``K ∩ (λx + τK)`` has width ``h`` in the
    direction ``N(x)``. The closed form ``λ = 1 + τ - h/<x,N>`` holds for
    ``λ`` in ``[|1-τ|, 1+τ]``; it is checked against the realized width and
    replaced by root finding on ``λ`` if the check fails.

    :raise: InvalidParameterError
    """
    if not tau > 0:
        raise InvalidParameterError("tau must be positive")
    x, normal = unique_normal(body, x)
    support = float(x @ normal)
    cap = width_cap(body, x, normal, tau)
    if not 0 < h < cap:
        raise InvalidParameterError(f"h must lie in (0, {cap:.12g})")

    def width(lam: float) -> float:
        return width_of_intersection(TranslateProblem(body, tau, lam * x), normal)

    lam = 1 + tau - h / support
    if abs(1 - tau) <= lam <= 1 + tau:
        realized = width(lam)
        if abs(realized - h) <= _width_tol(body):
            return lam * x
        logger.warning("closed form width %.12g differs from %.12g, using root finding", realized, h)

    lo, hi = abs(1 - tau), 1 + tau
    # the width vanishes at λ = 1+τ
    lam = brentq(lambda s: width(s) - h, lo, hi * (1 - 1e-15), xtol=1e-14, maxiter=60)
    return lam * x
