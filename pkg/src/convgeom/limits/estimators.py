import typing as t
import logging
import numpy as np
from .models import CurvatureSchedule, CurvatureReport, CapReport, DIVERGENT, CONVERGED
from .constants import cn_constant
from .extrapolate import extrapolate, log_slope, is_divergent
from .xh import locate_xh, unique_normal, width_cap
from ..shapes import BaseBody
from ..volumes import (
    TranslateProblem,
    VolumeEstimate,
    VolumeRegistry,
    Region,
    Placement,
    Cut,
    construct_registry,
)
from ..volume import region_volume
from ..config import DEFAULT_SEED, MC_RTOL, parallel_map
from ..errors import InvalidParameterError, NoiseFloorError
from ..util import orthonormal_complement

logger = logging.getLogger(__name__)

#: relative volume tolerance per dimension when the schedule sets none
DEFAULT_RTOL = {2: 1e-4}
#: smallest volume trusted by the schedule
VOLUME_FLOOR = 1e-10
#: largest relative volume error trusted by the schedule
NOISE_FLOOR = 0.05
#: absolute tolerance handed to the engines, the relative one decides
ABSOLUTE_TOL = 1e-15


def _registry(dim: int, schedule: CurvatureSchedule, registry: t.Optional[VolumeRegistry]) -> VolumeRegistry:
    if registry is not None:
        return registry
    rtol = schedule.volume_rtol
    if rtol is None:
        rtol = DEFAULT_RTOL.get(dim, MC_RTOL)
    return construct_registry(rtol=rtol)


def _frame(normal: np.ndarray) -> np.ndarray:
    return np.column_stack([normal, orthonormal_complement(normal)])


def _check_schedule(schedule: CurvatureSchedule) -> None:
    if schedule.levels < 1 or schedule.fit_points < 2 or schedule.fit_points > schedule.levels + 1:
        raise InvalidParameterError("Schedule needs levels >= 1 and 2 <= fit_points <= levels + 1")
    if schedule.h0 is not None and not schedule.h0 > 0:
        raise InvalidParameterError("h0 must be positive")


def _checked(estimate: VolumeEstimate, h: float) -> VolumeEstimate:
    if estimate.value <= VOLUME_FLOOR or estimate.abs_error > NOISE_FLOOR * estimate.value:
        raise NoiseFloorError(
            f"h={h:.6g}: volume {estimate.value:.6g} ± {estimate.abs_error:.3g}"
        )
    return estimate


def _report(
        cls: t.Type[CurvatureReport],
        x: np.ndarray,
        normal: np.ndarray,
        tau: t.Optional[float],
        hs: np.ndarray,
        estimates: t.List[VolumeEstimate],
        raw: np.ndarray,
        schedule: CurvatureSchedule) -> CurvatureReport:
    volumes = np.array([e.value for e in estimates])
    fit = extrapolate(hs, raw, schedule.fit_points)
    status = DIVERGENT if is_divergent(raw, fit) else CONVERGED
    logger.debug("curvature fit %s: kappa=%.9g p=%.3g", status, fit.kappa, fit.exponent)
    return cls(
        point=x,
        normal=normal,
        tau=tau,
        h_sequence=hs,
        volumes=volumes,
        volume_errors=np.array([e.abs_error for e in estimates]),
        raw_estimates=raw,
        fit=fit,
        volume_exponent=log_slope(hs, volumes),
        status=status,
        method=estimates[-1].method,
    )


def volumic_curvature(
        body: BaseBody,
        x: t.Any,
        tau: float = 1.0,
        schedule: t.Optional[CurvatureSchedule] = None,
        method: str = "auto",
        seed: int = DEFAULT_SEED,
        registry: t.Optional[VolumeRegistry] = None) -> CurvatureReport:
    """Gauss–Kronecker curvature at ``x`` from the volumes of the lenses
    ``K ∩ (x_h + τK)`` of width ``h`` in the direction ``N(x)``,
    extrapolated to ``h = 0``.

    :param body: the body
    :param x: a boundary point with a unique outer normal
    :param tau: the scale of the translate
    :param schedule: the widths and the fit
    :raise: NoiseFloorError, NotSmoothError
    """
    schedule = schedule or CurvatureSchedule()
    _check_schedule(schedule)
    if not tau > 0:
        raise InvalidParameterError("tau must be positive")
    x, normal = unique_normal(body, x)
    n = body.dim
    cap = width_cap(body, x, normal, tau)
    h0 = schedule.h0 if schedule.h0 is not None else 0.2 * float(x @ normal)
    if h0 >= cap:
        h0 = cap / 2
    hs = schedule.sequence(h0)
    engines = _registry(n, schedule, registry)

    def evaluate(h: float) -> VolumeEstimate:
        xh = locate_xh(body, x, tau, h)
        region = Region((Placement(body, np.zeros(n), 1.0), Placement(body, xh, tau)), (), _frame(normal))
        return _checked(region_volume(region, method, ABSOLUTE_TOL, seed, engines), h)

    estimates = parallel_map(evaluate, list(hs))
    c = cn_constant(n)
    volumes = np.array([e.value for e in estimates])
    raw = c ** (n + 1) * hs ** (n + 1) / (((1 + tau) / tau) ** (n - 1) * volumes ** 2)
    return _report(CurvatureReport, x, normal, tau, hs, estimates, raw, schedule)


def cap_curvature(
        body: BaseBody,
        x: t.Any,
        schedule: t.Optional[CurvatureSchedule] = None,
        method: str = "auto",
        seed: int = DEFAULT_SEED,
        registry: t.Optional[VolumeRegistry] = None) -> CapReport:
    """Gauss–Kronecker curvature at ``x`` from the volumes of the caps
    ``K ∩ {<y,N> >= <x,N> - h}``, extrapolated to ``h = 0``.

    :raise: NoiseFloorError, NotSmoothError
    """
    schedule = schedule or CurvatureSchedule()
    _check_schedule(schedule)
    x, normal = unique_normal(body, x)
    n = body.dim
    support = float(x @ normal)
    h0 = schedule.h0 if schedule.h0 is not None else 0.2 * support
    if h0 >= 2 * support:
        h0 = support
    hs = schedule.sequence(h0)
    engines = _registry(n, schedule, registry)

    def evaluate(h: float) -> VolumeEstimate:
        cut = Cut(normal, support - h)
        region = Region((Placement(body, np.zeros(n), 1.0),), (cut,), _frame(normal))
        return _checked(region_volume(region, method, ABSOLUTE_TOL, seed, engines), h)

    estimates = parallel_map(evaluate, list(hs))
    c = cn_constant(n)
    volumes = np.array([e.value for e in estimates])
    raw = c ** (n + 1) * hs ** (n + 1) / volumes ** 2
    return t.cast(CapReport, _report(CapReport, x, normal, None, hs, estimates, raw, schedule))


def normal_curvature(
        body: BaseBody,
        u: t.Any,
        tau: float = 1.0,
        schedule: t.Optional[CurvatureSchedule] = None,
        **kwargs: t.Any) -> CurvatureReport:
    """Curvature as a function of the outer normal ``u``, measured at the
    boundary point ``x(u)`` of the Gauss map."""
    u = np.asarray(u, dtype=float)
    x = body.boundary_point(u / np.linalg.norm(u))
    return volumic_curvature(body, x, tau, schedule, **kwargs)
