import typing as t
import logging
from dataclasses import dataclass
import numpy as np
from .shapes import BaseBody, DirectionGrid
from .shapes.grid import icosphere
from .volumes import TranslateProblem, VolumeRegistry
from .volume import intersection_volume
from .limits import CurvatureSchedule, volumic_curvature
from .config import DEFAULT_SEED, parallel_map
from .errors import (
    CurvatureUnavailableError,
    InvalidParameterError,
    UnsupportedMethodError,
)

__all__ = [
    "ShellSpreadReport",
    "HomothetyNecessityReport",
    "CurvatureLawReport",
    "shell_directions",
    "shell_spread",
    "homothety_necessity",
    "curvature_law",
]

logger = logging.getLogger(__name__)

#: relative spread of gauge ratios still treated as constant
RATIO_TOL = 1e-8
#: default grids of the homothety search and of the curvature law
HOMOTHETY_GRID = {2: 720, 3: 3}
LAW_GRID = {2: 16, 3: 1}
LAW_MODES = ("auto", "analytic", "volumic")
VIOLATED = "violated (zero-curvature point)"


@dataclass(frozen=True)
class ShellSpreadReport:
    alpha: float
    tau: float
    samples: int
    F_min: float
    F_max: float
    #: where the extremes are reached
    argmin: np.ndarray
    argmax: np.ndarray
    #: largest error bound among the volumes
    max_abs_error: float
    #: the shell lies outside the support of F
    degenerate: bool = False

    @property
    def spread(self) -> float:
        return self.F_max - self.F_min

    @property
    def rel_spread(self) -> float:
        return self.spread / self.F_max if self.F_max > 0 else 0.0

    def as_dict(self) -> t.Dict[str, t.Any]:
        return {
            "alpha": self.alpha,
            "tau": self.tau,
            "samples": self.samples,
            "F_min": self.F_min,
            "F_max": self.F_max,
            "spread": self.spread,
            "rel_spread": self.rel_spread,
            "argmin": self.argmin,
            "argmax": self.argmax,
            "max_abs_error": self.max_abs_error,
            "degenerate": self.degenerate,
        }


@dataclass(frozen=True)
class HomothetyNecessityReport:
    consistent: bool
    #: spread of ``‖u‖_L/‖u‖_K`` over the grid, relative to its maximum
    ratio_spread: float
    #: point on the critical shell ``‖x‖_K = 1+τ`` where ``F = 0``
    witness: t.Optional[np.ndarray] = None
    #: point with the same L-gauge as the witness where ``F > 0``
    partner: t.Optional[np.ndarray] = None
    F_witness: t.Optional[float] = None
    F_partner: t.Optional[float] = None

    def as_dict(self) -> t.Dict[str, t.Any]:
        return {
            "consistent": self.consistent,
            "ratio_spread": self.ratio_spread,
            "witness": self.witness,
            "partner": self.partner,
            "F_witness": self.F_witness,
            "F_partner": self.F_partner,
        }


@dataclass(frozen=True)
class CurvatureLawReport:
    """Values of ``f(u)·‖u‖_{K*}^{n+1}`` with ``f = 1/κ`` over directions,
    constant exactly for ellipsoids."""
    directions: np.ndarray
    values: np.ndarray
    #: where each curvature came from, "analytic" or "volumic"
    sources: t.List[str]
    status: str

    @property
    def mean(self) -> t.Optional[float]:
        if self.status == VIOLATED:
            return None
        return float(np.mean(self.values))

    @property
    def max_rel_dev(self) -> t.Optional[float]:
        mean = self.mean
        if mean is None:
            return None
        return float(np.max(np.abs(self.values - mean)) / mean)

    def as_dict(self) -> t.Dict[str, t.Any]:
        return {
            "directions": self.directions,
            "values": [None if not np.isfinite(v) else float(v) for v in self.values],
            "sources": self.sources,
            "mean": self.mean,
            "max_rel_dev": self.max_rel_dev,
            "status": self.status,
        }


def shell_directions(dim: int, n_samples: int, seed: int = DEFAULT_SEED) -> np.ndarray:
    """Half of a symmetric grid, ``F`` being even, completed by seeded
    random directions up to ``n_samples``."""
    if n_samples < 4:
        raise InvalidParameterError("Shells need at least 4 samples")
    half = n_samples // 2
    if dim == 2:
        grid = DirectionGrid(2, 2 * half)
        fixed = grid.units[grid.representatives()]
    elif dim == 3:
        level = 0
        while len(icosphere(level + 1)[0]) // 2 <= half:
            level += 1
        grid = DirectionGrid(3, level)
        fixed = grid.units[grid.representatives()]
    else:
        fixed = np.vstack([np.eye(dim), -np.eye(dim)])[:dim]
    rng = np.random.default_rng(seed)
    extra = rng.standard_normal((max(0, n_samples - len(fixed)), dim))
    extra /= np.linalg.norm(extra, axis=1, keepdims=True)
    return np.vstack([fixed, extra])


def shell_spread(
        body: BaseBody,
        tau: float,
        alpha: float,
        n_samples: int = 256,
        seed: int = DEFAULT_SEED,
        method: str = "auto",
        tol: t.Optional[float] = None,
        registry: t.Optional[VolumeRegistry] = None) -> ShellSpreadReport:
    """Extremes of ``F(x) = |K ∩ (x+τK)|`` over the shell ``‖x‖_K = α``.

    :param body: the body
    :param tau: the scale of the translate
    :param alpha: the shell level
    :param n_samples: directions sampled on the shell
    :param seed: seed of the random directions and of Monte Carlo volumes
    """
    if not alpha > 0:
        raise InvalidParameterError("alpha must be positive")
    if not tau > 0:
        raise InvalidParameterError("tau must be positive")
    units = shell_directions(body.dim, n_samples, seed)
    points = alpha * units / np.asarray(body.gauge(units))[:, None]
    if alpha >= 1 + tau:
        return ShellSpreadReport(alpha, tau, len(points), 0.0, 0.0, points[0], points[0], 0.0, True)

    def volume(x: np.ndarray) -> t.Tuple[float, float]:
        estimate = intersection_volume(TranslateProblem(body, tau, x), method, tol, seed, registry)
        return estimate.value, estimate.abs_error

    results = np.array(parallel_map(volume, list(points)))
    values = results[:, 0]
    lo, hi = int(np.argmin(values)), int(np.argmax(values))
    return ShellSpreadReport(
        alpha=float(alpha),
        tau=float(tau),
        samples=len(points),
        F_min=float(values[lo]),
        F_max=float(values[hi]),
        argmin=points[lo],
        argmax=points[hi],
        max_abs_error=float(results[:, 1].max()),
    )


def homothety_necessity(
        body_k: BaseBody,
        body_l: BaseBody,
        tau: float = 1.0,
        grid: t.Union[DirectionGrid, int, None] = None,
        method: str = "auto") -> HomothetyNecessityReport:
    """Whether ``F`` may depend on ``‖x‖_L`` alone. Unless ``‖·‖_L/‖·‖_K``
    is constant, two points of equal L-gauge are scaled onto the critical
    shell ``‖·‖_K = 1+τ`` by the larger K-gauge: there ``F`` vanishes at
    one of them and is positive at the other.
    """
    if body_k.dim != body_l.dim:
        raise InvalidParameterError("Both bodies must have the same dimension")
    if not isinstance(grid, DirectionGrid):
        grid = DirectionGrid(body_k.dim, grid or HOMOTHETY_GRID.get(body_k.dim, 1))
    units = grid.units
    ratio = np.asarray(body_l.gauge(units)) / np.asarray(body_k.gauge(units))
    spread = float((ratio.max() - ratio.min()) / ratio.max())
    if spread <= RATIO_TOL:
        return HomothetyNecessityReport(True, spread)

    # equal L-gauge, the first has the larger K-gauge
    x, y = (u / float(body_l.gauge(u)) for u in (units[int(np.argmin(ratio))], units[int(np.argmax(ratio))]))
    factor = (1 + tau) / float(body_k.gauge(x))
    witness, partner = factor * x, factor * y
    f_witness = intersection_volume(TranslateProblem(body_k, tau, witness), method).value
    f_partner = intersection_volume(TranslateProblem(body_k, tau, partner), method).value
    logger.debug("homothety witness F=%g, partner F=%g", f_witness, f_partner)
    return HomothetyNecessityReport(False, spread, witness, partner, f_witness, f_partner)


def _law_curvature(
        body: BaseBody,
        x: np.ndarray,
        tau: float,
        mode: str,
        schedule: t.Optional[CurvatureSchedule]) -> t.Tuple[t.Optional[float], str]:
    if mode != "volumic":
        try:
            return body.analytic_curvature(x), "analytic"
        except CurvatureUnavailableError:
            if mode == "analytic":
                raise
    report = volumic_curvature(body, x, tau, schedule)
    return report.kappa, "volumic"


def curvature_law(
        body: BaseBody,
        tau: float = 1.0,
        grid: t.Union[DirectionGrid, int, None] = None,
        schedule: t.Optional[CurvatureSchedule] = None,
        mode: str = "auto") -> CurvatureLawReport:
    """Test whether ``f(u) = k/‖u‖_{K*}^{n+1}`` for a constant ``k``, with
    ``f = 1/κ`` at the boundary point of outer normal ``u``.

    :param mode: ``auto`` prefers analytic curvature, ``volumic`` forces
        the volumic estimate everywhere, ``analytic`` never estimates
    :raise: CurvatureUnavailableError
    """
    if mode not in LAW_MODES:
        raise UnsupportedMethodError(f'Curvature mode "{mode}" is not supported')
    if not isinstance(grid, DirectionGrid):
        grid = DirectionGrid(body.dim, grid or LAW_GRID.get(body.dim, 1))
    units = grid.units[grid.representatives()]
    points = body.boundary_point(units)
    supports = np.asarray(body.support(units), dtype=float)

    results = parallel_map(lambda x: _law_curvature(body, x, tau, mode, schedule), list(points))
    kappas = [k for k, _ in results]
    sources = [s for _, s in results]
    values = np.full(len(units), np.inf)
    for i, kappa in enumerate(kappas):
        if kappa is not None and kappa > 0:
            values[i] = supports[i] ** (body.dim + 1) / kappa
    status = "ok" if np.all(np.isfinite(values)) else VIOLATED
    return CurvatureLawReport(units, values, sources, status)
