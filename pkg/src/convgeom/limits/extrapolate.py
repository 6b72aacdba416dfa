import numpy as np
from .models import Extrapolation

#: bounds of the fitted convergence exponent
MIN_EXPONENT = 0.25
MAX_EXPONENT = 4.0
DEFAULT_EXPONENT = 1.0
#: drop of the raw estimates across the schedule that signals divergence
DIVERGENCE_DROP = 4.0


def fit_exponent(h: np.ndarray, values: np.ndarray) -> float:
    """Exponent ``p`` of ``ρ(h) = κ∞ + a·h^p`` from the slope of
    ``log|Δρ|`` against ``log h``, clamped; the default when the
    differences change sign or vanish."""
    diffs = np.diff(values)
    if len(diffs) < 2 or np.any(diffs == 0) or not (np.all(diffs > 0) or np.all(diffs < 0)):
        return DEFAULT_EXPONENT
    slope = np.polyfit(np.log(h[:-1]), np.log(np.abs(diffs)), 1)[0]
    return float(np.clip(slope, MIN_EXPONENT, MAX_EXPONENT))


def extrapolate(h: np.ndarray, values: np.ndarray, fit_points: int = 4) -> Extrapolation:
    """Least squares fit of ``κ∞ + a·h^p`` on the last ``fit_points``
    values, ``p`` fitted first."""
    h = np.asarray(h[-fit_points:], dtype=float)
    values = np.asarray(values[-fit_points:], dtype=float)
    p = fit_exponent(h, values)
    design = np.column_stack([np.ones_like(h), h ** p])
    (kappa, coefficient), *_ = np.linalg.lstsq(design, values, rcond=None)
    residual = float(np.max(np.abs(design @ np.array([kappa, coefficient]) - values)))
    return Extrapolation(float(kappa), p, float(coefficient), residual)


def log_slope(h: np.ndarray, values: np.ndarray) -> float:
    """Slope of ``log values`` against ``log h``."""
    return float(np.polyfit(np.log(h), np.log(values), 1)[0])


def is_divergent(values: np.ndarray, fit: Extrapolation) -> bool:
    """The curvature vanishes when the limit is negative, or when the raw
    estimates fall by more than ``DIVERGENCE_DROP`` towards a limit far
    below the last estimate."""
    first, last = float(values[0]), float(values[-1])
    if last <= 0 or fit.kappa < 0:
        return True
    return first / last > DIVERGENCE_DROP and fit.kappa <= last / DIVERGENCE_DROP
