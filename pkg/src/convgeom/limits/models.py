import typing as t
from dataclasses import dataclass
import numpy as np

DIVERGENT = "divergent (κ=0 regime)"
CONVERGED = "converged"


@dataclass(frozen=True)
class CurvatureSchedule:
    """Levels ``h_k = h0·2^-k`` for ``k = 0..levels``.

    :param h0: first level, ``0.2·<x,N(x)>`` by default
    :param levels: number of halvings
    :param fit_points: trailing points used by the extrapolation
    :param volume_rtol: relative tolerance of each volume, per dimension by default
    """
    h0: t.Optional[float] = None
    levels: int = 6
    fit_points: int = 4
    volume_rtol: t.Optional[float] = None

    def sequence(self, h0: float) -> np.ndarray:
        return h0 * 2.0 ** -np.arange(self.levels + 1)


@dataclass(frozen=True)
class Extrapolation:
    """Fit of ``ρ(h) = κ∞ + a·h^p`` to the tail of a sequence."""
    kappa: float
    exponent: float
    coefficient: float
    residual: float


@dataclass(frozen=True)
class CurvatureReport:
    """Volumic estimates ``c_n^{n+1} h^{n+1} / (((1+τ)/τ)^{n-1} V(h)²)`` over
    a decreasing sequence of widths, with the extrapolated curvature."""
    point: np.ndarray
    normal: np.ndarray
    tau: t.Optional[float]
    h_sequence: np.ndarray
    volumes: np.ndarray
    volume_errors: np.ndarray
    raw_estimates: np.ndarray
    fit: Extrapolation
    #: slope of ``log V`` against ``log h``, ``(n+1)/2`` at points of positive curvature
    volume_exponent: float
    status: str
    method: str

    @property
    def kappa(self) -> t.Optional[float]:
        """Extrapolated curvature, None in the divergent regime."""
        if self.status == DIVERGENT:
            return None
        return max(0.0, self.fit.kappa)

    @property
    def divergent(self) -> bool:
        return self.status == DIVERGENT

    def as_dict(self) -> t.Dict[str, t.Any]:
        return {
            "kind": "volumic",
            "point": self.point,
            "normal": self.normal,
            "tau": self.tau,
            "h_sequence": self.h_sequence,
            "volumes": self.volumes,
            "volume_errors": self.volume_errors,
            "raw_estimates": self.raw_estimates,
            "kappa": self.kappa,
            "status": self.status,
            "fit_exponent": self.fit.exponent,
            "residual": self.fit.residual,
            "volume_exponent": self.volume_exponent,
            "method": self.method,
        }


@dataclass(frozen=True)
class CapReport(CurvatureReport):
    """Estimates ``c_n^{n+1} h^{n+1} / |K ∩ H_h⁺|²`` from caps cut by
    hyperplanes orthogonal to ``N(x)`` at depth ``h``."""

    def as_dict(self) -> t.Dict[str, t.Any]:
        rv = super().as_dict()
        rv["kind"] = "cap"
        return rv
