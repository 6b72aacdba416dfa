import typing as t
import numpy as np
from .models import BaseBody
from .types import EllipsoidDict, BodySpecDict
from ..registry import BodyParameter
from ..errors import InvalidBodyError
from ..util import ball_volume


class Ellipsoid(BaseBody):
    """Ellipsoid ``{x; <x,Qx> <= 1}`` stored by its positive definite
    matrix ``Q``, so that ``‖x‖_K = sqrt(<x,Qx>)`` and
    ``h_K(u) = sqrt(<u,Q⁻¹u>)``.
    """
    kind = "ellipsoid"
    value_registry = {
        "q": BodyParameter("Positive definite matrix of the quadratic gauge", "square", True),
    }

    def __init__(self, q: t.Any):
        q = np.array(q, dtype=float)
        if q.ndim != 2 or q.shape[0] != q.shape[1]:
            raise InvalidBodyError('"q" must be a square matrix')
        if not np.allclose(q, q.T, rtol=0, atol=1e-12 * np.abs(q).max()):
            raise InvalidBodyError('"q" must be symmetric')
        q = (q + q.T) / 2
        try:
            np.linalg.cholesky(q)
        except np.linalg.LinAlgError:
            raise InvalidBodyError('"q" must be positive definite')

        super(Ellipsoid, self).__init__(q.shape[0])
        self.q = q
        self.q_inv = np.linalg.inv(q)
        self.det = float(np.linalg.det(q))

    @classmethod
    def from_semiaxes(cls, axes: t.Sequence[float]) -> "Ellipsoid":
        return cls(np.diag(1 / np.asarray(axes, dtype=float) ** 2))

    @classmethod
    def ball(cls, dim: int, radius: float = 1.0) -> "Ellipsoid":
        return cls(np.eye(dim) / radius ** 2)

    @property
    def smooth(self) -> bool:
        return True

    def gauge(self, x: t.Any) -> t.Any:
        x = self.points(x)
        return np.sqrt(np.maximum(np.einsum("...i,ij,...j->...", x, self.q, x), 0))

    def support(self, u: t.Any) -> t.Any:
        u = self.points(u)
        return np.sqrt(np.maximum(np.einsum("...i,ij,...j->...", u, self.q_inv, u), 0))

    def boundary_point(self, u: t.Any) -> np.ndarray:
        u = self.points(u)
        return (u @ self.q_inv) / self.support(u)[..., None]

    def gauge_gradient(self, y: t.Any) -> np.ndarray:
        y = self.points(y)
        return (y @ self.q) / self.gauge(y)[..., None]

    def analytic_curvature(self, y: t.Any) -> float:
        y = self.check_boundary(y)
        qy = self.q @ y
        return float(self.det / np.linalg.norm(qy) ** (self.dim + 1))

    def chord(self, y: t.Any, u: t.Any) -> t.Tuple[np.ndarray, np.ndarray]:
        y = np.atleast_2d(self.points(y))
        u = self.points(u)
        qa = float(u @ self.q @ u)
        qb = 2 * (y @ self.q @ u)
        qc = np.einsum("...i,ij,...j->...", y, self.q, y) - 1
        disc = qb ** 2 - 4 * qa * qc
        root = np.sqrt(np.where(disc > 0, disc, 0))
        lower = (-qb - root) / (2 * qa)
        upper = (-qb + root) / (2 * qa)
        return np.where(disc > 0, lower, np.nan), np.where(disc > 0, upper, np.nan)

    def exact_volume(self) -> t.Optional[float]:
        return ball_volume(self.dim) / self.det ** 0.5

    def as_dict(self) -> BodySpecDict:
        data: EllipsoidDict = {"kind": "ellipsoid", "q": self.q.tolist()}
        return dict(data)

    @classmethod
    def from_dict(cls, data: BodySpecDict) -> "Ellipsoid":
        return cls(data["q"])
