import typing as t
import itertools
import numpy as np
from scipy.special import gamma
from .models import BaseBody, OuterNormal
from .polytope import polytope_chord
from .types import PBallDict, BodySpecDict
from ..registry import BodyParameter, is_number
from ..errors import InvalidBodyError, CurvatureUnavailableError


def is_exponent(value: t.Any) -> None:
    is_number(value)
    if value < 1:
        raise ValueError("must be >= 1")


class PNormBall(BaseBody):
    """Unit ball of ``(Σ |x_i/s_i|^p)^{1/p}``. With ``p = 1`` it is a
    cross-polytope; with ``p > 1`` it is smooth and strictly convex.
    """
    kind = "pball"
    value_registry = {
        "p": BodyParameter("Exponent p >= 1", is_exponent, True),
        "scale": BodyParameter("Per-axis scales", "list[positive]", True),
    }

    def __init__(self, p: float, scale: t.Any):
        scale = np.array(scale, dtype=float)
        if scale.ndim != 1 or not np.all(scale > 0):
            raise InvalidBodyError('"scale" must be a list of positive numbers')
        if not np.isfinite(p) or p < 1:
            raise InvalidBodyError('"p" must be >= 1')

        super(PNormBall, self).__init__(len(scale))
        self.p = float(p)
        self.scale = scale
        #: dual exponent, inf for the cross-polytope
        self.q = np.inf if self.p == 1 else self.p / (self.p - 1)

    @property
    def smooth(self) -> bool:
        return self.p > 1

    def gauge(self, x: t.Any) -> t.Any:
        x = self.points(x)
        return np.linalg.norm(x / self.scale, ord=self.p, axis=-1)

    def support(self, u: t.Any) -> t.Any:
        u = self.points(u)
        return np.linalg.norm(u * self.scale, ord=self.q, axis=-1)

    def boundary_point(self, u: t.Any) -> np.ndarray:
        u = self.points(u)
        v = u * self.scale
        if self.p == 1:
            index = np.argmax(np.abs(v), axis=-1)
            pick = np.take_along_axis(v, index[..., None], axis=-1)
            y = np.zeros(v.shape)
            np.put_along_axis(y, index[..., None], np.where(pick >= 0, 1.0, -1.0), axis=-1)
            return y * self.scale

        w = v / np.max(np.abs(v), axis=-1, keepdims=True)
        nq = np.linalg.norm(w, ord=self.q, axis=-1)[..., None]
        return self.scale * np.sign(w) * np.abs(w) ** (self.q - 1) / nq ** (self.q - 1)

    def gauge_gradient(self, y: t.Any) -> np.ndarray:
        y = self.points(y)
        z = y / self.scale
        if self.p == 1:
            return np.where(z >= 0, 1.0, -1.0) / self.scale
        g = self.gauge(y)[..., None]
        return np.sign(z) * np.abs(z / g) ** (self.p - 1) / self.scale

    def outer_normal(self, y: t.Any) -> OuterNormal:
        normal = super(PNormBall, self).outer_normal(y)
        if self.p == 1:
            return OuterNormal(normal.vector, bool(np.all(np.asarray(y) != 0)))
        return normal

    def analytic_curvature(self, y: t.Any) -> float:
        if self.p == 1:
            raise CurvatureUnavailableError()
        y = self.check_boundary(y)
        z = np.abs(y / self.scale)
        if self.p < 2 and np.any(z == 0):
            raise CurvatureUnavailableError("Curvature is unbounded at this point")

        p = self.p
        grad = p * np.sign(y) * z ** (p - 1) / self.scale
        hess = p * (p - 1) * z ** (p - 2) / self.scale ** 2
        total = 0.0
        for i in range(self.dim):
            total += grad[i] ** 2 * np.prod(np.delete(hess, i))
        return float(total / np.linalg.norm(grad) ** (self.dim + 1))

    def halfspaces(self) -> t.Optional[t.Tuple[np.ndarray, np.ndarray]]:
        if self.p != 1:
            return None
        signs = np.array(list(itertools.product([1.0, -1.0], repeat=self.dim)))
        return signs / self.scale, np.ones(len(signs))

    def vertices(self) -> t.Optional[np.ndarray]:
        if self.p != 1:
            return None
        eye = np.diag(self.scale)
        return np.vstack([eye, -eye])

    def chord(self, y: t.Any, u: t.Any) -> t.Tuple[np.ndarray, np.ndarray]:
        facets = self.halfspaces()
        if facets is None:
            return super(PNormBall, self).chord(y, u)
        y = np.atleast_2d(self.points(y))
        return polytope_chord(facets[0], facets[1], y, self.points(u))

    def halfwidths(self) -> np.ndarray:
        return self.scale.copy()

    def exact_volume(self) -> t.Optional[float]:
        p, n = self.p, self.dim
        return float((2 * gamma(1 + 1 / p)) ** n / gamma(1 + n / p) * np.prod(self.scale))

    def as_dict(self) -> BodySpecDict:
        data: PBallDict = {"kind": "pball", "p": self.p, "scale": self.scale.tolist()}
        return dict(data)

    @classmethod
    def from_dict(cls, data: BodySpecDict) -> "PNormBall":
        return cls(data["p"], data["scale"])
