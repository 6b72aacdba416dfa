import typing as t
import numpy as np
from .models import BaseBody, OuterNormal
from .types import LinearDict, BodySpecDict
from ..registry import BodyParameter
from ..errors import InvalidBodyError


class LinearImage(BaseBody):
    """The image ``M·K'`` of a symmetric body ``K'`` under an invertible
    matrix ``M``. Volumes scale by the cached ``|det M|``.
    """
    kind = "linear"
    value_registry = {
        "m": BodyParameter("Invertible matrix", "square", True),
        "inner": BodyParameter("Body spec of the preimage", "body", True),
    }

    def __init__(self, m: t.Any, inner: BaseBody):
        m = np.array(m, dtype=float)
        if m.ndim != 2 or m.shape != (inner.dim, inner.dim):
            raise InvalidBodyError(f'"m" must be a {inner.dim}x{inner.dim} matrix')
        det = float(np.linalg.det(m))
        if abs(det) <= 1e-12 * np.abs(m).max() ** inner.dim:
            raise InvalidBodyError('"m" must be invertible')

        super(LinearImage, self).__init__(inner.dim)
        self.m = m
        self.m_inv = np.linalg.inv(m)
        self.inner = inner
        self.det = det
        self.abs_det = abs(det)

    @property
    def smooth(self) -> bool:
        return self.inner.smooth

    def pullback(self, x: t.Any) -> np.ndarray:
        """Map points of this body to points of the inner body."""
        return self.points(x) @ self.m_inv.T

    def gauge(self, x: t.Any) -> t.Any:
        return self.inner.gauge(self.pullback(x))

    def support(self, u: t.Any) -> t.Any:
        return self.inner.support(self.points(u) @ self.m)

    def boundary_point(self, u: t.Any) -> np.ndarray:
        w = self.points(u) @ self.m
        w = w / np.linalg.norm(w, axis=-1, keepdims=True)
        return self.inner.boundary_point(w) @ self.m.T

    def gauge_gradient(self, y: t.Any) -> np.ndarray:
        return self.inner.gauge_gradient(self.pullback(y)) @ self.m_inv

    def outer_normal(self, y: t.Any) -> OuterNormal:
        y = self.check_boundary(y)
        normal = self.inner.outer_normal(self.pullback(y))
        vector = self.m_inv.T @ normal.vector
        return OuterNormal(vector / np.linalg.norm(vector), normal.unique)

    def analytic_curvature(self, y: t.Any) -> float:
        y = self.check_boundary(y)
        preimage = self.pullback(y)
        kappa = self.inner.analytic_curvature(preimage)
        normal = self.inner.outer_normal(preimage).vector
        stretch = np.linalg.norm(self.m_inv.T @ normal)
        return float(kappa / stretch ** (self.dim + 1) / self.det ** 2)

    def chord(self, y: t.Any, u: t.Any) -> t.Tuple[np.ndarray, np.ndarray]:
        return self.inner.chord(self.pullback(np.atleast_2d(y)), self.pullback(u))

    def halfspaces(self) -> t.Optional[t.Tuple[np.ndarray, np.ndarray]]:
        facets = self.inner.halfspaces()
        if facets is None:
            return None
        return facets[0] @ self.m_inv, facets[1]

    def vertices(self) -> t.Optional[np.ndarray]:
        vertices = self.inner.vertices()
        if vertices is None:
            return None
        vertices = vertices @ self.m.T
        if self.dim == 2 and self.det < 0:
            vertices = vertices[::-1]
        return vertices

    def exact_volume(self) -> t.Optional[float]:
        volume = self.inner.exact_volume()
        if volume is None:
            return None
        return self.abs_det * volume

    def as_dict(self) -> BodySpecDict:
        data: LinearDict = {"kind": "linear", "m": self.m.tolist(), "inner": self.inner.as_dict()}
        return dict(data)

    @classmethod
    def from_dict(cls, data: BodySpecDict) -> "LinearImage":
        from .._bodies import BodyRegistry
        return cls(data["m"], BodyRegistry.import_body(data["inner"]))
