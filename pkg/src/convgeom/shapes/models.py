import typing as t
from abc import ABCMeta, abstractmethod
import numpy as np
from .grid import planar_units
from .types import BodySpecDict
from ..registry import (
    BodyParameterRegistryDict,
    validate_registry_spec,
    check_supported_fields,
)
from ..errors import (
    InvalidBodyError,
    InvalidParameterError,
    CurvatureUnavailableError,
)
from ..util import cross2

GenericBody = t.TypeVar("GenericBody", bound="BaseBody")

#: accepted deviation of ``gauge(y)`` from 1 for boundary points
BOUNDARY_TOL = 1e-6

_GOLDEN = (5 ** 0.5 - 1) / 2


class OuterNormal(t.NamedTuple):
    #: outer unit normal
    vector: np.ndarray
    #: False at polytope vertices, where any face normal would do
    unique: bool


class BaseBody(metaclass=ABCMeta):
    """Interface of a centrally symmetric convex body with the origin in
    its interior. Every oracle accepts a single point of shape ``(n,)``
    or a batch of shape ``(k, n)``.
    """
    kind: t.ClassVar[str]
    value_registry: t.ClassVar[BodyParameterRegistryDict]

    def __init__(self, dim: int):
        if dim < 2:
            raise InvalidBodyError("Dimension must be at least 2")
        self.dim = dim
        self._polygons: t.Dict[int, t.Tuple[np.ndarray, np.ndarray]] = {}

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__} dim={self.dim}>"

    @property
    def smooth(self) -> bool:
        """Whether the boundary is C¹ and strictly convex."""
        return False

    def points(self, x: t.Any) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if x.shape[-1:] != (self.dim,):
            raise InvalidParameterError(f"Expected points of dimension {self.dim}")
        return x

    @abstractmethod
    def gauge(self, x: t.Any) -> t.Any:
        """Minkowski functional ``inf{λ > 0; x ∈ λK}``."""

    @abstractmethod
    def support(self, u: t.Any) -> t.Any:
        """Support function ``sup{<y,u>; y ∈ K}``."""

    @abstractmethod
    def boundary_point(self, u: t.Any) -> np.ndarray:
        """A boundary point where ``u`` is an outer normal."""

    @abstractmethod
    def gauge_gradient(self, y: t.Any) -> np.ndarray:
        """Gradient of the gauge, ties at polytope vertices are broken
        by the lowest face index."""

    @abstractmethod
    def as_dict(self) -> BodySpecDict:
        """Output this body as a JSON body spec."""

    @classmethod
    @abstractmethod
    def from_dict(cls: t.Type[GenericBody], data: BodySpecDict) -> GenericBody:
        pass

    def check_boundary(self, y: t.Any) -> np.ndarray:
        y = self.points(y)
        if y.ndim != 1 or abs(float(self.gauge(y)) - 1) > BOUNDARY_TOL:
            raise InvalidParameterError("Point is not on the boundary of the body")
        return y

    def outer_normal(self, y: t.Any) -> OuterNormal:
        y = self.check_boundary(y)
        grad = self.gauge_gradient(y)
        return OuterNormal(grad / np.linalg.norm(grad), True)

    def analytic_curvature(self, y: t.Any) -> float:
        """Gauss–Kronecker curvature at the boundary point ``y``.

        :raise: CurvatureUnavailableError
        """
        raise CurvatureUnavailableError()

    def halfspaces(self) -> t.Optional[t.Tuple[np.ndarray, np.ndarray]]:
        """Facets ``<a_i,x> <= b_i`` for polytopes, None otherwise."""
        return None

    def vertices(self) -> t.Optional[np.ndarray]:
        """Vertices for polytopes (counterclockwise in the plane)."""
        return None

    def exact_volume(self) -> t.Optional[float]:
        return None

    def halfwidths(self) -> np.ndarray:
        """Half side lengths of the axis aligned bounding box."""
        return np.asarray(self.support(np.eye(self.dim)), dtype=float)

    def chord(self, y: t.Any, u: t.Any) -> t.Tuple[np.ndarray, np.ndarray]:
        """The interval ``{t; y + t·u ∈ K}`` for every row of ``y``, as two
        arrays of lower and upper ends; NaN where the line misses ``K``.
        """
        y = np.atleast_2d(self.points(y))
        u = self.points(u)
        radius = float(np.linalg.norm(self.halfwidths()))
        bound = (np.linalg.norm(y, axis=-1) + radius) / np.linalg.norm(u)

        def along(s: np.ndarray) -> np.ndarray:
            return self.gauge(y + s[:, None] * u)

        # golden section for the minimum of the convex gauge along the line,
        # run on all rows at once with one gauge call per step
        lo, hi = -bound.copy(), bound.copy()
        c = hi - _GOLDEN * (hi - lo)
        d = lo + _GOLDEN * (hi - lo)
        fc, fd = along(c), along(d)
        for _ in range(100):
            left = fc < fd
            hi = np.where(left, d, hi)
            lo = np.where(left, lo, c)
            c_new = hi - _GOLDEN * (hi - lo)
            d_new = lo + _GOLDEN * (hi - lo)
            c, d = np.where(left, c_new, d), np.where(left, c, d_new)
            fc, fd = np.where(left, along(c), fd), np.where(left, fc, along(d))
        center = (lo + hi) / 2
        hit = along(center) < 1

        upper = _bisect_exit(along, center, bound)
        lower = _bisect_exit(along, center, -bound)
        return np.where(hit, lower, np.nan), np.where(hit, upper, np.nan)

    def polygonize(self, m: int) -> t.Tuple[np.ndarray, np.ndarray]:
        """Inscribed and circumscribed polygons of a planar body, built from
        boundary points and support lines at ``m`` equally spaced normals.
        Polygons return their own vertices twice.
        """
        if self.dim != 2:
            raise InvalidParameterError("Polygonization needs a planar body")
        if m in self._polygons:
            return self._polygons[m]

        vertices = self.vertices()
        if vertices is not None:
            pair = (vertices, vertices)
        else:
            units = planar_units(m)
            inner = self.boundary_point(units)
            h = self.support(units)
            nxt = np.roll(units, -1, axis=0)
            hn = np.roll(h, -1)
            det = cross2(units, nxt)
            outer = np.column_stack([
                (h * nxt[:, 1] - hn * units[:, 1]) / det,
                (units[:, 0] * hn - nxt[:, 0] * h) / det,
            ])
            pair = (inner, outer)
        self._polygons[m] = pair
        return pair

    @classmethod
    def validate_spec(cls, data: BodySpecDict) -> None:
        try:
            validate_registry_spec(cls.value_registry, data)
            check_supported_fields(cls.value_registry, data)
        except ValueError as error:
            raise InvalidBodyError(str(error))

    @classmethod
    def import_body(cls: t.Type[GenericBody], data: BodySpecDict) -> GenericBody:
        """Import a body of this kind from a JSON body spec.

        :raise: InvalidBodyError
        """
        if data.get("kind") != cls.kind:
            raise InvalidBodyError(f'Body kind must be "{cls.kind}"')
        cls.validate_spec(data)
        return cls.from_dict(data)


def _bisect_exit(
        along: t.Callable[[np.ndarray], np.ndarray],
        start: np.ndarray,
        stop: np.ndarray) -> np.ndarray:
    """Bisection for the exit point of every row together."""
    inside, outside = start.copy(), stop.copy()
    for _ in range(64):
        mid = (inside + outside) / 2
        ok = along(mid) <= 1
        inside = np.where(ok, mid, inside)
        outside = np.where(ok, outside, mid)
    return (inside + outside) / 2
