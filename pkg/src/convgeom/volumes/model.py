import typing as t
from abc import ABCMeta, abstractmethod
from dataclasses import dataclass, field
import numpy as np
from ..shapes import BaseBody
from ..errors import InvalidParameterError

if t.TYPE_CHECKING:  # pragma: no cover
    from .registry import VolumeRegistry


@dataclass(frozen=True)
class VolumeEstimate:
    """A volume value with an explicit error bound (certified for exact
    methods, a 95% confidence half-width for Monte Carlo)."""
    value: float
    abs_error: float
    method: str
    samples: int = 0

    def as_dict(self) -> t.Dict[str, t.Any]:
        return {
            "value": self.value,
            "abs_error": self.abs_error,
            "method": self.method,
            "samples": self.samples,
        }


@dataclass(frozen=True, eq=False)
class Placement:
    """The body ``center + scale·K``."""
    body: BaseBody
    center: np.ndarray
    scale: float = 1.0

    def gauge(self, y: t.Any) -> t.Any:
        return self.body.gauge((np.asarray(y, dtype=float) - self.center) / self.scale)

    def gauge_gradient(self, y: t.Any) -> np.ndarray:
        local = (np.asarray(y, dtype=float) - self.center) / self.scale
        return self.body.gauge_gradient(local) / self.scale

    def support(self, u: t.Any) -> t.Any:
        u = np.asarray(u, dtype=float)
        return u @ self.center + self.scale * self.body.support(u)

    def argmax(self, u: t.Any) -> np.ndarray:
        return self.center + self.scale * self.body.boundary_point(u)

    def radial(self, units: np.ndarray) -> np.ndarray:
        """Boundary points hit by the rays ``center + t·u``."""
        radii = 1 / self.body.gauge(units)
        return self.center + self.scale * units * radii[..., None]

    def box(self) -> t.Tuple[np.ndarray, np.ndarray]:
        half = self.scale * self.body.halfwidths()
        return self.center - half, self.center + half

    def halfspaces(self) -> t.Optional[t.Tuple[np.ndarray, np.ndarray]]:
        facets = self.body.halfspaces()
        if facets is None:
            return None
        a, b = facets
        return a, self.scale * b + a @ self.center

    def polygons(self, m: int) -> t.Tuple[np.ndarray, np.ndarray]:
        inner, outer = self.body.polygonize(m)
        return self.center + self.scale * inner, self.center + self.scale * outer


@dataclass(frozen=True, eq=False)
class Cut:
    """The halfspace ``<normal,y> >= offset``."""
    normal: np.ndarray
    offset: float


@dataclass(frozen=True, eq=False)
class Region:
    """Intersection of placed bodies, optionally cut by halfspaces."""
    placements: t.Tuple[Placement, ...]
    cuts: t.Tuple[Cut, ...] = ()
    #: orthonormal columns, the sampling frame of random engines
    frame: t.Optional[np.ndarray] = None

    @property
    def dim(self) -> int:
        return self.placements[0].body.dim

    @property
    def smooth(self) -> bool:
        return all(p.body.smooth for p in self.placements)

    @property
    def polygonal(self) -> bool:
        return self.dim == 2 and all(p.body.vertices() is not None for p in self.placements)

    def contains(self, y: t.Any, strict: bool = False) -> t.Any:
        y = np.asarray(y, dtype=float)
        ok = np.ones(y.shape[:-1], dtype=bool)
        for p in self.placements:
            g = p.gauge(y)
            ok &= (g < 1) if strict else (g <= 1)
        for cut in self.cuts:
            s = y @ cut.normal
            ok &= (s > cut.offset) if strict else (s >= cut.offset)
        return ok

    def halfspaces(self) -> t.Optional[t.Tuple[np.ndarray, np.ndarray]]:
        rows, offsets = [], []
        for p in self.placements:
            facets = p.halfspaces()
            if facets is None:
                return None
            rows.append(facets[0])
            offsets.append(facets[1])
        for cut in self.cuts:
            rows.append(-cut.normal[None, :])
            offsets.append(np.array([-cut.offset]))
        return np.vstack(rows), np.concatenate(offsets)

    def box(self) -> t.Tuple[np.ndarray, np.ndarray]:
        boxes = [p.box() for p in self.placements]
        lo = np.max([b[0] for b in boxes], axis=0)
        hi = np.min([b[1] for b in boxes], axis=0)
        return lo, hi

    def interior_point(self) -> t.Optional[np.ndarray]:
        """A cheap guess of a strictly interior point, None if every guess
        fails."""
        weights = np.array([1 / p.scale for p in self.placements])
        centers = np.array([p.center for p in self.placements])
        candidates = [weights @ centers / weights.sum()]
        candidates.extend(centers)
        first = self.placements[0]
        for cut in self.cuts:
            b = first.argmax(cut.normal)
            top = float(b @ cut.normal)
            base = float(first.center @ cut.normal)
            if top > cut.offset and top > base:
                eta = (top - cut.offset) / (2 * (top - base))
                candidates.append(first.center + (1 - eta) * (b - first.center))
        for c in candidates:
            if self.contains(c, strict=True):
                return np.asarray(c, dtype=float)
        return None


@dataclass(frozen=True, eq=False)
class TranslateProblem:
    """The problem ``|K ∩ (x + τ·K')|`` where ``K'`` is ``other`` when
    given and ``K`` itself otherwise."""
    body: BaseBody
    tau: float
    x: np.ndarray
    other: t.Optional[BaseBody] = field(default=None)

    def __post_init__(self) -> None:
        tau = float(self.tau)
        if not np.isfinite(tau) or tau <= 0:
            raise InvalidParameterError("tau must be a positive number")
        x = np.asarray(self.x, dtype=float)
        if x.shape != (self.body.dim,) or not np.all(np.isfinite(x)):
            raise InvalidParameterError(f"x must be a finite vector of dimension {self.body.dim}")
        if self.other is not None and self.other.dim != self.body.dim:
            raise InvalidParameterError("Both bodies must have the same dimension")
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "x", x)

    @property
    def dim(self) -> int:
        return self.body.dim

    @property
    def moving(self) -> BaseBody:
        return self.other if self.other is not None else self.body

    @property
    def fixed(self) -> Placement:
        return Placement(self.body, np.zeros(self.dim), 1.0)

    @property
    def translate(self) -> Placement:
        return Placement(self.moving, self.x, self.tau)

    def region(self) -> Region:
        return Region((self.fixed, self.translate))

    def outside_support(self) -> bool:
        """``F(x) = 0`` exactly when ``‖x‖_K >= 1 + τ``."""
        return self.other is None and float(self.body.gauge(self.x)) >= 1 + self.tau

    def moved(self, x: t.Any) -> "TranslateProblem":
        return TranslateProblem(self.body, self.tau, np.asarray(x, dtype=float), self.other)


class VolumeMethodModel(metaclass=ABCMeta):
    """Interface of a volume engine for regions."""
    name: t.ClassVar[str]
    description: t.ClassVar[str]
    #: exact methods report certified error bounds
    exact: t.ClassVar[bool] = True
    #: relative tolerance used when the caller gives no tolerance
    default_rtol: t.ClassVar[t.Optional[float]] = None

    @abstractmethod
    def supports(self, region: Region) -> bool:
        pass

    @abstractmethod
    def estimate(
            self,
            region: Region,
            tol: float,
            registry: "VolumeRegistry",
            seed: int = 0) -> VolumeEstimate:
        """Estimate the volume of the region.

        :param region: region to measure
        :param tol: absolute tolerance of the error bound
        :param registry: registry holding the engine parameters
        :param seed: seed of random engines
        :raise: BudgetExceededError
        """
