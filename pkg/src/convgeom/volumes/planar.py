import typing as t
import logging
import functools
import numpy as np
from shapely.geometry import Polygon as ShapelyPolygon
from .model import VolumeMethodModel, VolumeEstimate, Region, Cut
from ..errors import BudgetExceededError

if t.TYPE_CHECKING:  # pragma: no cover
    from .registry import VolumeRegistry

logger = logging.getLogger(__name__)

#: relative roundoff floor added to exact areas
ROUNDOFF = 1e-12


def halfplane_polygon(cut: Cut, size: float) -> ShapelyPolygon:
    """A large square covering ``{<normal,y> >= offset}`` within ``size``."""
    norm = float(np.linalg.norm(cut.normal))
    a = cut.normal / norm
    tangent = np.array([-a[1], a[0]])
    base = cut.offset / norm * a
    length = 4 * (size + abs(cut.offset / norm))
    corners = [
        base - length * tangent,
        base + length * tangent,
        base + length * tangent + length * a,
        base - length * tangent + length * a,
    ]
    return ShapelyPolygon(corners)


def clip_region(region: Region, m: int, outer: bool = False) -> ShapelyPolygon:
    """The region with every placement replaced by its inscribed (or
    circumscribed) polygon at resolution ``m``."""
    shapes = [ShapelyPolygon(p.polygons(m)[1 if outer else 0]) for p in region.placements]
    if region.cuts:
        lo, hi = region.box()
        size = float(np.max(np.abs(np.concatenate([lo, hi])))) + 1
        shapes.extend(halfplane_polygon(cut, size) for cut in region.cuts)
    return functools.reduce(lambda a, b: a.intersection(b), shapes)


class PlanarPolygonVolume(VolumeMethodModel):
    """Areas of planar regions by clipping convex polygons. Smooth bodies
    are sandwiched between inscribed and circumscribed polygons; the
    reported value ``(A_in + 2·A_out)/3`` cancels the leading ``m⁻²`` term
    and stays inside the certified interval ``[A_in, A_out]``.
    """
    name = "exact_poly_2d"
    description = "Planar polygon clipping with a certified sandwich bound"

    def supports(self, region: Region) -> bool:
        return region.dim == 2

    def sandwich(self, region: Region, m: int) -> t.Tuple[float, float]:
        inner = clip_region(region, m).area
        if region.polygonal:
            return inner, inner
        return inner, clip_region(region, m, outer=True).area

    def estimate(
            self,
            region: Region,
            tol: float,
            registry: "VolumeRegistry",
            seed: int = 0) -> VolumeEstimate:
        m = registry.resolution
        while True:
            a_in, a_out = self.sandwich(region, m)
            value = (a_in + 2 * a_out) / 3
            error = (a_out - a_in) + ROUNDOFF * max(1.0, value)
            rv = VolumeEstimate(value, error, self.name, 0)
            if error <= tol or (registry.rtol is not None and error <= registry.rtol * value):
                return rv
            if m * 2 > registry.max_resolution:
                raise BudgetExceededError(f"area error {error:.3g} above tolerance at m={m}", rv)
            m *= 2
            logger.debug("refining polygonization to m=%d (error %.3g)", m, error)
