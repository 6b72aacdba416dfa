import typing as t
import logging
from scipy.spatial import ConvexHull, QhullError
from .model import VolumeMethodModel, VolumeEstimate, Region
from ..shapes.polytope import enumerate_vertices

if t.TYPE_CHECKING:  # pragma: no cover
    from .registry import VolumeRegistry

logger = logging.getLogger(__name__)

ROUNDOFF = 1e-12


class PolytopeVolume(VolumeMethodModel):
    """Volumes of intersections of halfspace polytopes in dimension three
    and above: concatenate the facet lists, enumerate the vertices of the
    intersection and triangulate its hull."""
    name = "exact_poly_3d"
    description = "Vertex enumeration and hull volume of stacked halfspaces"

    def supports(self, region: Region) -> bool:
        return region.dim >= 3 and region.halfspaces() is not None

    def estimate(
            self,
            region: Region,
            tol: float,
            registry: "VolumeRegistry",
            seed: int = 0) -> VolumeEstimate:
        facets = region.halfspaces()
        assert facets is not None
        vertices = enumerate_vertices(*facets)
        if vertices is None or len(vertices) <= region.dim:
            return VolumeEstimate(0.0, 0.0, self.name, 0)
        try:
            value = float(ConvexHull(vertices).volume)
        except QhullError as error:
            logger.warning("degenerate intersection treated as empty: %s", error)
            return VolumeEstimate(0.0, 0.0, self.name, 0)
        return VolumeEstimate(value, ROUNDOFF * max(1.0, value), self.name, 0)
