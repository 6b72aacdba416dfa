import typing as t
import numpy as np
from .polytope import PolytopeBody
from .types import PolygonDict, BodySpecDict
from ..registry import BodyParameter, is_matrix
from ..errors import InvalidBodyError, NonSymmetricBodyError
from ..util import cross2


def is_vertex_list(value: t.Any) -> None:
    is_matrix(value)
    if len(value[0]) != 2:
        raise ValueError("must be a list of [x, y] pairs")


class Polygon(PolytopeBody):
    """A symmetric convex polygon given by its counterclockwise vertices.
    Vertex ``i + k/2`` must be exactly ``-vertex[i]``.
    """
    kind = "polygon"
    value_registry = {
        "vertices": BodyParameter("Counterclockwise vertex list", is_vertex_list, True),
    }

    def __init__(self, vertices: t.Any):
        points = np.array(vertices, dtype=float)
        if points.ndim != 2 or points.shape[1] != 2:
            raise InvalidBodyError('"vertices" must be a list of [x, y] pairs')
        k = len(points)
        if k < 4 or k % 2:
            raise NonSymmetricBodyError("A symmetric polygon has an even number (>= 4) of vertices")
        if not np.array_equal(points[k // 2:], -points[:k // 2]):
            raise NonSymmetricBodyError()

        edges = np.roll(points, -1, axis=0) - points
        turns = cross2(edges, np.roll(edges, -1, axis=0))
        if not np.all(turns > 0):
            raise InvalidBodyError('"vertices" must be strictly convex and counterclockwise')

        a = np.column_stack([edges[:, 1], -edges[:, 0]])
        b = np.einsum("ij,ij->i", a, points)
        super(Polygon, self).__init__(a, b, points)

    def exact_volume(self) -> t.Optional[float]:
        nxt = np.roll(self._vertices, -1, axis=0)
        return float(np.sum(cross2(self._vertices, nxt)) / 2)

    def as_dict(self) -> BodySpecDict:
        data: PolygonDict = {"kind": "polygon", "vertices": self._vertices.tolist()}
        return dict(data)

    @classmethod
    def from_dict(cls, data: BodySpecDict) -> "Polygon":
        return cls(data["vertices"])

    @classmethod
    def square(cls, half: float = 1.0) -> "Polygon":
        return cls([[half, -half], [half, half], [-half, half], [-half, -half]])
