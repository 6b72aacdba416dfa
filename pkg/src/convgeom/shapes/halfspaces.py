import typing as t
import numpy as np
from .polytope import (
    PolytopeBody,
    check_bounded,
    check_symmetric_pairs,
    enumerate_vertices,
    order_ccw,
)
from .types import HalfspacesDict, BodySpecDict
from ..registry import BodyParameter
from ..errors import InvalidBodyError


class HalfspaceBody(PolytopeBody):
    """A symmetric polytope ``{x; <a_i,x> <= b_i}``. Facets must come in
    exact pairs ``(a, b)``, ``(-a, b)`` and ``b`` must be positive, so the
    origin is interior.
    """
    kind = "halfspaces"
    value_registry = {
        "a": BodyParameter("Facet normals", "matrix", True),
        "b": BodyParameter("Facet offsets", "list[positive]", True),
    }

    def __init__(self, a: t.Any, b: t.Any):
        a = np.array(a, dtype=float)
        b = np.array(b, dtype=float)
        if a.ndim != 2 or b.ndim != 1 or a.shape[0] != b.shape[0]:
            raise InvalidBodyError('"a" and "b" must have the same number of rows')
        if a.shape[1] < 2:
            raise InvalidBodyError("Dimension must be at least 2")
        if not np.all(b > 0):
            raise InvalidBodyError('"b" must be positive')
        check_symmetric_pairs(a, b)
        check_bounded(a, b)

        vertices = enumerate_vertices(a, b, np.zeros(a.shape[1]))
        if vertices is None:
            raise InvalidBodyError("Halfspaces must describe a body with interior")
        if a.shape[1] == 2:
            vertices = order_ccw(vertices)
        super(HalfspaceBody, self).__init__(a, b, vertices)

    def as_dict(self) -> BodySpecDict:
        data: HalfspacesDict = {"kind": "halfspaces", "a": self.a.tolist(), "b": self.b.tolist()}
        return dict(data)

    @classmethod
    def from_dict(cls, data: BodySpecDict) -> "HalfspaceBody":
        return cls(data["a"], data["b"])

    @classmethod
    def cube(cls, dim: int = 3, half: float = 1.0) -> "HalfspaceBody":
        eye = np.eye(dim)
        return cls(np.vstack([eye, -eye]), np.full(2 * dim, half))
