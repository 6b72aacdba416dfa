import typing as t

__all__ = [
    "BodySpecDict",
    "EllipsoidDict",
    "PBallDict",
    "PolygonDict",
    "HalfspacesDict",
    "LinearDict",
]

BodySpecDict = t.Dict[str, t.Any]


class EllipsoidDict(t.TypedDict):
    kind: t.Literal["ellipsoid"]
    q: t.List[t.List[float]]


class PBallDict(t.TypedDict):
    kind: t.Literal["pball"]
    p: float
    scale: t.List[float]


class PolygonDict(t.TypedDict):
    kind: t.Literal["polygon"]
    vertices: t.List[t.List[float]]


class HalfspacesDict(t.TypedDict):
    kind: t.Literal["halfspaces"]
    a: t.List[t.List[float]]
    b: t.List[float]


class LinearDict(t.TypedDict):
    kind: t.Literal["linear"]
    m: t.List[t.List[float]]
    inner: BodySpecDict
