import typing as t
from .shapes import (
    BaseBody,
    Ellipsoid,
    PNormBall,
    Polygon,
    HalfspaceBody,
    LinearImage,
)
from .shapes.types import BodySpecDict
from .errors import InvalidBodyError

__all__ = ["BodyRegistry", "Body"]

Body = t.Union[Ellipsoid, PNormBall, Polygon, HalfspaceBody, LinearImage]


class BodyRegistry:
    """A registry of the supported body kinds. It imports a body from a
    JSON body spec by its ``kind``:

    .. code-block:: python

        from convgeom.bodies import BodyRegistry

        data = {"kind": "pball", "p": 4, "scale": [1, 1]}
        body = BodyRegistry.import_body(data)
    """
    body_types: t.Dict[str, t.Type[BaseBody]] = {
        Ellipsoid.kind: Ellipsoid,
        PNormBall.kind: PNormBall,
        Polygon.kind: Polygon,
        HalfspaceBody.kind: HalfspaceBody,
        LinearImage.kind: LinearImage,
    }

    @classmethod
    def register(cls, body_cls: t.Type[BaseBody]) -> None:
        cls.body_types[body_cls.kind] = body_cls

    @classmethod
    def import_body(cls, data: BodySpecDict) -> BaseBody:
        """Import a body from a JSON body spec (a dict).

        :param data: the body spec, with a ``kind`` field
        :raise: InvalidBodyError
        """
        if not isinstance(data, dict):
            raise InvalidBodyError("Body spec must be a JSON object")
        if "kind" not in data:
            raise InvalidBodyError("Missing body kind")

        kind = data["kind"]
        if kind not in cls.body_types:
            raise InvalidBodyError(f'Invalid body kind: "{kind}"')
        return cls.body_types[kind].import_body(data)
