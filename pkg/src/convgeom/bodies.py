import json
import typing as t
from pathlib import Path
import numpy as np
from ._bodies import BodyRegistry, Body
from .shapes import (
    BaseBody,
    OuterNormal,
    DirectionGrid,
    Ellipsoid,
    PNormBall,
    Polygon,
    HalfspaceBody,
    LinearImage,
)
from .shapes.types import BodySpecDict
from .errors import InvalidBodyError, InvalidParameterError
from .util import normalize

__all__ = [
    "BodyRegistry",
    "Body",
    "BaseBody",
    "BodyFlexible",
    "OuterNormal",
    "DirectionGrid",
    "Ellipsoid",
    "PNormBall",
    "Polygon",
    "HalfspaceBody",
    "LinearImage",
    "guess_body",
    "load_body",
    "gauge",
    "support",
    "boundary_point",
    "outer_normal",
    "analytic_curvature",
]

BodyFlexible = t.Union[BaseBody, BodySpecDict, str, bytes]


def guess_body(body: BodyFlexible) -> BaseBody:
    """Turn a body, a body spec dict or a JSON string into a body.

    :raise: InvalidBodyError
    """
    if isinstance(body, BaseBody):
        return body
    if isinstance(body, (str, bytes)):
        try:
            body = json.loads(body)
        except json.JSONDecodeError as error:
            raise InvalidBodyError(f"line {error.lineno} column {error.colno}: {error.msg}")
    return BodyRegistry.import_body(body)  # type: ignore[arg-type]


def load_body(path: t.Union[str, Path]) -> BaseBody:
    """Read a JSON body spec file.

    :raise: InvalidBodyError
    """
    path = Path(path)
    try:
        content = path.read_text()
    except OSError as error:
        raise InvalidBodyError(f"{path}: {error.strerror}")
    try:
        data = json.loads(content)
    except json.JSONDecodeError as error:
        raise InvalidBodyError(f"{path}: line {error.lineno} column {error.colno}: {error.msg}")
    try:
        return BodyRegistry.import_body(data)
    except InvalidBodyError as error:
        raise error.__class__(f"{path}: {error.description}")


def _vector(body: BaseBody, value: t.Any) -> np.ndarray:
    v = np.asarray(value, dtype=float)
    if v.shape != (body.dim,) or not np.all(np.isfinite(v)):
        raise InvalidParameterError(f"Expected a finite vector of dimension {body.dim}")
    return v


def gauge(body: BodyFlexible, x: t.Any) -> float:
    """The norm ``‖x‖_K = inf{λ > 0; x ∈ λK}``."""
    body = guess_body(body)
    return float(body.gauge(_vector(body, x)))


def support(body: BodyFlexible, u: t.Any) -> float:
    """The support value ``h_K(u) = sup{<y,u>; y ∈ K}``, ``u != 0``."""
    body = guess_body(body)
    u = _vector(body, u)
    if not np.any(u):
        raise InvalidParameterError("Direction must be a nonzero vector")
    return float(body.support(u))


def boundary_point(body: BodyFlexible, u: t.Any) -> np.ndarray:
    """The point ``x(u)`` of the boundary where ``u`` is an outer normal."""
    body = guess_body(body)
    return body.boundary_point(normalize(_vector(body, u)))


def outer_normal(body: BodyFlexible, y: t.Any) -> OuterNormal:
    """Outer unit normal at the boundary point ``y``. At polytope vertices
    ``unique`` is False and the normal of the lowest face index is given."""
    body = guess_body(body)
    return body.outer_normal(_vector(body, y))


def analytic_curvature(body: BodyFlexible, y: t.Any) -> float:
    """Closed-form Gauss–Kronecker curvature at the boundary point ``y``.

    :raise: CurvatureUnavailableError
    """
    body = guess_body(body)
    return body.analytic_curvature(_vector(body, y))
