import typing as t
import json
import functools
import numpy as np
from .errors import InvalidParameterError


def to_builtin(data: t.Any) -> t.Any:
    """Convert numpy values inside ``data`` into plain Python objects,
    so that the result can be dumped as JSON.
    """
    if isinstance(data, dict):
        return {k: to_builtin(v) for k, v in data.items()}
    if isinstance(data, (list, tuple)):
        return [to_builtin(v) for v in data]
    if isinstance(data, np.ndarray):
        return to_builtin(data.tolist())
    if isinstance(data, np.bool_):
        return bool(data)
    if isinstance(data, np.integer):
        return int(data)
    if isinstance(data, np.floating):
        return float(data)
    return data


def json_dumps(data: t.Any, indent: t.Optional[int] = None) -> str:
    if indent is None:
        return json.dumps(to_builtin(data), ensure_ascii=False, sort_keys=True, separators=(",", ":"))
    return json.dumps(to_builtin(data), ensure_ascii=False, sort_keys=True, indent=indent)


def parse_vector(text: t.Union[str, t.Sequence[float]], dim: t.Optional[int] = None) -> np.ndarray:
    """Parse a vector from a comma separated string like ``"1,0"``.

    :param text: string or sequence of numbers
    :param dim: required dimension, if any
    :raise: InvalidParameterError
    """
    if isinstance(text, str):
        parts = [p.strip() for p in text.split(",") if p.strip()]
        try:
            values = [float(p) for p in parts]
        except ValueError:
            raise InvalidParameterError(f'Invalid vector "{text}"')
    else:
        values = [float(v) for v in text]

    vector = np.array(values, dtype=float)
    if vector.ndim != 1 or vector.size == 0 or not np.all(np.isfinite(vector)):
        raise InvalidParameterError(f'Invalid vector "{text}"')
    if dim is not None and vector.size != dim:
        raise InvalidParameterError(f"Vector must have {dim} components, got {vector.size}")
    return vector


def parse_floats(text: str) -> t.List[float]:
    try:
        return [float(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise InvalidParameterError(f'Invalid number list "{text}"')


def normalize(u: np.ndarray) -> np.ndarray:
    u = np.asarray(u, dtype=float)
    norm = np.linalg.norm(u)
    if not np.isfinite(norm) or norm == 0:
        raise InvalidParameterError("Direction must be a nonzero vector")
    return u / norm


def cross2(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """z-component of the cross product of planar vectors, broadcast over rows."""
    return a[..., 0] * b[..., 1] - a[..., 1] * b[..., 0]


def orthonormal_complement(u: np.ndarray) -> np.ndarray:
    """Columns form an orthonormal basis of the hyperplane orthogonal to ``u``."""
    from scipy.linalg import null_space
    return null_space(np.atleast_2d(u))


@functools.lru_cache(maxsize=8)
def gauss_legendre(order: int) -> t.Tuple[np.ndarray, np.ndarray]:
    nodes, weights = np.polynomial.legendre.leggauss(order)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def ball_volume(k: int) -> float:
    """Volume ``ω_k`` of the k-dimensional Euclidean unit ball."""
    from scipy.special import gamma
    return float(np.pi ** (k / 2) / gamma(k / 2 + 1))
