import typing as t
import functools
import numpy as np
from scipy.spatial import ConvexHull
from ..errors import InvalidParameterError

__all__ = ["DirectionGrid", "planar_units", "icosphere"]


@functools.lru_cache(maxsize=16)
def planar_units(m: int) -> np.ndarray:
    """``m`` equally spaced unit vectors, counterclockwise from ``e1``.
    The second half is the exact negation of the first half."""
    if m < 4 or m % 2:
        raise InvalidParameterError("Planar grid resolution must be an even number >= 4")
    theta = 2 * np.pi * np.arange(m // 2) / m
    half = np.column_stack([np.cos(theta), np.sin(theta)])
    units = np.vstack([half, -half])
    units.setflags(write=False)
    return units


def _icosahedron() -> t.Tuple[np.ndarray, np.ndarray]:
    phi = (1 + 5 ** 0.5) / 2
    points = []
    for a in (1.0, -1.0):
        for b in (phi, -phi):
            points.append((0.0, a, b))
            points.append((a, b, 0.0))
            points.append((b, 0.0, a))
    vertices = np.array(points) / np.linalg.norm(points[0])
    faces = ConvexHull(vertices).simplices
    return vertices, _orient_outward(vertices, faces)


def _orient_outward(vertices: np.ndarray, faces: np.ndarray) -> np.ndarray:
    a, b, c = vertices[faces[:, 0]], vertices[faces[:, 1]], vertices[faces[:, 2]]
    normals = np.cross(b - a, c - a)
    flip = np.einsum("ij,ij->i", normals, a + b + c) < 0
    faces = faces.copy()
    faces[flip] = faces[flip][:, [0, 2, 1]]
    return faces


@functools.lru_cache(maxsize=8)
def icosphere(level: int) -> t.Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Subdivided icosahedron: ``(units, faces, antipodes)``. Faces are
    oriented outward; ``antipodes[i]`` is the index of ``-units[i]``."""
    if level < 0:
        raise InvalidParameterError("Icosphere level must be >= 0")

    vertices, faces = _icosahedron()
    points = [v for v in vertices]
    for _ in range(level):
        midpoints: t.Dict[t.Tuple[int, int], int] = {}

        def midpoint(i: int, j: int) -> int:
            key = (i, j) if i < j else (j, i)
            if key not in midpoints:
                v = points[i] + points[j]
                points.append(v / np.linalg.norm(v))
                midpoints[key] = len(points) - 1
            return midpoints[key]

        refined = []
        for a, b, c in faces:
            ab, bc, ca = midpoint(a, b), midpoint(b, c), midpoint(c, a)
            refined.extend([(a, ab, ca), (b, bc, ab), (c, ca, bc), (ab, bc, ca)])
        faces = np.array(refined)

    units = np.array(points)
    lookup = {tuple(np.round(v, 12)): i for i, v in enumerate(units)}
    antipodes = np.array([lookup[tuple(np.round(-v, 12))] for v in units])
    for arr in (units, faces, antipodes):
        arr.setflags(write=False)
    return units, faces, antipodes


class DirectionGrid:
    """A symmetric set of unit directions. In the plane it holds
    ``resolution`` equally spaced angles, in space the vertices of the
    icosphere subdivided ``resolution`` times.

    :param dim: 2 or 3
    :param resolution: number of angles (2D) or subdivision level (3D)
    """
    def __init__(self, dim: int, resolution: int):
        self.dim = dim
        self.resolution = resolution
        self.faces: t.Optional[np.ndarray] = None
        if dim == 2:
            self.units = planar_units(resolution)
            m = len(self.units)
            self.antipodes = (np.arange(m) + m // 2) % m
        elif dim == 3:
            self.units, self.faces, self.antipodes = icosphere(resolution)
        else:
            raise InvalidParameterError(f"Direction grids exist in dimension 2 and 3, not {dim}")

    def __len__(self) -> int:
        return len(self.units)

    def representatives(self) -> np.ndarray:
        """Indices holding one direction of each antipodal pair."""
        index = np.arange(len(self.units))
        return index[index < self.antipodes]

    def as_dict(self) -> t.Dict[str, int]:
        return {"dim": self.dim, "resolution": self.resolution, "size": len(self)}
