import typing as t
import itertools
import logging
import numpy as np
from .models import OneSidedDerivatives, SetMeasures
from ..shapes import BaseBody
from ..errors import EmptyIntersectionError, InvalidParameterError
from ..util import normalize, orthonormal_complement

logger = logging.getLogger(__name__)

#: default number of cells per axis of the projection grid
DEFAULT_CELLS = {2: 4096, 3: 128}
#: subdivisions per axis when a cell straddles a set boundary
REFINE = 4
REFINE_LEVELS = 2
#: relative tolerance deciding that two chord ends coincide
TIE_TOL = 1e-12


def _gt(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a - b > TIE_TOL * (1 + np.maximum(np.abs(a), np.abs(b)))


def _ge(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return b - a <= TIE_TOL * (1 + np.maximum(np.abs(a), np.abs(b)))


class ChordGrid:
    """Classifies points of ``u⊥`` into the sets of the one-sided
    derivative formula, comparing the chords ``[φ⁻, φ⁺]`` of ``K1`` and of
    ``offset + K2`` along ``u``.
    """
    def __init__(self, first: BaseBody, second: BaseBody, u: np.ndarray, offset: np.ndarray):
        self.first = first
        self.second = second
        self.u = u
        self.offset = offset
        self.frame = orthonormal_complement(u)

    def box(self) -> t.Tuple[np.ndarray, np.ndarray]:
        """Bounding box of the overlap of the two projections, in frame
        coordinates."""
        axes = self.frame.T
        shift = axes @ self.offset
        lo = np.maximum(-self.first.support(-axes), shift - self.second.support(-axes))
        hi = np.minimum(self.first.support(axes), shift + self.second.support(axes))
        return lo, hi

    def classify(self, coords: np.ndarray) -> np.ndarray:
        """Membership of ``C⁺(1,2), C⁻(1,2), C⁺(2,1), C⁻(2,1)`` and of the
        overlap, as integer columns in that order."""
        y = coords @ self.frame.T
        lo1, hi1 = self.first.chord(y, self.u)
        lo2, hi2 = self.second.chord(y - self.offset, self.u)
        overlap = np.minimum(hi1, hi2) - np.maximum(lo1, lo2) > 0
        columns = [
            _gt(hi1, hi2) & _gt(lo1, lo2),
            _ge(hi1, hi2) & _ge(lo1, lo2),
            _gt(hi2, hi1) & _gt(lo2, lo1),
            _ge(hi2, hi1) & _ge(lo2, lo1),
        ]
        rv = np.column_stack([c & overlap for c in columns] + [overlap])
        return rv.astype(np.int64)

    def measure(self, centers: np.ndarray, size: np.ndarray, level: int = 0) -> np.ndarray:
        """Measures of the five sets over cells of the given size. Cells whose
        class differs from a neighbor are subdivided ``REFINE`` times per
        axis, ``REFINE_LEVELS`` deep."""
        classes = self.classify(centers)
        volume = float(np.prod(size))
        if level >= REFINE_LEVELS:
            return classes.sum(axis=0) * volume

        mixed = np.zeros(len(centers), dtype=bool)
        for axis, sign in itertools.product(range(len(size)), (-1.0, 1.0)):
            step = np.zeros(len(size))
            step[axis] = sign * size[axis]
            mixed |= np.any(self.classify(centers + step) != classes, axis=1)

        rv = classes[~mixed].sum(axis=0) * volume
        if np.any(mixed):
            fine = size / REFINE
            ticks = (np.arange(REFINE) + 0.5) / REFINE - 0.5
            offsets = np.array(list(itertools.product(ticks, repeat=len(size)))) * size
            children = (centers[mixed][:, None, :] + offsets[None, :, :]).reshape(-1, len(size))
            logger.debug("refining %d cells at level %d", int(mixed.sum()), level + 1)
            rv = rv + self.measure(children, fine, level + 1)
        return rv


def one_sided_derivative(
        first: BaseBody,
        second: BaseBody,
        u: t.Any,
        resolution: t.Optional[int] = None,
        offset: t.Optional[t.Any] = None) -> OneSidedDerivatives:
    """One-sided derivatives at ``r = 0`` of ``f(r) = |K1 ∩ (ru + o + K2)|``
    by the measures of the chord-comparison sets on a grid over the
    projection of the bodies to ``u⊥``.

    :param first: the body ``K1``
    :param second: the body ``K2``
    :param u: direction of translation
    :param resolution: cells per axis of the projection grid
    :param offset: translation ``o`` of ``K2``, the origin by default
    :raise: EmptyIntersectionError
    """
    if first.dim != second.dim:
        raise InvalidParameterError("Both bodies must have the same dimension")
    u = normalize(first.points(u))
    shift = np.zeros(first.dim) if offset is None else first.points(offset)
    if resolution is None:
        resolution = DEFAULT_CELLS.get(first.dim, 16)
    if resolution < 2:
        raise InvalidParameterError("Grid resolution must be at least 2")

    grid = ChordGrid(first, second, u, shift)
    lo, hi = grid.box()
    if np.any(hi <= lo):
        raise EmptyIntersectionError()
    size = (hi - lo) / resolution
    ticks = [lo[k] + (np.arange(resolution) + 0.5) * size[k] for k in range(len(lo))]
    centers = np.stack(np.meshgrid(*ticks, indexing="ij"), axis=-1).reshape(-1, len(lo))

    plus_12, minus_12, plus_21, minus_21, overlap = (float(v) for v in grid.measure(centers, size))
    if overlap == 0:
        raise EmptyIntersectionError()
    measures = SetMeasures(plus_12, minus_12, plus_21, minus_21)
    return OneSidedDerivatives(
        forward=plus_12 - minus_21,
        backward=minus_12 - plus_21,
        direction=u,
        set_measures=measures,
        overlap=overlap,
        cells=len(centers),
    )
