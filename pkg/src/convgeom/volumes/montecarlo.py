import typing as t
import logging
import numpy as np
from .model import VolumeMethodModel, VolumeEstimate, Region
from .width import region_extent
from ..config import MC_BATCH, MC_RTOL, Z95, parallel_map
from ..errors import BudgetExceededError, ConvGeomError

if t.TYPE_CHECKING:  # pragma: no cover
    from .registry import VolumeRegistry

logger = logging.getLogger(__name__)

#: batches of the first round when sampling to a tolerance
FIRST_ROUND = 4


def sampling_box(region: Region) -> t.Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """A box, in the coordinates of the region frame, containing the
    region: the slab of every placement, tightened by the exact extent of
    the region along each frame axis when that is computable."""
    frame = region.frame if region.frame is not None else np.eye(region.dim)
    lo = np.full(region.dim, -np.inf)
    hi = np.full(region.dim, np.inf)
    for i in range(region.dim):
        f = frame[:, i]
        for p in region.placements:
            lo[i] = max(lo[i], -float(p.support(-f)))
            hi[i] = min(hi[i], float(p.support(f)))
        if hi[i] <= lo[i]:
            return frame, lo, hi
        try:
            inf, sup = region_extent(region, f)
        except ConvGeomError as error:
            logger.debug("keeping slab bounds on axis %d: %s", i, error)
            continue
        pad = 1e-7 * (sup - inf) + 1e-12
        lo[i] = max(lo[i], inf - pad)
        hi[i] = min(hi[i], sup + pad)
    return frame, lo, hi


def agresti_coull(hits: int, total: int) -> float:
    """95% half-width of a binomial proportion with the Agresti–Coull
    adjustment, positive even for zero hits."""
    n = total + Z95 ** 2
    p = (hits + Z95 ** 2 / 2) / n
    return Z95 * float(np.sqrt(p * (1 - p) / n))


class MonteCarloVolume(VolumeMethodModel):
    """Uniform sampling in a box around the region. Batch ``k`` draws from
    ``default_rng([seed, k])``, so results are identical for any worker
    count."""
    name = "mc"
    description = "Monte Carlo hit counting with a 95% binomial interval"
    exact = False
    default_rtol = MC_RTOL

    def supports(self, region: Region) -> bool:
        return True

    def estimate(
            self,
            region: Region,
            tol: float,
            registry: "VolumeRegistry",
            seed: int = 0) -> VolumeEstimate:
        frame, lo, hi = sampling_box(region)
        if np.any(hi <= lo):
            return VolumeEstimate(0.0, 0.0, self.name, 0)
        box_volume = float(np.prod(hi - lo))

        def run_batch(job: t.Tuple[int, int]) -> int:
            index, size = job
            rng = np.random.default_rng([seed, index])
            z = lo + (hi - lo) * rng.random((size, region.dim))
            return int(np.count_nonzero(region.contains(z @ frame.T)))

        def estimate_of(hits: int, total: int) -> VolumeEstimate:
            value = hits / total * box_volume
            return VolumeEstimate(value, agresti_coull(hits, total) * box_volume, self.name, total)

        if registry.samples is not None:
            sizes = [MC_BATCH] * (registry.samples // MC_BATCH)
            if registry.samples % MC_BATCH:
                sizes.append(registry.samples % MC_BATCH)
            hits = sum(parallel_map(run_batch, list(enumerate(sizes))))
            return estimate_of(hits, registry.samples)

        hits, batches, rounds = 0, 0, FIRST_ROUND
        while True:
            jobs = [(batches + k, MC_BATCH) for k in range(rounds)]
            hits += sum(parallel_map(run_batch, jobs))
            batches += rounds
            rv = estimate_of(hits, batches * MC_BATCH)
            if rv.abs_error <= tol or (registry.rtol is not None and rv.abs_error <= registry.rtol * rv.value):
                return rv
            if 2 * batches * MC_BATCH > registry.max_samples:
                raise BudgetExceededError(f"half-width {rv.abs_error:.3g} above tolerance", rv)
            rounds = batches
            logger.debug("doubling samples to %d (half-width %.3g)", 2 * batches * MC_BATCH, rv.abs_error)
