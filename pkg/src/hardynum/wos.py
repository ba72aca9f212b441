"""Walk-on-spheres sampling of harmonic measure.

A walk starts at the basepoint and repeatedly jumps to a uniform point on
the largest origin-centered-at-the-walker circle that stays inside the
domain (radius = boundary distance). It is absorbed once the boundary
distance drops below the absorption shell epsilon; the absorbed position is
then projected to the nearest boundary point and scored against the tail
query. There is no outer truncation sphere: walks far from the boundary
keep going and either come back or exhaust the step budget, in which case
they are reported as unterminated and excluded from the frequency estimate.

Randomness comes from counter-based per-sample streams keyed by
(seed, sample index), so estimates are bit-identical for a fixed seed and
sample count no matter how the samples are batched or parallelized.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BasepointOutsideDomain, DegenerateDomain
from .geometry import Domain, TailQuery
from .hardy_estimator import DecayProfile, ProfileEntry
from .rng import stream_keys, uniforms

__all__ = ["WosConfig", "HmEstimate", "estimate_hm", "estimate_profile"]

_TWO_PI = 2.0 * math.pi

# fraction of unterminated walks above which an estimate is flagged
UNRELIABLE_RATIO = 0.01


@dataclass(frozen=True)
class WosConfig:
    n_samples: int
    seed: int = 0
    epsilon: float | None = None  # default 1e-6 * max(1, |basepoint|)
    max_steps: int = 1_000_000
    chunk_size: int = 65536  # batching only; results do not depend on it

    def __post_init__(self) -> None:
        if self.n_samples < 1:
            raise ValueError("n_samples must be >= 1")
        if self.epsilon is not None and not (self.epsilon > 0):
            raise ValueError("epsilon must be positive")
        if self.max_steps < 1 or self.chunk_size < 1:
            raise ValueError("max_steps and chunk_size must be >= 1")

    def resolve_epsilon(self, d: Domain) -> float:
        if self.epsilon is not None:
            return self.epsilon
        return 1e-6 * max(1.0, abs(d.basepoint))


@dataclass(frozen=True)
class HmEstimate:
    value: float
    stderr: float
    n_samples: int
    n_unterminated: int
    r: float

    @property
    def unreliable(self) -> bool:
        return self.n_unterminated / self.n_samples > UNRELIABLE_RATIO


def _exit_moduli(d: Domain, cfg: WosConfig) -> np.ndarray:
    """Modulus of the boundary projection of each absorbed walk (nan if not absorbed)."""
    if not d.contains(d.basepoint):
        raise BasepointOutsideDomain(f"basepoint {d.basepoint!r} not inside domain")
    start_dist = float(d.distances(np.asarray([d.basepoint], dtype=complex))[0])
    if not (math.isfinite(start_dist) and start_dist > 0.0):
        raise DegenerateDomain(
            f"boundary distance at the basepoint must be positive, got {start_dist!r}"
        )
    eps = cfg.resolve_epsilon(d)

    out = np.full(cfg.n_samples, np.nan)
    for lo in range(0, cfg.n_samples, cfg.chunk_size):
        hi = min(lo + cfg.chunk_size, cfg.n_samples)
        keys = stream_keys(cfg.seed, np.arange(lo, hi, dtype=np.uint64))
        out[lo:hi] = _walk_chunk(d, eps, cfg.max_steps, keys)
    return out


def _walk_chunk(d: Domain, eps: float, max_steps: int, keys: np.ndarray) -> np.ndarray:
    m = len(keys)
    z = np.full(m, complex(d.basepoint), dtype=complex)
    out = np.full(m, np.nan)
    pos = np.arange(m)

    # Walks in unbounded domains can wander past float range; the position
    # saturates to inf/nan, its distance is never below eps again, and the
    # walk is counted as unterminated. Suppress the harmless overflow signal.
    with np.errstate(over="ignore", invalid="ignore"):
        for step in range(max_steps):
            dist = d.distances(z)
            hit = dist < eps
            if hit.any():
                out[pos[hit]] = np.abs(d.projections(z[hit]))
                keep = ~hit
                z = z[keep]
                pos = pos[keep]
                keys = keys[keep]
                dist = dist[keep]
                if z.size == 0:
                    break
            theta = _TWO_PI * uniforms(keys, step)
            z = z + dist * np.exp(1j * theta)
    return out


def _estimate_from_moduli(moduli: np.ndarray, r: float, n: int) -> HmEstimate:
    terminated = moduli[~np.isnan(moduli)]
    n_unterminated = n - terminated.size
    if terminated.size == 0:
        raise DegenerateDomain("no walk terminated within the step budget")
    hits = int(np.count_nonzero(terminated > r))
    value = hits / terminated.size
    stderr = math.sqrt(value * (1.0 - value) / terminated.size)
    return HmEstimate(
        value=value,
        stderr=stderr,
        n_samples=n,
        n_unterminated=n_unterminated,
        r=float(r),
    )


def estimate_hm(d: Domain, q: TailQuery, cfg: WosConfig) -> HmEstimate:
    """Monte Carlo estimate of the harmonic measure of the tail beyond q.r."""
    moduli = _exit_moduli(d, cfg)
    return _estimate_from_moduli(moduli, q.r, cfg.n_samples)


def estimate_profile(d: Domain, grid: list[float], cfg: WosConfig) -> DecayProfile:
    """Decay profile over a radius grid, one shared walk set for all radii.

    Each absorbed walk scores every grid radius below its exit modulus, so
    the estimated omega is exactly non-increasing within a run.
    """
    radii = [float(r) for r in grid]
    if any(b <= a for a, b in zip(radii, radii[1:])) or not radii:
        raise ValueError("grid must be a non-empty strictly increasing radius list")
    if radii[0] < 0:
        raise ValueError("grid radii must be >= 0")

    moduli = _exit_moduli(d, cfg)
    entries = []
    for r in radii:
        est = _estimate_from_moduli(moduli, r, cfg.n_samples)
        entries.append(ProfileEntry(r=r, omega=est.value, stderr=est.stderr))
    return DecayProfile(
        entries=tuple(entries),
        source="monte_carlo",
        domain_regular=d.regular,
        domain_bounded=d.bounded,
        boundary_sup=d.boundary_modulus_sup(),
    )
