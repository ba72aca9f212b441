"""Closed-form reference values for harmonic measure and Green's functions.

These are the ground truth that the Monte Carlo estimators are checked
against. Everything here is an exact formula; no series truncation and no
quadrature.

Harmonic measure of the boundary tail E_r = {w on the boundary : |w| > r}
seen from the basepoint:

    half-plane   1 - (1/pi) * (atan((r-y)/x) + atan((r+y)/x)),  a = x + iy
    sector       pulled back through w -> w**(pi/opening), which maps the
                 sector conformally onto the right half-plane and sends the
                 tail beyond r to the tail beyond r**(pi/opening)
    disk(s)      0 once r clears every boundary modulus, 1 below all of them
"""

from __future__ import annotations

import math

import numpy as np

from .errors import UnsupportedShape
from .geometry import Disk, DiskExterior, Domain, HalfPlane, Sector

__all__ = ["exact_hm", "exact_green", "decay_exponent"]


def _halfplane_tail(a: complex, r: float) -> float:
    # integral of the Poisson kernel of {Re z > 0} over {it : |t| > r}
    x, y = a.real, a.imag
    return 1.0 - (math.atan((r - y) / x) + math.atan((r + y) / x)) / math.pi


def exact_hm(d: Domain, r: float) -> float:
    """Harmonic measure of the boundary tail beyond modulus r, from the basepoint."""
    if r < 0 or not math.isfinite(r):
        raise ValueError(f"tail radius must be finite and >= 0, got {r!r}")

    if isinstance(d, HalfPlane):
        return _halfplane_tail(d.basepoint, r)

    if isinstance(d, Sector):
        power = math.pi / d.opening
        a = complex(d.basepoint) ** power
        return _halfplane_tail(a, r**power)

    if isinstance(d, (Disk, DiskExterior)):
        lo = abs(abs(d.center) - d.radius)
        hi = abs(d.center) + d.radius
        if r >= hi:
            return 0.0  # the tail set is empty
        if r <= lo:
            return 1.0  # the tail is the entire boundary
        raise UnsupportedShape(
            "off-center disk with tail radius inside the boundary modulus band"
        )

    raise UnsupportedShape(f"no closed-form harmonic measure for {d!r}")


def exact_green(d: Domain, w: complex) -> float:
    """Green's function of the domain with pole at the basepoint.

    Extended by zero outside the domain, which also gives the correct value
    0 in the limit |w| -> infinity.
    """
    w = complex(w)

    if isinstance(d, HalfPlane):
        return _halfplane_green(d.basepoint, w)

    if isinstance(d, Sector):
        if not d.contains(w):
            return 0.0
        power = math.pi / d.opening
        return _halfplane_green(complex(d.basepoint) ** power, w**power)

    if isinstance(d, Disk):
        if not d.contains(w):
            return 0.0
        a = d.basepoint - d.center
        u = w - d.center
        if u == a:
            return math.inf
        val = math.log(abs(d.radius**2 - np.conj(a) * u) / (d.radius * abs(u - a)))
        return max(val, 0.0)

    raise UnsupportedShape(f"no closed-form Green's function for {d!r}")


def _halfplane_green(a: complex, w: complex) -> float:
    if w.real <= 0:
        return 0.0
    if w == a:
        return math.inf
    val = math.log(abs((w + np.conj(a)) / (w - a)))
    return max(val, 0.0)


def decay_exponent(d: Domain) -> float:
    """Exact power-law decay rate of exact_hm in r (inf for bounded tails)."""
    if isinstance(d, HalfPlane):
        return 1.0
    if isinstance(d, Sector):
        return math.pi / d.opening
    if isinstance(d, (Disk, DiskExterior)):
        return math.inf
    raise UnsupportedShape(f"no closed-form decay exponent for {d!r}")
