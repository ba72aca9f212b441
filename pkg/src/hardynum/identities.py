"""Numerical verification of the harmonic-measure and Green-function
identities that connect tail decay to circle averages.

Everything here runs against closed-form oracles, never Monte Carlo
profiles: these are exact statements, and quadrature-level agreement is the
point. Tail extrapolation beyond a truncation radius uses the domain's known
decay exponent, not a fitted one.

The verified statements, with a the basepoint and E_t the part of the
boundary outside radius t:

  circle average     (1/2pi) int g(a, r e^{i theta}) d theta
                        = int_r^inf omega(a, E_t) dt/t            (r > |a|)
  moment exchange    int_|a|^R r^(p-1) (int g d theta) dr
                        = (2pi/p) int_|a|^R omega(a, E_t) t^(p-1)
                                  (1 - |a|^p / t^p) dt            (p < q)
  power-mean bound   ((1/2pi) int g d theta)^(alpha+2)
                        <= (1/2pi) int g^(alpha+2) d theta
  doubling bound     int g(a, r e^{i theta}) d theta
                        >= 2pi log(2) omega(a, E_{2r})
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.integrate import quad

from .errors import DivergentCase
from .geometry import Disk, DiskExterior, Domain, HalfPlane, Sector
from .oracles import decay_exponent, exact_green, exact_hm

__all__ = [
    "IdentityReport",
    "baernstein_identity",
    "fubini_identity",
    "jensen_check",
    "tail_lower_bound",
    "run_identity_suite",
    "SWEEP_RADII",
    "SWEEP_ALPHAS",
]

SWEEP_RADII = tuple(float(2**k) for k in range(1, 11))
SWEEP_ALPHAS = (-0.5, 0.0, 1.0, 3.0)

BAERNSTEIN_TOL = 1e-3
FUBINI_TOL = 1e-2
INEQUALITY_SLACK = 1e-9

_QUAD_REL = 1e-9
_TAIL_FACTOR = 1e4  # truncation radius multiple for dt/t integrals
_REL_FLOOR = 1e-300


@dataclass(frozen=True)
class IdentityReport:
    name: str
    lhs: float
    rhs: float
    relative_error: float
    tolerance: float
    passed: bool


def _rel_error(lhs: float, rhs: float) -> float:
    scale = max(abs(lhs), abs(rhs))
    if scale < _REL_FLOOR:
        return 0.0
    return abs(lhs - rhs) / scale


def _omega(d: Domain, t: float) -> float:
    return exact_hm(d, t)


def _omega_breaks(d: Domain) -> tuple[float, ...]:
    # radii where the oracle harmonic measure is non-smooth
    if isinstance(d, (Disk, DiskExterior)):
        dist = abs(d.center)
        return (abs(dist - d.radius), dist + d.radius)
    return ()


def _circle_breaks(d: Domain, r: float) -> list[float]:
    """Angles in (-pi, pi) where the circle |z| = r crosses the boundary."""
    if isinstance(d, HalfPlane):
        return [-0.5 * math.pi, 0.5 * math.pi]
    if isinstance(d, Sector):
        half = 0.5 * d.opening
        return [t for t in (-half, half) if -math.pi < t < math.pi]
    if isinstance(d, (Disk, DiskExterior)):
        dist = abs(d.center)
        if dist == 0.0:
            return []
        cos_phi = (r * r + dist * dist - d.radius**2) / (2.0 * r * dist)
        if abs(cos_phi) >= 1.0:
            return []
        phi = math.acos(cos_phi)
        base = math.atan2(d.center.imag, d.center.real)
        out = []
        for t in (base - phi, base + phi):
            t = math.atan2(math.sin(t), math.cos(t))  # wrap into (-pi, pi]
            if -math.pi < t < math.pi:
                out.append(t)
        return sorted(out)
    return []


def _green_circle_integral(d: Domain, r: float, power: float = 1.0) -> float:
    """int_0^{2pi} g(a, r e^{i theta})^power d theta (unnormalized)."""
    a = d.basepoint
    if not (r > abs(a)):
        raise ValueError("circle radius must exceed |basepoint|")

    def integrand(theta: float) -> float:
        g = exact_green(d, r * math.cos(theta) + 1j * r * math.sin(theta))
        if g <= 0.0:
            return 0.0
        return g**power

    breaks = _circle_breaks(d, r)
    return quad(integrand, -math.pi, math.pi, epsrel=_QUAD_REL, epsabs=1e-14,
                points=breaks or None, limit=400)[0]


def _tail_log_integral(d: Domain, r: float) -> float:
    """int_r^inf omega(a, E_t) dt/t with a power-law tail beyond r * 1e4."""
    q = decay_exponent(d)
    top = r * _TAIL_FACTOR
    u_max = math.log(top / r)

    def integrand(u: float) -> float:
        return _omega(d, r * math.exp(u))

    pts = sorted(
        {math.log(b / r) for b in _omega_breaks(d) if r < b < top}
    )
    val = quad(integrand, 0.0, u_max, epsrel=_QUAD_REL, epsabs=1e-14,
               points=pts or None, limit=400)[0]
    tail = 0.0 if math.isinf(q) else _omega(d, top) / q
    return val + tail


def baernstein_identity(d: Domain, r: float) -> IdentityReport:
    """Circle average of the Green's function vs the tail measure integral."""
    lhs = _tail_log_integral(d, r)
    rhs = _green_circle_integral(d, r) / (2.0 * math.pi)
    rel = _rel_error(lhs, rhs)
    return IdentityReport(
        name="circle_average_vs_tail",
        lhs=lhs,
        rhs=rhs,
        relative_error=rel,
        tolerance=BAERNSTEIN_TOL,
        passed=rel <= BAERNSTEIN_TOL,
    )


def fubini_identity(
    d: Domain,
    p: float,
    r_max: float = 1e4,
    omega_fn=None,
    green_avg_fn=None,
) -> IdentityReport:
    """Moment exchange between the Green circle average and the tail measure.

    omega_fn and green_avg_fn exist so degenerate synthetic inputs (an
    identically zero measure with its zero Green average) can be pushed
    through the same quadrature path; they default to the oracle.
    """
    if not (p > 0.0):
        raise ValueError("exponent p must be positive")
    a_mod = abs(d.basepoint)
    if not (r_max > a_mod):
        raise ValueError("truncation radius must exceed |basepoint|")
    q = decay_exponent(d)
    if p >= q:
        raise DivergentCase(
            f"moment p={p} meets the decay exponent {q}; both sides are infinite"
        )
    omega = omega_fn if omega_fn is not None else (lambda t: _omega(d, t))
    green_avg = (
        green_avg_fn
        if green_avg_fn is not None
        else (lambda r: _green_circle_integral(d, r))
    )

    lo = a_mod if a_mod > 0.0 else min(1.0, r_max / 2.0)

    def lhs_integrand(r: float) -> float:
        return r ** (p - 1.0) * green_avg(r)

    lhs = quad(lhs_integrand, lo, r_max, epsrel=1e-8, epsabs=1e-12, limit=200)[0]
    if a_mod == 0.0:
        lhs += quad(lhs_integrand, 0.0, lo, epsrel=1e-8, epsabs=1e-12, limit=200)[0]
    omega_top = omega(r_max)
    if math.isfinite(q):
        lhs += 2.0 * math.pi * omega_top * r_max**p / (q * (q - p))

    def rhs_integrand(t: float) -> float:
        w = omega(t)
        if w == 0.0:
            return 0.0
        return w * t ** (p - 1.0) * (1.0 - (a_mod / t) ** p if a_mod > 0.0 else 1.0)

    pts = sorted(b for b in _omega_breaks(d) if a_mod < b < r_max)
    rhs = quad(rhs_integrand, a_mod, r_max, epsrel=1e-8, epsabs=1e-12,
               points=pts or None, limit=200)[0]
    if math.isfinite(q):
        rhs += omega_top * (r_max**p / (q - p) - (a_mod**p if a_mod > 0.0 else 0.0) / q)
    rhs *= 2.0 * math.pi / p

    rel = _rel_error(lhs, rhs)
    return IdentityReport(
        name="moment_exchange",
        lhs=lhs,
        rhs=rhs,
        relative_error=rel,
        tolerance=FUBINI_TOL,
        passed=rel <= FUBINI_TOL,
    )


def jensen_check(d: Domain, r: float, alpha: float, green_fn=None) -> IdentityReport:
    """Power-mean inequality for the Green circle average, exponent alpha + 2.

    relative_error stores the signed gap (rhs - lhs)/rhs; passed requires
    lhs <= rhs up to a 1e-9 slack. green_fn(theta) overrides the oracle so
    the constant-function equality case is testable.
    """
    if not (alpha > -1.0):
        raise ValueError("weight alpha must be > -1")
    power = alpha + 2.0
    if green_fn is None:
        mean = _green_circle_integral(d, r) / (2.0 * math.pi)
        power_mean = _green_circle_integral(d, r, power) / (2.0 * math.pi)
    else:
        mean = quad(green_fn, -math.pi, math.pi, epsrel=_QUAD_REL, limit=400)[0] / (2.0 * math.pi)
        power_mean = quad(lambda t: green_fn(t) ** power, -math.pi, math.pi,
                          epsrel=_QUAD_REL, limit=400)[0] / (2.0 * math.pi)
    lhs = mean**power
    rhs = power_mean
    gap = 0.0 if rhs < _REL_FLOOR else (rhs - lhs) / rhs
    return IdentityReport(
        name="green_power_mean",
        lhs=lhs,
        rhs=rhs,
        relative_error=gap,
        tolerance=INEQUALITY_SLACK,
        passed=lhs <= rhs * (1.0 + INEQUALITY_SLACK),
    )


def tail_lower_bound(d: Domain, r: float) -> IdentityReport:
    """Doubling bound: the Green circle integral at r dominates
    2pi log(2) omega(a, E_{2r}); tight when omega is flat on [r, 2r]."""
    lhs = _green_circle_integral(d, r)
    rhs = 2.0 * math.pi * math.log(2.0) * _omega(d, 2.0 * r)
    gap = 0.0 if lhs < _REL_FLOOR else (lhs - rhs) / lhs
    return IdentityReport(
        name="tail_doubling_bound",
        lhs=lhs,
        rhs=rhs,
        relative_error=gap,
        tolerance=INEQUALITY_SLACK,
        passed=rhs <= lhs * (1.0 + INEQUALITY_SLACK),
    )


def run_identity_suite(d: Domain | None = None) -> list[IdentityReport]:
    """Full sweep on one oracle domain: circle-average identity and both
    inequalities at r in {2, 4, ..., 1024} (alpha sweep for the power mean),
    plus the moment exchange at p = 0.5."""
    if d is None:
        d = HalfPlane(basepoint=1.0 + 0.0j)
    reports = []
    for r in SWEEP_RADII:
        reports.append(baernstein_identity(d, r))
    reports.append(fubini_identity(d, p=0.5))
    for r in SWEEP_RADII:
        for alpha in SWEEP_ALPHAS:
            reports.append(jensen_check(d, r, alpha))
    for r in SWEEP_RADII:
        reports.append(tail_lower_bound(d, r))
    return reports
