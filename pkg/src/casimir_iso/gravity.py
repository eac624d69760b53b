"""Newtonian slab-slab gravity and the Casimir-gravity crossover separation.

In the near field (separation much smaller than the lateral extent) the
gravitational pressure between two uniform slabs is 2*pi*G*rho1*rho2*t1*t2,
independent of separation, so the crossover against the d^-4 Casimir
pressure has a unique root found here by bisection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .asymptotics import ideal_pressure
from .constants import CONSTANTS
from .errors import BracketingError

__all__ = ["SlabPair", "newtonian_slab_pressure", "crossover_separation"]


@dataclass(frozen=True)
class SlabPair:
    """Two parallel uniform slabs facing each other across a gap."""

    density_1: float       # kg/m^3
    density_2: float
    thickness_1: float     # m
    thickness_2: float
    lateral_extent: float  # m; near-field gravity assumes separation << this

    def __post_init__(self):
        for name in ("density_1", "density_2", "thickness_1", "thickness_2", "lateral_extent"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be strictly positive")


def newtonian_slab_pressure(slabs: SlabPair) -> float:
    """Near-field (infinite-slab) gravitational pressure, separation independent."""
    return (2.0 * math.pi * CONSTANTS.G
            * slabs.density_1 * slabs.density_2
            * slabs.thickness_1 * slabs.thickness_2)


def _casimir_pressure_magnitude(d: float, omega_p: float | None) -> float:
    p = abs(ideal_pressure(d))
    if omega_p is not None:
        p *= max(0.0, 1.0 - (16.0 / 3.0) * CONSTANTS.c / (omega_p * d))
    return p


def crossover_separation(slabs: SlabPair, omega_p: float | None = None) -> float:
    """Separation where the Casimir pressure equals the gravitational one.

    Uses the ideal-conductor pressure by default (the paper-style
    order-of-magnitude comparison); pass omega_p to use the plasma-corrected
    pressure instead. Bisection is bracketed in [1 nm, 1 m]; the d^-4 decay
    of the Casimir side makes the root unique.
    """
    p_grav = newtonian_slab_pressure(slabs)
    lo, hi = 1e-9, 1.0
    if omega_p is not None:
        # stay on the monotone branch of the corrected pressure, safely past
        # the formal root of the first-order factor at d = (16/3) c/omega_p
        lo = max(lo, 4.0 * (16.0 / 3.0) * CONSTANTS.c / omega_p)

    def excess(d):
        return _casimir_pressure_magnitude(d, omega_p) - p_grav

    if not (excess(lo) > 0.0 > excess(hi)):
        raise BracketingError(
            f"no Casimir-gravity crossover bracketed in [{lo:.3e}, {hi:.3e}] m"
        )
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if excess(mid) > 0.0:
            lo = mid
        else:
            hi = mid
        if (hi - lo) <= 1e-12 * mid:
            break
    return 0.5 * (lo + hi)
