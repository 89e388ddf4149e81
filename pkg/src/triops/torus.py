"""Group law on the parameter line of normal operators.

The t-sphere minus the two sixth roots {rho, 1/rho} carries a commutative
group structure pulled back from multiplication through the Mobius chart
psi(t) = (1 + t*w)/(1 + t*w^2), with identity t = 0.  The rational forms of
addition and N-fold multiplication are kept alongside as cross-checks, and
the group embeds in the affine conic u^2 + uv + v^2 = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import ConicChartFailure, ExcludedPoint, InvalidParameters
from .geometry import (
    EPS,
    INFINITY,
    OMEGA,
    OMEGA2,
    RHO,
    RHO_INV,
    SphereValue,
    sphere,
    sphere_ratio,
    t_of_xi,
)


@dataclass(frozen=True)
class TorusElement:
    """Point of the t-sphere away from the excluded sixth roots."""

    value: SphereValue

    @property
    def is_infinite(self) -> bool:
        return self.value.is_infinite

    def finite(self) -> complex:
        return self.value.finite()


def torus_element(t) -> TorusElement:
    """Coerce and validate: t may be any sphere value except rho and 1/rho."""
    if isinstance(t, TorusElement):
        return t
    sv = sphere(t)
    if not sv.is_infinite:
        z = sv.finite()
        if abs(z - RHO) <= EPS or abs(z - RHO_INV) <= EPS:
            raise ExcludedPoint("t coincides with an excluded sixth root of unity")
    return TorusElement(sv)


ZERO = TorusElement(SphereValue(0j))


def psi(t: TorusElement) -> complex:
    """Chart value (1 + t*w)/(1 + t*w^2); never 0 or infinite on the domain."""
    if t.is_infinite:
        return OMEGA2
    z = t.finite()
    return (1.0 + z * OMEGA) / (1.0 + z * OMEGA2)


def psi_inv(xi) -> TorusElement:
    """Inverse chart.  xi = 0 and xi = inf are the excluded points."""
    sv = sphere(xi)
    if sv.is_infinite:
        raise ExcludedPoint("xi = inf pulls back to the excluded 1/rho")
    z = sv.finite()
    if abs(z) <= EPS:
        raise ExcludedPoint("xi = 0 pulls back to the excluded rho")
    return TorusElement(t_of_xi(sv))


def add(t1: TorusElement, t2: TorusElement) -> TorusElement:
    """Group addition, computed multiplicatively through the chart."""
    return psi_inv(psi(t1) * psi(t2))


def neg(t: TorusElement) -> TorusElement:
    """Group inverse -t = t/(t - 1); the inverse of 1 is infinity."""
    if t.is_infinite:
        return TorusElement(SphereValue(1.0 + 0j))
    z = t.finite()
    return TorusElement(sphere_ratio(-z, 1.0 - z, scale=1.0 + abs(z)))


def nmul(n: int, t: TorusElement) -> TorusElement:
    """N-fold addition through the chart: psi(t)**n pulled back."""
    return psi_inv(psi(t) ** n)


def add_rational(t1: TorusElement, t2: TorusElement) -> TorusElement:
    """Rational form (t + t' - t t')/(1 - t t'); cross-check for :func:`add`."""
    if t1.is_infinite and t2.is_infinite:
        return TorusElement(SphereValue(1.0 + 0j))
    if t1.is_infinite or t2.is_infinite:
        z = (t2 if t1.is_infinite else t1).finite()
        return TorusElement(sphere_ratio(z - 1.0, z, scale=1.0 + abs(z)))
    a, b = t1.finite(), t2.finite()
    return TorusElement(
        sphere_ratio(a + b - a * b, 1.0 - a * b, scale=(1.0 + abs(a)) * (1.0 + abs(b)))
    )


def nmul_rational(n: int, t: TorusElement) -> TorusElement:
    """Closed form ((1+wt)^N - (1+w^2 t)^N) / (rho(1+wt)^N - rho^-1 (1+w^2 t)^N)."""
    if t.is_infinite:
        u, v = OMEGA**n, OMEGA2**n
    else:
        z = t.finite()
        u, v = (1.0 + OMEGA * z) ** n, (1.0 + OMEGA2 * z) ** n
    scale = abs(u) + abs(v)
    return TorusElement(sphere_ratio(u - v, RHO * u - RHO_INV * v, scale=scale))


def division_points(n: int) -> list[TorusElement]:
    """The n distinct solutions of nmul(n, t) = 0.

    t_k = sin(pi k / n) / sin(pi (k/n + 1/3)) for k = 0..n-1 (k = n repeats
    k = 0).  When 3 divides n the point k = 2n/3 is exactly infinity.
    """
    if n < 1:
        raise InvalidParameters("n must be a positive integer")
    points = []
    for k in range(n):
        if 3 * k == 2 * n:
            points.append(TorusElement(INFINITY))
            continue
        th = math.pi * k / n
        points.append(TorusElement(SphereValue(complex(math.sin(th) / math.sin(th + math.pi / 3.0), 0.0))))
    return points


class ConicPoint(NamedTuple):
    u: complex
    v: complex


_CONIC_TOL = 1e-10


def conic_point(u, v) -> ConicPoint:
    """Validated point of u^2 + uv + v^2 = 1."""
    u, v = complex(u), complex(v)
    scale = max(1.0, abs(u), abs(v)) ** 2
    if abs(u * u + u * v + v * v - 1.0) > _CONIC_TOL * scale:
        raise InvalidParameters("point does not satisfy u^2 + uv + v^2 = 1")
    return ConicPoint(u, v)


def to_conic(t: TorusElement) -> ConicPoint:
    """u = (1 - t^2)/(t^2 - t + 1), v = t(t - 2)/(t^2 - t + 1); t = inf -> (-1, 1)."""
    if t.is_infinite:
        return ConicPoint(-1.0 + 0j, 1.0 + 0j)
    z = t.finite()
    d = z * z - z + 1.0
    return ConicPoint((1.0 - z * z) / d, z * (z - 2.0) / d)


def from_conic(c) -> TorusElement:
    """Inverse chart t = -v/(1 + u), failing on the v = 0 section.

    v = 0 holds exactly at the images of t = 0 and t = 2; both raise
    ConicChartFailure.  The point (-1, 1) maps back to t = inf.
    """
    pt = conic_point(c[0], c[1])
    scale = max(1.0, abs(pt.u), abs(pt.v))
    if abs(pt.v) <= EPS * scale:
        raise ConicChartFailure("v = 0 is outside the inverse chart")
    return torus_element(sphere_ratio(-pt.v, 1.0 + pt.u, scale=scale))
