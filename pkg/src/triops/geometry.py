"""Labelled triangles in the complex plane.

A triangle is an ordered triple of complex vertices.  This module supplies
orientation and area predicates, the three-point finite Fourier transform,
the similarity modulus that maps shape classes into the Riemann sphere, and
the Brocard angle.  Everything downstream (operators, torus group, orbits)
builds on these primitives.

All fuzzy predicates use the single relative tolerance ``EPS``, measured
against a scale appropriate to the data (for triangles, the largest pairwise
vertex distance).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import (
    CoincidentVertices,
    DegenerateTriangle,
    IndeterminateValue,
    ParseError,
)

EPS = 1e-9

OMEGA = complex(-0.5, math.sqrt(3.0) / 2.0)  # primitive cube root of unity
OMEGA2 = OMEGA.conjugate()
RHO = complex(0.5, math.sqrt(3.0) / 2.0)  # primitive sixth root of unity
RHO_INV = RHO.conjugate()

_AREA_COEFF = 3.0 * math.sqrt(3.0) / 4.0


@dataclass(frozen=True)
class SphereValue:
    """A point of the Riemann sphere: a finite complex number or infinity.

    ``value`` is ``None`` exactly when the point is infinite.  Infinity
    compares equal only to infinity.
    """

    value: complex | None = None

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def finite(self) -> complex:
        if self.value is None:
            raise ValueError("sphere value is infinite")
        return self.value

    def __abs__(self) -> float:
        return math.inf if self.value is None else abs(self.value)

    def __repr__(self) -> str:
        if self.value is None:
            return "SphereValue(inf)"
        return f"SphereValue({self.value!r})"


INFINITY = SphereValue(None)


def sphere(z) -> SphereValue:
    """Coerce a complex-like value (or SphereValue) to a SphereValue."""
    if isinstance(z, SphereValue):
        return z
    return SphereValue(complex(z))


def sphere_ratio(num: complex, den: complex, scale: float | None = None) -> SphereValue:
    """num/den as a sphere value.

    A denominator vanishing within ``EPS * scale`` gives infinity when the
    numerator survives the same band, and raises IndeterminateValue when it
    does not (0/0 carries no value).  The default scale is the magnitude of
    the pair itself; callers with externally meaningful scales should pass
    them explicitly so cancellation is detected against the right yardstick.
    """
    num, den = complex(num), complex(den)
    if scale is None:
        scale = abs(num) + abs(den)
    tol = EPS * scale
    if abs(den) <= tol:
        if abs(num) <= tol:
            raise IndeterminateValue(f"0/0 ratio at scale {scale:g}")
        return INFINITY
    return SphereValue(num / den)


def xi_of_t(t: SphereValue) -> SphereValue:
    """Mobius chart xi = (1 + t*omega)/(1 + t*omega^2); t = inf maps to omega^2."""
    t = sphere(t)
    if t.is_infinite:
        return SphereValue(OMEGA2)
    z = t.finite()
    return sphere_ratio(1 + z * OMEGA, 1 + z * OMEGA2, scale=1.0 + abs(z))


def t_of_xi(xi: SphereValue) -> SphereValue:
    """Inverse of :func:`xi_of_t`.  xi = 0, inf land on the sixth roots rho, 1/rho."""
    xi = sphere(xi)
    if xi.is_infinite:
        return SphereValue(RHO_INV)
    z = xi.finite()
    return sphere_ratio(1 - z, z * OMEGA2 - OMEGA, scale=1.0 + abs(z))


class Orientation(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class TriangleTriple:
    """Ordered labelled triangle (a, b, c).

    Build through :func:`make_triple` to enforce pairwise-distinct vertices.
    Operator images are returned as raw triples and may legitimately carry
    coincident or collinear vertices; query ``is_degenerate`` to detect it.
    """

    a: complex
    b: complex
    c: complex

    @property
    def vertices(self) -> tuple[complex, complex, complex]:
        return (self.a, self.b, self.c)

    @property
    def scale(self) -> float:
        """Largest pairwise vertex distance; the yardstick for tolerances."""
        return max(abs(self.a - self.b), abs(self.b - self.c), abs(self.c - self.a))

    @property
    def is_degenerate(self) -> bool:
        return orientation(self) is Orientation.DEGENERATE

    def conjugate(self) -> "TriangleTriple":
        return TriangleTriple(self.a.conjugate(), self.b.conjugate(), self.c.conjugate())


def make_triple(a, b, c) -> TriangleTriple:
    """Validated constructor: finite, pairwise-distinct vertices."""
    a, b, c = complex(a), complex(b), complex(c)
    for z in (a, b, c):
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise ValueError("triangle vertices must be finite")
    d_ab, d_bc, d_ca = abs(a - b), abs(b - c), abs(c - a)
    scale = max(d_ab, d_bc, d_ca)
    if scale == 0.0 or min(d_ab, d_bc, d_ca) <= EPS * scale:
        raise CoincidentVertices("two vertices coincide within tolerance")
    return TriangleTriple(a, b, c)


def orientation(t: TriangleTriple) -> Orientation:
    """Sign of Im((a-b)/(c-b)): positive half-plane means positive orientation.

    Computed in cross-product form so coincident vertices degrade to
    DEGENERATE instead of dividing by zero.
    """
    w = (t.a - t.b) * (t.c - t.b).conjugate()
    band = EPS * abs(t.c - t.b) ** 2
    if w.imag > band:
        return Orientation.POSITIVE
    if w.imag < -band:
        return Orientation.NEGATIVE
    return Orientation.DEGENERATE


@dataclass(frozen=True)
class FourierVector:
    """Discrete Fourier coefficients (psi0, psi1, psi2) of a triple."""

    psi0: complex
    psi1: complex
    psi2: complex


def fourier(t: TriangleTriple) -> FourierVector:
    """psi0 = (a+b+c)/3, psi1 = (a + b*w^2 + c*w)/3, psi2 = (a + b*w + c*w^2)/3."""
    a, b, c = t.a, t.b, t.c
    return FourierVector(
        (a + b + c) / 3.0,
        (a + b * OMEGA2 + c * OMEGA) / 3.0,
        (a + b * OMEGA + c * OMEGA2) / 3.0,
    )


def inverse_fourier(v: FourierVector) -> TriangleTriple:
    """Evaluate psi0 + psi1*T + psi2*T^2 at T = 1, w, w^2.

    Raises CoincidentVertices when the reconstructed points collapse.
    """
    a = v.psi0 + v.psi1 + v.psi2
    b = v.psi0 + v.psi1 * OMEGA + v.psi2 * OMEGA2
    c = v.psi0 + v.psi1 * OMEGA2 + v.psi2 * OMEGA
    return make_triple(a, b, c)


def centroid(t: TriangleTriple) -> complex:
    return (t.a + t.b + t.c) / 3.0


def area(t: TriangleTriple) -> float:
    """Unsigned area by the shoelace formula."""
    return abs(((t.b - t.a) * (t.c - t.a).conjugate()).imag) / 2.0


def area_fourier(t: TriangleTriple) -> float:
    """Unsigned area as (3*sqrt(3)/4) * ||psi1|^2 - |psi2|^2|."""
    v = fourier(t)
    return _AREA_COEFF * abs(abs(v.psi1) ** 2 - abs(v.psi2) ** 2)


def shape_modulus(t: TriangleTriple) -> SphereValue:
    """Similarity-class invariant (psi2/psi1)**3.

    Invariant under relabeling-free similarity (z -> u*z + v, u != 0).  Lies
    in the open unit disk for positive triples, outside the closed disk for
    negative ones, and on the unit circle exactly on the degenerate locus.
    Zero and infinity are the two equilateral classes.
    """
    v = fourier(t)
    ref = max(abs(t.a), abs(t.b), abs(t.c), t.scale)
    r = sphere_ratio(v.psi2, v.psi1, scale=ref)
    if r.is_infinite:
        return r
    z = r.finite()
    return SphereValue(z * z * z)


def brocard_cot(t: TriangleTriple) -> float:
    """Cotangent of the Brocard angle from the shape modulus.

    With r = |psi2/psi1| folded into (0, 1), cot = sqrt(3)*(1+r^2)/(1-r^2).
    Equilateral triples give sqrt(3); the value grows without bound as the
    triple degenerates.
    """
    v = fourier(t)
    n1, n2 = abs(v.psi1) ** 2, abs(v.psi2) ** 2
    if abs(n1 - n2) <= EPS * (n1 + n2):
        raise DegenerateTriangle("Brocard angle undefined for zero-area triple")
    r2 = min(n1, n2) / max(n1, n2)
    return math.sqrt(3.0) * (1.0 + r2) / (1.0 - r2)


def _fmt17(x: float) -> str:
    return format(x, ".17g")


def triple_to_csv(t: TriangleTriple) -> str:
    """One CSV record: re_a,im_a,re_b,im_b,re_c,im_c at 17 significant digits."""
    parts = []
    for z in t.vertices:
        parts.append(_fmt17(z.real))
        parts.append(_fmt17(z.imag))
    return ",".join(parts)


def triple_from_csv(line: str) -> TriangleTriple:
    """Parse a six-field CSV record produced by :func:`triple_to_csv`."""
    fields = [f.strip() for f in line.strip().split(",")]
    if len(fields) != 6:
        raise ParseError(f"expected 6 comma-separated fields, got {len(fields)}")
    values = []
    for i, f in enumerate(fields):
        try:
            values.append(float(f))
        except ValueError:
            raise ParseError(f"field {i + 1} is not a decimal number: {f!r}", position=i) from None
    return make_triple(
        complex(values[0], values[1]),
        complex(values[2], values[3]),
        complex(values[4], values[5]),
    )
