"""Area-preserving operators and their orbit dynamics.

An operator preserves area exactly when both eigenvalues lie on the unit
circle, so the area-preserving sub-family is a two-torus parametrized by
exact rational angles (theta_x, theta_y, theta_yp) with

    theta_x = theta_y - theta_yp  (mod 1),

the eigenvalues being e^(2 pi i theta_y), e^(2 pi i theta_yp) and the moduli
multiplier e^(2 pi i theta_x).  Orbits of such an operator close up after
lcm of the angle denominators steps.

The module also carries the (p, q) chart written as functions of the torus
coordinates (x, y) = (xi, eta) and the rational symmetry kernel behind the
chart's functional equations.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import (
    AngleConstraintViolated,
    IndeterminateValue,
    InvalidParameters,
    ParseError,
    PoleAtInput,
)
from .geometry import EPS, OMEGA, OMEGA2, RHO, RHO_INV, SphereValue, TriangleTriple, sphere_ratio
from .operators import CirculantOperator

_SQRT3 = math.sqrt(3.0)

_ANGLE_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def normalize_angle(value) -> Fraction:
    """Reduce to an exact fraction of a turn in [0, 1)."""
    return Fraction(value) % 1


def parse_angle(text: str) -> Fraction:
    """Parse 'p/q' or an integer as an exact angle in turns.

    Decimal literals are rejected: they are generally inexact in binary and
    the orbit machinery needs the true denominator.
    """
    s = text.strip()
    if not _ANGLE_RE.match(s):
        raise ParseError(
            f"invalid rational angle {text!r}; use an exact fraction like 1/4 "
            "(decimals are not accepted)"
        )
    return normalize_angle(Fraction(s))


def _unit(theta: Fraction) -> complex:
    return cmath.exp(2j * math.pi * float(theta))


@dataclass(frozen=True)
class ApOperator:
    """Area-preserving operator with exact rational eigenvalue angles."""

    theta_x: Fraction
    theta_y: Fraction
    theta_yp: Fraction

    def operator(self) -> CirculantOperator:
        return CirculantOperator.from_eta(_unit(self.theta_y), _unit(self.theta_yp))

    def period(self) -> int:
        """Least N with both eigenvalues N-th roots of unity."""
        return math.lcm(self.theta_y.denominator, self.theta_yp.denominator)

    def orbit(self, triple: TriangleTriple, steps: int) -> list[TriangleTriple]:
        """Triples after 0..steps applications; each step recomputed from the
        previous triple."""
        if steps < 0:
            raise InvalidParameters("steps must be nonnegative")
        op = self.operator()
        out = [triple]
        for _ in range(steps):
            out.append(op.apply(out[-1]))
        return out


def make_ap(theta_x, theta_y, theta_yp) -> ApOperator:
    """Validated constructor; all angles normalized mod 1, constraint exact."""
    tx = normalize_angle(theta_x)
    ty = normalize_angle(theta_y)
    typ = normalize_angle(theta_yp)
    if (ty - typ) % 1 != tx:
        raise AngleConstraintViolated(
            f"theta_x = {tx} but theta_y - theta_yp = {(ty - typ) % 1} (mod 1)"
        )
    return ApOperator(tx, ty, typ)


class TorusPoint(NamedTuple):
    x: complex
    y: complex


def torus_point(x, y) -> TorusPoint:
    """Validated point of the unit two-torus |x| = |y| = 1."""
    x, y = complex(x), complex(y)
    if abs(abs(x) - 1.0) > EPS or abs(abs(y) - 1.0) > EPS:
        raise InvalidParameters("torus point needs |x| = |y| = 1")
    return TorusPoint(x, y)


def _p_fraction(x: complex, y: complex) -> tuple[complex, complex, float]:
    num = x * y + x + y
    den = x * y + 2.0 * RHO * x + RHO * RHO * y
    scale = abs(x * y) + 2.0 * abs(x) + abs(y) + 1.0
    return RHO * num, den, scale


def _q_fraction(x: complex, y: complex) -> tuple[complex, complex, float]:
    num = x * y - RHO * x - RHO_INV * y
    den = x * y - 2.0 * x + y
    scale = abs(x * y) + 2.0 * abs(x) + abs(y) + 1.0
    return RHO_INV * num, den, scale


def torus_p(x, y) -> complex:
    """p-coordinate rho(xy + x + y)/(xy + 2 rho x + rho^2 y) of the operator
    with moduli multiplier x and eigenvalue y.  Pole at (w, w^2) on the torus."""
    num, den, scale = _p_fraction(complex(x), complex(y))
    if abs(den) <= EPS * scale:
        raise PoleAtInput("p-chart denominator vanishes")
    return num / den

def torus_q(x, y) -> complex:
    """q-coordinate rho^-1 (xy - rho x - rho^-1 y)/(xy - 2x + y); pole at (1, 1)."""
    num, den, scale = _q_fraction(complex(x), complex(y))
    if abs(den) <= EPS * scale:
        raise PoleAtInput("q-chart denominator vanishes")
    return num / den


def r_ratio(x, y) -> SphereValue:
    """Antisymmetric kernel (2xy - x - y)/(sqrt(3)(y - x)).

    Sphere-valued: infinite on the diagonal away from (1, 1), where the
    ratio is a genuine 0/0 (IndeterminateValue).
    """
    x, y = complex(x), complex(y)
    num = 2.0 * x * y - x - y
    den = _SQRT3 * (y - x)
    scale = 2.0 * abs(x * y) + abs(x) + abs(y) + 1.0
    return sphere_ratio(num, den, scale=scale)


def q_centered(x, y) -> SphereValue:
    """i(q - 1/2), sphere-valued; equals (sqrt(3) R - 1)/(2 (R + sqrt(3)))."""
    num, den, scale = _q_fraction(complex(x), complex(y))
    return sphere_ratio(1j * (num - 0.5 * den), den, scale=scale)


@dataclass(frozen=True)
class FunctionalEquationResiduals:
    """|LHS - RHS| of the chart's functional equations at one torus point.

    A field is None when the evaluation hit a pole or indeterminacy.

      p_via_q:       p(x, y) = q(w/x, w^2 y/x)
      p_reflection:  p(x, y) + conj p(w^2/x, w/y) = 1
      q_reflection:  q(x, y) + conj q(1/x, 1/y) = 1
      p_swap:        p(y, x) = p (q - 1) / (rho (p - 1) q - (p - q))
      q_swap:        q(y, x) = (q - 1)/((1 + rho) q - 1)
      r_antisymmetry: R(x, y) + R(y, x) = 0
      r_conjugation: R(1/x, 1/y) = conj R(x, y)
      q_r_bridge:    i(q - 1/2) = (sqrt(3) R - 1)/(2 (R + sqrt(3)))
    """

    p_via_q: float | None
    p_reflection: float | None
    q_reflection: float | None
    p_swap: float | None
    q_swap: float | None
    r_antisymmetry: float | None
    r_conjugation: float | None
    q_r_bridge: float | None


def _residual(fn) -> float | None:
    try:
        return fn()
    except (PoleAtInput, IndeterminateValue, ZeroDivisionError, ValueError):
        return None


def functional_equation_residuals(pt: TorusPoint) -> FunctionalEquationResiduals:
    x, y = complex(pt[0]), complex(pt[1])

    def p_via_q():
        return abs(torus_p(x, y) - torus_q(OMEGA / x, OMEGA2 * y / x))

    def p_reflection():
        return abs(torus_p(x, y) + torus_p(OMEGA2 / x, OMEGA / y).conjugate() - 1.0)

    def q_reflection():
        return abs(torus_q(x, y) + torus_q(1.0 / x, 1.0 / y).conjugate() - 1.0)

    def p_swap():
        p, q = torus_p(x, y), torus_q(x, y)
        den = RHO * (p - 1.0) * q - (p - q)
        if abs(den) <= EPS * (abs(p) + 1.0) * (abs(q) + 1.0):
            raise PoleAtInput("swap identity denominator vanishes")
        return abs(torus_p(y, x) - p * (q - 1.0) / den)

    def q_swap():
        q = torus_q(x, y)
        den = (1.0 + RHO) * q - 1.0
        if abs(den) <= EPS * (abs(q) + 1.0):
            raise PoleAtInput("swap identity denominator vanishes")
        return abs(torus_q(y, x) - (q - 1.0) / den)

    def r_antisymmetry():
        return abs(r_ratio(x, y).finite() + r_ratio(y, x).finite())

    def r_conjugation():
        return abs(r_ratio(1.0 / x, 1.0 / y).finite() - r_ratio(x, y).finite().conjugate())

    def q_r_bridge():
        r = r_ratio(x, y).finite()
        den = 2.0 * (r + _SQRT3)
        if abs(den) <= EPS * (abs(r) + 1.0):
            raise PoleAtInput("bridge denominator vanishes")
        return abs(q_centered(x, y).finite() - (_SQRT3 * r - 1.0) / den)

    return FunctionalEquationResiduals(
        p_via_q=_residual(p_via_q),
        p_reflection=_residual(p_reflection),
        q_reflection=_residual(q_reflection),
        p_swap=_residual(p_swap),
        q_swap=_residual(q_swap),
        r_antisymmetry=_residual(r_antisymmetry),
        r_conjugation=_residual(r_conjugation),
        q_r_bridge=_residual(q_r_bridge),
    )
