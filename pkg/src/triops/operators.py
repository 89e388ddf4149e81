"""The two-parameter circulant operator family on labelled triangles.

An operator is alpha*I + beta*J + gamma*J^2 with alpha + beta + gamma = 1,
where J cycles vertex labels.  Two charts coordinatize the family: the
classical pair (p, q) with weights

    alpha = p(1-q)/(1-pq),  beta = q(1-p)/(1-pq),  gamma = (1-p)(1-q)/(1-pq),

and the eigenvalue pair (eta, etap) acting diagonally on the Fourier
coefficients of a triple as (psi0, psi1, psi2) -> (psi0, etap*psi1, eta*psi2).
Composition is multiplication of eigenvalue pairs; the induced action on the
shape modulus is multiplication by xi^3 with xi = eta/etap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import (
    ChartEscape,
    DegenerateTriangle,
    DerivedParameterUndefined,
    IndeterminateComponent,
    IndeterminateValue,
    InvalidParameters,
)
from .geometry import (
    EPS,
    INFINITY,
    OMEGA,
    OMEGA2,
    SphereValue,
    TriangleTriple,
    sphere_ratio,
    t_of_xi,
    xi_of_t,
)


class PQPair(NamedTuple):
    p: complex
    q: complex


class EtaPair(NamedTuple):
    eta: complex
    etap: complex


class PQChart(NamedTuple):
    """Image of an operator in the (p, q) chart.

    Each component is a SphereValue, or None when that component is a 0/0
    indeterminacy (the other component may still carry information, e.g. the
    label cycle has q = 1 but no preferred p).
    """

    p: SphereValue | None
    q: SphereValue | None


@dataclass(frozen=True)
class CirculantOperator:
    """alpha*I + beta*J + gamma*J^2 acting on triangle triples."""

    alpha: complex
    beta: complex
    gamma: complex

    @property
    def coefficients(self) -> tuple[complex, complex, complex]:
        return (self.alpha, self.beta, self.gamma)

    @classmethod
    def from_pq(cls, p, q) -> "CirculantOperator":
        """Operator with weights p(1-q), q(1-p), (1-p)(1-q) over 1 - pq.

        Requires pq != 1 and (p, q) != (1, 1); the arithmetic normalizes the
        coefficient sum to one.
        """
        p, q = complex(p), complex(q)
        band = EPS * max(1.0, abs(p), abs(q))
        d = 1.0 - p * q
        if abs(d) <= band * max(1.0, abs(p), abs(q)):
            raise InvalidParameters("pq = 1 is outside the operator family")
        if abs(p - 1.0) <= band and abs(q - 1.0) <= band:
            raise InvalidParameters("(p, q) = (1, 1) is indeterminate")
        return cls(p * (1.0 - q) / d, q * (1.0 - p) / d, (1.0 - p) * (1.0 - q) / d)

    @classmethod
    def from_eta(cls, eta, etap) -> "CirculantOperator":
        """Operator with eigenvalue pair (eta, etap) on (psi2, psi1)."""
        eta, etap = complex(eta), complex(etap)
        return cls(
            (1.0 + eta + etap) / 3.0,
            (1.0 + OMEGA * eta + OMEGA2 * etap) / 3.0,
            (1.0 + OMEGA2 * eta + OMEGA * etap) / 3.0,
        )

    def eta_pair(self) -> EtaPair:
        a, b, g = self.alpha, self.beta, self.gamma
        return EtaPair(a + OMEGA2 * b + OMEGA * g, a + OMEGA * b + OMEGA2 * g)

    def pq_chart(self) -> PQChart:
        """Chart inverse p = alpha/(1-beta), q = beta/(1-alpha)."""
        scale = max(1.0, abs(self.alpha), abs(self.beta), abs(self.gamma))
        return PQChart(
            _chart_ratio(self.alpha, 1.0 - self.beta, scale),
            _chart_ratio(self.beta, 1.0 - self.alpha, scale),
        )

    def apply(self, t: TriangleTriple) -> TriangleTriple:
        """Image triple (alpha*a + beta*b + gamma*c, cyclically).

        The result is returned unvalidated: a degenerate image (collinear or
        coincident vertices) is legitimate output, flagged by its own
        ``is_degenerate`` property rather than by an error.
        """
        a, b, c = t.a, t.b, t.c
        al, be, ga = self.alpha, self.beta, self.gamma
        return TriangleTriple(
            al * a + be * b + ga * c,
            al * b + be * c + ga * a,
            al * c + be * a + ga * b,
        )

    def compose(self, other: "CirculantOperator") -> "CirculantOperator":
        """Operator product (circulant convolution); commutative."""
        a1, b1, g1 = self.coefficients
        a2, b2, g2 = other.coefficients
        return CirculantOperator(
            a1 * a2 + b1 * g2 + g1 * b2,
            a1 * b2 + b1 * a2 + g1 * g2,
            a1 * g2 + g1 * a2 + b1 * b2,
        )

    __matmul__ = compose


IDENTITY = CirculantOperator(1.0 + 0j, 0j, 0j)
CYCLE = CirculantOperator(0j, 1.0 + 0j, 0j)  # (a,b,c) -> (b,c,a)
CYCLE_SQUARED = CirculantOperator(0j, 0j, 1.0 + 0j)  # (a,b,c) -> (c,a,b)


def _chart_ratio(num: complex, den: complex, scale: float) -> SphereValue | None:
    try:
        return sphere_ratio(num, den, scale=scale)
    except IndeterminateValue:
        return None


def weighted_mean(r, first: CirculantOperator, second: CirculantOperator) -> CirculantOperator:
    """(1-r)*first + r*second, coefficientwise."""
    r = complex(r)
    s = 1.0 - r
    return CirculantOperator(
        s * first.alpha + r * second.alpha,
        s * first.beta + r * second.beta,
        s * first.gamma + r * second.gamma,
    )


def t_xi_from_pq(p, q) -> tuple[SphereValue, SphereValue]:
    """t = (p-1)(2q-1)/(p-q) and xi = (1+t*w)/(1+t*w^2).

    Defined for every pair except (1, 1) and (1/2, 1/2), where t is 0/0
    (IndeterminateValue); p = q elsewhere gives t = inf, xi = w^2.  Makes
    sense even where pq = 1 and the operator itself does not exist.
    """
    p, q = complex(p), complex(q)
    scale = max(1.0, abs(p), abs(q)) ** 2
    t = sphere_ratio((p - 1.0) * (2.0 * q - 1.0), p - q, scale=scale)
    return t, xi_of_t(t)


@dataclass(frozen=True)
class Classification:
    """Qualitative summary of one operator.

    regular: maps positively oriented triples to positively oriented ones
      (|xi| <= 1).  normal: preserves the degenerate locus (|xi| = 1).
      area_preserving: |eta| = |etap| = 1.  collapses_moduli: eta = 0, so
      every image has vanishing psi2 (equilateral, or a point when etap = 0
      as well).  xi and t are None when indeterminate (eta = etap = 0).
    """

    is_identity: bool
    is_cyclic_permutation: bool
    is_regular: bool
    is_normal: bool
    is_area_preserving: bool
    collapses_moduli: bool
    xi: SphereValue | None
    t: SphereValue | None


def _coeff_close(op: CirculantOperator, ref: CirculantOperator, tol: float = EPS) -> bool:
    return all(abs(x - y) <= tol for x, y in zip(op.coefficients, ref.coefficients))


def classify(op: CirculantOperator) -> Classification:
    eta, etap = op.eta_pair()
    scale = max(1.0, abs(eta), abs(etap))
    xi = _chart_ratio(eta, etap, scale)
    t = t_of_xi(xi) if xi is not None else None
    is_identity = _coeff_close(op, IDENTITY)
    is_cyclic = is_identity or _coeff_close(op, CYCLE) or _coeff_close(op, CYCLE_SQUARED)
    is_regular = xi is not None and abs(xi) <= 1.0 + EPS
    is_normal = xi is not None and not xi.is_infinite and abs(abs(xi) - 1.0) <= EPS
    is_ap = abs(abs(eta) - 1.0) <= EPS and abs(abs(etap) - 1.0) <= EPS
    collapses = abs(eta) <= EPS * scale
    return Classification(
        is_identity=is_identity,
        is_cyclic_permutation=is_cyclic,
        is_regular=is_regular,
        is_normal=is_normal,
        is_area_preserving=is_ap,
        collapses_moduli=collapses,
        xi=xi,
        t=t,
    )


def _json_value(v):
    if v is None:
        return None
    if isinstance(v, SphereValue):
        if v.is_infinite:
            return "inf"
        v = v.finite()
    v = complex(v)
    return {"re": v.real, "im": v.imag}


def classification_report(op: CirculantOperator) -> dict:
    """JSON-ready classification record of one operator."""
    c = classify(op)
    eta, etap = op.eta_pair()
    chart = op.pq_chart()
    return {
        "p": _json_value(chart.p),
        "q": _json_value(chart.q),
        "eta": _json_value(eta),
        "etap": _json_value(etap),
        "xi": _json_value(c.xi),
        "t": _json_value(c.t),
        "regular": c.is_regular,
        "normal": c.is_normal,
        "area_preserving": c.is_area_preserving,
        "identity": c.is_identity,
        "cyclic": c.is_cyclic_permutation,
        "collapses_moduli": c.collapses_moduli,
    }


def is_regular_geometric(p, q) -> bool:
    """Half-plane form of regularity: p = q != 1/2, or t lies in the closed
    upper half plane.  Agrees with |xi| <= 1 from :func:`classify`."""
    p, q = complex(p), complex(q)
    band = EPS * max(1.0, abs(p), abs(q))
    if abs(p - q) <= band:
        return abs(p - 0.5) > band or abs(q - 0.5) > band
    t = (p - 1.0) * (2.0 * q - 1.0) / (p - q)
    return t.imag >= -EPS * max(1.0, abs(t))


def compose_pq(pq1, pq2) -> PQPair:
    """Compose two operators directly in the (p, q) chart.

    Uses the resultant combination

        lam1 = 1 - (1 - 2(1-p1)(1-p2)) (1 - 2(1-q1)(1-q2))
        lam2 = 1 - 2(1 - p1 p2) - (1 - 2(1-p1) q2) (1 - 2(1-p2) q1)
        lam3 = (1 - p1 q1)(1 - p2 q2)

    with p = (lam2 + 2*lam3)/lam1 and q = (lam1 - 2*lam3)/lam2.  Vanishing
    detection is banded against the magnitude of the constituent terms:
    a denominator vanishing alone raises ChartEscape, numerator and
    denominator vanishing together raise IndeterminateComponent.  Either
    exception carries the surviving component in ``other``.
    """
    p1, q1 = complex(pq1[0]), complex(pq1[1])
    p2, q2 = complex(pq2[0]), complex(pq2[1])

    fa = 1.0 - 2.0 * (1.0 - p1) * (1.0 - p2)
    fb = 1.0 - 2.0 * (1.0 - q1) * (1.0 - q2)
    lam1 = 1.0 - fa * fb
    m1 = 1.0 + abs(fa) * abs(fb)

    e = 2.0 * (1.0 - p1 * p2)
    fc = 1.0 - 2.0 * (1.0 - p1) * q2
    fd = 1.0 - 2.0 * (1.0 - p2) * q1
    lam2 = 1.0 - e - fc * fd
    m2 = 1.0 + abs(e) + abs(fc) * abs(fd)

    lam3 = (1.0 - p1 * q1) * (1.0 - p2 * q2)
    m3 = abs(lam3)

    num_p, mnum_p = lam2 + 2.0 * lam3, m2 + 2.0 * m3
    num_q, mnum_q = lam1 - 2.0 * lam3, m1 + 2.0 * m3

    p_bad = abs(lam1) <= EPS * m1
    q_bad = abs(lam2) <= EPS * m2
    q_val = None if q_bad else num_q / lam2
    p_val = None if p_bad else num_p / lam1
    if p_bad:
        if abs(num_p) <= EPS * mnum_p:
            raise IndeterminateComponent("p", other=q_val)
        raise ChartEscape("p", other=q_val)
    if q_bad:
        if abs(num_q) <= EPS * mnum_q:
            raise IndeterminateComponent("q", other=p_val)
        raise ChartEscape("q", other=p_val)
    return PQPair(p_val, q_val)


class ReflectionParams(NamedTuple):
    """Parameter pairs realizing the three vertex transpositions of one triple."""

    swap_bc: PQPair  # image (a, c, b)
    swap_ab: PQPair  # image (b, a, c)
    swap_ac: PQPair  # image (c, b, a)


def reflection_params(t: TriangleTriple) -> ReflectionParams:
    """Triangle-dependent pairs whose operators transpose two vertices.

    Each pair satisfies pq = p + q (and pq != 1 for a non-degenerate input).
    """
    if t.is_degenerate:
        raise DegenerateTriangle("reflection parameters need a non-degenerate triple")
    a, b, c = t.a, t.b, t.c
    return ReflectionParams(
        swap_bc=_reflection_pair((c - a) / (b - a), (a - c) / (b - c)),
        swap_ab=_reflection_pair((b - c) / (a - c), (c - b) / (a - b)),
        swap_ac=_reflection_pair((a - b) / (c - b), (b - a) / (c - a)),
    )


def _reflection_pair(p: complex, q: complex) -> PQPair:
    if abs(p * q - 1.0) <= EPS * max(1.0, abs(p), abs(q)) ** 2:
        raise InvalidParameters("reflection pair falls on pq = 1")
    return PQPair(p, q)


def is_reflection_param(p, q) -> bool:
    """True when pq = p + q with pq != 1 (the operator swaps two vertices of
    matching triangles)."""
    p, q = complex(p), complex(q)
    band = EPS * max(1.0, abs(p), abs(q)) ** 2
    return abs(p * q - (p + q)) <= band and abs(p * q - 1.0) > band


class StructuralIdentities(NamedTuple):
    """Companion parameter pairs of one (p, q).

    swap: (q, p); its operator equals cycle . [etap, eta].
    j1, j2: pairs with S = cycle . S_j1 = cycle^2 . S_j2.
    antipode: pair whose operator is [-eta, -etap]; the two operators sum to
      (2/3)(I + J + J^2) coefficientwise.
    """

    swap: PQPair
    j1: PQPair
    j2: PQPair
    antipode: PQPair


def structural_identities(p, q) -> StructuralIdentities:
    p, q = complex(p), complex(q)
    base = CirculantOperator.from_pq(p, q)
    scale = max(1.0, abs(p), abs(q)) ** 2

    d = 2.0 * p * q - p - q
    if abs(d) <= EPS * scale:
        raise DerivedParameterUndefined("2pq - p - q = 0")
    j1 = PQPair(q * (p - 1.0) / d, 1.0 - p)
    j2 = PQPair(1.0 - q, p * (q - 1.0) / d)

    d1 = 1.0 + 3.0 * q - 4.0 * p * q
    d2 = 1.0 + 3.0 * p - 4.0 * p * q
    if abs(d1) <= EPS * scale or abs(d2) <= EPS * scale:
        raise DerivedParameterUndefined("antipode denominator vanishes")
    anti = PQPair((2.0 - 3.0 * p + p * q) / d1, (2.0 - 3.0 * q + p * q) / d2)

    try:
        other = CirculantOperator.from_pq(*anti)
    except InvalidParameters as exc:
        raise DerivedParameterUndefined(f"antipode pair invalid: {exc}") from exc
    # construction self-check: the two operators average to the projector
    for x, y in zip(base.coefficients, other.coefficients):
        assert abs(x + y - 2.0 / 3.0) <= 1e-6 * scale, "antipode identity violated"

    return StructuralIdentities(swap=PQPair(q, p), j1=j1, j2=j2, antipode=anti)
