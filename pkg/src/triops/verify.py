"""Self-checks for the library's mathematical contracts.

Each check exercises one advertised property end to end on deterministic
pseudo-random samples and returns a CheckResult with the worst observed
residual.  The checks are grouped into named suites; ``run_suite`` powers
both the command line ``verify`` subcommand and the acceptance tests.

Tolerances are fixed here, next to the sampling that justifies them, and
are never loosened at call sites.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .dynamics import functional_equation_residuals, make_ap, r_ratio, torus_p, torus_q, torus_point
from .errors import (
    ChartEscape,
    ConicChartFailure,
    ExcludedPoint,
    IndeterminateComponent,
    IndeterminateValue,
    InvalidParameters,
    PoleAtInput,
)
from .geometry import (
    INFINITY,
    OMEGA2,
    RHO,
    FourierVector,
    Orientation,
    TriangleTriple,
    area,
    area_fourier,
    brocard_cot,
    fourier,
    inverse_fourier,
    make_triple,
    orientation,
    shape_modulus,
    sphere,
)
from .operators import (
    CYCLE,
    CYCLE_SQUARED,
    IDENTITY,
    CirculantOperator,
    classify,
    compose_pq,
    is_reflection_param,
    is_regular_geometric,
    reflection_params,
    structural_identities,
    t_xi_from_pq,
    weighted_mean,
)
from .torus import (
    ZERO,
    TorusElement,
    add,
    add_rational,
    conic_point,
    division_points,
    from_conic,
    neg,
    nmul,
    nmul_rational,
    psi,
    psi_inv,
    to_conic,
    torus_element,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def format_result(r: CheckResult) -> str:
    return f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}"


# ---------------------------------------------------------------- sampling

def _sample_triple(rng: random.Random, box: float = 3.0):
    """Well-conditioned random triple: separated vertices, area bounded
    below relative to diameter, so relative tolerances stay meaningful."""
    while True:
        a, b, c = (complex(rng.uniform(-box, box), rng.uniform(-box, box)) for _ in range(3))
        scale = max(abs(a - b), abs(b - c), abs(c - a))
        if scale < 0.5:
            continue
        if min(abs(a - b), abs(b - c), abs(c - a)) < 0.1 * scale:
            continue
        if abs(((b - a) * (c - a).conjugate()).imag) / 2.0 < 0.05 * scale * scale:
            continue
        return make_triple(a, b, c)


def _sample_disk(rng: random.Random, radius: float, inner: float = 0.0) -> complex:
    r = math.sqrt(rng.uniform(inner * inner, radius * radius))
    return cmath.rect(r, rng.uniform(0.0, 2.0 * math.pi))


def _triple_dist(t1, t2) -> float:
    return max(abs(x - y) for x, y in zip(t1.vertices, t2.vertices))


def _coeff_resid(op1: CirculantOperator, op2: CirculantOperator) -> float:
    mags = [abs(z) for z in op1.coefficients + op2.coefficients]
    return max(abs(x - y) for x, y in zip(op1.coefficients, op2.coefficients)) / (1.0 + max(mags))


# ------------------------------------------------------------- the checks

def check_routh_ratio() -> CheckResult:
    """The (1/3, 2/3) operator and its swap scale every area by exactly 1/7."""
    rng = random.Random(101)
    worst = 0.0
    for p, q in ((1.0 / 3.0, 2.0 / 3.0), (2.0 / 3.0, 1.0 / 3.0)):
        op = CirculantOperator.from_pq(p, q)
        for _ in range(40):
            t = _sample_triple(rng)
            ratio = area(op.apply(t)) / area(t)
            worst = max(worst, abs(7.0 * ratio - 1.0))
    return CheckResult(
        "routh_ratio", worst <= 1e-12,
        f"max |7*ratio - 1| = {worst:.2e} over 80 triples (tol 1e-12)",
    )


def check_equilateral_collapse() -> CheckResult:
    """The eigenvalue-(0, -1) member sends every triple to a positively
    oriented equilateral one."""
    rng = random.Random(202)
    op = CirculantOperator.from_pq(0.0, (1.0 - OMEGA2) / 3.0)
    eta, etap = op.eta_pair()
    if abs(eta) > 1e-12 or abs(etap + 1.0) > 1e-12:
        return CheckResult("equilateral_collapse", False, f"eigenvalues off: {eta}, {etap}")
    worst_psi2 = 0.0
    worst_side = 0.0
    bad_orientation = 0
    for _ in range(200):
        t = _sample_triple(rng)
        img = op.apply(t)
        worst_psi2 = max(worst_psi2, abs(fourier(img).psi2) / t.scale)
        sides = sorted((abs(img.a - img.b), abs(img.b - img.c), abs(img.c - img.a)))
        if sides[2] > 1e-12 * t.scale:
            worst_side = max(worst_side, (sides[2] - sides[0]) / sides[2])
            if orientation(img) is not Orientation.POSITIVE:
                bad_orientation += 1
    passed = worst_psi2 <= 1e-12 and worst_side <= 1e-9 and bad_orientation == 0
    return CheckResult(
        "equilateral_collapse", passed,
        f"max |psi2|/scale = {worst_psi2:.2e} (tol 1e-12), side spread {worst_side:.2e}, "
        f"{bad_orientation} wrongly oriented images",
    )


_ORBIT_CASES = (
    (Fraction(1, 4), Fraction(1, 5), Fraction(19, 20), 20),
    (Fraction(1, 4), Fraction(1, 7), Fraction(25, 28), 28),
)


def check_orbit_periodicity() -> CheckResult:
    """Rational-angle area-preserving operators close their orbits after
    exactly lcm-of-denominators steps, not sooner, and the operator's
    matching power is the identity."""
    base = make_triple(0.0, 1.0, complex(0.7, 0.8))
    details = []
    passed = True
    for tx, ty, typ, n in _ORBIT_CASES:
        ap = make_ap(tx, ty, typ)
        if ap.period() != n:
            return CheckResult("orbit_periodicity", False, f"period {ap.period()} != {n}")
        orb = ap.orbit(base, n)
        closure = _triple_dist(orb[-1], base) / base.scale
        early = min(_triple_dist(orb[k], base) / base.scale for k in range(1, n))
        power = IDENTITY
        op = ap.operator()
        for _ in range(n):
            power = power @ op
        resid = _coeff_resid(power, IDENTITY)
        areas = max(abs(area(x) - area(base)) / area(base) for x in orb)
        ok = closure <= 1e-9 and early >= 1e-6 and resid <= 1e-12 and areas <= 1e-9
        passed = passed and ok
        details.append(
            f"N={n}: closure {closure:.2e} (tol 1e-9), nearest early return {early:.2e}, "
            f"power-vs-identity {resid:.2e}, area drift {areas:.2e}"
        )
    return CheckResult("orbit_periodicity", passed, "; ".join(details))


def check_area_formulas() -> CheckResult:
    """Spectral area formula matches the shoelace; the eigenvalue expression
    predicts the area ratio of any operator, reducing to |etap|^2 for real
    parameters."""
    rng = random.Random(404)
    worst_spectral = 0.0
    for _ in range(1000):
        t = _sample_triple(rng)
        a = area(t)
        worst_spectral = max(worst_spectral, abs(a - area_fourier(t)) / a)

    worst_ratio = 0.0
    count = 0
    while count < 1000:
        eta = _sample_disk(rng, 1.5)
        etap = _sample_disk(rng, 1.5)
        t = _sample_triple(rng)
        v = fourier(t)
        n1, n2 = abs(v.psi1) ** 2, abs(v.psi2) ** 2
        if abs(n1 - n2) <= 1e-3 * (n1 + n2):
            continue
        num = abs(abs(etap) ** 2 * n1 - abs(eta) ** 2 * n2)
        if num <= 1e-3 * (abs(etap) ** 2 * n1 + abs(eta) ** 2 * n2):
            continue
        predicted = num / abs(n1 - n2)
        op = CirculantOperator.from_eta(eta, etap)
        measured = area(op.apply(t)) / area(t)
        worst_ratio = max(worst_ratio, abs(measured - predicted) / predicted)
        count += 1

    worst_real = 0.0
    count = 0
    while count < 200:
        p, q = rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)
        if abs(1.0 - p * q) < 0.1:
            continue
        op = CirculantOperator.from_pq(p, q)
        _, etap = op.eta_pair()
        if abs(etap) < 0.05:
            continue
        t = _sample_triple(rng)
        measured = area(op.apply(t)) / area(t)
        worst_real = max(worst_real, abs(measured - abs(etap) ** 2) / abs(etap) ** 2)
        count += 1

    passed = worst_spectral <= 1e-10 and worst_ratio <= 1e-9 and worst_real <= 1e-9
    return CheckResult(
        "area_formulas", passed,
        f"spectral vs shoelace {worst_spectral:.2e} (tol 1e-10), eigenvalue ratio "
        f"{worst_ratio:.2e} (tol 1e-9), real-parameter ratio {worst_real:.2e} (tol 1e-9)",
    )


def check_moduli_scaling() -> CheckResult:
    """The shape modulus transforms by the cube of xi = eta/etap."""
    rng = random.Random(505)
    worst = 0.0
    count = 0
    while count < 500:
        p = _sample_disk(rng, 2.0)
        q = _sample_disk(rng, 2.0)
        try:
            op = CirculantOperator.from_pq(p, q)
        except InvalidParameters:
            continue
        eta, etap = op.eta_pair()
        if abs(eta) < 0.1 or abs(etap) < 0.1:
            continue
        xi = eta / etap
        if abs(xi) > 5.0:
            continue
        t = _sample_triple(rng)
        phi = shape_modulus(t)
        if phi.is_infinite or abs(phi) > 50.0:
            continue
        img_phi = shape_modulus(op.apply(t))
        if img_phi.is_infinite:
            continue
        pred = xi ** 3 * phi.finite()
        worst = max(worst, abs(img_phi.finite() - pred) / (1.0 + abs(pred)))
        count += 1
    return CheckResult(
        "moduli_scaling", worst <= 1e-10,
        f"max |phi(img) - xi^3 phi| / (1 + |expected|) = {worst:.2e} over 500 operators (tol 1e-10)",
    )


def _sample_torus_t(rng: random.Random) -> TorusElement:
    if rng.random() < 0.06:
        return TorusElement(INFINITY)
    while True:
        z = complex(rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0))
        if abs(z - RHO) < 0.05 or abs(z - RHO.conjugate()) < 0.05:
            continue
        return torus_element(z)


def _chart_dist(u: TorusElement, v: TorusElement) -> float:
    """Chordal distance between chart values; uniformly conditioned even
    where the chart blows up near the excluded points."""
    pu, pv = psi(u), psi(v)
    return abs(pu - pv) / math.sqrt((1.0 + abs(pu) ** 2) * (1.0 + abs(pv) ** 2))


def check_torus_group_law() -> CheckResult:
    """Addition on the parameter line is an abelian group with 0 as identity,
    t/(t-1) as inverse, agreeing with its rational closed forms, and the
    division points are exactly the n-torsion."""
    rng = random.Random(606)
    worst = {"assoc": 0.0, "comm": 0.0, "ident": 0.0, "inv": 0.0, "rational": 0.0}
    done = 0
    while done < 1000:
        t1, t2, t3 = (_sample_torus_t(rng) for _ in range(3))
        try:
            worst["assoc"] = max(worst["assoc"], _chart_dist(add(add(t1, t2), t3), add(t1, add(t2, t3))))
            worst["comm"] = max(worst["comm"], _chart_dist(add(t1, t2), add(t2, t1)))
            worst["ident"] = max(worst["ident"], _chart_dist(add(t1, ZERO), t1))
            worst["inv"] = max(worst["inv"], _chart_dist(add(t1, neg(t1)), ZERO))
            worst["rational"] = max(worst["rational"], _chart_dist(add(t1, t2), add_rational(t1, t2)))
        except (ExcludedPoint, IndeterminateValue):
            continue
        done += 1

    worst_nmul = 0.0
    for _ in range(100):
        t = _sample_torus_t(rng)
        try:
            acc = ZERO
            for n in range(1, 13):
                acc = add(acc, t)
                worst_nmul = max(worst_nmul, _chart_dist(acc, nmul_rational(n, t)))
                worst_nmul = max(worst_nmul, _chart_dist(acc, nmul(n, t)))
                worst_nmul = max(worst_nmul, _chart_dist(neg(acc), nmul_rational(-n, t)))
        except (ExcludedPoint, IndeterminateValue):
            continue

    worst_div = 0.0
    div_ok = True
    for n in range(1, 13):
        pts = division_points(n)
        if len(pts) != n:
            div_ok = False
        charts = [psi(p) for p in pts]
        for k, ch in enumerate(charts):
            worst_div = max(worst_div, abs(ch ** n - 1.0))
            worst_div = max(worst_div, abs(ch - cmath.exp(2j * math.pi * k / n)))
            worst_div = max(worst_div, _chart_dist(nmul_rational(n, pts[k]), ZERO))
        if n > 1:
            sep = min(abs(charts[i] - charts[j]) for i in range(n) for j in range(i + 1, n))
            if sep < 1e-6:
                div_ok = False

    fixed = max(
        _chart_dist(add(torus_element(2.0), torus_element(2.0)), ZERO),
        _chart_dist(psi_inv(sphere(-1.0)), torus_element(2.0)),
        _chart_dist(add(torus_element(1.0), TorusElement(INFINITY)), ZERO),
        0.0 if neg(torus_element(1.0)).is_infinite else 1.0,
        0.0 if add_rational(TorusElement(INFINITY), TorusElement(INFINITY)).value == sphere(1.0 + 0j) else 1.0,
    )

    worst_ops = max(worst.values())
    passed = worst_ops <= 1e-10 and worst_nmul <= 1e-9 and worst_div <= 1e-10 and fixed <= 1e-12 and div_ok
    return CheckResult(
        "torus_group_law", passed,
        f"group residuals {worst_ops:.2e} (tol 1e-10), n-fold sums {worst_nmul:.2e} (tol 1e-9), "
        f"division points {worst_div:.2e} (tol 1e-10), fixed values {fixed:.2e}",
    )


def _pair_ok(rng: random.Random):
    """Random complex pair with all companion constructions well away from
    their exceptional loci."""
    while True:
        p = _sample_disk(rng, 1.5)
        q = _sample_disk(rng, 1.5)
        if abs(1.0 - p * q) < 0.2:
            continue
        if abs(2.0 * p * q - p - q) < 0.05:
            continue
        if abs(1.0 + 3.0 * q - 4.0 * p * q) < 0.05 or abs(1.0 + 3.0 * p - 4.0 * p * q) < 0.05:
            continue
        try:
            op = CirculantOperator.from_pq(p, q)
        except InvalidParameters:
            continue
        return p, q, op


def check_operator_identities() -> CheckResult:
    """Companion parameter pairs (swap, the two cycle factorizations, the
    antipode), the weighted-mean form, chart-level composition, and the
    transposition characterization all agree with direct coefficient
    arithmetic."""
    rng = random.Random(707)
    worst = 0.0
    worst_compose = 0.0
    for _ in range(300):
        p, q, op = _pair_ok(rng)
        eta, etap = op.eta_pair()
        si = structural_identities(p, q)

        swap_op = CirculantOperator.from_pq(*si.swap)
        worst = max(worst, _coeff_resid(swap_op, CYCLE @ CirculantOperator.from_eta(etap, eta)))
        worst = max(worst, _coeff_resid(op, CYCLE @ CirculantOperator.from_pq(*si.j1)))
        worst = max(worst, _coeff_resid(op, CYCLE_SQUARED @ CirculantOperator.from_pq(*si.j2)))
        anti_op = CirculantOperator.from_pq(*si.antipode)
        worst = max(worst, _coeff_resid(anti_op, CirculantOperator.from_eta(-eta, -etap)))
        worst = max(
            worst,
            max(abs(x + y - 2.0 / 3.0) for x, y in zip(op.coefficients, anti_op.coefficients))
            / (1.0 + max(abs(z) for z in op.coefficients)),
        )
        worst = max(worst, _coeff_resid(
            op, weighted_mean((1.0 - q) / (1.0 - p * q), CYCLE,
                              weighted_mean(p, CYCLE_SQUARED, IDENTITY))))
        worst = max(worst, _coeff_resid(
            op, weighted_mean((1.0 - p) / (1.0 - p * q), IDENTITY,
                              weighted_mean(q, CYCLE_SQUARED, CYCLE))))

        p2, q2, op2 = _pair_ok(rng)
        try:
            composed = compose_pq((p, q), (p2, q2))
        except (ChartEscape, IndeterminateComponent):
            continue
        chart = (op @ op2).pq_chart()
        if chart.p is None or chart.q is None or chart.p.is_infinite or chart.q.is_infinite:
            continue
        worst_compose = max(
            worst_compose,
            abs(composed.p - chart.p.finite()) / (1.0 + abs(composed.p)),
            abs(composed.q - chart.q.finite()) / (1.0 + abs(composed.q)),
        )
        worst_compose = max(worst_compose, _coeff_resid(
            CirculantOperator.from_pq(*composed), op @ op2))

    fixed = 0.0
    si = structural_identities(1.0 / 3.0, 2.0 / 3.0)
    for got, want in (
        (si.j1, (0.8, 2.0 / 3.0)),
        (si.j2, (1.0 / 3.0, 0.2)),
        (si.swap, (2.0 / 3.0, 1.0 / 3.0)),
    ):
        fixed = max(fixed, abs(got.p - want[0]), abs(got.q - want[1]))
    si = structural_identities(1.0 / 3.0, 0.6)
    fixed = max(fixed, abs(si.antipode.p - si.swap.p), abs(si.antipode.q - si.swap.q))

    typed_ok = True
    try:
        compose_pq((1.0 / 3.0, 0.25), (-7.0 / 8.0, -1.0 / 9.0))
        typed_ok = False
    except IndeterminateComponent as exc:
        typed_ok = typed_ok and exc.component == "p" and abs(exc.other - 1.0) <= 1e-9
    except ChartEscape:
        typed_ok = False
    try:
        compose_pq((1.0 / 3.0, 0.25), (-2.0 / 7.0, -0.6))
        typed_ok = False
    except ChartEscape as exc:
        typed_ok = typed_ok and exc.component == "p" and abs(exc.other - 29.0 / 35.0) <= 1e-9
    except IndeterminateComponent:
        typed_ok = False
    finite_pair = compose_pq((1.0 / 3.0, 0.25), (-2.0 / 7.0, 0.2))
    fixed = max(fixed, abs(finite_pair.p - 17.0 / 30.0), abs(finite_pair.q - 227.0 / 305.0))

    worst_reflect = 0.0
    for _ in range(100):
        t = _sample_triple(rng)
        rp = reflection_params(t)
        a, b, c = t.vertices
        for pair, image in (
            (rp.swap_bc, (a, c, b)),
            (rp.swap_ab, (b, a, c)),
            (rp.swap_ac, (c, b, a)),
        ):
            if not is_reflection_param(*pair):
                typed_ok = False
            got = CirculantOperator.from_pq(*pair).apply(t)
            worst_reflect = max(
                worst_reflect,
                max(abs(x - y) for x, y in zip(got.vertices, image)) / t.scale,
            )
        pz = _sample_disk(rng, 2.0)
        if abs(pz - 1.0) < 0.2 or abs(pz) < 0.2:
            continue
        qz = pz / (pz - 1.0)
        if not is_reflection_param(pz, qz):
            typed_ok = False
        opr = CirculantOperator.from_pq(pz, qz)
        bz, cz = _sample_disk(rng, 2.0), _sample_disk(rng, 2.0)
        if abs(bz - cz) < 0.2:
            continue
        # the triple matched by (p, p/(p-1)) has first vertex q*b + (1-q)*c
        az = qz * bz + (1.0 - qz) * cz
        sc = max(abs(az - bz), abs(bz - cz), abs(cz - az))
        if min(abs(az - bz), abs(az - cz)) < 0.05 * sc:
            continue
        got = opr.apply(TriangleTriple(az, bz, cz))
        want = (az, cz, bz)
        worst_reflect = max(worst_reflect, max(abs(x - y) for x, y in zip(got.vertices, want)) / sc)

    passed = (worst <= 1e-12 and worst_compose <= 1e-9 and fixed <= 1e-12
              and typed_ok and worst_reflect <= 1e-9)
    return CheckResult(
        "operator_identities", passed,
        f"companion identities {worst:.2e} (tol 1e-12), chart composition {worst_compose:.2e} "
        f"(tol 1e-9), pinned pairs {fixed:.2e}, transpositions {worst_reflect:.2e} "
        f"(tol 1e-9), typed degeneracies {'ok' if typed_ok else 'WRONG'}",
    )


def check_chart_equations() -> CheckResult:
    """The (p, q) chart on the unit torus satisfies its reflection, swap and
    kernel-bridge functional equations wherever all terms are finite."""
    rng = random.Random(808)
    worst = 0.0
    fixed = max(
        abs(torus_q(-1.0, 1.0) - RHO),
        abs(r_ratio(-1.0, 1.0).finite() + 1.0 / math.sqrt(3.0)),
    )
    done = 0
    while done < 1000:
        x = cmath.rect(1.0, rng.uniform(0.0, 2.0 * math.pi))
        y = cmath.rect(1.0, rng.uniform(0.0, 2.0 * math.pi))
        if abs(x - y) < 0.05:
            continue
        try:
            values = [torus_p(x, y), torus_q(x, y), torus_p(y, x), torus_q(y, x)]
            r = r_ratio(x, y).finite()
        except (PoleAtInput, IndeterminateValue, ValueError):
            continue
        if max(abs(v) for v in values) > 50.0 or abs(r) > 50.0 or abs(r + math.sqrt(3.0)) < 0.05:
            continue
        res = functional_equation_residuals(torus_point(x, y))
        fields = (res.p_via_q, res.p_reflection, res.q_reflection, res.p_swap,
                  res.q_swap, res.r_antisymmetry, res.r_conjugation, res.q_r_bridge)
        if any(f is None for f in fields):
            continue
        worst = max(worst, *fields)
        done += 1
    passed = worst <= 1e-10 and fixed <= 1e-12
    return CheckResult(
        "chart_equations", passed,
        f"max residual {worst:.2e} over 1000 torus points (tol 1e-10), pinned values {fixed:.2e}",
    )


def check_regularity_agreement() -> CheckResult:
    """The half-plane description of regularity agrees with |xi| <= 1 on all
    four strata of parameter space, including the doubly indeterminate
    center."""
    rng = random.Random(909)
    mismatches = 0
    checked = 0
    bad_orient = 0
    probe = make_triple(0.0, 1.0, complex(0.4, 0.9))

    def record(p: complex, q: complex, expect_regular: bool) -> None:
        nonlocal mismatches, checked, bad_orient
        op = CirculantOperator.from_pq(p, q)
        geo = is_regular_geometric(p, q)
        cls = classify(op)
        if geo != expect_regular or cls.is_regular != expect_regular:
            mismatches += 1
        elif expect_regular and orientation(op.apply(probe)) is not Orientation.POSITIVE:
            img = op.apply(probe)
            phi = shape_modulus(probe)
            if not (phi.is_infinite or img.is_degenerate):
                bad_orient += 1
        checked += 1

    while checked < 250:  # diagonal stratum
        z = _sample_disk(rng, 2.0)
        if abs(z - 0.5) < 0.05 or abs(z - 1.0) < 0.05 or abs(z + 1.0) < 0.05:
            continue
        record(z, z, True)

    def q_for_t(p: complex, t: complex) -> complex | None:
        den = 2.0 * (p - 1.0) + t
        if abs(den) < 0.1:
            return None
        return (t * p + p - 1.0) / den

    strata = ((0.0, 0.0, True), (0.05, 3.0, True), (-3.0, -0.05, False))
    for lo, hi, expect in strata:
        n = 0
        while n < 250:
            p = _sample_disk(rng, 2.0)
            if abs(p - 1.0) < 0.05 or abs(p - 0.5) < 0.05:
                continue
            t = complex(rng.uniform(-3.0, 3.0), rng.uniform(lo, hi))
            if abs(t - RHO) < 0.05 or abs(t - RHO.conjugate()) < 0.05:
                continue
            q = q_for_t(p, t)
            if q is None or abs(p - q) < 0.01:
                continue
            try:
                got_t, _ = t_xi_from_pq(p, q)
            except IndeterminateValue:
                continue
            if got_t.is_infinite or abs(got_t.finite() - t) > 1e-6 * (1.0 + abs(t)):
                continue
            try:
                record(p, q, expect)
            except InvalidParameters:
                continue
            n += 1

    center_ok = True
    op = CirculantOperator.from_pq(0.5, 0.5)
    c = classify(op)
    if is_regular_geometric(0.5, 0.5) or c.is_regular or c.xi is not None or not c.collapses_moduli:
        center_ok = False

    passed = mismatches == 0 and bad_orient == 0 and center_ok
    return CheckResult(
        "regularity_agreement", passed,
        f"{mismatches} predicate mismatches and {bad_orient} orientation violations over "
        f"{checked} stratified samples; center pair {'ok' if center_ok else 'WRONG'}",
    )


def check_conic_chart() -> CheckResult:
    """The rational map onto u^2 + uv + v^2 = 1 lands on the conic, inverts
    off its v = 0 section, and sends the infinite point to (-1, 1)."""
    rng = random.Random(1010)
    worst_member = 0.0
    worst_round = 0.0
    for _ in range(1000):
        tv = rng.uniform(-20.0, 20.0)
        el = torus_element(complex(tv, 0.0))
        u, v = to_conic(el)
        scale = max(1.0, abs(u), abs(v)) ** 2
        worst_member = max(worst_member, abs(u * u + u * v + v * v - 1.0) / scale)
        if abs(v) < 1e-6 * max(1.0, abs(u)):
            continue
        back = from_conic((u, v))
        worst_round = max(worst_round, abs(back.finite() - tv) / (1.0 + abs(tv)))

    edge_ok = True
    pt = to_conic(TorusElement(INFINITY))
    if pt != (-1.0 + 0j, 1.0 + 0j):
        edge_ok = False
    if not from_conic((-1.0, 1.0)).is_infinite:
        edge_ok = False
    for bad in ((1.0, 0.0), (-1.0, 0.0)):
        try:
            from_conic(bad)
            edge_ok = False
        except ConicChartFailure:
            pass
    try:
        conic_point(0.5, 0.5)
        edge_ok = False
    except InvalidParameters:
        pass
    zero_u, zero_v = to_conic(ZERO)
    two_u, two_v = to_conic(torus_element(2.0))
    if abs(zero_u - 1.0) > 1e-12 or abs(zero_v) > 1e-12:
        edge_ok = False
    if abs(two_u + 1.0) > 1e-12 or abs(two_v) > 1e-12:
        edge_ok = False

    passed = worst_member <= 1e-10 and worst_round <= 1e-9 and edge_ok
    return CheckResult(
        "conic_chart", passed,
        f"membership {worst_member:.2e} (tol 1e-10), roundtrip {worst_round:.2e} (tol 1e-9), "
        f"edge cases {'ok' if edge_ok else 'WRONG'}",
    )


def check_brocard_angle() -> CheckResult:
    """The spectral Brocard cotangent equals the classical
    (sum of squared side lengths)/(4 area)."""
    rng = random.Random(1111)
    worst = 0.0
    for _ in range(500):
        t = _sample_triple(rng)
        classical = (abs(t.a - t.b) ** 2 + abs(t.b - t.c) ** 2 + abs(t.c - t.a) ** 2) / (4.0 * area(t))
        worst = max(worst, abs(brocard_cot(t) - classical) / classical)
    eq = inverse_fourier(FourierVector(0j, 1.0 + 0j, 0j))
    fixed = abs(brocard_cot(eq) - math.sqrt(3.0))
    passed = worst <= 1e-9 and fixed <= 1e-12
    return CheckResult(
        "brocard_angle", passed,
        f"max relative gap {worst:.2e} over 500 triples (tol 1e-9), equilateral value {fixed:.2e}",
    )


# ------------------------------------------------------------- the suites

CHECKS: dict[str, Callable[[], CheckResult]] = {
    "routh_ratio": check_routh_ratio,
    "equilateral_collapse": check_equilateral_collapse,
    "orbit_periodicity": check_orbit_periodicity,
    "area_formulas": check_area_formulas,
    "moduli_scaling": check_moduli_scaling,
    "torus_group_law": check_torus_group_law,
    "operator_identities": check_operator_identities,
    "chart_equations": check_chart_equations,
    "regularity_agreement": check_regularity_agreement,
    "conic_chart": check_conic_chart,
    "brocard_angle": check_brocard_angle,
}

SUITES: dict[str, tuple[str, ...]] = {
    "routh": ("routh_ratio",),
    "napoleon": ("equilateral_collapse",),
    "orbits": ("orbit_periodicity",),
    "area": ("area_formulas", "brocard_angle"),
    "identities": ("moduli_scaling", "operator_identities", "chart_equations",
                   "regularity_agreement"),
    "torus": ("torus_group_law", "conic_chart"),
    "all": tuple(CHECKS),
}


def run_check(name: str) -> CheckResult:
    if name not in CHECKS:
        raise InvalidParameters(f"unknown check {name!r}")
    return CHECKS[name]()


def run_suite(suite: str) -> list[CheckResult]:
    if suite not in SUITES:
        raise InvalidParameters(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    return [CHECKS[name]() for name in SUITES[suite]]
