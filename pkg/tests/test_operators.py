import json
import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from triops.errors import (
    ChartEscape,
    DerivedParameterUndefined,
    IndeterminateComponent,
    IndeterminateValue,
    InvalidParameters,
)
from triops.geometry import OMEGA2, make_triple
from triops.operators import (
    CYCLE,
    CYCLE_SQUARED,
    IDENTITY,
    CirculantOperator,
    classification_report,
    classify,
    compose_pq,
    is_reflection_param,
    is_regular_geometric,
    reflection_params,
    structural_identities,
    t_xi_from_pq,
    weighted_mean,
)

_vals = st.floats(-3.0, 3.0, allow_nan=False, allow_infinity=False)
_cvals = st.builds(complex, _vals, _vals)


def _pq_pairs(pair):
    p, q = pair
    assume(abs(1.0 - p * q) > 0.05)
    assume(abs(p - 1.0) > 0.01 or abs(q - 1.0) > 0.01)
    return p, q


pq_pairs = st.tuples(_cvals, _cvals).map(_pq_pairs)


def _close(op1, op2, tol=1e-12):
    return max(abs(x - y) for x, y in zip(op1.coefficients, op2.coefficients)) <= tol


def test_from_pq_frozen_coefficients():
    op = CirculantOperator.from_pq(1.0 / 3.0, 2.0 / 3.0)
    assert op.alpha == pytest.approx(1.0 / 7.0, abs=1e-15)
    assert op.beta == pytest.approx(4.0 / 7.0, abs=1e-15)
    assert op.gamma == pytest.approx(2.0 / 7.0, abs=1e-15)


def test_from_pq_labels():
    assert _close(CirculantOperator.from_pq(0.0, 0.0), CYCLE_SQUARED)
    assert _close(CirculantOperator.from_pq(1.0, 0.5), IDENTITY)
    assert _close(CirculantOperator.from_pq(0.5, 1.0), CYCLE)


def test_from_pq_invalid():
    with pytest.raises(InvalidParameters):
        CirculantOperator.from_pq(2.0, 0.5)  # pq = 1
    with pytest.raises(InvalidParameters):
        CirculantOperator.from_pq(1.0, 1.0)


@given(pq_pairs)
def test_coefficients_sum_to_one(pair):
    op = CirculantOperator.from_pq(*pair)
    total = op.alpha + op.beta + op.gamma
    scale = 1.0 + max(abs(z) for z in op.coefficients)
    assert abs(total - 1.0) <= 1e-12 * scale


@given(_cvals, _cvals)
def test_eta_chart_roundtrip(eta, etap):
    op = CirculantOperator.from_eta(eta, etap)
    got = op.eta_pair()
    assert abs(got.eta - eta) <= 1e-12 * (1.0 + abs(eta))
    assert abs(got.etap - etap) <= 1e-12 * (1.0 + abs(etap))


@given(pq_pairs)
def test_pq_chart_roundtrip(pair):
    # p = 1 or q = 1 have indeterminate chart components; tested separately
    assume(abs(pair[0] - 1.0) > 0.01 and abs(pair[1] - 1.0) > 0.01)
    chart = CirculantOperator.from_pq(*pair).pq_chart()
    assert chart.p is not None and not chart.p.is_infinite
    assert chart.q is not None and not chart.q.is_infinite
    scale = 1.0 + abs(pair[0]) + abs(pair[1])
    assert abs(chart.p.finite() - pair[0]) <= 1e-8 * scale ** 2
    assert abs(chart.q.finite() - pair[1]) <= 1e-8 * scale ** 2


def test_pq_chart_of_labels():
    chart = CYCLE.pq_chart()
    assert chart.p is None  # 0/0: the cycle has no preferred p
    assert chart.q.finite() == pytest.approx(1.0)
    chart = IDENTITY.pq_chart()
    assert chart.p.finite() == pytest.approx(1.0)
    assert chart.q is None
    chart = CYCLE_SQUARED.pq_chart()
    assert chart.p.finite() == pytest.approx(0.0)
    assert chart.q.finite() == pytest.approx(0.0)


def test_apply_labels():
    t = make_triple(0.0, 1.0, 1.0j)
    assert CYCLE.apply(t).vertices == (1.0, 1.0j, 0.0)
    assert CYCLE_SQUARED.apply(t).vertices == (1.0j, 0.0, 1.0)
    assert IDENTITY.apply(t).vertices == t.vertices
    assert _close(CYCLE @ CYCLE @ CYCLE, IDENTITY)


@given(_cvals, _cvals, _cvals, _cvals)
def test_compose_multiplies_eigenvalues(e1, e2, f1, f2):
    op = CirculantOperator.from_eta(e1, e2) @ CirculantOperator.from_eta(f1, f2)
    got = op.eta_pair()
    scale = (1.0 + abs(e1) + abs(e2)) * (1.0 + abs(f1) + abs(f2))
    assert abs(got.eta - e1 * f1) <= 1e-12 * scale
    assert abs(got.etap - e2 * f2) <= 1e-12 * scale


@given(_cvals, _cvals, _cvals, _cvals)
def test_compose_commutes(e1, e2, f1, f2):
    a = CirculantOperator.from_eta(e1, e2)
    b = CirculantOperator.from_eta(f1, f2)
    scale = (1.0 + abs(e1) + abs(e2)) * (1.0 + abs(f1) + abs(f2))
    assert _close(a @ b, b @ a, tol=1e-12 * scale)


@given(pq_pairs)
def test_apply_is_operator_action(pair):
    t = make_triple(0.0, 1.0, complex(0.3, 1.1))
    op = CirculantOperator.from_pq(*pair)
    a, b, c = t.vertices
    img = op.apply(t)
    assert img.a == op.alpha * a + op.beta * b + op.gamma * c
    assert img.b == op.alpha * b + op.beta * c + op.gamma * a
    assert img.c == op.alpha * c + op.beta * a + op.gamma * b


def test_weighted_mean_endpoints():
    assert _close(weighted_mean(0.0, CYCLE, IDENTITY), CYCLE)
    assert _close(weighted_mean(1.0, CYCLE, IDENTITY), IDENTITY)


def test_t_xi_fixed_values():
    t, xi = t_xi_from_pq(1.0 / 3.0, 2.0 / 3.0)
    assert t.finite() == pytest.approx(2.0 / 3.0, rel=1e-12)
    t, xi = t_xi_from_pq(0.3, 0.3)
    assert t.is_infinite
    assert xi.finite() == pytest.approx(OMEGA2, rel=1e-12)
    with pytest.raises(IndeterminateValue):
        t_xi_from_pq(1.0, 1.0)
    with pytest.raises(IndeterminateValue):
        t_xi_from_pq(0.5, 0.5)


def test_classify_labels():
    c = classify(IDENTITY)
    assert c.is_identity and c.is_cyclic_permutation and c.is_regular
    assert c.is_normal and c.is_area_preserving and not c.collapses_moduli
    c = classify(CYCLE)
    assert not c.is_identity and c.is_cyclic_permutation and c.is_area_preserving
    c = classify(CirculantOperator.from_pq(0.5, 0.5))
    assert c.xi is None and c.t is None
    assert not c.is_regular and not c.is_normal and c.collapses_moduli
    napoleon = CirculantOperator.from_pq(0.0, (1.0 - OMEGA2) / 3.0)
    c = classify(napoleon)
    assert c.collapses_moduli and c.is_regular and not c.is_normal
    assert abs(c.xi.finite()) <= 1e-12


def test_classification_report_json():
    report = classification_report(CirculantOperator.from_pq(1.0 / 3.0, 2.0 / 3.0))
    parsed = json.loads(json.dumps(report))
    assert parsed["regular"] is True and parsed["normal"] is True
    assert parsed["p"]["re"] == pytest.approx(1.0 / 3.0)
    report = classification_report(CirculantOperator.from_pq(0.5, 0.5))
    assert report["xi"] is None and report["t"] is None
    report = classification_report(CirculantOperator.from_eta(1.0, 0.0))
    assert report["xi"] == "inf"
    report = classification_report(CYCLE)
    assert report["p"] is None and report["q"]["re"] == pytest.approx(1.0)


@given(pq_pairs, pq_pairs)
def test_compose_pq_matches_coefficients(pair1, pair2):
    try:
        composed = compose_pq(pair1, pair2)
    except (ChartEscape, IndeterminateComponent):
        return
    op = CirculantOperator.from_pq(*pair1) @ CirculantOperator.from_pq(*pair2)
    chart = op.pq_chart()
    assume(chart.p is not None and chart.q is not None)
    assume(not chart.p.is_infinite and not chart.q.is_infinite)
    assume(abs(composed.p) < 1e3 and abs(composed.q) < 1e3)
    assert abs(composed.p - chart.p.finite()) <= 1e-6 * (1.0 + abs(composed.p)) ** 2
    assert abs(composed.q - chart.q.finite()) <= 1e-6 * (1.0 + abs(composed.q)) ** 2


def test_compose_pq_typed_degeneracies():
    with pytest.raises(IndeterminateComponent) as exc:
        compose_pq((1.0 / 3.0, 0.25), (-7.0 / 8.0, -1.0 / 9.0))
    assert exc.value.component == "p"
    assert exc.value.other == pytest.approx(1.0)
    with pytest.raises(ChartEscape) as exc:
        compose_pq((1.0 / 3.0, 0.25), (-2.0 / 7.0, -0.6))
    assert exc.value.component == "p"
    assert exc.value.other == pytest.approx(29.0 / 35.0)
    pair = compose_pq((1.0 / 3.0, 0.25), (-2.0 / 7.0, 0.2))
    assert pair.p == pytest.approx(17.0 / 30.0, rel=1e-12)
    assert pair.q == pytest.approx(227.0 / 305.0, rel=1e-12)


def test_structural_identities_routh():
    si = structural_identities(1.0 / 3.0, 2.0 / 3.0)
    assert si.swap.p == pytest.approx(2.0 / 3.0) and si.swap.q == pytest.approx(1.0 / 3.0)
    assert si.j1.p == pytest.approx(0.8) and si.j1.q == pytest.approx(2.0 / 3.0)
    assert si.j2.p == pytest.approx(1.0 / 3.0) and si.j2.q == pytest.approx(0.2)


def test_structural_identities_point_symmetric():
    p, q = 1.0 / 3.0, 0.6
    assert abs(4.0 * p * q - 3.0 * p - 3.0 * q + 2.0) < 1e-15
    si = structural_identities(p, q)
    assert si.antipode.p == pytest.approx(si.swap.p, rel=1e-12)
    assert si.antipode.q == pytest.approx(si.swap.q, rel=1e-12)


def test_structural_identities_undefined():
    with pytest.raises(DerivedParameterUndefined):
        structural_identities(0.0, 0.0)  # 2pq - p - q = 0


def test_reflection_characterization():
    assert is_reflection_param(2.0, 2.0)  # pq = 4 = p + q
    assert not is_reflection_param(1.0 / 3.0, 2.0 / 3.0)
    t = make_triple(0.0, 2.0, complex(0.5, 1.7))
    rp = reflection_params(t)
    a, b, c = t.vertices
    for pair, image in (
        (rp.swap_bc, (a, c, b)),
        (rp.swap_ab, (b, a, c)),
        (rp.swap_ac, (c, b, a)),
    ):
        assert is_reflection_param(*pair)
        got = CirculantOperator.from_pq(*pair).apply(t)
        assert max(abs(x - y) for x, y in zip(got.vertices, image)) <= 1e-12 * t.scale


def test_regular_geometric_spot_values():
    assert is_regular_geometric(0.3, 0.3)  # diagonal away from 1/2
    assert not is_regular_geometric(0.5, 0.5)
    assert is_regular_geometric(1.0 / 3.0, 2.0 / 3.0)  # real t
    # p = 0, q = -i gives t = (-1)(-2i-1)/(i) = 2 - i, lower half plane
    t, _ = t_xi_from_pq(0.0, -1.0j)
    assert t.finite() == pytest.approx(2.0 - 1.0j, rel=1e-12)
    assert not is_regular_geometric(0.0, -1.0j)


def test_degenerate_output_is_flagged_not_raised():
    # averaging operator sends everything to the centroid: a point triple
    op = CirculantOperator(1 / 3, 1 / 3, 1 / 3)
    img = op.apply(make_triple(0.0, 1.0, 1.0j))
    assert img.is_degenerate
    assert math.isclose(abs(img.a - img.b), 0.0, abs_tol=1e-15)
