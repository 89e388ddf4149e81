"""End-to-end acceptance gate.

One test per verification check.  Each records its PASS/FAIL line in
VERDICT_LINES, which conftest.py replays in the terminal summary so a full
run always shows the per-property verdicts; on failure the assertion
carries the check's own residual summary.
"""

from triops.verify import format_result, run_check

VERDICT_LINES: list[str] = []


def _run(name: str) -> None:
    result = run_check(name)
    line = format_result(result)
    VERDICT_LINES.append(line)
    print(line)
    assert result.passed, result.detail


def test_septupling_area_ratio():
    _run("routh_ratio")


def test_collapse_to_equilateral():
    _run("equilateral_collapse")


def test_orbit_periods_and_closure():
    _run("orbit_periodicity")


def test_area_formulas_and_ratios():
    _run("area_formulas")


def test_shape_modulus_scaling():
    _run("moduli_scaling")


def test_parameter_group_law():
    _run("torus_group_law")


def test_structural_operator_identities():
    _run("operator_identities")


def test_chart_functional_equations():
    _run("chart_equations")


def test_regularity_characterization():
    _run("regularity_agreement")


def test_conic_parametrization():
    _run("conic_chart")


def test_brocard_angle_formulas():
    _run("brocard_angle")
