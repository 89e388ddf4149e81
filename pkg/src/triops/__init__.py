"""Circulant operators on triangle triples.

The family alpha*I + beta*J + gamma*J^2 (J the cyclic relabeling, with
alpha + beta + gamma = 1) acts on triangles in the complex plane.  This
package provides the operator algebra in its parameter and eigenvalue
charts, the induced action on the disk of triangle shapes, the abelian
group structure of the parameter line, area and Brocard-angle formulas,
and the orbit dynamics of the area-preserving sub-family, plus a CLI.
"""

from .dynamics import (
    ApOperator,
    FunctionalEquationResiduals,
    TorusPoint,
    functional_equation_residuals,
    make_ap,
    normalize_angle,
    parse_angle,
    q_centered,
    r_ratio,
    torus_p,
    torus_point,
    torus_q,
)
from .errors import (
    AngleConstraintViolated,
    ChartEscape,
    CoincidentVertices,
    ConicChartFailure,
    DegenerateTriangle,
    DerivedParameterUndefined,
    ExcludedPoint,
    IndeterminateComponent,
    IndeterminateValue,
    InvalidParameters,
    ParseError,
    PoleAtInput,
    TriopsError,
)
from .geometry import (
    INFINITY,
    OMEGA,
    OMEGA2,
    RHO,
    RHO_INV,
    FourierVector,
    Orientation,
    SphereValue,
    TriangleTriple,
    area,
    area_fourier,
    brocard_cot,
    centroid,
    fourier,
    inverse_fourier,
    make_triple,
    orientation,
    shape_modulus,
    sphere,
    sphere_ratio,
    t_of_xi,
    triple_from_csv,
    triple_to_csv,
    xi_of_t,
)
from .operators import (
    CYCLE,
    CYCLE_SQUARED,
    IDENTITY,
    CirculantOperator,
    Classification,
    EtaPair,
    PQChart,
    PQPair,
    ReflectionParams,
    StructuralIdentities,
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
from .svg import SvgScene, render_svg, render_triples, scene_from_triples
from .torus import (
    ZERO,
    ConicPoint,
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
from .verify import CheckResult, SUITES, format_result, run_check, run_suite

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
