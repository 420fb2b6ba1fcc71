"""Exact chi_y-genus synthesis and Betti/Hodge/Chern constraint checking."""

from .constraints import (
    ConstraintReport,
    NotApplicable,
    Status,
    c1cn1_lower_bound,
    c2cn2_lower_bound,
    calabi_yau_residual,
    minus_one_consistency,
    salamon_residual,
)
from .genus import (
    ChernNumbers,
    chern_monomial,
    chern_power_moments,
    duality_residual,
    evaluate_genus,
    hrr_genus_formula,
    taylor_at_minus_one,
)
from .hodge import (
    BettiVector,
    HodgeDiamond,
    MomentSpec,
    Tier,
    betti_from_diamond,
    chi_profile,
    f_moment,
    h_moment,
    poincare_polynomial,
    predicates,
    validate,
)
from .kernel import (
    ChernPolynomial,
    TruncatedSeries,
    YPoly,
    genus_expand,
    partition,
    power_sum_in_elementary,
    series_arith,
)
from .localization import (
    FixedPoint,
    FixedPointData,
    hamiltonian_obstruction_report,
    localized_chi_y,
    localized_poincare,
    morse_indices,
)
from .manifest import ManifestError, ManifoldManifest, parse_manifest

__version__ = "0.1.0"
