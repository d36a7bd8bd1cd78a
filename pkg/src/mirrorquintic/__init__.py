"""Exact computation of the Eisenstein-type q-expansions attached to the
mirror-quintic family: the seven-variable differential system and its series
solution, the Picard-Fuchs period route, instanton numbers and Gromov-Witten
invariants, the j-expansion, and symbolic verification of the Gauss-Manin
identities behind them.
"""

from .enumerative import (
    GWTable,
    InstantonTable,
    conjecture_check,
    gw_from_instanton,
    instanton_from_gw,
    j_expansion,
    lambert_compose,
    lambert_extract,
)
from .epsring import EPS_RING, EpsElement, frobenius_coefficient
from .instances import (
    eisenstein_series,
    quintic_instance,
    quintic_seed,
    ramanujan_instance,
    ramanujan_seed,
)
from .logseries import LogSeries
from .multipoly import MultiPoly, MultiRat, poly
from .odesolve import (
    BranchAssignment,
    SeedData,
    SeriesSolution,
    VectorFieldInstance,
    check_weighted_homogeneity,
    residual_check,
    solve_branch_constraints,
    solve_qseries,
)
from .periods import (
    FrobeniusBasis,
    MirrorMap,
    build_frobenius,
    build_mirror_map,
    pf_annihilation_check,
    q31_q14_check,
    t0_t4_from_periods,
    yukawa_from_periods,
)
from .pipeline import (
    instanton_table,
    j_series,
    quintic_solution,
    ramanujan_solution,
    run_suite,
    yukawa_series,
)
from .rational import RATIONAL_BACKEND, Rational, rat
from .series import QQ, CoefficientRing, TruncatedSeries

__version__ = "0.1.0"
