"""Exact local Rankin-Selberg L-factors for Steinberg/Speh pairs on GL(n).

Symbolic engine over Q(u), u = q^(1/2): cuspidal segment combinatorics,
closed-form L-factors with exact partial fractions, Whittaker torus values
via Schur polynomials, and truncated torus-sum evaluation of the unramified
integrals, compared coefficientwise against the closed forms.
"""

from .halfint import as_fraction, format_half, parse_half, twice
from .integrals import (
    CongruenceShape,
    FullLattice,
    IntegralSpec,
    PoleSumReport,
    Verdict,
    check_partial_fraction_identity,
    dominant_cocharacters,
    equal_size_series,
    hecke_series,
    torus_series,
    verify_identity,
)
from .lfactors import (
    LFactorSpec,
    PartialFraction,
    l_cuspidal_pair,
    l_steinberg_pair,
    partial_fractions,
    recombine,
)
from .parser import ParseError, SemanticError, format_descriptor, parse_descriptor
from .ratfunc import (
    RationalFunction,
    TruncatedSeries,
    XPoly,
    rf_expand,
    rf_normalize,
    series_eq,
)
from .scalars import BaseScalar, UPoly, base_add, base_div, base_mul
from .segments import (
    CuspidalDatum,
    Kind,
    RepDescriptor,
    Segment,
    derivative_multiset,
    is_generic_product,
    is_standard,
    linked,
    precedes,
    product_factors,
    zelevinsky_dual_discrete,
)
from .verify import CheckResult, named_case, run_suite
from .whittaker import (
    Cocharacter,
    EssentialSteinberg,
    SatakeParams,
    Spherical,
    TorusFunction,
    UnramifiedCharacter,
    complete_homogeneous,
    essential_value,
    schur,
    schur_bialternant,
    spherical_value,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
