"""Exact Kummer-genericity computations for rationally parametrized curves.

The main entry points are :func:`analyze` for curves in the torus G_m^k and
:func:`as_component_count` for the additive analogue over F_p.
"""

__version__ = "0.1.0"

from .errors import DomainError, KummerError, ParseError, ResourceError
from .poly import Poly, RatFunc, gcdfree_basis, log_derivative, poly_gcd, squarefree_decompose
from .finite_field import factor_fp, partial_fractions, pth_root_mod
from .lattice import enumerate_kernel_mod_n, kernel_size_mod_n, rank, smith_normal_form
from .kummer import (
    KummerReport,
    TorusCurve,
    ValuationMatrix,
    analyze,
    component_count,
    is_free_alternant,
    is_free_rank,
    is_kummer_generic,
    is_n_kummer_generic,
    oracle_component_count,
    oracle_is_nth_power,
    stabilizing_level,
    valuation_matrix,
    verify_stabilizing,
)
from .artin_schreier import (
    AdditiveCurve,
    WpReducedForm,
    as_component_count,
    is_as_generic_level1,
    is_free_additive,
    is_wp_member,
    wp,
    wp_reduce,
)
from .expr import parse_curve
from .family import FamilySpec, ScanResult, degeneration_candidates, scan, specialize
