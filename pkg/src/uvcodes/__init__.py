"""Cyclic codes over F_p[u, v] / <u^k, v^2, uv - vu>."""

from .errors import BudgetError, DomainError, ParseError, StructuralError, UVCodesError
from .ring import RingElement, RingParams, is_prime, units
from .poly import (ExpansionKind, FpPoly, PadicProfile, RingPoly, factor_xn_minus_1,
                   fp_gcd, fp_xgcd, padic_classify, poly_divmod, poly_is_regular)
from .code import (CoprimeForm, CyclicCode, GeneratorSet, StructureReport, TowerProfile,
                   canonical_generators, coprime_form, express_in_generators, is_free,
                   span_closure, tower, verify_structure)

__version__ = "0.1.0"
