"""Exact computations with thin flat surfaces and their rational evaluations."""

from .cobordism import (
    Cobordism,
    CobordismError,
    FloatingComponent,
    SpliceError,
    Token,
    ViewableComponent,
    canonicalize,
    close_up,
    compose,
    identity,
    make_cobordism,
    make_generator,
    reflect,
    split_minimal,
    tensor,
)
from .gligible import dim_series, gram, is_negligible, state_dim, state_multiply, trace_alpha
from .hilbert import (
    HilbertPoint,
    classify_point,
    gram_point,
    point_to_series,
    point_validate,
    rec1_chart,
)
from .parser import ArityError, ParseError, elaborate, format_cobordism, parse
from .poly import Poly2
from .series import (
    CoeffTable,
    FrobeniusPresentation,
    RationalForm,
    SyntacticAlgebra,
    as_frobenius,
    beta_pack,
    beta_unpack,
    coeff,
    coeff_table,
    evaluate_floating,
    fit_rational,
    frobenius_to_rational,
    hankel,
    normal_form,
    rational_equal,
    syntactic_algebra,
)
from .skein import (
    SkeinBasisElement,
    SkeinVector,
    enumerate_minimal,
    reduce,
    skein_compose,
    skein_dim,
)

__version__ = "0.1.0"
