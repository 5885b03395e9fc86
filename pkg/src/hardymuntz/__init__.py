"""Exact-arithmetic toolkit for monomial operators on L2[0,1].

Covers the Hardy, Volterra and multiplication operators acting on
polynomials, Gram and Cauchy determinants of monomials, distances to
monomial spans, drifting Muntz-Szasz windows and Bernstein approximants.
Every scalar is a :class:`fractions.Fraction`.
"""

__version__ = "0.1.0"

from .bernstein import bernstein_approximant, bernstein_basis, min_support_degree
from .exactnum import (RatMatrix, bareiss_determinant, format_rational, make_rational,
                       parse_rational, solve_exact, to_double)
from .gram import (ExponentSet, cauchy_determinant, conditioning_report, distance_sq_via_gram,
                   gram_det_closed_form, gram_matrix, monomial_distance_sq_closed_form)
from .l2poly import (IndicatorTail, Poly, Polynomial, RampTail, eval_float, inner_product,
                     moment, norm_sq)
from .muntz import (DriftWindow, WindowSchedule, continuous_case_experiment, distance_sweep,
                    project, rho, schedule_for_rho, vanishing_preservation_experiment)
from .operators import (MonomialOperator, apply, builtin_operator, hardy_identity_terms,
                        operator_norm_lower_bound, sup_contraction_check)
