# Uniform approximation of f(x) = ((x - 1/4)^+)^2 from drifting windows:
# project g = f' onto M_n, integrate with V, and measure the grid sup error.
from fractions import Fraction

from hardymuntz import continuous_case_experiment

for n, sup_err in continuous_case_experiment(Fraction(1, 2), 40, 1001):
    if n in (1, 2, 5, 10, 20, 30, 40):
        print(f"n={n:<3} sup |V p_n - f| = {sup_err:.3e}")

# The monomial coefficients of V p_n reach ~1e42 at n=40, so the grid is
# evaluated exactly; binary64 Horner would return noise of order 1e26.
