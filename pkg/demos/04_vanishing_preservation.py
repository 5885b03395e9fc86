# A monomial operator keeps functions vanishing on [0, s] vanishing there.
# Approximate chi_[s,1] by p_n in a drifting window, apply T, and watch the
# mass of T p_n on [0, s] go to zero.
from fractions import Fraction

from hardymuntz import vanishing_preservation_experiment

rho = Fraction(1, 2)
for op in ("hardy", "volterra", "mult_x"):
    rows = vanishing_preservation_experiment(op, rho, 40)
    print(op)
    for n, dist_sq, leak_sq in rows:
        if n in (1, 5, 10, 20, 40):
            print(f"  n={n:<3} dist^2={float(dist_sq):.3e}  leak^2={float(leak_sq):.3e}")
