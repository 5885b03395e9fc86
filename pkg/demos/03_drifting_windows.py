# Drifting windows {n, ..., n+N_n}: as n grows the span loses low powers.
# With n/(n+N_n) -> rho the reachable functions are those supported on [rho^2, 1].
from fractions import Fraction

from hardymuntz import IndicatorTail, Poly, Polynomial, WindowSchedule, distance_sweep

rho = Fraction(1, 2)
sched = WindowSchedule(rho)

print("n   N_n  dist(1, M_n)   dist(chi_[1/4,1], M_n)   dist(chi_[1/9,1], M_n)")
one = distance_sweep(Poly(Polynomial([1])), sched, 30)
inside = distance_sweep(IndicatorTail(rho ** 2), sched, 30)
outside = distance_sweep(IndicatorTail(Fraction(1, 9)), sched, 30)
for (n, d1), (_, d2), (_, d3) in zip(one, inside, outside):
    if n in (1, 2, 5, 10, 20, 30):
        print(f"{n:<3} {sched.rule(n):<4} {float(d1) ** 0.5:<14.6f} {float(d2) ** 0.5:<24.6f} "
              f"{float(d3) ** 0.5:.6f}")

# dist(1, M_n) -> rho, chi_[1/4,1] is approximated (support inside [rho^2,1]),
# chi_[1/9,1] is not (its part on [1/9, 1/4) stays out of reach)
