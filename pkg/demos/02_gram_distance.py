# Distance to a span of monomials three ways: Gram determinant ratio,
# the Cauchy product formula, and solving the normal equations.
from fractions import Fraction

from hardymuntz import (DriftWindow, IndicatorTail, Poly, Polynomial, bareiss_determinant,
                        cauchy_determinant, distance_sq_via_gram, gram_det_closed_form,
                        gram_matrix, monomial_distance_sq_closed_form, project)
from hardymuntz.gram import cauchy_nodes

exps = [0, 1, 2, 3]
print("det of the 4x4 Hilbert matrix")
print("  elimination :", bareiss_determinant(gram_matrix(exps)))
print("  closed form :", gram_det_closed_form(exps))
print("  Cauchy      :", cauchy_determinant(*cauchy_nodes(exps)))

# fractional exponents work through the closed forms
half = [Fraction(1, 2), Fraction(3, 2), Fraction(5, 2)]
print("\ndet G(x^1/2, x^3/2, x^5/2) =", gram_det_closed_form(half))
print("dist(1, span{x^1/2, x^3/2, x^5/2})^2 =", monomial_distance_sq_closed_form(0, half))

one = Poly(Polynomial([1]))
for n, N in [(1, 0), (3, 3), (10, 10)]:
    w = DriftWindow(n, N)
    print(f"\nwindow {w.exponents[0]}..{w.exponents[-1]}")
    print("  Gram ratio      :", distance_sq_via_gram(one, w.exponents))
    print("  normal equations:", project(one, w)[1])
    print("  (n/(n+N+1))^2   :", Fraction(n, n + N + 1) ** 2)

chi = IndicatorTail(Fraction(1, 4))
p, d = project(chi, DriftWindow(2, 3))
print("\nprojection of chi_[1/4,1] onto span{x^2..x^5}:", p)
print("squared distance:", d, "~", float(d))
