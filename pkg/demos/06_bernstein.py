# Bernstein approximants in the monomial basis, exactly.
from fractions import Fraction

from hardymuntz import bernstein_approximant, bernstein_basis, min_support_degree
from hardymuntz.bernstein import sample

print("b_{2,4}(x) =", bernstein_basis(2, 4), " lowest power:", min_support_degree(bernstein_basis(2, 4)))

for n in (2, 5, 10):
    p = bernstein_approximant(sample(lambda t: t * t, n), n)
    print(f"B_{n}(x^2) =", p)

# a function vanishing on [0, 1/2]: its approximant only uses high powers
f = lambda t: max(t - Fraction(1, 2), Fraction(0))
for n in (4, 8, 12):
    p = bernstein_approximant(sample(f, n), n)
    print(f"n={n:<3} lowest power in B_n f: {min_support_degree(p)}")
