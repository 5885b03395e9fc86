# Hardy's operator on polynomials: eigenvalues, the sum-of-squares identity
# and the two norm bounds, all in exact arithmetic.
from fractions import Fraction

from hardymuntz import apply, builtin_operator, hardy_identity_terms, operator_norm_lower_bound
from hardymuntz.l2poly import Polynomial, X, inner_product, polynomial_corpus

H = builtin_operator("hardy")

# monomials are eigenvectors: H x^k = x^k / (k+1)
for k in range(5):
    print(f"H x^{k} =", apply(H, X ** k))

# |p|^2 = |(1-H)p|^2 + (int_0^1 p)^2 for a concrete polynomial
p = Polynomial([Fraction(1, 2), -3, 0, Fraction(7, 4)])
lhs, contraction, integral_sq = hardy_identity_terms(p)
print(f"\n|p|^2 = {lhs}")
print(f"|(1-H)p|^2 + (int p)^2 = {contraction} + {integral_sq} = {contraction + integral_sq}")

# consequences: |1-H| <= 1, hence |H| <= 2
worst = max(inner_product(apply(H, q), apply(H, q)) / inner_product(q, q)
            for q in polynomial_corpus(0, 100, 20))
print(f"\nlargest |Hq|^2/|q|^2 over 100 random polynomials: {float(worst):.4f} (bound 4)")
print("randomized witness for |H|:", operator_norm_lower_bound(H, 20, 200, 1))
