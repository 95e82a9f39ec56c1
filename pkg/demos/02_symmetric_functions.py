"""
Symmetric polynomials and the h-to-sigma dictionary
===================================================

The flag-variety relations are built from complete homogeneous symmetric
polynomials h_i, while the Grassmannian relations use the conversion
polynomials g_i with h_i(x) = g_i(sigma_1(x), ..., sigma_m(x)).  This script
shows the generators, the conversion, and the two recurrence identities the
ideal manipulations depend on.
"""

from slcc import symfunc
from slcc.symfunc import complete, elementary, g_poly, x_ring

r3 = x_ring(3)
print("sigma_2(x1,x2,x3) =", elementary(2, r3))
print("h_2(x1,x2,x3)     =", complete(2, r3))

# g_i expresses h_i through the elementary basis, via the Newton-type
# recurrence h_i = sum_j (-1)^(j-1) sigma_j h_{i-j}.
print("g_2 in two sigmas =", g_poly(2, 2))
print("g_3 in two sigmas =", g_poly(3, 2))

# The defining property: substituting sigma_j -> elementary(j) recovers h_i.
for i in range(6):
    image = g_poly(i, 3).substitute(
        {f"sigma{j}": elementary(j, r3) for j in (1, 2, 3)}, ring=r3
    )
    assert image == complete(i, r3)
print("g_i substitution oracle: ok for i <= 5")

# Splitting off the last variable, two ways:
#   h_k(x_1..x_l) = sum_i h_i(x_1..x_{l-1}) x_l^(k-i)
#   h_i(x_1..x_n) = h_i(x_1..x_{n-1}) + x_n h_{i-1}(x_1..x_n)
print("h-split (k=4, l=3):", symfunc.verify_h_split(4, 3))
print("h-peel  (i=3, n=3):", symfunc.verify_h_peel(3, 3))

# And the generating-function identity prod(1 - x_j u) * sum h_i u^i == 1,
# the independent oracle for everything above.
print("generating function to order 12:", symfunc.generating_function_check(3, 12))
