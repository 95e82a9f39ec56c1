"""
The Groebner verification engine
================================

Reduced Groebner bases over the rationals provide the normal forms behind
every ring-presentation check: ideal membership (with cofactor witnesses),
ideal equality by mutual reduction, and Hilbert series of quotients by
counting standard monomials.
"""

from slcc import weyl
from slcc.groebner import (
    Ideal,
    groebner_basis,
    ideal_equal,
    member_with_cofactors,
    normal_form,
    quotient_hilbert,
    standard_monomials,
)
from slcc.polyring import RingSpec, parse_poly

ring = RingSpec.make([("e1", 2), ("e2", 2)])
ideal = Ideal.make(ring, [parse_poly("e1*e2", ring), parse_poly("e1^2+e2^2", ring)])

G = groebner_basis(ideal)
print("reduced basis:", [str(g) for g in G.basis])

# Normal forms decide membership: e1^3 lies in the ideal, e1^2 does not.
print("NF(e1^3) =", normal_form(parse_poly("e1^3", ring), G))
print("NF(e1^2) =", normal_form(parse_poly("e1^2", ring), G))

# The quotient is 4-dimensional: 1, e1, e2, e2^2 survive.
print("standard monomials:", [ring.monomial_text(m) for m in standard_monomials(G, 8)])
print("Hilbert function:  ", quotient_hilbert(G, 6))

# Membership comes with explicit cofactors, re-verified by expansion.
I_B2 = weyl.coinvariant_ideal("B", 2)
target = parse_poly("e1^4", weyl.e_ring(2))
cofs = member_with_cofactors(target, I_B2)
print("e1^4 cofactors over (s1, s2):", [str(c) for c in cofs])

# Ideal equality by mutual normal forms: two generating sets of one ideal.
alt = Ideal.make(
    weyl.e_ring(2),
    [
        parse_poly("e1^2 + e2^2", weyl.e_ring(2)),
        parse_poly("e1^4 + e1^2*e2^2 + e2^4", weyl.e_ring(2)),
    ],
)
flag = Ideal.make(
    weyl.e_ring(2),
    [parse_poly("e1^4", weyl.e_ring(2)), parse_poly("e1^2 + e2^2", weyl.e_ring(2))],
)
print("two printed generating sets agree:", ideal_equal(alt, flag))
