"""
Exact graded polynomials
========================

Everything in this library runs on one carrier: sparse multivariate
polynomials with big-integer coefficients, where every variable carries a
cohomological degree.  This walkthrough builds a ring, parses some
expressions, and shows the canonical form and grading bookkeeping.
"""

from slcc.polyring import Polynomial, RingSpec, parse_poly

# A ring is an ordered list of (name, degree) pairs.  Here e1, e2 are Euler
# classes of rank-2 summands (degree 2) and e is a degree-4 class.
ring = RingSpec.make([("e1", 2), ("e2", 2), ("e", 4)])

# The grammar: integer literals, variables, + - * ^ ( ), with * mandatory.
p = parse_poly("e1*e2 - e", ring)
print("p            =", p)
print("homogeneous  =", p.is_homogeneous(), "of degree", p.homogeneous_degree())

# Parsing expands and canonicalizes: terms are stored in graded reverse
# lexicographic order, so printing is deterministic and round-trips.
q = parse_poly("(e1+e2)^2", ring)
print("q            =", q)
assert parse_poly(str(q), ring) == q

# Arithmetic is exact: there is no floating point anywhere.
big = parse_poly("7*e1 - 3*e2", ring) ** 8
print("big leading  =", big.sorted_terms()[0])

# Substitution expands fully and tracks rings.
xs = RingSpec.make([("x1", 1), ("x2", 1)])
sigma = RingSpec.make([("sigma1", 1), ("sigma2", 2)])
power_sum = parse_poly("sigma1^2 - 2*sigma2", sigma).substitute(
    {"sigma1": parse_poly("x1+x2", xs), "sigma2": parse_poly("x1*x2", xs)}
)
print("x1^2 + x2^2  =", power_sum)

# The grading is additive under products, which every computation relies on.
a = parse_poly("e1^3", ring)
b = parse_poly("e2^2", ring)
assert (a * b).homogeneous_degree() == a.homogeneous_degree() + b.homogeneous_degree()
print("deg(a*b)     =", (a * b).homogeneous_degree())
