"""
Cohomology ring presentations, machine-verified
===============================================

Each family of varieties gets a generators-and-relations presentation whose
declared basis is certified by a Groebner computation: the quotient's Hilbert
function must factor as (parameter ring) x (declared basis degrees), and the
basis must stay independent in the quotient.  The script walks through every
family and the coherence theorems tying them together.
"""

import json

from slcc import presentations as pr

# Rank-2 Grassmannians over a point.
for parity in ("odd", "even"):
    p = pr.present_sgr2(2, parity)
    rep = pr.verify_presentation(p, 12)
    print(f"sgr2(2,{parity}): gens {p.generator_texts()} rank {sum(rep.hilbert)}",
          "pass" if rep.passed else "FAIL")

# The relative version: base-bundle classes b_*, e become free parameters and
# the quotient is a free module over them with the same basis.
p = pr.present_sgr2_relative(2, "even")
print("relative:", p.generator_texts(), "parameters:", p.coefficient_vars)
print("  specializes to the absolute ideal:", pr.relative_specializes_to_absolute(2, "even"))

# Flag varieties: two printed generating sets, provably the same ideal.
a = pr.present_partial_flag(2, 3, "even")
b = pr.present_partial_flag_alt(2, 3, "even")
from slcc.groebner import ideal_equal

print("flag m=2, n=3 even, both generating sets equal:", ideal_equal(a.ideal, b.ideal))

# Maximal flags are Weyl coinvariant algebras; ranks are the group orders.
for N in (4, 5, 6, 7):
    p = pr.present_max_flag(N)
    rep = pr.verify_presentation(p, 2 * (N // 2) ** 2 + 2)
    print(f"max flag N={N}: rank {sum(rep.hilbert)}", "pass" if rep.passed else "FAIL")

# Grassmannians of higher even rank, in Borel/Euler generators; the basis is
# generated as standard monomials and checked against the predicted rank.
p = pr.present_sgr_even(2, 3, "even")
print("sgr_even(2,3,even):", p.generator_texts())
print("  declared basis:", p.basis_texts())
print("  predicted rank:", pr.rank_table("sgr", k=4, N=6))

# Collapsing the m=1 case (b_1 -> e^2) recovers the rank-2 presentations.
print("collapse m=1, n=3, odd:", pr.sgr_even_collapses_to_sgr2(3, "odd"))

# Classifying spaces: free homogeneous power-series rings, reported as a
# truncated Hilbert series.
p = pr.present_bsl(4, 12)
rep = pr.verify_presentation(p, 12)
print("bsl(4) generators:", dict(p.ring.vars), "hilbert:", list(rep.hilbert))

# The sign convention attached to the b-symbols: the J-ideals are literal
# with epsilon=+1, the relative R-ideals with epsilon=-1 (for even m both
# conventions generate the same J-ideal).
print(json.dumps(pr.convention_report(2), indent=2))
