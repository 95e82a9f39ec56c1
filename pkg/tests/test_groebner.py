"""Groebner engine: reduced bases, normal forms, membership, Hilbert data."""

import random

import pytest

from slcc.groebner import (
    BudgetExceededError,
    Ideal,
    groebner_basis,
    ideal_equal,
    member_with_cofactors,
    normal_form,
    primitive_integer,
    quotient_hilbert,
    standard_monomials,
)
from slcc.polyring import Polynomial, RingSpec, parse_poly
from slcc import weyl

R1 = RingSpec.make([("e1", 2)])
R2 = RingSpec.make([("e1", 2), ("e2", 2)])


def ideal2():
    return Ideal.make(R2, [parse_poly("e1*e2", R2), parse_poly("e1^2+e2^2", R2)])


def test_principal_ideal_basis():
    G = groebner_basis(Ideal.make(R1, [parse_poly("e1^4", R1)]))
    assert [str(g) for g in G.basis] == ["e1^4"]


def test_two_generator_basis_matches_hand_computation():
    G = groebner_basis(ideal2())
    assert [str(g) for g in G.basis] == ["e1*e2", "e1^2 + e2^2", "e2^3"]


def test_empty_ideal():
    G = groebner_basis(Ideal.make(R2, []))
    assert G.basis == ()
    p = parse_poly("e1^2 - 3*e2^2", R2)
    assert normal_form(p, G) == p
    assert quotient_hilbert(G, 4) == [1, 0, 2, 0, 3]


def test_normal_forms():
    G = groebner_basis(ideal2())
    assert normal_form(parse_poly("e1^4", R2), groebner_basis(Ideal.make(R2, [parse_poly("e1^4", R2)]))).is_zero()
    assert normal_form(parse_poly("e1^3", R2), G).is_zero()
    assert normal_form(parse_poly("e1^2", R2), G) == parse_poly("-e2^2", R2)


def test_member_with_cofactors_examples():
    # e1^2 = 1 * s1 in rank one
    I = weyl.coinvariant_ideal("B", 1)
    cof = member_with_cofactors(parse_poly("e1^2", weyl.e_ring(1)), I)
    assert [str(c) for c in cof] == ["1"]
    # e1^4 in the rank-two invariant ideal, verified by expansion
    I2 = weyl.coinvariant_ideal("B", 2)
    ring = weyl.e_ring(2)
    cof = member_with_cofactors(parse_poly("e1^4", ring), I2)
    total = Polynomial.zero(ring)
    for c, g in zip(cof, I2.generators):
        total = total + c * g
    assert total == parse_poly("e1^4", ring)
    # e1 is not a member (degree argument)
    assert member_with_cofactors(parse_poly("e1", ring), I2) is None


def test_ideal_equal():
    I = ideal2()
    assert ideal_equal(I, I)
    assert not ideal_equal(
        Ideal.make(R1, [parse_poly("e1", R1)]), Ideal.make(R1, [parse_poly("e1^2", R1)])
    )
    # I_{2,5} via graded pieces vs via pure h-polynomials: both are (e1^4)
    assert ideal_equal(
        Ideal.make(R1, [parse_poly("e1^4", R1)]),
        Ideal.make(R1, [parse_poly("e1^4", R1)]),
    )


def test_quotient_hilbert_examples():
    G = groebner_basis(Ideal.make(R1, [parse_poly("e1^4", R1)]))
    assert quotient_hilbert(G, 6) == [1, 0, 1, 0, 1, 0, 1]
    G2 = groebner_basis(ideal2())
    assert quotient_hilbert(G2, 4) == [1, 0, 2, 0, 1]
    assert sum(quotient_hilbert(G2, 10)) == 4


def test_standard_monomials_examples():
    G = groebner_basis(Ideal.make(R1, [parse_poly("e1^4", R1)]))
    assert [R1.monomial_text(m) for m in standard_monomials(G, 8)] == ["1", "e1", "e1^2", "e1^3"]
    G2 = groebner_basis(ideal2())
    assert [R2.monomial_text(m) for m in standard_monomials(G2, 10)] == ["1", "e2", "e1", "e2^2"]


def test_coinvariant_dimension_cross_check():
    # dim of the coinvariant algebra == spanning basis cardinality == group order:
    # the witness lemma and the spanning proposition certify each other
    from slcc import spanning

    for n in (1, 2, 3, 4):
        for group in ("B", "D"):
            G = groebner_basis(weyl.coinvariant_ideal(group, n))
            total = sum(quotient_hilbert(G, 2 * n * n + 2))
            assert total == len(spanning.basis(group, n)) == weyl.group_order(group, n)


def test_buchberger_criterion_on_emitted_basis():
    ring = RingSpec.make([("x", 1), ("y", 1), ("z", 2)])
    gens = [
        parse_poly("x^2 + y^2", ring),
        parse_poly("x*y - z", ring),
        parse_poly("y^4 + z^2", ring),
    ]
    G = groebner_basis(Ideal.make(ring, gens))
    # every S-polynomial reduces to zero
    for i in range(len(G.basis)):
        for j in range(i + 1, len(G.basis)):
            fi, fj = G.basis[i], G.basis[j]
            mi, ci = fi.leading_term()
            mj, cj = fj.leading_term()
            lcm = tuple(max(a, b) for a, b in zip(mi, mj))
            s = Polynomial.monomial(ring, tuple(a - b for a, b in zip(lcm, mi)), 1) * fi - (
                Polynomial.monomial(ring, tuple(a - b for a, b in zip(lcm, mj)), 1) * fj
            )
            assert normal_form(s, G).is_zero()
    # reduced: no leading term divides another, tails fully reduced
    leads = [g.leading_term()[0] for g in G.basis]
    for i, lt in enumerate(leads):
        for j, other in enumerate(leads):
            if i != j:
                assert not all(a <= b for a, b in zip(lt, other))


def test_representations_reconstruct_basis():
    I = ideal2()
    G = groebner_basis(I)
    for g, rep in zip(G.basis, G.representations):
        total = Polynomial.zero(R2)
        for c, gen in zip(rep, I.generators):
            total = total + c * gen
        assert total == g


def test_normal_form_idempotent_random():
    rng = random.Random(3)
    G = groebner_basis(ideal2())
    for _ in range(25):
        terms = {
            (rng.randint(0, 4), rng.randint(0, 4)): rng.randint(-6, 6) for _ in range(4)
        }
        p = Polynomial(R2, terms)
        r = normal_form(p, G)
        assert normal_form(p - r, G).is_zero()
        assert normal_form(r, G) == r


def test_membership_agrees_with_normal_form():
    rng = random.Random(11)
    I = weyl.coinvariant_ideal("D", 2)
    G = groebner_basis(I)
    ring = weyl.e_ring(2)
    for _ in range(30):
        d = rng.randint(1, 6)
        terms = {}
        for _ in range(3):
            a = rng.randint(0, d)
            terms[(a, d - a)] = rng.randint(-5, 5)
        p = Polynomial(ring, terms)  # homogeneous of degree 2d
        in_by_nf = normal_form(p, G).is_zero()
        in_by_cof = member_with_cofactors(p, I) is not None
        assert in_by_nf == in_by_cof


def test_budget_exhaustion_is_distinct():
    ring = RingSpec.make([("x", 1), ("y", 1), ("z", 1)])
    gens = [
        parse_poly("x^3 + y^3 + z^3", ring),
        parse_poly("x*y*z - y^3", ring),
        parse_poly("x^2*y - z^3", ring),
    ]
    with pytest.raises(BudgetExceededError):
        groebner_basis(Ideal.make(ring, gens), budget=3)


def test_homogeneity_enforced():
    with pytest.raises(ValueError):
        Ideal.make(R2, [parse_poly("e1 + e1^2", R2)])
    with pytest.raises(ValueError):
        Ideal.make(R2, [Polynomial.zero(R2)])


def _quotient_dimension_brute(ideal, degree):
    """dim of (ring/ideal) in one degree by exact linear algebra, no Groebner."""
    from fractions import Fraction
    from itertools import product as iproduct

    ring = ideal.ring
    degs = ring.degrees
    monos = [
        expo
        for expo in iproduct(*(range(degree // d + 1) for d in degs))
        if ring.monomial_degree(expo) == degree
    ]
    index = {m: i for i, m in enumerate(monos)}
    rows = []
    for g in ideal.generators:
        gdeg = g.homogeneous_degree()
        if gdeg > degree:
            continue
        for expo in iproduct(*(range((degree - gdeg) // d + 1) for d in degs)):
            if ring.monomial_degree(expo) != degree - gdeg:
                continue
            shifted = Polynomial.monomial(ring, expo) * g
            row = [Fraction(0)] * len(monos)
            for m, c in shifted.terms.items():
                row[index[m]] = Fraction(c)
            rows.append(row)
    # rank by Gaussian elimination
    rank = 0
    for col in range(len(monos)):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / lead
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return len(monos) - rank


def test_quotient_hilbert_against_linear_algebra():
    # an oracle with no Groebner theory in it: dimension of each graded slice
    # equals monomial count minus the rank of the ideal's slice
    cases = [
        ideal2(),
        weyl.coinvariant_ideal("B", 2),
        weyl.coinvariant_ideal("D", 3),
    ]
    for ideal in cases:
        h = quotient_hilbert(groebner_basis(ideal), 12)
        for d in range(0, 13, 2):
            assert h[d] == _quotient_dimension_brute(ideal, d), (ideal.generators, d)


def test_primitive_integer_rescaling():
    from fractions import Fraction

    p = Polynomial(R2, {(2, 0): Fraction(2, 3), (0, 2): Fraction(4, 3)})
    assert str(primitive_integer(p)) == "e1^2 + 2*e2^2"
    q = Polynomial(R2, {(1, 0): -2, (0, 1): -4})
    assert str(primitive_integer(q)) == "e1 + 2*e2"
