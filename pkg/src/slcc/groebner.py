"""Buchberger engine: reduced Groebner bases, normal forms, Hilbert series.

Bases are computed over the rationals (generators are made monic; Fraction
coefficients appear internally) with the Gebauer-Moller pair criteria and the
normal selection strategy, then fully inter-reduced, so the reduced basis is
unique for a given monomial order.  The only order implemented is grevlex
graded by cohomological degree (the canonical order of the polynomial layer).

Every basis element carries an explicit representation in terms of the
original ideal generators; extended division then yields cofactor witnesses
for ideal membership (member_with_cofactors), which downstream modules turn
into the degree-lowering identities.

A global step budget (default 10^6 single reduction steps, overridable via
the SLCC_BUDGET environment variable or per call) turns runaway computations
into a distinct BudgetExceededError instead of a hang.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce as _reduce
from math import gcd

from .polyring import Monomial, Polynomial, RingMismatchError, RingSpec

__all__ = [
    "BudgetExceededError",
    "DEFAULT_BUDGET",
    "GroebnerBasis",
    "Ideal",
    "groebner_basis",
    "ideal_equal",
    "member_with_cofactors",
    "normal_form",
    "primitive_integer",
    "quotient_hilbert",
    "standard_monomials",
]

DEFAULT_BUDGET = 10**6


class BudgetExceededError(Exception):
    """The reduction-step budget ran out before the computation finished."""


def _budget_limit(budget: int | None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get("SLCC_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"SLCC_BUDGET must be an integer, got {env!r}") from None
    return DEFAULT_BUDGET


@dataclass(frozen=True)
class Ideal:
    """A homogeneous ideal given by generators (each nonzero, homogeneous)."""

    ring: RingSpec
    generators: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        for g in self.generators:
            if not self.ring.compatible_with(g.ring):
                raise RingMismatchError("generator lives in a different ring")
            if g.is_zero():
                raise ValueError("ideal generators must be nonzero")
            if not g.is_homogeneous():
                raise ValueError(f"ideal generators must be homogeneous, got {g}")

    @staticmethod
    def make(ring: RingSpec, gens) -> Ideal:
        return Ideal(ring, tuple(gens))


def _monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _monomial_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def _monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


class _Tracked:
    """A monic working polynomial with its representation over the originals."""

    __slots__ = ("poly", "rep", "lm")

    def __init__(self, poly: Polynomial, rep: list[Polynomial]):
        self.poly = poly
        self.rep = rep
        self.lm = poly.leading_term()[0] if poly else None

    def monic(self) -> _Tracked:
        _, lc = self.poly.leading_term()
        if lc == 1:
            return self
        inv = Fraction(1, 1) / Fraction(lc)
        return _Tracked(self.poly * inv, [r * inv for r in self.rep])


class _Engine:
    def __init__(self, ring: RingSpec, budget: int):
        self.ring = ring
        self.key = ring.sort_key
        self.budget = budget
        self.steps = 0

    def spend(self, n: int = 1) -> None:
        self.steps += n
        if self.steps > self.budget:
            raise BudgetExceededError(
                f"Groebner step budget of {self.budget} exceeded "
                "(raise SLCC_BUDGET or pass a larger budget)"
            )

    def divide(self, p: Polynomial, divisors: list[_Tracked]):
        """Full multivariate division: p = sum q_i * divisors_i + remainder.

        Divisors must be monic.  The reducer for each step is the first
        divisor (in list order) whose leading monomial divides the current
        greatest reducible monomial, which makes the result deterministic.
        """
        quotients = [Polynomial.zero(self.ring) for _ in divisors]
        remainder = Polynomial.zero(self.ring)
        work = p
        while work:
            expo, coeff = work.leading_term()
            for j, d in enumerate(divisors):
                if d.lm is not None and _monomial_divides(d.lm, expo):
                    self.spend()
                    q = Polynomial.monomial(self.ring, _monomial_div(expo, d.lm), coeff)
                    quotients[j] = quotients[j] + q
                    work = work - q * d.poly
                    break
            else:
                mono = Polynomial.monomial(self.ring, expo, coeff)
                remainder = remainder + mono
                work = work - mono
        return quotients, remainder

    def reduce_tracked(self, t: _Tracked, divisors: list[_Tracked]) -> _Tracked:
        quotients, remainder = self.divide(t.poly, divisors)
        rep = list(t.rep)
        for q, d in zip(quotients, divisors):
            if q:
                rep = [r - q * dr for r, dr in zip(rep, d.rep)]
        return _Tracked(remainder, rep)

    def s_poly(self, f: _Tracked, g: _Tracked) -> _Tracked:
        lcm = _monomial_lcm(f.lm, g.lm)
        uf = Polynomial.monomial(self.ring, _monomial_div(lcm, f.lm), 1)
        ug = Polynomial.monomial(self.ring, _monomial_div(lcm, g.lm), 1)
        self.spend()
        poly = uf * f.poly - ug * g.poly
        rep = [uf * a - ug * b for a, b in zip(f.rep, g.rep)]
        return _Tracked(poly, rep)


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced monic Groebner basis with representations over the generators.

    ``representations[i]`` are cofactors c_j with basis[i] == sum c_j * gen_j.
    """

    ideal: Ideal
    order: str
    basis: tuple[Polynomial, ...]
    representations: tuple[tuple[Polynomial, ...], ...]

    @property
    def ring(self) -> RingSpec:
        return self.ideal.ring

    def leading_monomials(self) -> tuple[Monomial, ...]:
        return tuple(g.leading_term()[0] for g in self.basis)

    def normal_form(self, p: Polynomial, budget: int | None = None) -> Polynomial:
        return normal_form(p, self, budget)

    def contains(self, p: Polynomial, budget: int | None = None) -> bool:
        return self.normal_form(p, budget).is_zero()


_GB_CACHE: dict[tuple, GroebnerBasis] = {}


def groebner_basis(ideal: Ideal, order: str = "grevlex", budget: int | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of a homogeneous ideal (memoized per session)."""
    if order != "grevlex":
        raise ValueError(f"unsupported monomial order {order!r}")
    cache_key = (ideal.ring.vars, ideal.generators, order)
    cached = _GB_CACHE.get(cache_key)
    if cached is not None:
        return cached

    engine = _Engine(ideal.ring, _budget_limit(budget))
    ngens = len(ideal.generators)
    ring = ideal.ring

    def unit_rep(i: int) -> list[Polynomial]:
        return [
            Polynomial.one(ring) if j == i else Polynomial.zero(ring)
            for j in range(ngens)
        ]

    f: list[_Tracked] = []  # all polynomials ever created, indexed
    key = ring.sort_key

    def lm_key(i: int):
        return key(f[i].lm)

    def update(G: set[int], B: set[tuple[int, int]], ih: int):
        # Gebauer-Moller pair update ([BW] GROEBNERNEWS2 bookkeeping).
        h = f[ih]
        mh = h.lm
        C = sorted(G, key=lm_key)
        D: list[tuple[int, int]] = []
        rest = list(C)
        while rest:
            ig = rest.pop(0)
            lcm_hg = _monomial_lcm(mh, f[ig].lm)

            def lcm_divides(ip: int) -> bool:
                return _monomial_divides(_monomial_lcm(mh, f[ip].lm), lcm_hg)

            if _monomial_mul(mh, f[ig].lm) == lcm_hg or (
                not any(lcm_divides(ip) for ip in rest)
                and not any(lcm_divides(pr[1]) for pr in D)
            ):
                D.append((ih, ig))
        # drop pairs with coprime leading monomials (Buchberger's 1st criterion)
        E = {
            pair
            for pair in D
            if _monomial_mul(mh, f[pair[1]].lm) != _monomial_lcm(mh, f[pair[1]].lm)
        }
        B_new: set[tuple[int, int]] = set()
        for ig1, ig2 in B:
            lcm12 = _monomial_lcm(f[ig1].lm, f[ig2].lm)
            if (
                not _monomial_divides(mh, lcm12)
                or _monomial_lcm(f[ig1].lm, mh) == lcm12
                or _monomial_lcm(f[ig2].lm, mh) == lcm12
            ):
                B_new.add((ig1, ig2))
        B_new |= E
        G_new = {ig for ig in G if not _monomial_divides(mh, f[ig].lm)}
        G_new.add(ih)
        return G_new, B_new

    # seed with monic nonzero generators
    seeds = [_Tracked(g, unit_rep(i)).monic() for i, g in enumerate(ideal.generators)]

    G: set[int] = set()
    CP: set[tuple[int, int]] = set()
    for t in sorted(seeds, key=lambda t: key(t.lm)):
        reduced = engine.reduce_tracked(t, [f[i] for i in sorted(G, key=lm_key)])
        if reduced.poly:
            f.append(reduced.monic())
            G, CP = update(G, CP, len(f) - 1)

    while CP:
        # normal strategy: smallest lcm first, ties by indices for determinism
        pair = min(CP, key=lambda pr: (key(_monomial_lcm(f[pr[0]].lm, f[pr[1]].lm)), pr))
        CP.remove(pair)
        s = engine.s_poly(f[pair[0]], f[pair[1]])
        if not s.poly:
            continue
        divisors = [f[i] for i in sorted(G, key=lm_key)]
        reduced = engine.reduce_tracked(s, divisors)
        if reduced.poly:
            f.append(reduced.monic())
            G, CP = update(G, CP, len(f) - 1)

    # minimalize: drop elements whose lead is divisible by another lead
    minimal = []
    for ig in sorted(G, key=lm_key):
        mg = f[ig].lm
        if not any(
            ih != ig and _monomial_divides(f[ih].lm, mg) for ih in G
        ):
            minimal.append(ig)
    # fully inter-reduce tails
    final: list[_Tracked] = [f[i] for i in minimal]
    changed = True
    while changed:
        changed = False
        for i in range(len(final)):
            others = final[:i] + final[i + 1 :]
            reduced = engine.reduce_tracked(final[i], others)
            if reduced.poly != final[i].poly:
                changed = True
            final[i] = reduced.monic()
    final.sort(key=lambda t: key(t.lm))

    result = GroebnerBasis(
        ideal=ideal,
        order=order,
        basis=tuple(t.poly for t in final),
        representations=tuple(tuple(t.rep) for t in final),
    )
    _GB_CACHE[cache_key] = result
    return result


def normal_form(p: Polynomial, G: GroebnerBasis, budget: int | None = None) -> Polynomial:
    """Unique remainder of p modulo G; zero iff p lies in the ideal."""
    if not p.ring.compatible_with(G.ring):
        raise RingMismatchError("polynomial and basis live in different rings")
    engine = _Engine(G.ring, _budget_limit(budget))
    divisors = [_Tracked(g, []) for g in G.basis]
    _, remainder = engine.divide(p, divisors)
    return remainder


def member_with_cofactors(
    p: Polynomial, ideal: Ideal, budget: int | None = None
) -> list[Polynomial] | None:
    """Cofactors c_i with sum c_i * gen_i == p, or None when p is not in the ideal.

    The expansion identity is re-verified exactly before returning.
    """
    G = groebner_basis(ideal, budget=budget)
    engine = _Engine(G.ring, _budget_limit(budget))
    divisors = [_Tracked(g, []) for g in G.basis]
    quotients, remainder = engine.divide(p, divisors)
    if remainder:
        return None
    cofactors = [Polynomial.zero(G.ring) for _ in ideal.generators]
    for q, reps in zip(quotients, G.representations):
        if q:
            cofactors = [c + q * r for c, r in zip(cofactors, reps)]
    check = Polynomial.zero(G.ring)
    for c, g in zip(cofactors, ideal.generators):
        check = check + c * g
    if check != p:
        raise AssertionError("cofactor expansion failed to reproduce the target")
    return cofactors


def ideal_equal(I: Ideal, J: Ideal, budget: int | None = None) -> bool:
    """Mutual reduction: every generator of each has zero normal form mod the other."""
    if not I.ring.compatible_with(J.ring):
        raise RingMismatchError("ideals live in different rings")
    GI = groebner_basis(I, budget=budget)
    GJ = groebner_basis(J, budget=budget)
    if GI.basis == GJ.basis:
        return True
    return all(normal_form(g, GJ, budget).is_zero() for g in I.generators) and all(
        normal_form(g, GI, budget).is_zero() for g in J.generators
    )


def _standard_exponents(ring: RingSpec, leads: tuple[Monomial, ...], max_degree: int):
    """Yield exponent tuples of degree <= max_degree outside the lead-term ideal."""
    degrees = ring.degrees
    n = len(degrees)
    expo = [0] * n

    def rec(i: int, remaining: int, candidates: list[Monomial]):
        # candidates = leads consistent with positions < i; empty at i == n
        # means nothing divides, i.e. the monomial is standard
        if i == n:
            if not candidates:
                yield tuple(expo)
            return
        max_e = remaining // degrees[i]
        for e in range(max_e + 1):
            expo[i] = e
            still = [lt for lt in candidates if lt[i] <= e]
            yield from rec(i + 1, remaining - e * degrees[i], still)
        expo[i] = 0

    yield from rec(0, max_degree, list(leads))


def standard_monomials(
    G: GroebnerBasis, max_degree: int
) -> list[Monomial]:
    """Monomials outside the leading-term ideal, up to cohomological degree bound.

    Sorted by (degree, grevlex) ascending; their count per degree is the
    Hilbert function of the quotient.
    """
    leads = G.leading_monomials()
    out = list(_standard_exponents(G.ring, leads, max_degree))
    out.sort(key=G.ring.sort_key)
    return out


def quotient_hilbert(G: GroebnerBasis, max_degree: int) -> list[int]:
    """Hilbert function of ring/ideal: coefficient d = #standard monomials of degree d."""
    counts = [0] * (max_degree + 1)
    for expo in _standard_exponents(G.ring, G.leading_monomials(), max_degree):
        counts[G.ring.monomial_degree(expo)] += 1
    return counts


def primitive_integer(p: Polynomial) -> Polynomial:
    """Rescale a rational polynomial to a primitive integer one (positive lead)."""
    if p.is_zero():
        return p
    denoms = [c.denominator if isinstance(c, Fraction) else 1 for c in p.terms.values()]
    lcm = _reduce(lambda a, b: a * b // gcd(a, b), denoms, 1)
    scaled = p * lcm
    numerators = [abs(int(c)) for c in scaled.terms.values()]
    g = _reduce(gcd, numerators)
    if g > 1:
        scaled = scaled.map_coefficients(lambda c: int(c) // g)
    if scaled.leading_term()[1] < 0:
        scaled = -scaled
    return scaled
