"""Presentation builders, their verification, and the coherence theorems."""

import pytest

from slcc import presentations as pr
from slcc import spanning
from slcc.groebner import Ideal, ideal_equal


def test_sgr2_odd_example():
    p = pr.present_sgr2(2, "odd")
    assert p.generator_texts() == ["e1^4"]
    assert p.basis_texts() == ["1", "e1", "e1^2", "e1^3"]


def test_sgr2_even_examples():
    p = pr.present_sgr2(2, "even")
    assert p.generator_texts() == ["e1*e2", "e1^2 + e2^2"]
    assert p.basis_texts() == ["1", "e1", "e1^2", "e2"]
    assert sum(pr.verify_presentation(p, 8).hilbert) == 4
    p = pr.present_sgr2(3, "even")
    assert p.generator_texts() == ["e1*e2", "e1^4 - e2^2"]
    assert sum(pr.verify_presentation(p, 12).hilbert) == 6


def test_sgr2_rejects_small_n():
    with pytest.raises(ValueError):
        pr.present_sgr2(1, "odd")


def test_sgr2_relative_odd_examples():
    p = pr.present_sgr2_relative(1, "odd")
    assert p.generator_texts() == ["e1^2 + b1"]
    assert p.coefficient_vars == ("b1",)
    assert p.basis_texts() == ["1", "e1"]
    rep = pr.verify_presentation(p, 16)
    assert rep.passed


def test_sgr2_relative_even_example():
    p = pr.present_sgr2_relative(2, "even")
    assert p.generator_texts() == ["e1*e2 - e", "e1^2 + e2^2 + b1"]
    assert p.coefficient_vars == ("b1", "e")
    rep = pr.verify_presentation(p, 14)
    assert rep.passed


def test_sgr2_relative_even_rejects_rank_two_base():
    with pytest.raises(ValueError):
        pr.present_sgr2_relative(1, "even")


def test_sgr2_relative_epsilon_twist():
    printed = pr.present_sgr2_relative(1, "odd", epsilon=-1)
    twisted = pr.present_sgr2_relative(1, "odd", epsilon=1)
    assert printed.generator_texts() == ["e1^2 + b1"]
    assert twisted.generator_texts() == ["e1^2 - b1"]


def test_partial_flag_examples():
    p = pr.present_partial_flag(1, 2, "odd")
    assert p.generator_texts() == ["e1^4"]
    p = pr.present_partial_flag(2, 2, "odd")
    assert p.generator_texts() == ["e1^4", "e1^2 + e2^2"]
    assert sum(pr.verify_presentation(p, 12).hilbert) == 8
    p = pr.present_partial_flag(1, 2, "even")
    assert p.generator_texts() == ["e1*e1'", "e1^2 + e1'^2"]
    p = pr.present_partial_flag(1, 1, "odd")
    assert p.generator_texts() == ["e1^2"]


def test_partial_flag_alt_examples():
    p = pr.present_partial_flag_alt(2, 2, "odd")
    assert p.generator_texts() == ["e1^2 + e2^2", "e1^4 + e1^2*e2^2 + e2^4"]


@pytest.mark.parametrize(
    "m,n,parity",
    [(1, 2, "odd"), (1, 2, "even"), (2, 2, "odd"), (2, 3, "even"), (3, 3, "odd")],
)
def test_flag_ideal_equality(m, n, parity):
    a = pr.present_partial_flag(m, n, parity)
    b = pr.present_partial_flag_alt(m, n, parity)
    assert ideal_equal(a.ideal, b.ideal)


def test_flag_even_requires_room_for_the_quotient_bundle():
    with pytest.raises(ValueError):
        pr.present_partial_flag(2, 2, "even")


def test_max_flag_examples():
    p = pr.present_max_flag(4)
    assert set(p.generator_texts()) == {"e1^2 + e2^2", "e1*e2"}
    assert sum(pr.verify_presentation(p, 10).hilbert) == 4
    p = pr.present_max_flag(5)
    assert set(p.generator_texts()) == {"e1^2 + e2^2", "e1^2*e2^2"}
    assert sum(pr.verify_presentation(p, 12).hilbert) == 8


def test_max_flag_matches_sgr2_even():
    flag = pr.present_max_flag(4)
    sgr = pr.present_sgr2(2, "even")
    gens = [g.rename_into(sgr.ring) for g in flag.ideal.generators]
    assert ideal_equal(Ideal.make(sgr.ring, gens), sgr.ideal)


@pytest.mark.parametrize("N", [4, 5, 6, 7])
def test_max_flag_equals_terminal_partial_flag(N):
    n = N // 2
    flag = pr.present_max_flag(N)
    if N % 2 == 1:
        other = pr.present_partial_flag(n, n, "odd")
        renaming = {}
    else:
        other = pr.present_partial_flag(n - 1, n, "even")
        renaming = {f"e{n-1}'": f"e{n}"}
    gens = [g.rename_into(flag.ring, renaming) for g in other.ideal.generators]
    assert ideal_equal(Ideal.make(flag.ring, gens), flag.ideal)


def test_max_flag_basis_is_spanning_basis():
    assert pr.present_max_flag(5).declared_basis == spanning.basis("B", 2).monomials
    assert pr.present_max_flag(4).declared_basis == spanning.basis("D", 2).monomials


def test_sgr_even_odd_examples():
    p = pr.present_sgr_even(1, 2, "odd")
    assert p.generator_texts() == ["e^2 - b1", "b1^2"]
    assert len(p.declared_basis) == 4  # rank of SGr(2,5)
    p = pr.present_sgr_even(2, 2, "odd")
    assert p.generator_texts() == ["e^2 - b2", "b1", "b1^2 - b2"]
    assert len(p.declared_basis) == 2  # rank of SGr(4,5) = rank of SGr(1,5)


def test_sgr_even_even_example():
    p = pr.present_sgr_even(1, 2, "even")
    assert p.generator_texts() == ["e*e'", "e^2 - b1", "e'^2 + b1"]
    assert len(p.declared_basis) == 4
    rep = pr.verify_presentation(p, 10)
    assert rep.passed


def test_sgr_even_rank_matches_prediction():
    for m, n, parity in [(1, 3, "odd"), (2, 3, "odd"), (2, 3, "even"), (3, 4, "odd")]:
        p = pr.present_sgr_even(m, n, parity)
        N = 2 * n if parity == "even" else 2 * n + 1
        assert len(p.declared_basis) == pr.rank_table("sgr", k=2 * m, N=N)


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("parity", ["odd", "even"])
def test_collapse_to_sgr2(n, parity):
    assert pr.sgr_even_collapses_to_sgr2(n, parity)


def test_collapse_under_twisted_convention():
    # with epsilon=-1 the collapse substitution is b_1 -> -e^2
    assert pr.sgr_even_collapses_to_sgr2(2, "odd", epsilon=-1)
    assert pr.sgr_even_collapses_to_sgr2(2, "even", epsilon=-1)


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("parity", ["odd", "even"])
def test_specialization(n, parity):
    assert pr.relative_specializes_to_absolute(n, parity)


def test_bsl_examples():
    p = pr.present_bsl(2, 8)
    assert p.ring.vars == (("e", 2),)
    rep = pr.verify_presentation(p, 8)
    assert list(rep.hilbert) == [1, 0, 1, 0, 1, 0, 1, 0, 1]
    p = pr.present_bsl(3, 8)
    assert p.ring.vars == (("b1", 4),)
    p = pr.present_bsl(4, 8)
    assert p.ring.vars == (("b1", 4), ("e", 4))
    rep = pr.verify_presentation(p, 8)
    assert list(rep.hilbert) == [1, 0, 0, 0, 2, 0, 0, 0, 3]
    assert rep.passed


def test_rank_table_examples():
    assert pr.rank_table("sgr", k=2, N=7) == 6
    assert pr.rank_table("sgr", k=1, N=5) == 2
    assert pr.rank_table("sgr", k=4, N=6) == 6
    assert pr.rank_table("max_flag", N=9) == 2**4 * 24
    assert pr.rank_table("partial_flag", m=2, N=5) == 8
    assert pr.rank_table("partial_flag", m=2, N=6) == 24


def test_rank_table_no_declared_basis():
    with pytest.raises(pr.NoDeclaredBasisError):
        pr.rank_table("sgr", k=3, N=6)
    with pytest.raises(pr.NoDeclaredBasisError):
        pr.rank_table("sgr", k=1, N=2)


def test_verify_budget_exhaustion_reported_distinctly():
    pres = pr.present_max_flag(7)
    # fresh ideal object so the memoized basis is not reused
    clone = pr.Presentation(
        descriptor=pres.descriptor,
        ring=pres.ring,
        ideal=Ideal.make(pres.ring, [g * 1 for g in pres.ideal.generators]),
        declared_basis=pres.declared_basis,
        coefficient_vars=pres.coefficient_vars,
    )
    rep = pr.verify_presentation(clone, 10, budget=2)
    assert rep.budget_exceeded and not rep.passed


def test_report_schema_key_order():
    rep = pr.verify_presentation(pr.present_sgr2(2, "odd"), 8)
    assert list(rep.to_dict().keys()) == [
        "descriptor",
        "ring",
        "generators",
        "basis",
        "hilbert",
        "checks",
    ]


def test_convention_report():
    entries = pr.convention_report(2)
    by_family = {}
    for e in entries:
        by_family.setdefault(e["family"], []).append(e)
    # the J-ideals are literal under +1 (both conventions agree for even m)
    for e in by_family["sgr_even"]:
        assert 1 in e["literal_under"]
    # the relative R-ideals are literal only under the honest convention
    for e in by_family["sgr2_relative"]:
        assert e["literal_under"] == [-1]


def test_sgr_even_images_literal_in_flag_under_plus_one():
    assert pr.sgr_even_holds_in_flag(1, 2, "odd", epsilon=1)
    assert not pr.sgr_even_holds_in_flag(1, 2, "odd", epsilon=-1)
    assert pr.sgr_even_holds_in_flag(2, 3, "even", epsilon=1)


def test_build_dispatch():
    p = pr.build("sgr2", n=2, parity="odd")
    assert p.generator_texts() == ["e1^4"]
    with pytest.raises(ValueError):
        pr.build("nope")


def _presentable_matrix():
    """Every presentable descriptor with m <= 3, n <= 4."""
    cases = []
    for n in range(2, 5):
        for parity in ("odd", "even"):
            cases.append(("sgr2", dict(n=n, parity=parity)))
            cases.append(("sgr2_relative", dict(n=n, parity=parity)))
    cases.append(("sgr2_relative", dict(n=1, parity="odd")))
    for m in (1, 2, 3):
        for n in range(m, 5):
            for parity in ("odd", "even"):
                if parity == "even" and n < m + 1:
                    continue
                cases.append(("partial_flag", dict(m=m, n=n, parity=parity)))
                cases.append(("partial_flag_alt", dict(m=m, n=n, parity=parity)))
                cases.append(("sgr_even", dict(m=m, n=n, parity=parity)))
    for N in range(2, 10):
        cases.append(("max_flag", dict(N=N)))
        cases.append(("bsl", dict(N=N, max_degree=24)))
    return cases


@pytest.mark.parametrize("kind,params", _presentable_matrix())
def test_every_presentable_descriptor_verifies_at_24(kind, params):
    rep = pr.verify_presentation(pr.build(kind, **params), 24)
    assert rep.passed, (kind, params, rep.checks)
